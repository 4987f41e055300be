"""Exact computer algebra for weighted graded Poisson structures on the
polynomial ring in three variables, built from homogeneous potentials:
brackets, rigidity, singular quotients, and degree-truncated (co)homology."""

from .ring import (
    ExtElem,
    ExtensionField,
    Polynomial,
    PolyVector,
    QQ,
    RingError,
    Weights,
    count_monomials,
    cross,
    curl,
    div,
    dot,
    gradient,
    monomial_basis,
)
from .textio import format_poly, parse_map, parse_poly
from .hilbert import (
    HilbertSeries,
    closed_form_koszul_h1,
    closed_form_lph2,
    closed_form_ph,
    euler_rhs,
    series_equal,
)
from .linalg import Matrix, in_column_span, kernel_basis, rank
from .jacobian import (
    GroebnerBasis,
    a_sing_hilbert,
    buchberger,
    gcd_partials,
    gkdim,
    has_isolated_singularity,
    jacobian_basis,
    normal_form,
    standard_monomials,
)
from .complexes import (
    DimsTable,
    cochain_apply,
    cochain_matrices,
    cochain_matrix,
    derham_exactness_check,
    euler_characteristic_check,
    koszul_dims,
    m2_dims,
    ozone_vs_hamiltonian,
    ph1_minimality_check,
    ph_dims,
    sealed_k1_dims,
    vacancy_check,
)
from .poisson import (
    Derivation,
    PoissonStructure,
    bracket,
    euler_derivation,
    from_potential,
    graded_derivation_space,
    graded_twist,
    hamiltonian,
    jacobian_determinant,
    jacobiator,
    modular_derivation,
    negative_degree_pd_dims,
    rgt,
    verify_automorphism,
    verify_quotient_automorphism,
)

__version__ = "0.1.0"

__all__ = [
    "ExtElem",
    "ExtensionField",
    "Polynomial",
    "PolyVector",
    "QQ",
    "RingError",
    "Weights",
    "count_monomials",
    "cross",
    "curl",
    "div",
    "dot",
    "gradient",
    "monomial_basis",
    "format_poly",
    "parse_map",
    "parse_poly",
    "HilbertSeries",
    "closed_form_koszul_h1",
    "closed_form_lph2",
    "closed_form_ph",
    "euler_rhs",
    "series_equal",
    "Matrix",
    "in_column_span",
    "kernel_basis",
    "rank",
    "GroebnerBasis",
    "a_sing_hilbert",
    "buchberger",
    "gcd_partials",
    "gkdim",
    "has_isolated_singularity",
    "jacobian_basis",
    "normal_form",
    "standard_monomials",
    "DimsTable",
    "cochain_apply",
    "cochain_matrices",
    "cochain_matrix",
    "derham_exactness_check",
    "euler_characteristic_check",
    "koszul_dims",
    "m2_dims",
    "ozone_vs_hamiltonian",
    "ph1_minimality_check",
    "ph_dims",
    "sealed_k1_dims",
    "vacancy_check",
    "Derivation",
    "PoissonStructure",
    "bracket",
    "euler_derivation",
    "from_potential",
    "graded_derivation_space",
    "graded_twist",
    "hamiltonian",
    "jacobian_determinant",
    "jacobiator",
    "modular_derivation",
    "negative_degree_pd_dims",
    "rgt",
    "verify_automorphism",
    "verify_quotient_automorphism",
    "__version__",
]
