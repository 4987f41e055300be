"""Unit tests for the weighted ring layer: weights, monomial bases,
polynomial arithmetic, vector calculus and the coefficient fields."""

from fractions import Fraction

import pytest

from wpoisson import (
    ExtensionField,
    PolyVector,
    QQ,
    RingError,
    Weights,
    cross,
    curl,
    div,
    dot,
    gradient,
    monomial_basis,
    parse_poly,
)
from wpoisson.ring import Polynomial


def test_weights_basic():
    w = Weights(1, 2, 3)
    assert w.tuple == (1, 2, 3)
    assert w.n_default == 6
    assert w.mono_degree((2, 1, 1)) == 7


def test_weights_reject_nonpositive():
    with pytest.raises(RingError):
        Weights(0, 1, 1)
    with pytest.raises(RingError):
        Weights(1, -2, 1)


def test_monomial_basis_counts_and_order():
    w = Weights(1, 1, 2)
    assert monomial_basis(w, 0) == [(0, 0, 0)]
    assert monomial_basis(w, 2) == [(0, 0, 1), (0, 2, 0), (1, 1, 0), (2, 0, 0)]
    # dimension of A_d for weights (1,1,1) is the triangle number
    w111 = Weights(1, 1, 1)
    for d in range(8):
        assert len(monomial_basis(w111, d)) == (d + 1) * (d + 2) // 2


def test_monomial_basis_sparse_weights():
    w = Weights(2, 3, 5)
    assert monomial_basis(w, 1) == []
    assert len(monomial_basis(w, 10)) == len([
        m for m in monomial_basis(w, 10)
    ])
    degs = [len(monomial_basis(w, d)) for d in range(11)]
    assert degs == [1, 0, 1, 1, 1, 2, 2, 2, 3, 3, 4]


def test_polynomial_arithmetic():
    w = Weights(1, 1, 1)
    x = Polynomial.variable(w, "x")
    y = Polynomial.variable(w, "y")
    f = (x + y) * (x - y)
    g = x * x - y * y
    assert f == g
    assert (f - g).is_zero()
    assert f.degree() == 2
    assert f.is_homogeneous()
    assert not (f + x).is_homogeneous()
    assert (f + x).homogeneous_component(2) == f
    assert (f + x).homogeneous_component(1) == x


def test_polynomial_scalar_and_coefficients():
    w = Weights(1, 2, 3)
    f = parse_poly("z^2+y^3-5*x^2*y^2", w)
    assert f.coefficient((0, 0, 2)) == 1
    assert f.coefficient((2, 2, 0)) == Fraction(-5)
    assert f.coefficient((1, 1, 1)) == 0
    assert f.scale(Fraction(1, 5)).coefficient((2, 2, 0)) == -1
    assert f.degree() == 6
    assert f.homogeneous_degree() == 6


def test_homogeneous_degree_rejects_mixed():
    w = Weights(1, 1, 1)
    f = parse_poly("x^2+x", w)
    with pytest.raises(RingError):
        f.homogeneous_degree()


def test_partial_derivatives():
    w = Weights(1, 1, 2)
    f = parse_poly("z^2+x^3*y", w)
    assert f.partial(0) == parse_poly("3*x^2*y", w)
    assert f.partial(1) == parse_poly("x^3", w)
    assert f.partial(2) == parse_poly("2*z", w)


def test_substitute_composes():
    w = Weights(1, 1, 2)
    f = parse_poly("z^2+x^3*y", w)
    x = Polynomial.variable(w, "x")
    y = Polynomial.variable(w, "y")
    z = Polynomial.variable(w, "z")
    # the shear from the quadric example fixes f
    images = (x, y - x * x * x - z - z, z + x * x * x)
    assert f.substitute(images) == f


def test_gradient_and_curl_identities():
    w = Weights(1, 2, 3)
    f = parse_poly("z^2+y^3+x^6", w)
    g = gradient(f)
    assert curl(g).is_zero()
    assert div(curl(PolyVector(f, f, f))).is_zero()


def test_cross_and_dot():
    w = Weights(1, 1, 1)
    x = Polynomial.variable(w, "x")
    y = Polynomial.variable(w, "y")
    z = Polynomial.variable(w, "z")
    u = PolyVector(x, y, z)
    assert cross(u, u).is_zero()
    assert dot(u, cross(u, PolyVector(y, z, x))).is_zero()
    assert dot(u, u) == x * x + y * y + z * z


def test_divergence_of_euler_field():
    w = Weights(2, 3, 5)
    x = Polynomial.variable(w, "x")
    y = Polynomial.variable(w, "y")
    z = Polynomial.variable(w, "z")
    e = PolyVector(x.scale(2), y.scale(3), z.scale(5))
    assert div(e) == Polynomial.constant(w, 10)


def test_rationals_field():
    assert QQ.zero == 0
    assert QQ.one == 1
    assert QQ.coerce(3) == Fraction(3)
    assert QQ.format(Fraction(-7, 2)) == "-7/2"


def test_extension_field_cube_root():
    f = ExtensionField([1, 1, 1])  # s^2 + s + 1
    s = f.generator
    assert f.format(s * s * s) == "1"
    assert s * s + s + f.one == f.zero
    inv = f.one / s
    assert s * inv == f.one


def test_extension_field_gaussian():
    f = ExtensionField([1, 0, 1])  # s^2 + 1
    s = f.generator
    assert s * s == -f.one
    assert f.coerce(2) * s + s == s * f.coerce(3)


def test_extension_field_requires_monic():
    with pytest.raises(RingError):
        ExtensionField([1, 1, 2])


def test_polynomials_over_extension_field():
    fld = ExtensionField([1, 1, 1])
    w = Weights(1, 1, 1)
    s = fld.generator
    x = Polynomial.variable(w, "x", field=fld)
    y = Polynomial.variable(w, "y", field=fld)
    f = x.scale(s) + y
    g = f * f
    assert g.coefficient((2, 0, 0)) == s * s
    assert g.coefficient((1, 1, 0)) == s + s


def test_mixed_field_operations_rejected():
    w = Weights(1, 1, 1)
    x = Polynomial.variable(w, "x")
    xc = Polynomial.variable(w, "x", field=ExtensionField([1, 0, 1]))
    with pytest.raises(RingError):
        _ = x + xc


def test_mixed_weight_operations_rejected():
    x1 = Polynomial.variable(Weights(1, 1, 1), "x")
    x2 = Polynomial.variable(Weights(1, 1, 2), "x")
    with pytest.raises(RingError):
        _ = x1 + x2
