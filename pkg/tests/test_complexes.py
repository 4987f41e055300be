"""Degree-truncated homology of the cochain, Koszul and de Rham
complexes, with the bivector-space and ozone diagnostics.

The dimension tables asserted here were computed once with independent
scripts (kernel/rank counts assembled degree by degree) and frozen; the
tests guard against regressions in the matrix assembly."""

import pytest

from wpoisson import Matrix, Weights, parse_poly, rank
from wpoisson import complexes
from wpoisson.hilbert import closed_form_lph2
from wpoisson.poisson import euler_derivation
from wpoisson.ring import RingError


W111 = Weights(1, 1, 1)
W112 = Weights(1, 1, 2)
W123 = Weights(1, 2, 3)

ELLIPTIC = "x^3+y^3+z^3+x*y*z"
QUADRIC_BW = "z^2+x^3*y"
QUADRIC_Q = "z^2+x^2*y^2+x^3*y"
CUSP = "z^2+y^3"


def test_cochain_shifts_balanced():
    shifts = complexes.cochain_shifts(W123)
    assert shifts == ((0,), (1, 2, 3), (5, 4, 3), (6,))


def test_cochain_compositions_vanish():
    om = parse_poly(ELLIPTIC, W111)
    for d in range(-3, 15):
        d0, d1, d2 = complexes.cochain_matrices(om, d)
        assert d1.matmul(d0).is_zero()
        assert d2.matmul(d1).is_zero()


def test_cochain_apply_gradient_cross():
    om = parse_poly(QUADRIC_BW, W112)
    out = complexes.cochain_apply(om, 0, (om,))
    assert all(c.is_zero() for c in out)
    x = parse_poly("x", W112)
    dx = complexes.cochain_apply(om, 0, (x,))
    # grad(x) x grad(O) = (0, -O_z, O_y)
    assert dx[0].is_zero()
    assert dx[1] == parse_poly("-2*z", W112)
    assert dx[2] == parse_poly("x^3", W112)


def test_euler_derivation_is_a_one_cocycle():
    for w, text in ((W111, ELLIPTIC), (W112, QUADRIC_BW), (W123, CUSP)):
        om = parse_poly(text, w)
        e = euler_derivation(w)
        out = complexes.cochain_apply(om, 1, tuple(e.comps))
        assert all(c.is_zero() for c in out)


def _ph_rows(om, bound):
    tbl = complexes.ph_dims(om, bound)
    n = om.weights.n_default
    return {d: tuple(tbl.dim(i, d) for i in range(4))
            for d in range(-n, bound + 1)}


def test_ph_dims_elliptic_table():
    om = parse_poly(ELLIPTIC, W111)
    rows = _ph_rows(om, 10)
    assert rows[-3] == (0, 0, 0, 1)
    assert rows[-2] == (0, 0, 3, 3)
    assert rows[-1] == (0, 0, 3, 3)
    for d in range(0, 11):
        expect = (1, 1, 2, 2) if d % 3 == 0 else (0, 0, 3, 3)
        assert rows[d] == expect, d


def test_ph_dims_quadric_bw_table():
    om = parse_poly(QUADRIC_BW, W112)
    rows = _ph_rows(om, 10)
    assert rows[-4] == (0, 0, 0, 1)
    assert rows[-3] == (0, 0, 2, 2)
    assert rows[-2] == (0, 0, 3, 3)
    assert rows[-1] == (0, 0, 2, 2)
    for d in range(0, 11):
        if d % 2 == 1:
            expect = (0, 0, 2, 2)
        elif d % 4 == 0:
            expect = (1, 1, 2, 2)
        else:
            expect = (0, 0, 3, 3)
        assert rows[d] == expect, d


def test_ph_dims_cusp_table_has_excess():
    om = parse_poly(CUSP, W123)
    rows = _ph_rows(om, 14)
    assert rows[-6] == (0, 0, 0, 1)
    assert rows[-5] == (0, 0, 1, 1)
    for d in range(-4, -1):
        assert rows[d] == (0, 0, 2, 2)
    for d in range(-1, 15):
        r = d % 6
        if r in (1, 5):
            expect = (0, 1, 3, 2)
        elif r == 0:
            expect = (1, 1, 2, 2)
        else:
            expect = (0, 0, 2, 2)
        assert rows[d] == expect, d


def test_ph0_is_potential_polynomials_for_balanced_irreducible():
    om = parse_poly("x*y*z+x^4+y^4", W112)
    tbl = complexes.ph_dims(om, 12)
    for d in range(0, 13):
        assert tbl.dim(0, d) == (1 if d % 4 == 0 else 0)


def test_m2_dims_quadric_bw():
    om = parse_poly(QUADRIC_BW, W112)
    m2 = complexes.m2_dims(om, 4)
    assert m2[0] == 9 and m2[1] == 14 and m2[2] == 20 and m2[4] == 33
    # below every component shift the space is empty
    assert m2[-4] == 0


def test_m2_between_image_and_kernel():
    for w, text in ((W112, QUADRIC_BW), (W123, CUSP)):
        om = parse_poly(text, w)
        m2 = complexes.m2_dims(om, 8)
        for d in range(-w.n_default, 9):
            _, d1, d2 = complexes.cochain_matrices(om, d)
            im = rank(d1)
            ker = d2.cols - rank(d2)
            assert im <= m2[d] <= ker, (text, d)


def test_lph2_matches_closed_form():
    om = parse_poly(QUADRIC_BW, W112)
    m2 = complexes.m2_dims(om, 10)
    closed = closed_form_lph2(W112, 4).expand(-4, 10)
    for idx, d in enumerate(range(-4, 11)):
        _, d1, _ = complexes.cochain_matrices(om, d)
        assert m2[d] - rank(d1) == closed[idx], d


def test_vacancy_quadric_bw():
    om = parse_poly(QUADRIC_BW, W112)
    vac = complexes.vacancy_check(om, 14)
    assert set(vac) == set(range(-4, 15))
    assert not any(vac.values())


def test_vacancy_quadric_q_to_30():
    om = parse_poly(QUADRIC_Q, W112)
    vac = complexes.vacancy_check(om, 30)
    assert not any(vac.values())


def test_vacancy_elliptic_to_30():
    om = parse_poly(ELLIPTIC, W111)
    vac = complexes.vacancy_check(om, 30)
    assert not any(vac.values())


def test_vacancy_cusp_fails():
    om = parse_poly(CUSP, W123)
    vac = complexes.vacancy_check(om, 8)
    assert {d: v for d, v in vac.items() if v} == {-1: 1, 1: 1, 5: 1, 7: 1}


def test_vacancy_requires_balanced_degree():
    om = parse_poly("x^4+y^4+z^4", W111)
    with pytest.raises(RingError):
        complexes.vacancy_check(om, 6)


def test_ozone_quadric_bw_agrees():
    om = parse_poly(QUADRIC_BW, W112)
    oz = complexes.ozone_vs_hamiltonian(om, 14)
    expected = {1: 2, 2: 4, 3: 6, 4: 8, 5: 12, 6: 16, 7: 20, 8: 24,
                9: 30, 10: 36, 11: 42, 12: 48, 13: 56, 14: 64}
    for d, (ozone, ham) in oz.items():
        assert ozone == ham, d
        if d >= 1:
            assert ozone == expected[d], d
        else:
            assert ozone == 0


def test_ozone_cusp_discrepancies():
    om = parse_poly(CUSP, W123)
    oz = complexes.ozone_vs_hamiltonian(om, 13)
    expected_unequal = {-1: (1, 0), 1: (2, 1), 5: (6, 5), 7: (9, 8),
                        11: (17, 16), 13: (22, 21)}
    for d, pair in oz.items():
        if d in expected_unequal:
            assert pair == expected_unequal[d], d
        else:
            assert pair[0] == pair[1], d


def test_ph1_minimality():
    om = parse_poly(ELLIPTIC, W111)
    res = complexes.ph1_minimality_check(om, 9)
    assert all(res.values())

    cusp = complexes.ph1_minimality_check(parse_poly(CUSP, W123), 6)
    assert {d for d, ok in cusp.items() if not ok} == {-1, 1, 5}

    red = complexes.ph1_minimality_check(parse_poly("x^2*z+x*y^3", W112), 3)
    assert red[0] is False


def test_koszul_dims_quadric_bw():
    om = parse_poly(QUADRIC_BW, W112)
    tbl = complexes.koszul_dims(om, 16)
    h0 = [tbl.dim(0, d) for d in range(17)]
    assert h0 == [1, 2, 3, 2] + [2] * 13
    h1 = [tbl.dim(1, d) for d in range(17)]
    assert h1 == [0, 0, 0, 0, 1] + [2] * 12
    for d in range(17):
        assert tbl.dim(2, d) == 0
        assert tbl.dim(3, d) == 0


def test_koszul_h1_vanishes_for_isolated_singularities():
    om = parse_poly(ELLIPTIC, W111)
    tbl = complexes.koszul_dims(om, 12)
    for d in range(13):
        assert tbl.dim(1, d) == 0
        assert tbl.dim(2, d) == 0
        assert tbl.dim(3, d) == 0


def test_sealed_k1():
    om = parse_poly(QUADRIC_BW, W112)
    dims, all_zero = complexes.sealed_k1_dims(om, 16)
    assert all_zero and not any(dims.values())

    cusp_dims, cusp_zero = complexes.sealed_k1_dims(parse_poly(CUSP, W123), 8)
    assert not cusp_zero
    assert cusp_dims[5] == 1


def test_derham_exactness():
    assert complexes.derham_exactness_check(W111, 15)
    assert complexes.derham_exactness_check(W123, 20)


def test_euler_characteristic_check():
    assert complexes.euler_characteristic_check(parse_poly(ELLIPTIC, W111), 25)
    assert complexes.euler_characteristic_check(parse_poly("x*y*z", W111), 12)
    assert complexes.euler_characteristic_check(parse_poly(CUSP, W123), 0)


def test_dims_table_row_and_bounds():
    om = parse_poly(QUADRIC_BW, W112)
    tbl = complexes.ph_dims(om, 5)
    assert tbl.bound == 5
    row3 = tbl.row(3)
    assert min(row3) == -4 and max(row3) == 5
    assert tbl.dim(2, -99) == 0
    assert tbl.dim(0, -1) == 0
