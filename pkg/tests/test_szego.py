from fractions import Fraction

import numpy as np
import pytest
from scipy.special import jacobi

from sievedjacobi.laurent import LaurentPoly
from sievedjacobi.opuc import VerblunskySeq
from sievedjacobi.szego import (PrlFamily, build_P, build_P_symmetrized, build_Q,
                                christoffel_check, geronimus_check, inverse_map_check,
                                recurrence_from_formula, recurrence_from_polys,
                                ultraspherical_u)

GRID = [(0, 0), (Fraction(1, 2), Fraction(1, 4)), (Fraction(1, 3), Fraction(-1, 4)),
        (Fraction(3, 2), Fraction(1, 2))]


def monic_jacobi_scaled(n, a, b):
    """Ascending coefficients of 2^n * monic Jacobi P^(a,b)(x/2)."""
    p = np.poly1d(jacobi(n, a, b).coeffs / jacobi(n, a, b).coeffs[0])
    scaled = np.array([c * 2.0 ** k for k, c in enumerate(p.coeffs)])
    return scaled[::-1]


@pytest.mark.parametrize("ab", GRID)
def test_unsieved_families_are_jacobi_polynomials(ab):
    # on [-2, 2] the N = 1 weight is (2 - x)^alpha (2 + x)^beta
    a, b = map(float, ab)
    s = VerblunskySeq(*ab)
    for n in range(1, 9):
        P = [float(c) for c in PrlFamily("first", s).x_coeffs(n)]
        Q = [float(c) for c in PrlFamily("second", s).x_coeffs(n)]
        assert np.allclose(P, monic_jacobi_scaled(n, a, b), atol=1e-8)
        assert np.allclose(Q, monic_jacobi_scaled(n, a + 1, b + 1), atol=1e-8)


def test_examples():
    s = VerblunskySeq(0, 0, 2)
    x = LaurentPoly(2, {1: 1, -1: 1})
    assert build_P(s, 0) == LaurentPoly.constant(2, 1)
    assert build_P(s, 1) == x
    assert build_Q(VerblunskySeq(0, 0), 1) == LaurentPoly(1, {1: 1, -1: 1})
    fam = PrlFamily("first", s)
    b0, _ = recurrence_from_formula(fam, 0)
    b1, u1 = recurrence_from_formula(fam, 1)
    _, u2 = recurrence_from_formula(fam, 2)
    assert (b0, u1, u2) == (0, 2, Fraction(2, 3))


@pytest.mark.parametrize("N", range(1, 5))
@pytest.mark.parametrize("ab", GRID)
def test_monic_symmetric_and_two_routes(N, ab):
    s = VerblunskySeq(*ab, N)
    for kind in ("first", "second"):
        fam = PrlFamily(kind, s)
        for n in range(8):
            coeffs = fam.x_coeffs(n)
            assert len(coeffs) == n + 1 and coeffs[-1] == 1
    for n in range(8):
        assert build_P(s, n) == build_P_symmetrized(s, n)


@pytest.mark.parametrize("N", range(1, 5))
@pytest.mark.parametrize("ab", GRID)
def test_recurrence_formula_matches_division(N, ab):
    s = VerblunskySeq(*ab, N)
    for kind in ("first", "second"):
        fam = PrlFamily(kind, s)
        for n in range(13):
            assert recurrence_from_formula(fam, n) == recurrence_from_polys(fam, n)


@pytest.mark.parametrize("N", [2, 4])
def test_symmetric_weight_even_N_has_zero_b(N):
    fam = PrlFamily("first", VerblunskySeq(Fraction(2, 5), Fraction(2, 5), N))
    assert all(fam.recurrence(n)[0] == 0 for n in range(10))


def test_ultraspherical_examples():
    assert ultraspherical_u("first", 2, 0, 1) == 2
    assert ultraspherical_u("first", 2, 0, 2) == Fraction(2, 3)
    assert ultraspherical_u("first", 2, 0, 3) == Fraction(4, 3)
    assert ultraspherical_u("first", 3, 0, 2) == 1
    with pytest.raises(ValueError):
        ultraspherical_u("first", 2, 0, 2, beta=1)


@pytest.mark.parametrize("N", range(1, 6))
@pytest.mark.parametrize("alpha", [0, Fraction(1, 2), Fraction(3, 2)])
def test_ultraspherical_closed_forms(N, alpha):
    s = VerblunskySeq(alpha, alpha, N)
    for kind in ("first", "second"):
        fam = PrlFamily(kind, s)
        for n in range(1, 14):
            assert fam.recurrence(n)[1] == ultraspherical_u(kind, N, alpha, n)


@pytest.mark.parametrize("N", range(1, 5))
@pytest.mark.parametrize("ab", GRID)
def test_transforms_and_inverse_maps(N, ab):
    s = VerblunskySeq(*ab, N)
    for n in range(1, 13):
        c = christoffel_check(s, n)
        assert c["first_form"] and c["second_form"]
        assert geronimus_check(s, n)["pass"]
        m = inverse_map_check(s, n)
        assert m["odd"] and m["even"]
