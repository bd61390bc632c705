"""Exact operator identities: root-of-unity sums, E_k = 0, the B identity,
agreement of the operator forms, and reflection/rotation equivalence."""
from fractions import Fraction

from . import operators as ops
from .laurent import LaurentPoly, RationalLaurent
from .scalars import root_power


def _frac(order, num_terms, den_terms):
    return RationalLaurent(LaurentPoly(order, num_terms), LaurentPoly(order, den_terms))


# -- root-of-unity sums -------------------------------------------------

def sum_general(N, h):
    """sum_l q^{l(h+1)} / (q^l - z) == N z^h / (1 - z^N), 0 <= h < N."""
    if not 0 <= h < N:
        raise ValueError("need 0 <= h < N")
    q = lambda e: root_power(N, e)
    lhs = RationalLaurent(LaurentPoly(N))
    for l in range(N):
        lhs = lhs + _frac(N, {0: q(l * (h + 1))}, {0: q(l), 1: -1})
    rhs = _frac(N, {h: N}, {0: 1, N: -1})
    return lhs == rhs


def sum1_admissible(N, j):
    return j % 2 == 0 and 0 <= j <= 2 * N - 2


def sum2_admissible(N, j):
    return (N - j) % 2 == 0 and 0 <= j <= N - 2


def _half_power_sum(N, weight):
    """z^2 sum_l weight(l) / (q^l - z^2) over Q(zeta_{2N}), q = zeta_{2N}^2."""
    M = 2 * N
    lhs = RationalLaurent(LaurentPoly(M))
    for l in range(N):
        lhs = lhs + _frac(M, {2: weight(l)}, {0: root_power(M, 2 * l), 2: -1})
    return lhs


def sum1(N, j):
    """z^2 sum_l q^{-lj/2} / (q^l - z^2) == N z^{2N-j} / (1 - z^{2N})."""
    M = 2 * N
    lhs = _half_power_sum(N, lambda l: root_power(M, -l * j))
    rhs = _frac(M, {2 * N - j: N}, {0: 1, 2 * N: -1})
    return lhs == rhs


def sum2(N, j):
    """Both displayed forms of the alternating sum against N z^{N-j}/(1 - z^{2N})."""
    M = 2 * N
    alternating = _half_power_sum(N, lambda l: root_power(M, -l * j) * (-1) ** l)
    shifted = _half_power_sum(N, lambda l: root_power(M, (N - j) * l))
    rhs = _frac(M, {N - j: N}, {0: 1, 2 * N: -1})
    return alternating == shifted and shifted == rhs


def verify_sum_identities(N):
    """Every admissible (h, j) for the three sums at this N."""
    entries = []
    for h in range(N):
        entries.append({"identity": "general", "h": h, "pass": sum_general(N, h)})
    for j in range(2 * N - 1):
        if sum1_admissible(N, j):
            entries.append({"identity": "sum1", "j": j, "pass": sum1(N, j)})
    for j in range(N - 1):
        if sum2_admissible(N, j):
            entries.append({"identity": "sum2", "j": j, "pass": sum2(N, j)})
    return entries


# -- coefficient identities ---------------------------------------------

def E_k(N, alpha, beta, k):
    """sum_i A_i(z) A_{i+k}(q^i / z) with the cyclic index convention."""
    total = RationalLaurent(LaurentPoly(N))
    for i in range(N):
        Ai = ops.coeff_A(N, alpha, beta, i)
        Aik = ops.coeff_A_cyclic(N, alpha, beta, i + k)
        total = total + Ai * Aik.reflect(i)
    return total


def verify_Ek_zero(N, alpha, beta):
    return [{"k": k, "pass": E_k(N, alpha, beta, k).is_zero()} for k in range(1, N)]


def verify_B_identity(N, alpha, beta):
    B = ops.coeff_B(N, alpha, beta)
    s = N * (Fraction(alpha) + Fraction(beta) + 1)
    return [{"k": k, "pass": (B + B.reflect(k) - s).is_zero()} for k in range(N)]


def verify_B_sum(N, alpha, beta):
    """B == -sum_k A_k."""
    total = RationalLaurent(LaurentPoly(N))
    for k in range(N):
        total = total + ops.coeff_A(N, alpha, beta, k)
    return ops.coeff_B(N, alpha, beta) == -total


def verify_ultraspherical_coefficients(N, alpha):
    """A_k, B and z A_k' against their alpha = beta closed forms."""
    alpha = Fraction(alpha)
    s = 2 * alpha + 1
    ok = True
    for k in range(N):
        A = ops.coeff_A(N, alpha, alpha, k)
        ok &= A == _frac(N, {2: s}, {0: root_power(N, k), 2: -1})
        ok &= ops.coeff_D(N, alpha, alpha, k) == ops.coeff_B_ultra(N, alpha, k)
    ok &= ops.coeff_B(N, alpha, alpha) == _frac(N, {2 * N: N * s}, {2 * N: 1, 0: -1})
    ok &= ops.coeff_C(N, alpha, alpha) == ops.coeff_C_ultra(N, alpha)
    return ok


# -- operator agreement -------------------------------------------------

def symmetric_basis(order, e):
    if e == 0:
        return LaurentPoly.constant(order, 1)
    return LaurentPoly(order, {e: 1, -e: 1})


def verify_L_forms(N, alpha, beta, e_max=10):
    La = ops.build_L(N, alpha, beta, "difference")
    Lb = ops.build_L(N, alpha, beta, "B")
    return all(La.apply(LaurentPoly.monomial(N, e)) == Lb.apply(LaurentPoly.monomial(N, e))
               for e in range(-e_max, e_max + 1))


def verify_K_is_L1(alpha, beta, e_max=10):
    K = ops.build_K(alpha, beta)
    L = ops.build_L(1, alpha, beta)
    return all(K.apply(LaurentPoly.monomial(1, e)) == L.apply(LaurentPoly.monomial(1, e))
               for e in range(-e_max, e_max + 1))


def verify_H_forms(N, alpha, beta, e_max=12):
    """Composed H against both explicit forms on z^e + z^-e, e <= e_max."""
    Hc = ops.build_H_composed(N, alpha, beta)
    Hr = ops.build_H_explicit(N, alpha, beta, "reflection")
    Ht = ops.build_H_explicit(N, alpha, beta, "rotation")
    entries = []
    for e in range(e_max + 1):
        f = symmetric_basis(N, e)
        c = Hc.apply(f)
        entries.append({"e": e, "reflection": c == Hr.apply(f), "rotation": c == Ht.apply(f)})
    return entries


def H_forms_differ_on(N, alpha, beta, f=None):
    """True when the reflection and rotation forms of H disagree on f (default z)."""
    if f is None:
        f = LaurentPoly.monomial(N, 1)
    Hr = ops.build_H_explicit(N, alpha, beta, "reflection")
    Ht = ops.build_H_explicit(N, alpha, beta, "rotation")
    return Hr.apply(f) != Ht.apply(f)


def verify_H_hat_forms(N, alpha, e_max=10):
    conj = ops.build_H_hat_conjugated(N, alpha)
    explicit = ops.build_H_hat_explicit(N, alpha)
    return [{"e": e, "pass": conj.apply(symmetric_basis(N, e)) == explicit.apply(symmetric_basis(N, e))}
            for e in range(e_max + 1)]


def verify_reflection_rotation_equivalence(N, e_max=12):
    entries = []
    for k in range(N):
        for e in range(e_max + 1):
            f = symmetric_basis(N, e)
            entries.append({"k": k, "e": e, "pass": f.reflect(k) == f.rotate(-k)})
    return entries


def reflection_rotation_witness(N, k):
    """R_k z != T_{-k} z (for N >= 1 every k gives q^k/z vs q^-k z)."""
    z = LaurentPoly.monomial(N, 1)
    return z.reflect(k) != z.rotate(-k)


def verify_H_degree_preservation(N, alpha, beta, n_max=10):
    """H maps x^m (as a symmetric Laurent polynomial) into span{1, ..., x^m}."""
    H = ops.build_H_explicit(N, alpha, beta, "reflection")
    entries = []
    for m in range(n_max + 1):
        f = LaurentPoly(N, {1: 1, -1: 1}) ** m
        g = H.apply(f)
        ok = g.is_polynomial()
        if ok:
            g = g.to_laurent()
            ok = g.is_symmetric() and (g.is_zero() or g.max_exp() <= m)
        entries.append({"m": m, "pass": ok})
    return entries
