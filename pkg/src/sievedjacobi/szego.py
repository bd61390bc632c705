"""Real-line polynomials P_n, Q_n in x = z + 1/z built from CMV polynomials."""
from fractions import Fraction

from .laurent import LaurentPoly


def _phi_factor(order):
    # z - 1/z
    return LaurentPoly(order, {1: 1, -1: -1})


class PrlFamily:
    """Sieved Jacobi polynomials of the first (P) or second (Q) kind.

    Polynomials are kept as symmetric Laurent polynomials in z; the
    x-representation is derived on demand.
    """

    def __init__(self, kind, seq):
        if kind not in ("first", "second"):
            raise ValueError("kind must be 'first' or 'second'")
        self.kind = kind
        self.seq = seq
        self._z = {}

    @property
    def order(self):
        return self.seq.field_order

    def __call__(self, n):
        if n not in self._z:
            self._z[n] = build_P(self.seq, n) if self.kind == "first" else build_Q(self.seq, n)
        return self._z[n]

    def x_coeffs(self, n):
        return [c.to_fraction() for c in self(n).to_x_poly()]

    def recurrence(self, n):
        return recurrence_from_formula(self, n)


def build_P(seq, n):
    if n == 0:
        return LaurentPoly.constant(seq.field_order, 1)
    a = seq
    return seq.psi(2 * n) + seq.psi(2 * n - 1).scale(1 + a(2 * n - 1))


def build_P_symmetrized(seq, n):
    """P_n = psi_{2n-1}(z) + psi_{2n-1}(1/z), an independent route to P_n."""
    if n == 0:
        return LaurentPoly.constant(seq.field_order, 1)
    p = seq.psi(2 * n - 1)
    return p + p.power_substitute(-1)


def build_Q(seq, n):
    p = seq.psi(2 * n + 1)
    num = p - p.power_substitute(-1)
    q, r = num.divmod(_phi_factor(seq.field_order))
    if not r.is_zero():
        raise ArithmeticError(f"Q_{n}: antisymmetric numerator not divisible by z - 1/z")
    return q


def recurrence_from_formula(fam, n):
    """Closed-form (b_n, u_n) for P, or (b~_n, u~_n) for Q; u is None at n = 0."""
    a = fam.seq
    if fam.kind == "first":
        b = a(2 * n) * (1 - a(2 * n - 1)) - a(2 * n - 2) * (1 + a(2 * n - 1))
        u = None
        if n >= 1:
            u = (1 + a(2 * n - 1)) * (1 - a(2 * n - 3)) * (1 - a(2 * n - 2) ** 2)
    else:
        b = a(2 * n) * (1 - a(2 * n + 1)) - a(2 * n + 2) * (1 + a(2 * n + 1))
        u = None
        if n >= 1:
            u = (1 + a(2 * n - 1)) * (1 - a(2 * n + 1)) * (1 - a(2 * n) ** 2)
    return b, u


def recurrence_from_polys(fam, n):
    """Solve x p_n = p_{n+1} + b p_n + u p_{n-1} for (b, u) by coefficient matching."""
    pn = fam.x_coeffs(n)
    r = [Fraction(0)] + pn
    for i, c in enumerate(fam.x_coeffs(n + 1)):
        r[i] -= c
    b = r[n] if n < len(r) else Fraction(0)
    for i, c in enumerate(pn):
        r[i] -= b * c
    u = None
    if n >= 1:
        pm = fam.x_coeffs(n - 1)
        u = r[n - 1]
        for i, c in enumerate(pm):
            r[i] -= u * c
    if any(r):
        raise ArithmeticError(f"three-term relation inconsistent at n={n}")
    return b, u


def ultraspherical_u(kind, N, alpha, n, beta=None):
    """Closed-form u_n of the sieved ultraspherical family.

    For N = 1 the two special residues coincide and both factors apply.
    """
    alpha = Fraction(alpha)
    if beta is not None and Fraction(beta) != alpha:
        raise ValueError("sieved ultraspherical coefficients need alpha == beta")
    u = Fraction(1)
    if kind == "first":
        if n % N == 0:
            m = n // N
            u *= Fraction(2 * m) / (2 * alpha + 2 * m + 1)
        if (n - 1) % N == 0 and n >= 1:
            m = (n - 1) // N
            u *= (4 * alpha + 2 * m + 2) / (2 * alpha + 2 * m + 1)
    elif kind == "second":
        if n % N == 0 and n >= N:
            m = n // N
            u *= Fraction(2 * m) / (2 * alpha + 2 * m + 1)
        if (n + 1) % N == 0:
            m = (n + 1) // N
            u *= (4 * alpha + 2 * m + 2) / (2 * alpha + 2 * m + 1)
    else:
        raise ValueError("kind must be 'first' or 'second'")
    return u


def christoffel_check(seq, n):
    """Both forms of (z - 1/z)^2 Q_{n-1} in terms of P_{n+1}, P_n, P_{n-1}."""
    a = seq
    order = seq.field_order
    lhs = build_Q(seq, n - 1) * _phi_factor(order) ** 2
    P = lambda m: build_P(seq, m)
    first = (P(n + 1)
             + P(n).scale((a(2 * n) + a(2 * n - 2)) * (1 - a(2 * n - 1)))
             - P(n - 1).scale((1 - a(2 * n - 1)) * (1 - a(2 * n - 3)) * (1 - a(2 * n - 2) ** 2)))
    x_shift = LaurentPoly(order, {1: 1, -1: 1, 0: 2 * a(2 * n - 2)})
    second = (P(n) * x_shift
              - P(n - 1).scale(2 * (1 - a(2 * n - 3)) * (1 - a(2 * n - 2) ** 2)))
    return {"n": n, "first_form": lhs == first, "second_form": lhs == second}


def geronimus_check(seq, n):
    """P_n from Q_n, Q_{n-1}, Q_{n-2}."""
    a = seq
    Q = lambda m: build_Q(seq, m)
    rhs = (Q(n)
           - Q(n - 1).scale((1 + a(2 * n - 1)) * (a(2 * n) + a(2 * n - 2)))
           - Q(n - 2).scale((1 + a(2 * n - 1)) * (1 + a(2 * n - 3)) * (1 - a(2 * n - 2) ** 2)))
    return {"n": n, "pass": build_P(seq, n) == rhs}


def inverse_map_check(seq, n):
    """psi_{2n-1}, psi_{2n} rebuilt from P_n and Q_{n-1}."""
    a = seq(2 * n - 1)
    P = build_P(seq, n)
    phiQ = build_Q(seq, n - 1) * _phi_factor(seq.field_order)
    half = Fraction(1, 2)
    odd = (P + phiQ).scale(half)
    even = (P.scale(1 - a) - phiQ.scale(1 + a)).scale(half)
    return {"n": n, "odd": odd == seq.psi(2 * n - 1), "even": even == seq.psi(2 * n)}
