"""Dunkl-type operators on Laurent polynomials over Q(zeta_N).

An operator is a finite sum of atoms ``coeff(z) * (d/dz)^m f (sigma(z))``
where sigma is the identity, a reflection z -> q^k/z or a rotation
z -> q^k z, and q = exp(2 pi i / N).
"""
from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly, RationalLaurent
from .scalars import Cyclo, root_power

IDENTITY = ("id", 0)


def reflect(k):
    return ("reflect", k)


def rotate(k):
    return ("rotate", k)


@dataclass(frozen=True)
class Atom:
    coeff: RationalLaurent
    deriv: int = 0
    subst: tuple = IDENTITY

    def act(self, f):
        """(d/dz)^deriv f evaluated at sigma(z), without the coefficient."""
        g = f
        for _ in range(self.deriv):
            g = g.derivative()
        kind, k = self.subst
        if kind == "reflect":
            g = g.reflect(k)
        elif kind == "rotate":
            g = g.rotate(k)
        return g


class CircleOperator:
    """Linear combination of atoms.

    When ``denominator`` is given every atom coefficient is rewritten over
    it (the division must be exact), so applying the operator to a Laurent
    polynomial produces a single quotient with that denominator.
    """

    def __init__(self, order, atoms, denominator=None, name=""):
        self.order = order
        self.atoms = tuple(atoms)
        self.name = name
        self._common = None
        if denominator is not None:
            den = _normalized(denominator)
            nums = []
            for atom in self.atoms:
                factor = den.exact_div(atom.coeff.den)
                nums.append(atom.coeff.num * factor)
            self._common = den
            self._nums = nums

    def __repr__(self):
        return f"CircleOperator({self.name or '?'}, N={self.order}, atoms={len(self.atoms)})"

    def __add__(self, other):
        return CircleOperator(self.order, self.atoms + other.atoms)

    def apply(self, f):
        if isinstance(f, (int, Fraction, Cyclo)):
            f = LaurentPoly.constant(self.order, f)
        if isinstance(f, LaurentPoly) and self._common is not None:
            total = LaurentPoly(self.order)
            for num, atom in zip(self._nums, self.atoms):
                total = total + num * atom.act(f)
            return RationalLaurent(total, self._common)
        f = RationalLaurent.lift(f, self.order)
        total = RationalLaurent(LaurentPoly(self.order))
        for atom in self.atoms:
            total = total + atom.coeff * atom.act(f)
        return total

    __call__ = apply


def _normalized(p):
    return RationalLaurent(p, p).den


def apply(op, f):
    return op.apply(f)


class ComposedOperator:
    """f -> L(L f) - c L f, evaluated by applying L twice."""

    def __init__(self, inner, shift, name=""):
        self.inner = inner
        self.shift = Fraction(shift)
        self.order = inner.order
        self.name = name

    def apply(self, f):
        g = self.inner.apply(f)
        if g.is_polynomial():
            g = g.to_laurent()
        return self.inner.apply(g) - g * self.shift

    __call__ = apply


class ConjugatedOperator:
    """f -> phi^{-1} H (phi f) - c f with phi = z - 1/z."""

    def __init__(self, outer, shift=0, name=""):
        self.outer = outer
        self.shift = Fraction(shift)
        self.order = outer.order
        self.name = name
        self.phi = LaurentPoly(self.order, {1: 1, -1: -1})

    def apply(self, f):
        f = RationalLaurent.lift(f, self.order)
        g = self.outer.apply(f * self.phi)
        return g / self.phi - f * self.shift

    __call__ = apply


# -- coefficients -------------------------------------------------------

def _q(N, k):
    return root_power(N, k)


def _rational(order, terms, den_terms):
    return RationalLaurent(LaurentPoly(order, terms), LaurentPoly(order, den_terms))


def rho_exponent(N, k):
    """Integer exponent e with rho_k = q^e (odd N)."""
    top = k if k % 2 == 0 else k - N
    if top % 2:
        raise ArithmeticError(f"rho_{k} is not an integer power of q for N={N}")
    return top // 2


def coeff_A(N, alpha, beta, k):
    if not 0 <= k < N:
        raise ValueError(f"k={k} outside 0..{N - 1}")
    alpha, beta = Fraction(alpha), Fraction(beta)
    den = {0: _q(N, k), 2: -1}
    if N % 2 == 0:
        sigma = alpha + beta + 1 + (-1) ** k * (alpha - beta)
        return _rational(N, {2: sigma}, den)
    rho = _q(N, rho_exponent(N, k))
    return _rational(N, {2: alpha + beta + 1, 1: rho * (alpha - beta)}, den)


def coeff_A_cyclic(N, alpha, beta, k):
    """A_k with the index read modulo N."""
    return coeff_A(N, alpha, beta, k % N)


def coeff_B(N, alpha, beta):
    alpha, beta = Fraction(alpha), Fraction(beta)
    return _rational(N, {2 * N: N * (alpha + beta + 1), N: N * (alpha - beta)},
                     {2 * N: 1, 0: -1})


def coeff_C(N, alpha, beta):
    alpha, beta = Fraction(alpha), Fraction(beta)
    s = alpha + beta + 1
    inner = _rational(N, {0: 2 * N * s, N: 2 * N * (alpha - beta)}, {2 * N: 1, 0: -1})
    return (inner + (1 + N * s)) * LaurentPoly.monomial(N, 1)


def coeff_D(N, alpha, beta, k):
    """z A_k'(z)."""
    return coeff_A(N, alpha, beta, k).z_ddz(1)


def clearing_denominator(N, power=1):
    """(z^{2N} - 1)^power."""
    return LaurentPoly(N, {2 * N: 1, 0: -1}) ** power


def _z(order, e=1):
    return RationalLaurent(LaurentPoly.monomial(order, e))


# -- operators ----------------------------------------------------------

def build_K(alpha, beta):
    alpha, beta = Fraction(alpha), Fraction(beta)
    G = _rational(1, {2: alpha + beta + 1, 1: alpha - beta}, {0: 1, 2: -1})
    atoms = [Atom(_z(1), 1), Atom(G, 0, reflect(0)), Atom(-G, 0)]
    return CircleOperator(1, atoms, clearing_denominator(1), name="K")


def build_L(N, alpha, beta, form="difference"):
    """L(N) = z d/dz + sum_k A_k (R_k - I), or z d/dz + sum_k A_k R_k + B I."""
    atoms = [Atom(_z(N), 1)]
    if form == "difference":
        for k in range(N):
            A = coeff_A(N, alpha, beta, k)
            atoms += [Atom(A, 0, reflect(k)), Atom(-A, 0)]
    elif form == "B":
        for k in range(N):
            atoms.append(Atom(coeff_A(N, alpha, beta, k), 0, reflect(k)))
        atoms.append(Atom(coeff_B(N, alpha, beta), 0))
    else:
        raise ValueError(f"unknown form {form!r}")
    return CircleOperator(N, atoms, clearing_denominator(N), name=f"L({N})")


def build_H_composed(N, alpha, beta):
    s = Fraction(alpha) + Fraction(beta) + 1
    return ComposedOperator(build_L(N, alpha, beta), N * s, name=f"H({N})")


def build_H_explicit(N, alpha, beta, form="reflection"):
    atoms = [Atom(_z(N, 2), 2), Atom(coeff_C(N, alpha, beta), 1)]
    if form == "reflection":
        for k in range(N):
            D = coeff_D(N, alpha, beta, k)
            atoms += [Atom(D, 0, reflect(k)), Atom(-D, 0)]
    elif form == "rotation":
        for k in range(1, N):
            D = coeff_D(N, alpha, beta, k)
            atoms += [Atom(D, 0, rotate(-k)), Atom(-D, 0)]
    else:
        raise ValueError(f"unknown form {form!r}")
    return CircleOperator(N, atoms, clearing_denominator(N, 2), name=f"H({N}) {form}")


def coeff_B_ultra(N, alpha, k):
    """2(2 alpha + 1) q^k z^2 / (q^k - z^2)^2."""
    alpha = Fraction(alpha)
    qk = _q(N, k)
    den = LaurentPoly(N, {0: qk, 2: -1}) ** 2
    return RationalLaurent(LaurentPoly(N, {2: qk * (2 * (2 * alpha + 1))}), den)


def coeff_B_hat(N, alpha, k):
    qk = _q(N, k)
    factor = RationalLaurent(LaurentPoly(N, {0: _q(N, 2 * k), 2: -1}),
                             LaurentPoly(N, {2: qk, 0: -qk}))
    return factor * coeff_B_ultra(N, alpha, k)


def coeff_C_ultra(N, alpha):
    alpha = Fraction(alpha)
    s = 2 * alpha + 1
    inner = _rational(N, {0: 2 * N * s}, {2 * N: 1, 0: -1}) + (1 + N * s)
    return inner * LaurentPoly.monomial(N, 1)


def coeff_C_hat(N, alpha):
    extra = _rational(N, {3: 2, 1: 2}, {2: 1, 0: -1})
    return coeff_C_ultra(N, alpha) + extra


def build_H_hat_explicit(N, alpha, form="reflection"):
    atoms = [Atom(_z(N, 2), 2), Atom(coeff_C_hat(N, alpha), 1)]
    if form == "reflection":
        ks = range(N)
        sub = reflect
    elif form == "rotation":
        ks = range(1, N)
        sub = lambda k: rotate(-k)
    else:
        raise ValueError(f"unknown form {form!r}")
    for k in ks:
        Bh = coeff_B_hat(N, alpha, k)
        atoms += [Atom(Bh, 0, sub(k)), Atom(-Bh, 0)]
    den = clearing_denominator(N, 2) * LaurentPoly(N, {2: 1, 0: -1})
    return CircleOperator(N, atoms, den, name=f"H^({N}) {form}")


def build_H_hat_conjugated(N, alpha):
    alpha = Fraction(alpha)
    H = build_H_composed(N, alpha, alpha)
    return ConjugatedOperator(H, N * (2 * alpha + 1) + 1, name=f"H^({N}) conjugated")


# -- eigenvalues --------------------------------------------------------

def eigenvalue_mu(n, alpha, beta):
    if n % 2 == 0:
        return Fraction(-n, 2)
    return Fraction(n + 1, 2) + Fraction(alpha) + Fraction(beta) + 1


def eigenvalue_lambda(n, N, alpha, beta):
    if n % 2 == 0:
        return Fraction(-n, 2)
    return Fraction(n + 1, 2) + (Fraction(alpha) + Fraction(beta) + 1) * N


def eigenvalue_lambda_tilde(n, N, alpha, beta):
    lam = eigenvalue_lambda(n, N, alpha, beta)
    return lam * lam - N * (Fraction(alpha) + Fraction(beta) + 1) * lam


def eigenvalue_Lambda(n, N, alpha, beta):
    return n * (n + N * (Fraction(alpha) + Fraction(beta) + 1))


def eigenvalue_Xi(n, N, alpha):
    return n * (n + N * (2 * Fraction(alpha) + 1) + 2)
