"""First-order Dunkl shift operator whose eigenfunctions are the Bannai-Ito polynomials.

    L = F(x)(I - R) + G(x)(T+ R - I),   R f(x) = f(-x),  T+ f(x) = f(x + 1)

with F = (x - rho1)(x - rho2)/(2x) and G = (x - r1 + 1/2)(x - r2 + 1/2)/(2x + 1).
T+ R is read as "reflect, then shift": f(x) -> f(-x - 1).
"""
from dataclasses import dataclass
from fractions import Fraction

from . import densepoly as dp
from .scalars import fmt_fraction


@dataclass(frozen=True)
class BIParams:
    rho1: Fraction
    rho2: Fraction
    r1: Fraction
    r2: Fraction

    def __post_init__(self):
        for name in ("rho1", "rho2", "r1", "r2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def F_numerator(self):
        return dp.mul([-self.rho1, 1], [-self.rho2, 1])

    def G_numerator(self):
        half = Fraction(1, 2)
        return dp.mul([half - self.r1, 1], [half - self.r2, 1])


def apply_bi(params, f):
    """L f for f given as ascending Fraction coefficients; the result is a polynomial.

    Raises ArithmeticError if either difference is not divisible by its
    denominator (2x resp. 2x + 1).
    """
    f = dp.normalize([Fraction(c) for c in f])
    reflected = dp.compose_affine(f, -1, 0)
    shifted = dp.compose_affine(f, -1, -1)
    odd_part = dp.exact_div(dp.sub(f, reflected), [0, 2])
    jump = dp.exact_div(dp.sub(shifted, f), [1, 2])
    out = dp.add(dp.mul(params.F_numerator(), odd_part), dp.mul(params.G_numerator(), jump))
    if dp.degree(out) > dp.degree(f) and f:
        raise ArithmeticError("degree raised: operator does not preserve polynomial degree")
    return out


def sigma(params, n):
    """Eigenvalue as displayed: n/2 (even n); rho1 + rho2 + r1 + r2 - (n+1)/2 (odd n)."""
    if n % 2 == 0:
        return Fraction(n, 2)
    p = params
    return p.rho1 + p.rho2 + p.r1 + p.r2 - Fraction(n + 1, 2)


def sigma_flipped(params, n):
    """Odd branch with rho1, rho2 negated: r1 + r2 - rho1 - rho2 - (n+1)/2."""
    if n % 2 == 0:
        return Fraction(n, 2)
    p = params
    return p.r1 + p.r2 - p.rho1 - p.rho2 - Fraction(n + 1, 2)


def bi_matrix(params, n_max):
    """M[i][j] = coefficient of x^i in L x^j, for 0 <= i, j <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    size = n_max + 1
    M = [[Fraction(0)] * size for _ in range(size)]
    for j in range(size):
        image = apply_bi(params, [0] * j + [1])
        for i, c in enumerate(image):
            M[i][j] = c
    return M


def is_upper_triangular(M):
    return all(not M[i][j] for j in range(len(M)) for i in range(j + 1, len(M)))


def bi_report(params, n_max):
    """Diagonal of the monomial matrix against both readings of the odd branch."""
    divisible = True
    try:
        M = bi_matrix(params, n_max)
    except ArithmeticError:
        divisible = False
        M = None
    entries = []
    if M is not None:
        for n in range(n_max + 1):
            d = M[n][n]
            entry = {
                "n": n,
                "diagonal": fmt_fraction(d),
                "sigma": fmt_fraction(sigma(params, n)),
                "match": d == sigma(params, n),
            }
            if n % 2:
                entry["sigma_rho_negated"] = fmt_fraction(sigma_flipped(params, n))
                entry["match_rho_negated"] = d == sigma_flipped(params, n)
            entries.append(entry)
    triangular = M is not None and is_upper_triangular(M)
    even_ok = all(e["match"] for e in entries if e["n"] % 2 == 0)
    return {
        "params": {k: fmt_fraction(getattr(params, k)) for k in ("rho1", "rho2", "r1", "r2")},
        "n_max": n_max,
        "exact_divisibility": divisible,
        "upper_triangular": triangular,
        "even_diagonal_ok": even_ok,
        "odd_reported": all("sigma_rho_negated" in e for e in entries if e["n"] % 2),
        "entries": entries,
        "pass": divisible and triangular and even_ok,
    }
