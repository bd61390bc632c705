"""Sieved Jacobi Verblunsky parameters, Szego recursion and CMV polynomials."""
from fractions import Fraction

from .laurent import LaurentPoly
from .scalars import fmt_fraction


class VerblunskySeq:
    """Sieved Jacobi Verblunsky sequence a_n(N) with memoized Phi_n, psi_n.

    ``field_order`` is the cyclotomic order the polynomials live in; it
    defaults to the sieve order N so that operators with q = exp(2 pi i/N)
    can act on them directly.
    """

    def __init__(self, alpha, beta, sieve_order=1, field_order=None):
        self.alpha = Fraction(alpha)
        self.beta = Fraction(beta)
        if sieve_order < 1:
            raise ValueError("sieve order N must be >= 1")
        if self.alpha <= -1 or self.beta <= -1:
            raise ValueError("need alpha > -1 and beta > -1")
        self.N = sieve_order
        self.field_order = field_order or sieve_order
        self._phi = [LaurentPoly.constant(self.field_order, 1)]
        self._psi = {}

    def __repr__(self):
        return (f"VerblunskySeq(alpha={fmt_fraction(self.alpha)}, "
                f"beta={fmt_fraction(self.beta)}, N={self.N})")

    def with_sieve(self, sieve_order, field_order=None):
        return VerblunskySeq(self.alpha, self.beta, sieve_order,
                             field_order or self.field_order)

    # -- coefficients -------------------------------------------------
    def jacobi(self, n):
        """Unsieved a_n; a_{-1} = -1."""
        if n == -1:
            return Fraction(-1)
        if n < -1:
            raise ValueError("a_n is defined for n >= -1")
        a, b = self.alpha, self.beta
        sign = 1 if (n + 1) % 2 == 0 else -1
        return -(a + Fraction(1, 2) + sign * (b + Fraction(1, 2))) / (n + a + b + 2)

    def __call__(self, n):
        """Sieved a_n(N); a_{-1}(N) = -1.

        Indices below -1 only ever appear multiplied by (1 + a_{-1}) = 0 in
        the recurrence formulas and are returned as 0.
        """
        if n == -1:
            return Fraction(-1)
        if n < -1:
            return Fraction(0)
        if (n + 1) % self.N:
            return Fraction(0)
        return self.jacobi((n + 1) // self.N - 1)

    def check_domain(self, n_max):
        """Numeric |a_n(N)| < 1 scan over 0 <= n <= n_max."""
        return all(abs(float(self(n))) < 1 for n in range(n_max + 1))

    def h(self, n):
        out = Fraction(1)
        for j in range(n):
            out *= 1 - self(j) ** 2
        return out

    # -- polynomials --------------------------------------------------
    def phi(self, n):
        """Monic Phi_n(z; N)."""
        while len(self._phi) <= n:
            m = len(self._phi) - 1
            cur = self._phi[m]
            star = cur.reverse(m)
            self._phi.append(cur.shift(1) - star.scale(self(m)))
        return self._phi[n]

    def psi(self, n):
        """CMV Laurent polynomial psi_n(z; N)."""
        if n not in self._psi:
            m = n // 2
            if n % 2 == 0:
                val = self.phi(n).power_substitute(-1).shift(m)
            else:
                val = self.phi(n).shift(-m)
            self._psi[n] = val
        return self._psi[n]


def jacobi_verblunsky(seq, n):
    return seq.jacobi(n)


def sieved_verblunsky(seq, n):
    return seq(n)


def szego_phi(seq, n):
    return seq.phi(n)


def cmv_psi(seq, n):
    return seq.psi(n)


def h_norm(seq, n):
    return seq.h(n)


def _split(n, N):
    return divmod(n, N)


def check_factorization(seq, n_max):
    """Phi_n(z;N) == z^j Phi_k(z^N;1) with n = N k + j, for n <= n_max."""
    base = seq.with_sieve(1)
    entries = []
    for n in range(n_max + 1):
        k, j = _split(n, seq.N)
        rhs = base.phi(k).power_substitute(seq.N).shift(j)
        entries.append({"n": n, "k": k, "j": j, "pass": seq.phi(n) == rhs})
    return entries


def parity_case(n, N, table="by_j"):
    """(exponent nu, sign s, label) with psi_n(z;N) = z^nu psi_k(z^(s N); 1).

    ``table="by_j"`` is the three-case split on the parities of n, N and j.
    It does not hold in general: some cases fail for even N and for odd
    N >= 5.  ``table="by_k"`` splits on the parities of n and k and holds
    for every n and N.
    """
    k, j = _split(n, N)
    if table == "by_k":
        if n % 2 == 0:
            if k % 2 == 0:
                return -j // 2, 1, "n even, k even"
            return (N - j) // 2, -1, "n even, k odd"
        if k % 2 == 0:
            return (j + 1) // 2, -1, "n odd, k even"
        return (j - N + 1) // 2, 1, "n odd, k odd"
    if table != "by_j":
        raise ValueError(f"unknown parity table {table!r}")
    if n % 2 == 0:
        if j % 2 == 0:
            return -j // 2, 1, "n even, j even"
        return (j + 1) // 2, -1, "n even, j odd"
    if N % 2 == 0:
        if j % 2 == 0:
            return (N - j) // 2, -1, "n odd, N even, j even"
        return (-N + j + 1) // 2, 1, "n odd, N even, j odd"
    if j % 2 == 0:
        return (-N + j + 1) // 2, 1, "n odd, N odd, j even"
    return (N - j) // 2, -1, "n odd, N odd, j odd"


def check_psi_parity_relations(seq, n_max, table="by_j"):
    """psi_n(z;N) == z^nu psi_k(z^{+-N};1) per the parity case of n."""
    base = seq.with_sieve(1)
    entries = []
    for n in range(n_max + 1):
        k, j = _split(n, seq.N)
        nu, sign, label = parity_case(n, seq.N, table)
        rhs = base.psi(k).power_substitute(sign * seq.N).shift(nu)
        entries.append({"n": n, "case": label, "pass": seq.psi(n) == rhs})
    return entries
