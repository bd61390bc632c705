"""Exact eigenvalue checks for psi_n, P_n and Q_n."""
from dataclasses import dataclass, field
from fractions import Fraction

from . import operators as ops
from .laurent import LaurentPoly, RationalLaurent
from .opuc import VerblunskySeq
from .scalars import fmt_fraction
from .szego import build_P, build_Q


@dataclass
class EigenEntry:
    n: int
    eigenvalue: Fraction
    residual_zero: bool


@dataclass
class EigenReport:
    family: str
    N: int
    alpha: Fraction
    beta: Fraction
    entries: list = field(default_factory=list)
    route: str = ""

    @property
    def all_pass(self):
        return all(e.residual_zero for e in self.entries)

    def failures(self):
        return [e.n for e in self.entries if not e.residual_zero]

    def to_json(self):
        return {
            "family": self.family,
            "N": self.N,
            "alpha": fmt_fraction(self.alpha),
            "beta": fmt_fraction(self.beta),
            "entries": [{"n": e.n, "eigenvalue": fmt_fraction(e.eigenvalue),
                         "pass": e.residual_zero} for e in self.entries],
            "all_pass": self.all_pass,
        }


def cleared_residual(op, f, eigenvalue, clearing):
    """(op f - eigenvalue f) * clearing, reduced to a Laurent polynomial.

    Raises ArithmeticError if ``clearing`` does not clear the denominator.
    """
    r = op.apply(f) - RationalLaurent.lift(f) * eigenvalue
    return (r * clearing).to_laurent()


def eigencheck_K(alpha, beta, n_max):
    seq = VerblunskySeq(alpha, beta, 1)
    K = ops.build_K(alpha, beta)
    D = ops.clearing_denominator(1)
    report = EigenReport("psi", 1, seq.alpha, seq.beta, route="K")
    for n in range(n_max + 1):
        mu = ops.eigenvalue_mu(n, alpha, beta)
        res = cleared_residual(K, seq.psi(n), mu, D)
        report.entries.append(EigenEntry(n, mu, res.is_zero()))
    return report


def eigencheck_psi(N, alpha, beta, n_max):
    seq = VerblunskySeq(alpha, beta, N)
    L = ops.build_L(N, alpha, beta)
    D = ops.clearing_denominator(N)
    report = EigenReport("psi", N, seq.alpha, seq.beta, route="L")
    for n in range(n_max + 1):
        lam = ops.eigenvalue_lambda(n, N, alpha, beta)
        res = cleared_residual(L, seq.psi(n), lam, D)
        report.entries.append(EigenEntry(n, lam, res.is_zero()))
    return report


def _H(N, alpha, beta, route):
    if route == "composed":
        return ops.build_H_composed(N, alpha, beta)
    if route in ("reflection", "rotation"):
        return ops.build_H_explicit(N, alpha, beta, form=route)
    raise ValueError(f"unknown route {route!r}")


def eigencheck_P(N, alpha, beta, n_max, route="composed"):
    seq = VerblunskySeq(alpha, beta, N)
    H = _H(N, alpha, beta, route)
    D = ops.clearing_denominator(N, 2)
    report = EigenReport("P", N, seq.alpha, seq.beta, route=route)
    for n in range(n_max + 1):
        lam = ops.eigenvalue_Lambda(n, N, alpha, beta)
        res = cleared_residual(H, build_P(seq, n), lam, D)
        report.entries.append(EigenEntry(n, lam, res.is_zero()))
    return report


def eigencheck_Q(N, alpha, beta, n_max):
    """H applied to (z - 1/z) Q_n against Lambda_{n+1} (z - 1/z) Q_n."""
    seq = VerblunskySeq(alpha, beta, N)
    H = ops.build_H_composed(N, alpha, beta)
    D = ops.clearing_denominator(N, 2)
    phi = LaurentPoly(N, {1: 1, -1: -1})
    report = EigenReport("Q", N, seq.alpha, seq.beta, route="composed")
    for n in range(n_max + 1):
        lam = ops.eigenvalue_Lambda(n + 1, N, alpha, beta)
        res = cleared_residual(H, build_Q(seq, n) * phi, lam, D)
        report.entries.append(EigenEntry(n, lam, res.is_zero()))
    return report


def eigencheck_ultraspherical_Q(N, alpha, n_max, route="explicit"):
    """H^(N) Q_n = Xi_n(N) Q_n for alpha = beta."""
    seq = VerblunskySeq(alpha, alpha, N)
    if route == "explicit":
        H = ops.build_H_hat_explicit(N, alpha)
        clearing = ops.clearing_denominator(N, 2) * LaurentPoly(N, {2: 1, 0: -1})
    elif route == "rotation":
        H = ops.build_H_hat_explicit(N, alpha, form="rotation")
        clearing = ops.clearing_denominator(N, 2) * LaurentPoly(N, {2: 1, 0: -1})
    elif route == "conjugation":
        H = ops.build_H_hat_conjugated(N, alpha)
        clearing = None
    else:
        raise ValueError(f"unknown route {route!r}")
    report = EigenReport("Q", N, seq.alpha, seq.alpha, route=route)
    for n in range(n_max + 1):
        xi = ops.eigenvalue_Xi(n, N, alpha)
        Q = build_Q(seq, n)
        if clearing is None:
            ok = (H.apply(Q) - RationalLaurent.lift(Q) * xi).is_zero()
        else:
            ok = cleared_residual(H, Q, xi, clearing).is_zero()
        report.entries.append(EigenEntry(n, xi, ok))
    return report


def lambda_tilde_property(N, alpha, beta, n_max):
    """Lambda_n == lambda~_{2n} == lambda~_{2n-1} for 1 <= n <= n_max."""
    out = []
    for n in range(1, n_max + 1):
        big = ops.eigenvalue_Lambda(n, N, alpha, beta)
        out.append({
            "n": n,
            "pass": (ops.eigenvalue_lambda_tilde(2 * n, N, alpha, beta) == big
                     and ops.eigenvalue_lambda_tilde(2 * n - 1, N, alpha, beta) == big),
        })
    return out
