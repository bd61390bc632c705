"""Floating-point orthogonality and self-adjointness checks.

The circle weight (1 - cos N t)^(alpha+1/2) (1 + cos N t)^(beta+1/2) vanishes
(or blows up) at t = m pi / N.  Each arc between consecutive zeros is
integrated with a Gauss-Jacobi rule carrying the endpoint powers exactly,
so the remaining integrand is analytic and the rule converges spectrally.
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from . import operators as ops
from .laurent import LaurentPoly
from .opuc import VerblunskySeq
from .szego import build_P, build_Q


@dataclass(frozen=True)
class QuadratureConfig:
    """``panels`` is the number of Gauss nodes per arc between weight zeros."""

    panels: int = 64
    tolerance: float = 1e-10
    seed: int = 0

    def __post_init__(self):
        if self.panels < 64:
            raise ValueError("panels must be >= 64")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")


def _check_params(alpha, beta):
    if alpha <= -1 or beta <= -1:
        raise ValueError("weight needs alpha > -1 and beta > -1")


def weight_circle(theta, N, alpha, beta, form="cosN"):
    alpha, beta = float(alpha), float(beta)
    _check_params(alpha, beta)
    theta = np.asarray(theta, dtype=float)
    if form == "cosN":
        # 1 - cos x = 2 sin^2(x/2), 1 + cos x = 2 cos^2(x/2), without cancellation
        s = np.abs(np.sin(N * theta / 2))
        c = np.abs(np.cos(N * theta / 2))
        with np.errstate(divide="ignore"):
            return 2.0 ** (alpha + beta + 1) * s ** (2 * alpha + 1) * c ** (2 * beta + 1)
    if form == "Ncos":
        with np.errstate(divide="ignore", invalid="ignore"):
            return ((1 - np.cos(N * theta)) ** (alpha + 0.5)
                    * np.abs(1 + N * np.cos(theta)) ** (beta + 0.5))
    raise ValueError(f"unknown weight form {form!r}")


def _sinc_half(x):
    # sin(x/2)/x, finite at 0
    return 0.5 * np.sinc(x / (2 * np.pi))


def circle_rule(N, alpha, beta, nodes, form="cosN"):
    """Nodes theta_i in [0, 2 pi) and weights w_i with sum w_i g(theta_i) ~ int g rho."""
    alpha, beta = float(alpha), float(beta)
    _check_params(alpha, beta)
    if form == "Ncos":
        return _legendre_rule(N, alpha, beta, nodes)
    thetas, weights = [], []
    for m in range(2 * N):
        a, b = (2 * alpha + 1, 2 * beta + 1) if m % 2 == 0 else (2 * beta + 1, 2 * alpha + 1)
        x, w = roots_jacobi(nodes, b, a)
        t = np.pi * (1 + x) / 2
        smooth = (2.0 ** (alpha + beta + 1)
                  * _sinc_half(t) ** a * _sinc_half(np.pi - t) ** b)
        thetas.append((m * np.pi + t) / N)
        weights.append(w * smooth * (np.pi / 2) ** (a + b + 1) / N)
    return np.concatenate(thetas), np.concatenate(weights)


def _legendre_rule(N, alpha, beta, panels, per_panel=16):
    # plain composite rule for the alternative weight; no singularity handling
    x, w = roots_legendre(per_panel)
    edges = np.linspace(0, 2 * np.pi, panels + 1)
    thetas, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        t = lo + (hi - lo) * (x + 1) / 2
        thetas.append(t)
        weights.append(w * (hi - lo) / 2 * weight_circle(t, N, alpha, beta, "Ncos"))
    return np.concatenate(thetas), np.concatenate(weights)


def _gram(values, weights, extra=None):
    w = weights if extra is None else weights * extra
    V = np.asarray(values)
    return (V * w) @ V.conj().T


def _family_values(family, seq, n_max, z):
    if family == "phi":
        polys = [seq.phi(n) for n in range(n_max + 1)]
    elif family == "psi":
        polys = [seq.psi(n) for n in range(n_max + 1)]
    elif family == "P":
        polys = [build_P(seq, n) for n in range(n_max + 1)]
    elif family == "Q":
        polys = [build_Q(seq, n) for n in range(n_max + 1)]
    else:
        raise ValueError(f"unknown family {family!r}")
    return [p.evaluate(z) for p in polys]


def _gram_at(family, seq, n_max, nodes, form, realline):
    theta, w = circle_rule(seq.N, seq.alpha, seq.beta, nodes, form)
    mass = w.sum()
    z = np.exp(1j * theta)
    vals = _family_values(family, seq, n_max, z)
    extra = None
    if realline:
        # x = 2 cos t over [0, pi] is half the circle; Q carries (4 - x^2)
        extra = 0.5 * (4 * np.sin(theta) ** 2 if family == "Q" else np.ones_like(theta))
    return _gram(vals, w, extra) / mass


def _summarize(G, G_fine, expected_diag=None):
    n = G.shape[0]
    off = G_fine - np.diag(np.diag(G_fine))
    out = {
        "matrix": G_fine.real.tolist(),
        "max_offdiag": float(np.abs(off).max()) if n > 1 else 0.0,
        "max_imag": float(np.abs(G_fine.imag).max()),
        "asymmetry": float(np.abs(G_fine - G_fine.T).max()),
        "refinement_change": float(np.abs(G_fine - G).max()),
    }
    if expected_diag is not None:
        exp = np.array([float(h) for h in expected_diag])
        out["expected_diag"] = exp.tolist()
        out["max_diag_rel_error"] = float(np.max(np.abs(np.diag(G_fine).real - exp) / exp))
    return out


def gram_circle(family, N, alpha, beta, n_max, config=QuadratureConfig(), form="cosN"):
    """Normalized circle Gram matrix of Phi_n or psi_n, diagonal against h_n."""
    if family not in ("phi", "psi"):
        raise ValueError("circle family must be 'phi' or 'psi'")
    seq = VerblunskySeq(alpha, beta, N)
    G = _gram_at(family, seq, n_max, config.panels, form, False)
    G2 = _gram_at(family, seq, n_max, 2 * config.panels, form, False)
    out = _summarize(G, G2, [seq.h(n) for n in range(n_max + 1)])
    out["converged"] = out["refinement_change"] < config.tolerance
    out["pass"] = (out["converged"] and out["max_offdiag"] < config.tolerance
                   and out["max_diag_rel_error"] < 1e-9)
    return out


def gram_realline(kind, N, alpha, beta, n_max, config=QuadratureConfig(), form="cosN"):
    """Gram matrix of P_n (weight w) or Q_n (weight w (4 - x^2)) on [-2, 2].

    Normalized by the total circle mass of the weight.
    """
    family = {"first": "P", "second": "Q"}[kind]
    seq = VerblunskySeq(alpha, beta, N)
    G = _gram_at(family, seq, n_max, config.panels, form, True)
    G2 = _gram_at(family, seq, n_max, 2 * config.panels, form, True)
    out = _summarize(G, G2)
    out["converged"] = out["refinement_change"] < config.tolerance
    out["pass"] = out["converged"] and out["max_offdiag"] < config.tolerance
    return out


def random_laurent(rng, order, e_max, coeff_range=3):
    exps = range(-e_max, e_max + 1)
    return LaurentPoly(order, {e: Fraction(int(rng.integers(-coeff_range, coeff_range + 1)))
                               for e in exps})


def selfadjointness_check(N, alpha, beta, trials, config=QuadratureConfig(),
                          e_max=6, tolerance=1e-9):
    """max |(Lf, g) - (f, Lg)| over random Laurent polynomials f, g.

    (f, g) = int f(e^{it}) conj(g(e^{it})) rho(t; N) dt, normalized to mass 1.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(config.seed)
    L = ops.build_L(N, alpha, beta)
    theta, w = circle_rule(N, alpha, beta, config.panels)
    w = w / w.sum()
    z = np.exp(1j * theta)

    def inner(f, g):
        return complex(np.sum(f.evaluate(z) * np.conj(g.evaluate(z)) * w))

    worst = 0.0
    worst_ratio = 0.0
    entries = []
    for _ in range(trials):
        f = random_laurent(rng, N, e_max)
        g = random_laurent(rng, N, e_max)
        Lf = L.apply(f).to_laurent()
        Lg = L.apply(g).to_laurent()
        left, right = inner(Lf, g), inner(f, Lg)
        defect = abs(left - right)
        scale = max(1.0, abs(left), abs(right))
        worst = max(worst, defect)
        worst_ratio = max(worst_ratio, defect / scale)
        entries.append({"defect": defect, "scale": scale})
    return {"max_defect": worst, "max_relative_defect": worst_ratio,
            "pass": worst_ratio < tolerance, "trials": entries}
