"""The ten acceptance criteria, each at its stated tolerance.

Every test prints one ``criterion k: PASS|FAIL`` line; the lines are also
collected into the pytest terminal summary.  Run directly with
``python tests/test_acceptance.py`` for the lines alone.
"""
import time
from fractions import Fraction

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # imported outside pytest
    ACCEPTANCE_LINES = []

from sievedjacobi import eigen, identities as ids
from sievedjacobi.bannai_ito import BIParams, bi_report
from sievedjacobi.opuc import VerblunskySeq, check_factorization, check_psi_parity_relations
from sievedjacobi.quadrature import gram_circle, gram_realline, selfadjointness_check
from sievedjacobi.szego import (PrlFamily, christoffel_check, geronimus_check, inverse_map_check,
                                recurrence_from_formula, recurrence_from_polys, ultraspherical_u)

GRID = [(Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(1, 4)),
        (Fraction(1, 3), Fraction(-1, 4)), (Fraction(3, 2), Fraction(1, 2))]


def report(k, ok, detail):
    line = f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def test_criterion_1_psi_eigen_equation():
    start = time.perf_counter()
    bad = []
    for N in range(1, 7):
        for a, b in GRID:
            rep = eigen.eigencheck_psi(N, a, b, 25)
            bad += [(N, a, b, n) for n in rep.failures()]
    elapsed = time.perf_counter() - start
    report(1, not bad and elapsed < 60,
           f"N<=6, 4 parameter points, n<=25: {len(bad)} nonzero residuals, {elapsed:.1f}s (limit 60s)")


def test_criterion_2_real_line_eigen_equations():
    bad = []
    for N in range(1, 7):
        for a, b in GRID:
            for route in ("composed", "reflection", "rotation"):
                bad += [("P", route, N, a, b, n) for n in eigen.eigencheck_P(N, a, b, 20, route).failures()]
            bad += [("Q", N, a, b, n) for n in eigen.eigencheck_Q(N, a, b, 20).failures()]
    report(2, not bad, f"H P_n = Lambda_n P_n (3 forms) and H on (z-1/z)Q_n with Lambda_(n+1), "
                       f"N<=6, n<=20: {len(bad)} failures")


def test_criterion_3_operator_identities():
    bad = []
    for N in range(1, 7):
        for a, b in GRID:
            bad += [("E", N, a, b, e["k"]) for e in ids.verify_Ek_zero(N, a, b) if not e["pass"]]
            bad += [("B", N, a, b, e["k"]) for e in ids.verify_B_identity(N, a, b) if not e["pass"]]
            bad += [("H", N, a, b, e["e"]) for e in ids.verify_H_forms(N, a, b, 12)
                    if not (e["reflection"] and e["rotation"])]
    report(3, not bad, f"E_k = 0, B(z)+B(q^k/z) = N(a+b+1), composed H = both explicit forms "
                       f"(exponents <= 12), N<=6: {len(bad)} failures")


def test_criterion_4_root_of_unity_sums():
    count, bad = 0, []
    for N in range(1, 9):
        for e in ids.verify_sum_identities(N):
            count += 1
            if not e["pass"]:
                bad.append((N, e))
    report(4, not bad, f"{count} admissible (N, h/j) instances for N<=8: {len(bad)} failures")


def test_criterion_5_structural_relations():
    bad, parity_fail, parity_by_k_fail = [], [], []
    for N in range(1, 5):
        for a, b in GRID:
            s = VerblunskySeq(a, b, N)
            bad += [("factorization", N, e["n"]) for e in check_factorization(s, 15) if not e["pass"]]
            parity_fail += [(N, e["n"]) for e in check_psi_parity_relations(s, 15, "by_j") if not e["pass"]]
            parity_by_k_fail += [(N, e["n"]) for e in check_psi_parity_relations(s, 15, "by_k")
                                 if not e["pass"]]
            for n in range(1, 16):
                c = christoffel_check(s, n)
                if not (c["first_form"] and c["second_form"]):
                    bad.append(("christoffel", N, n))
                if not geronimus_check(s, n)["pass"]:
                    bad.append(("geronimus", N, n))
                m = inverse_map_check(s, n)
                if not (m["odd"] and m["even"]):
                    bad.append(("inverse map", N, n))
    failing_N = sorted({N for N, _ in parity_fail})
    report(5, not bad and not parity_fail,
           f"factorization/Christoffel/Geronimus/inverse maps: {len(bad)} failures; "
           f"psi parity (j-parity case table): {len(parity_fail)} failures at N={failing_N}; "
           f"psi parity (k-parity table): {len(parity_by_k_fail)} failures")


def test_criterion_6_recurrence_coefficients():
    bad = []
    for N in range(1, 6):
        for a, b in GRID:
            s = VerblunskySeq(a, b, N)
            for kind in ("first", "second"):
                fam = PrlFamily(kind, s)
                bad += [(kind, N, n) for n in range(16)
                        if recurrence_from_formula(fam, n) != recurrence_from_polys(fam, n)]
        for alpha in (Fraction(0), Fraction(1, 2), Fraction(3, 2)):
            s = VerblunskySeq(alpha, alpha, N)
            for kind in ("first", "second"):
                fam = PrlFamily(kind, s)
                bad += [("ultra", kind, N, n) for n in range(1, 16)
                        if fam.recurrence(n)[1] != ultraspherical_u(kind, N, alpha, n)]
    fam = PrlFamily("first", VerblunskySeq(0, 0, 2))
    spot = [fam.recurrence(n)[1] for n in (1, 2, 3)]
    ok_spot = spot == [2, Fraction(2, 3), Fraction(4, 3)]
    report(6, not bad and ok_spot,
           f"formula vs division and closed ultraspherical u_n, N<=5, n<=15: {len(bad)} mismatches; "
           f"N=2, alpha=0: u_1,u_2,u_3 = {', '.join(str(u) for u in spot)}")


def test_criterion_7_numeric_orthogonality():
    worst_off, worst_diag, worst_real, failed = 0.0, 0.0, 0.0, []
    for N in range(1, 4):
        for a, b in GRID:
            for fam in ("phi", "psi"):
                g = gram_circle(fam, N, a, b, 10)
                worst_off = max(worst_off, g["max_offdiag"])
                worst_diag = max(worst_diag, g["max_diag_rel_error"])
                if not (g["max_offdiag"] < 1e-10 and g["max_diag_rel_error"] < 1e-9):
                    failed.append((fam, N, a, b))
            for kind in ("first", "second"):
                g = gram_realline(kind, N, a, b, 10)
                worst_real = max(worst_real, g["max_offdiag"])
                if not g["max_offdiag"] < 1e-10:
                    failed.append((kind, N, a, b))
    report(7, not failed, f"circle off-diagonal {worst_off:.1e} (<1e-10), diagonal rel. error "
                          f"{worst_diag:.1e} (<1e-9), real-line off-diagonal {worst_real:.1e} (<1e-10)")


def test_criterion_8_selfadjointness():
    worst, failed = 0.0, []
    for N in range(1, 5):
        for a, b in GRID:
            r = selfadjointness_check(N, a, b, 20)
            worst = max(worst, r["max_relative_defect"])
            if not r["max_relative_defect"] < 1e-9:
                failed.append((N, a, b))
    report(8, not failed, f"max |(Lf,g)-(f,Lg)|/scale over 20 trials, N<=4: {worst:.1e} (<1e-9)")


def test_criterion_9_bannai_ito():
    param_sets = [BIParams(Fraction(1, 3), Fraction(2, 5), Fraction(-1, 7), Fraction(3, 4)),
                  BIParams(0, 0, 0, 0), BIParams(2, -3, Fraction(1, 2), 5)]
    ok = True
    odd_match_display = odd_match_negated = True
    for p in param_sets:
        r = bi_report(p, 15)
        ok &= r["exact_divisibility"] and r["upper_triangular"] and r["even_diagonal_ok"]
        ok &= r["odd_reported"]
        odd = [e for e in r["entries"] if e["n"] % 2]
        odd_match_display &= all(e["match"] for e in odd)
        odd_match_negated &= all(e["match_rho_negated"] for e in odd)
    report(9, ok, f"degree preserving, exact division, even diagonal = n/2 for n<=15; odd diagonal "
                  f"reported: matches displayed sigma_n: {odd_match_display}, "
                  f"matches rho-negated sigma_n: {odd_match_negated}")


def test_criterion_10_ultraspherical_second_kind():
    bad = []
    for N in range(1, 5):
        for alpha in (Fraction(0), Fraction(1, 2), Fraction(3, 2)):
            for route in ("explicit", "conjugation"):
                rep = eigen.eigencheck_ultraspherical_Q(N, alpha, 15, route)
                bad += [(route, N, alpha, n) for n in rep.failures()]
    report(10, not bad, f"H^ Q_n = n(n+N(2a+1)+2) Q_n via explicit and conjugation routes, "
                        f"N<=4, n<=15: {len(bad)} failures")


if __name__ == "__main__":
    import sys
    failures = 0
    for name, fn in sorted(globals().items(), key=lambda kv: (len(kv[0]), kv[0])):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
