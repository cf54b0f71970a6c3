"""Acceptance criteria 1-10, one PASS/FAIL line each.

The lines appear in pytest's terminal summary, or run
``python3 tests/test_acceptance.py`` for a standalone report.
"""

import time
from fractions import Fraction as F

import mpmath
import pytest
from mpmath import mpf

from saddlecoef import harness, lagrangean as lg, oracles, saddle, stirling
from saddlecoef.catalog import CATALOG, get_phi
from saddlecoef.series import to_mpf


def crit_1():
    t0 = time.perf_counter()
    ok = all(stirling.c_coeff(m) == stirling.d_coeff(m) for m in range(41))
    dt = time.perf_counter() - t0
    return ok and dt < 60, f"c_m = d_m for m <= 40 in {dt:.1f}s"


def crit_2():
    golden = [F(1), F(-1, 12), F(1, 288), F(139, 51840), F(-571, 2488320), F(-163879, 209018880)]
    gh = [(1, 1), (F(-1, 3), F(2, 3)), (F(1, 12),) * 2, (F(-2, 135),) * 2, (F(1, 864),) * 2,
          (F(1, 2835),) * 2, (F(-139, 777600),) * 2, (F(1, 25515),) * 2, (F(-571, 261273600),) * 2,
          (F(-281, 151559100),) * 2]
    c_ok = [stirling.c_coeff(2 * l) for l in range(6)] == golden
    gh_ok = [(stirling.g_coeff(m), stirling.h_coeff(m)) for m in range(10)] == gh
    return c_ok and gh_ok, f"c list {c_ok}, g/h table {gh_ok}"


def crit_3():
    three = all(stirling.c_explicit(l) == stirling.c_coeff(2 * l) == stirling.c_from_g(l) for l in range(11))
    rev = stirling.g_by_reversion(12) == [stirling.g_coeff(m) for m in range(13)]
    return three and rev, f"three routes l <= 10 {three}, reversion m <= 12 {rev}"


def crit_4():
    P = 256
    z = get_phi("stirling")
    spec_ok = True
    with mpmath.workprec(P):
        for m in range(7):
            exact = to_mpf(stirling.c_coeff(2 * m))
            for variant, x in (("circle", 40), ("line", 41)):
                got = saddle.coeff_saddle(z, x, m, variant, P)
                spec_ok &= abs(got - exact) <= abs(exact) * mpf(2) ** -128
    closed_ok, worst = True, mpf(0)
    for name, phi in CATALOG.items():
        for n in (20, 100):
            r = saddle.solve_saddle(phi, n, P)
            with mpmath.workprec(P):
                c1, c2 = saddle.c1_c2_closed(saddle.cumulants_circle(phi, r, n, 6, P))
                ref = saddle.saddle_coefficients(phi, r, 2, "circle", P)
                for a, b in ((c1, ref[1]), (c2, ref[2])):
                    rel = abs(a - b) / abs(b)
                    worst = max(worst, rel)
                    closed_ok &= rel <= mpf(2) ** -100
    return spec_ok and closed_ok, f"phi=z m <= 6 {spec_ok}, closed c1/c2 worst rel {mpmath.nstr(worst, 3)}"


def crit_5():
    n = 10
    worst = []
    with mpmath.workprec(256):
        fact = mpf(int(oracles.factorial(n)))
        ok = True
        for M in range(6):
            err = abs(stirling.stirling_eval(n, M, "c") * fact - 1)
            bound = 10 * abs(to_mpf(stirling.c_coeff(2 * (M + 1)))) * mpf(n) ** -(M + 1)
            ok &= err <= bound
            worst.append(float(err / bound))
    return ok, f"max err/bound {max(worst):.3f}"


def crit_6():
    rows = harness.delta_sweep_rows("idempotent", 20, 200, 1, range(5))
    m0 = harness.ordering_fraction(rows, 0, "v")
    flips = {M: harness.ordering_fraction(rows, M, "c") for M in range(1, 5)}
    ok = m0 >= 0.9 and any(f > 0.5 for f in flips.values())
    return ok, f"M=0 line lower {m0:.2f}; circle lower at M=1..4 {[round(f, 2) for f in flips.values()]}"


def crit_7():
    rows = harness.delta_sweep_rows("ordered", 10, 200, 1, range(5))
    m0 = harness.ordering_fraction(rows, 0, "v")
    rest = [harness.ordering_fraction(rows, M, "c") for M in range(1, 5)]
    ok = m0 >= 0.9 and all(f >= 0.9 for f in rest)
    return ok, f"M=0 line lower {m0:.2f}; circle lower at M=1..4 {[round(f, 2) for f in rest]}"


def crit_8():
    gh = all(lg.lag_g(G, m) == lg.lag_h(G, m) for G in lg.G_CATALOG.values() for m in range(21))
    hb = all(lg.lag_h(lg.CATALAN, 2 * m) == (2 * m + 1) * lg.catalan_b(m) for m in range(31))
    odd = all(lg.lag_h(lg.CATALAN, 2 * m + 1) == 0 for m in range(30))
    bp = all(lg.catalan_bprime(m) == 0 for m in range(1, 32, 2))
    plus = all(lg.plus_route_h(m) == lg.lag_h(lg.BINARY, 2 * m) for m in range(11))
    return all((gh, hb, odd, bp, plus)), f"g=h {gh}, h=(2m+1)b {hb}, odd h {odd}, odd b' {bp}, plus {plus}"


def crit_9():
    n = 50
    with mpmath.workprec(256):
        sing = lg.catalan_expansions(n, 5, "sing")
        exact = mpf(lg.catalan_target(n, "sing"))
        ratios = []
        for M in range(5):
            rel = abs(sing.partial_sums[M] - exact) / exact
            nxt = abs(sing.prefactor * sing.terms[M + 1]) / exact
            ratios.append(float(rel / nxt))
        remainder_ok = all(r <= 4 for r in ratios)
        refined = lg.catalan_expansions(n, 2, "refined")
        refined_ok = abs(refined.partial_sums[2] - exact) < abs(sing.partial_sums[2] - exact)
    rep = lg.b_asymptotic_check(31)
    diverges = rep.eventually_increasing()
    ok = remainder_ok and refined_ok and diverges
    return ok, (f"err/next-term max {max(ratios):.3f}, refined beats plain {refined_ok}, "
                f"divergence witness {diverges}")


def crit_10():
    names = ("bell", "idempotent", "ordered", "involutions")
    ok = all(oracles.exact_sequence(get_phi(k), 60) == oracles.recurrence_sequence(get_phi(k), 60) for k in names)
    return ok, "series exp vs recurrence, n <= 60"


CRITERIA = [crit_1, crit_2, crit_3, crit_4, crit_5, crit_6, crit_7, crit_8, crit_9, crit_10]


@pytest.mark.parametrize("idx", range(1, 11))
def test_criterion(idx, acceptance_log):
    ok, detail = CRITERIA[idx - 1]()
    line = f"criterion {idx}: {'PASS' if ok else 'FAIL'} - {detail}"
    acceptance_log[idx] = line
    print(line)
    assert ok, detail


if __name__ == "__main__":
    for i, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        print(f"criterion {i}: {'PASS' if ok else 'FAIL'} - {detail}")
