"""The eleven acceptance criteria, one test each, with a printed verdict line."""

import time
from functools import lru_cache

import pytest

from signedekr import bounds
from signedekr.core import Params, binom, construct_C, construction_deltas
from signedekr.search import m_exact
from signedekr.suites import (circle_suite, frankl_suite, lexpairs_suite, shadows_suite,
                              shifting_suite, thm7_suite, thm10_suite)


@pytest.fixture
def verdict(capsys):
    def emit(num: int, title: str, ok: bool, note: str = "") -> None:
        with capsys.disabled():
            tail = f" ({note})" if note else ""
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {title}{tail}")
        assert ok, f"criterion {num} failed: {note}"
    return emit


@lru_cache(maxsize=None)
def exact(n: int, k: int, l: int):
    t0 = time.perf_counter()
    res = m_exact(Params(n, k, l), time_budget=120.0)
    return res, time.perf_counter() - t0


def test_01_ekr_baseline(verdict):
    t0 = time.perf_counter()
    cases = [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3), (8, 3), (8, 4)]
    bad = [(n, k) for n, k in cases
           if not (exact(n, k, 0)[0].optimal and exact(n, k, 0)[0].alpha == binom(n - 1, k - 1))]
    dt = time.perf_counter() - t0
    verdict(1, "m(n,k,0) = C(n-1,k-1) on the EKR grid", not bad and dt < 60,
            f"{len(cases)} cases, {dt:.1f}s, mismatches={bad}")


def test_02_phase_transition_table(verdict):
    expected = {(4, 2): 6, (5, 2): 12, (6, 2): 22, (7, 2): 37, (8, 2): 58,
                (6, 3): 30, (7, 3): 60, (8, 3): 105}
    bad, slow = [], []
    for (n, k), want in expected.items():
        res, dt = exact(n, k, 1)
        if not (res.optimal and res.alpha == want == len(construct_C(Params(n, k, 1)))):
            bad.append((n, k, res.alpha))
        if dt >= 120:
            slow.append((n, k, round(dt, 1)))
    assert expected[(6, 3)] == 3 * binom(5, 3)
    assert expected[(7, 3)] == 30 + 3 * binom(5, 2) and expected[(8, 3)] == 60 + 3 * binom(6, 2)
    worst = max(exact(n, k, 1)[1] for n, k in expected)
    verdict(2, "m(n,k,1) table equals |C(n,k,1)|", not bad and not slow,
            f"slowest {worst:.1f}s, mismatches={bad}, slow={slow}")


def test_03_recursion(verdict):
    diffs = {n: exact(n + 1, 2, 1)[0].alpha - exact(n, 2, 1)[0].alpha for n in (4, 5, 6, 7)}
    ok = all(diffs[n] == binom(n, 2) for n in diffs) and \
        all(exact(n, 2, 1)[0].optimal for n in range(4, 9))
    verdict(3, "m(n+1,2,1) - m(n,2,1) = C(n,2) for n = 4..7", ok, f"diffs={diffs}")


def test_04_delta_crossover(verdict):
    bad = []
    for k in (2, 3, 4):
        for n in range(2 * k, k * k + 3):
            de, dp = construction_deltas(k, n)
            if (de >= dp) != (n <= k * k) or (de == dp) != (n == k * k):
                bad.append((k, n))
    verdict(4, "e-delta >= p-delta iff n <= k^2, equality iff n = k^2", not bad, f"bad={bad}")


def test_05_nested_cross_tightness(verdict):
    t0 = time.perf_counter()
    reps = [r for r in thm7_suite() if r.theorem == "thm7"]
    dt = time.perf_counter() - t0
    bad = [r.params for r in reps if not r.ok]
    stars = all("P=1,Q=1" in r.details["witnesses"] or "B=empty" in r.details["witnesses"]
                for r in reps)
    verdict(5, "max |A|+c|B| over nested maximal pairs equals the closed form",
            not bad and stars and dt < 60, f"{len(reps)} cases, {dt:.1f}s, bad={bad}")


def test_06_capped_cross_soundness(verdict):
    reps = list(thm10_suite())
    bad = [r.record() for r in reps if not r.satisfied]
    verdict(6, "capped nested maximum <= stated bound (x in 0..2, c in {1,2,k})", not bad,
            f"{len(reps)} cases, violations={len(bad)}")


def test_07_interval_shadows(verdict):
    t0 = time.perf_counter()
    reps = list(shadows_suite())
    dt = time.perf_counter() - t0
    fails = sum(r.lhs for r in reps)
    checks = sum(r.details["checked"] for r in reps)
    verdict(7, "interval-shadow inequality on every subfamily, n <= 7, k <= 3",
            fails == 0 and dt < 120, f"{checks} checks, {dt:.1f}s, violations={fails}")


def test_08_strong_intersection_and_maximality(verdict):
    reps = list(lexpairs_suite())
    fails = [r.record() for r in reps if not r.ok]
    verdict(8, "strong intersection and maximal-pair enumeration match brute force",
            not fails, f"{len(reps)} comparisons, mismatches={len(fails)}")


def test_09_signed_circle(verdict):
    reps = list(circle_suite())
    bad = [r.params for r in reps if not r.ok]
    verdict(9, "alpha on the signed circle is k and the average gives e(n,k,1)", not bad,
            f"cases={[(r.params['n'], r.params['k'], r.lhs) for r in reps]}")


def test_10_shifting(verdict):
    reps = list(shifting_suite(samples=1000))
    fails = sum(r.lhs for r in reps)
    verdict(10, "shifting preserves size, keeps min product, terminates, idempotent",
            fails == 0, f"{len(reps)} parameter sets x 1000 families, failures={fails}")


def test_11_degree_capped_families(verdict):
    t0 = time.perf_counter()
    reps = list(frankl_suite())
    dt = time.perf_counter() - t0
    g3, g4 = bounds.frankl_g(7, 3, 3), bounds.frankl_g(7, 3, 4)
    ok = all(r.ok for r in reps) and g3 == g4 == 13 and dt < 60
    verdict(11, "capped-degree maximum <= g(i) at (7,3), i = 3, 4; g(3) = g(4) = 13", ok,
            f"max sizes={[r.lhs for r in reps[:2]]}, {dt:.1f}s")
