"""Named verification suites; each yields BoundReports in a fixed order."""

from __future__ import annotations

import random
from typing import Callable, Iterator, Sequence

from . import bounds
from .core import (Params, SignedFamily, binom, c_size, construction_deltas, iter_V_pairs,
                   min_pair_product)
from .lexshadow import (_lex_list, enumerate_maximal_lex_pairs, interval_shadow_exhaustive,
                        lex_pair_cross_check, maximal_pairs_oracle, segment_length,
                        strongly_intersect)
from .report import BoundReport
from .search import circle_alpha_check, m_exact
from .shifting import fully_shift, is_shifted

CIRCLE_CASES = ((4, 2), (5, 2), (6, 3), (7, 3), (8, 3))


def _count(name: str, params: dict, failures: int, checked: int, witness=None) -> BoundReport:
    """A zero-failure check: lhs counts failures, rhs is 0."""
    return BoundReport(name, params, failures, 0, "none", witness, {"checked": checked})


def random_family(p: Params, rng: random.Random, max_size: int = 40) -> SignedFamily:
    pool = list(iter_V_pairs(p))
    size = rng.randint(1, min(len(pool), max_size))
    return SignedFamily.from_pairs(p, rng.sample(pool, size))


def shifting_properties(fam: SignedFamily) -> list[str]:
    """Names of the shifting properties that fail on ``fam``."""
    bad = []
    n = fam.ambient.n
    out = fully_shift(fam, max_passes=len(fam) * n * n + 2)
    if len(out) != len(fam):
        bad.append("cardinality")
    before, after = min_pair_product(fam), min_pair_product(out)
    if before is not None and after < before:
        bad.append("min_product")
    if not is_shifted(out):
        bad.append("fixed_point")
    if fully_shift(out) != out:
        bad.append("idempotence")
    return bad


def shifting_suite(ns: Sequence[int] = range(3, 8), ks: Sequence[int] = (1, 2, 3),
                   samples: int = 1000, seed: int = 2024) -> Iterator[BoundReport]:
    for n in ns:
        for k in ks:
            if n < k + 1:
                continue
            p = Params(n, k, 1)
            rng = random.Random(f"{seed}:{n}:{k}")
            failures, first = 0, None
            for _ in range(samples):
                fam = random_family(p, rng)
                if shifting_properties(fam):
                    failures += 1
                    first = first or fam
            yield _count("shifting", {"n": n, "k": k, "l": 1}, failures, samples, first)


def shadows_suite(ns: Sequence[int] = range(2, 8), ks: Sequence[int] = (1, 2, 3),
                  all_perms: bool = False) -> Iterator[BoundReport]:
    for n in ns:
        for k in ks:
            if not 1 <= k < n:
                continue
            checks, bad = interval_shadow_exhaustive(n, k, all_perms)
            yield _count("interval_shadow", {"n": n, "k": k}, len(bad), checks,
                         bad[0].witness if bad else None)


def lexpairs_suite(ns: Sequence[int] = range(2, 8), sizes: Sequence[int] = (1, 2, 3)
                   ) -> Iterator[BoundReport]:
    for n in ns:
        for a in sizes:
            for b in sizes:
                if a + b > n:
                    continue
                yield _characterization_report(n, a, b)
                yield _maximality_report(n, a, b)


def _small_sets(n: int, top: int) -> list[int]:
    return [m for t in range(1, top + 1) for m in _lex_list(n, t)]


def _characterization_report(n: int, a: int, b: int) -> BoundReport:
    bad, checked = 0, 0
    for P in _small_sets(n, a):
        for Q in _small_sets(n, b):
            checked += 1
            if lex_pair_cross_check(P, Q, a, b, n) != strongly_intersect(P, Q):
                bad += 1
    return _count("strong_intersection", {"n": n, "a": a, "b": b}, bad, checked)


def _maximality_report(n: int, a: int, b: int) -> BoundReport:
    found = {(segment_length(P, a, n), segment_length(Q, b, n))
             for P, Q in enumerate_maximal_lex_pairs(a, b, n)}
    oracle = maximal_pairs_oracle(a, b, n)
    return _count("maximal_pairs", {"n": n, "a": a, "b": b}, len(found ^ oracle), len(oracle))


def _c_values(k: int, cs: Sequence[int] | None) -> list[int]:
    return sorted(set(cs) if cs else {1, 2, k})


def thm7_suite(ks: Sequence[int] = (2, 3), n_max: int = 8, cs: Sequence[int] | None = None
               ) -> Iterator[BoundReport]:
    for k in ks:
        for n in range(2 * k, n_max + 1):
            for c in _c_values(k, cs):
                yield bounds.thm7_verify(n, k, c)
    for k in ks:
        for n in range(2 * k, n_max + 1):
            for c in _c_values(k, cs):
                yield bounds.prop2_verify(n, k, c)
    for n in range(2, 7):
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                if a + b <= n:
                    for c in (1, 2):
                        yield bounds.prop11_verify(n, a, b, c)


def thm10_suite(ks: Sequence[int] = (2, 3), n_max: int = 8, cs: Sequence[int] | None = None,
                xs: Sequence[int] = (0, 1, 2)) -> Iterator[BoundReport]:
    for k in ks:
        for n in range(2 * k + 1, n_max + 1):
            for i in range(2, k + 1):
                for c in _c_values(k, cs):
                    yield bounds.thm10_verify(n, k, c, i)
                    for x in xs:
                        yield bounds.cor_cross3_verify(n, k, c, i, x)


def frankl_suite(cases: Sequence[tuple[int, int, int]] = ((7, 3, 3), (7, 3, 4)),
                 time_budget: float = 60.0) -> Iterator[BoundReport]:
    for n, k, i in cases:
        yield bounds.frankl_verify(n, k, i, time_budget)
    g3, g4 = bounds.frankl_g(7, 3, 3), bounds.frankl_g(7, 3, 4)
    yield BoundReport("frankl_g_tie", {"n": 7, "k": 3}, g3, g4, "g(4)",
                      details={"expect_equal": True})


def circle_suite(cases: Sequence[tuple[int, int]] = CIRCLE_CASES,
                 time_budget: float = 60.0) -> Iterator[BoundReport]:
    for n, k in cases:
        yield circle_alpha_check(n, k, time_budget)


def recursion_suite(time_budget: float = 120.0) -> Iterator[BoundReport]:
    """Crossover of the construction deltas, and exact m against the constructions."""
    for k in (2, 3, 4):
        for n in range(2 * k, k * k + 3):
            de, dp = construction_deltas(k, n)
            ok = (de >= dp) == (n <= k * k) and (de == dp) == (n == k * k)
            yield BoundReport("delta_crossover", {"n": n, "k": k}, int(not ok), 0, "none",
                              details={"e_delta": de, "p_delta": dp})
    values = {}
    for n in range(4, 9):
        res = m_exact(Params(n, 2, 1), time_budget)
        values[n] = res
        yield _exact_report(n, 2, res)
    for n in range(4, 8):
        diff = values[n + 1].alpha - values[n].alpha
        ok = values[n + 1].optimal and values[n].optimal
        yield BoundReport("recursion_step", {"n": n, "k": 2}, diff, binom(n, 2), "C(n,2)",
                          details={"expect_equal": True, "extra_ok": ok})
    for n in (6, 7, 8):
        yield _exact_report(n, 3, m_exact(Params(n, 3, 1), time_budget))


def _exact_report(n: int, k: int, res) -> BoundReport:
    return BoundReport("m_exact", {"n": n, "k": k, "l": 1}, res.alpha, c_size(n, k), "c(n,k)",
                       res.witness, {"expect_equal": True, "extra_ok": res.optimal,
                                     "nodes": res.nodes_explored})


SUITES: dict[str, Callable[[], Iterator[BoundReport]]] = {
    "shifting": shifting_suite,
    "shadows": shadows_suite,
    "lexpairs": lexpairs_suite,
    "thm7": thm7_suite,
    "thm10": thm10_suite,
    "frankl": frankl_suite,
    "circle": circle_suite,
    "recursion": recursion_suite,
}


def run_suite(name: str) -> Iterator[BoundReport]:
    if name == "all":
        for fn in SUITES.values():
            yield from fn()
        return
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}") from None
    yield from fn()
