"""Closed-form bounds for cross-intersecting and degree-capped families, with checkers.

Each ``*_bound`` is exact integer arithmetic; each ``*_verify`` computes the
left-hand side by brute force at small scale and returns a
:class:`BoundReport`.  Cross-intersecting maxima are taken over pairs of lex
initial segments, which is enough because compression maps any
cross-intersecting pair to a pair of segments of the same sizes.

Binomials are looked up through this module's ``binom`` so a harness can
swap it out and watch the checks fail.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .core import ParameterError, Params, SetFamily, binom
from .lexshadow import (LexSegment, _lex_list, _windows, all_permutations,
                        enumerate_maximal_lex_pairs, rotation_representatives,
                        segment_cross_limits, segment_length)
from .report import BoundReport, argmax_label

__all__ = [
    "BoundReport", "thm7_terms", "thm7_bound", "thm7_averaged", "thm7_verify",
    "prop2_bound", "prop2_verify", "prop11_bound", "prop11_verify",
    "frankl_h", "frankl_g", "frankl_verify", "cordeg_check",
    "thm10_cap", "thm10_terms", "thm10_bound", "thm10_verify",
    "cor_cross3_terms", "cor_cross3_bound", "cor_cross3_verify",
    "segment_pair_max", "maximal_pair_max", "pair_oracle_max",
]


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def _check_c(c) -> None:
    _need(c >= 1, f"need c >= 1, got c={c}")


# -- maxima of |A| + c|B| over segment pairs --------------------------------

def segment_pair_max(n: int, a: int, b: int, c, nested: bool = False,
                     cap: int | None = None) -> tuple[int, int, int]:
    """Best (value, |A|, |B|) over cross-intersecting segment pairs L(m, a), L(r, b).

    For each r the best m is the longest a-segment meeting all of L(r, b).
    ``nested`` adds B inside A (so a == b and r <= m); ``cap`` bounds r.
    Ties go to the smallest r.
    """
    if nested and a != b:
        raise ParameterError("nested pairs need a == b")
    limits = segment_cross_limits(n, a, b)
    top = len(limits) - 1 if cap is None else min(cap, len(limits) - 1)
    best = None
    for r in range(0, max(top, -1) + 1):
        m = limits[r]
        if nested and r > m:
            continue
        val = m + c * r
        if best is None or val > best[0]:
            best = (val, m, r)
    return best


def maximal_pair_max(n: int, a: int, b: int, c, nested: bool = False,
                     cap: int | None = None) -> tuple[int, list[tuple[str, int, int]]]:
    """Max of |A| + c|B| over maximal segment pairs plus the two one-sided pairs.

    Returns the value and every candidate attaining it as (label, |A|, |B|);
    labels are ``B=empty``, ``A=empty`` or ``P=<mask>,Q=<mask>``.
    """
    # one-sided pairs are counted from the enumeration, not the closed form
    cands = [("B=empty", len(_lex_list(n, a)), 0)]
    if not nested:
        cands.append(("A=empty", 0, len(_lex_list(n, b))))
    for P, Q in enumerate_maximal_lex_pairs(a, b, n):
        m, r = segment_length(P, a, n), segment_length(Q, b, n)
        if nested and r > m:
            continue
        if cap is not None and r > cap:
            continue
        cands.append((f"P={P},Q={Q}", m, r))
    best = max(m + c * r for _, m, r in cands)
    return best, [t for t in cands if t[1] + c * t[2] == best]


def pair_oracle_max(n: int, a: int, b: int, c, nested: bool = False) -> int:
    """Max of |A| + c|B| over all cross-intersecting families, by enumerating A.

    Exponential in C(n, a); meant for n <= 5 to validate the segment reduction.
    """
    As = _lex_list(n, a)
    Bs = _lex_list(n, b)
    _need(len(As) <= 20, f"oracle too large: C({n},{a}) = {len(As)} sets")
    best = 0
    for bits in range(1 << len(As)):
        A = [As[t] for t in range(len(As)) if bits >> t & 1]
        pool = A if nested else Bs
        B = [y for y in pool if all(x & y for x in A)]
        best = max(best, len(A) + c * len(B))
    return best


# -- cross-intersecting with B inside A ------------------------------------------

def thm7_terms(n: int, k: int, c) -> dict[str, int]:
    _need(n >= 2 * k and k >= 1, f"need n >= 2k, got n={n}, k={k}")
    _check_c(c)
    return {"all_sets": binom(n, k), "star_pair": (c + 1) * binom(n - 1, k - 1)}


def thm7_bound(n: int, k: int, c) -> int:
    return max(thm7_terms(n, k, c).values())


def thm7_averaged(n: int, k: int, c) -> Fraction:
    """The circle bound max{n, (c+1)k} averaged up: times C(n, k) / n."""
    return Fraction(prop2_bound(n, k, c) * binom(n, k), n)


def thm7_verify(n: int, k: int, c) -> BoundReport:
    rhs, label = argmax_label(thm7_terms(n, k, c))
    lhs, winners = maximal_pair_max(n, k, k, c, nested=True)
    sweep = segment_pair_max(n, k, k, c, nested=True)
    m, r = winners[0][1], winners[0][2]
    witness = (LexSegment(n, k, m), LexSegment(n, k, r))
    details = {"expect_equal": True, "witnesses": [w[0] for w in winners],
               "sweep": sweep[0], "averaged": str(thm7_averaged(n, k, c)),
               "extra_ok": sweep[0] == lhs and thm7_averaged(n, k, c) == rhs}
    return BoundReport("thm7", {"n": n, "k": k, "c": c}, lhs, rhs, label, witness, details)


# -- the circle version ------------------------------------------------------

def prop2_bound(n: int, k: int, c) -> int:
    _need(n >= 2 * k and k >= 1, f"need n >= 2k, got n={n}, k={k}")
    _check_c(c)
    return max(n, (c + 1) * k)


def prop2_verify(n: int, k: int, c, all_perms: bool = False) -> BoundReport:
    """Every A inside U(pi, k) with B inside A cross-intersecting: |A| + c|B| <= bound.

    For a given A the best B is every member of A meeting all of A, so the
    search enumerates A only.  By default one permutation per rotation class.
    """
    prop2_bound(n, k, c)
    rhs, label = argmax_label({"n": n, "(c+1)k": (c + 1) * k})
    profile, checked = _circle_profile(n, k, all_perms)
    best, witness = -1, None
    for (a, b), w in profile.items():
        if a + c * b > best:
            best, witness = a + c * b, w
    return BoundReport("prop2", {"n": n, "k": k, "c": c}, best, rhs, label, witness,
                       {"subfamilies_checked": checked})


@lru_cache(maxsize=None)
def _circle_profile(n: int, k: int, all_perms: bool):
    """Every (|A|, |B|) reached on some U(pi, k), with a first witness for each."""
    perms = all_permutations(n) if all_perms else rotation_representatives(n)
    found: dict[tuple[int, int], tuple] = {}
    checked = 0
    for pi in perms:
        U = _windows(pi, k)
        # meets[t]: positions of windows meeting window t
        meets = [sum(1 << s for s in range(n) if U[s] & U[t]) for t in range(n)]
        for A in range(1 << n):
            B = 0
            rest = A
            while rest:
                low = rest & -rest
                if A & ~meets[low.bit_length() - 1] == 0:
                    B |= low
                rest ^= low
            checked += 1
            key = (A.bit_count(), B.bit_count())
            if key not in found:
                found[key] = (pi, tuple(U[t] for t in range(n) if A >> t & 1),
                              tuple(U[t] for t in range(n) if B >> t & 1))
    return found, checked


# -- cross-intersecting of two sizes ----------------------------------------

def prop11_bound(n: int, a: int, b: int, c) -> int:
    _need(a >= 1 and b >= 1 and a + b <= n, f"need a + b <= n, got a={a}, b={b}, n={n}")
    _check_c(c)
    return max(binom(n, a), c * binom(n, b))


def prop11_verify(n: int, a: int, b: int, c) -> BoundReport:
    terms = {"C(n,a)": binom(n, a), "cC(n,b)": c * binom(n, b)}
    prop11_bound(n, a, b, c)
    rhs, label = argmax_label(terms)
    lhs, winners = maximal_pair_max(n, a, b, c)
    sweep = segment_pair_max(n, a, b, c)
    m, r = winners[0][1], winners[0][2]
    witness = (LexSegment(n, a, m), LexSegment(n, b, r))
    return BoundReport("prop11", {"n": n, "a": a, "b": b, "c": c}, lhs, rhs, label, witness,
                       {"witnesses": [w[0] for w in winners], "sweep": sweep[0],
                        "extra_ok": sweep[0] == lhs})


# -- degree-capped intersecting families -----------------------------------------

def _frankl_pre(n: int, k: int, i: int) -> None:
    _need(n > 2 * k, f"need n > 2k, got n={n}, k={k}")
    _need(3 <= i <= k + 1, f"need 3 <= i <= k+1, got i={i}, k={k}")


def frankl_h(n: int, k: int, i: int) -> int:
    """The degree cap C(n-1, k-1) - C(n-i, k-1)."""
    _frankl_pre(n, k, i)
    return binom(n - 1, k - 1) - binom(n - i, k - 1)


def frankl_g(n: int, k: int, i: int) -> int:
    """The size bound h(i) + C(n-i, k-i+1)."""
    return frankl_h(n, k, i) + binom(n - i, k - i + 1)


def _degree_cap(cap: int, pairs):
    """Propagation hook: drop candidates through an element already at ``cap``."""
    def hook(inc: tuple[int, ...], P: int) -> int:
        counts: dict[int, int] = {}
        for v in inc:
            m = pairs[v][0]
            while m:
                low = m & -m
                counts[low] = counts.get(low, 0) + 1
                m ^= low
        full = 0
        for bit, cnt in counts.items():
            if cnt >= cap:
                full |= bit
        if not full:
            return P
        rest = P
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if pairs[v][0] & full:
                P &= ~low
            rest ^= low
        return P
    return hook


def frankl_verify(n: int, k: int, i: int, time_budget: float = 60.0) -> BoundReport:
    """Largest intersecting F of k-sets with max degree <= h(i), against g(i)."""
    from .search import build_conflict_graph, max_independent_set

    h, rhs = frankl_h(n, k, i), frankl_g(n, k, i)
    g = build_conflict_graph(Params(n, k, 0))
    pairs = g.vertices.pairs
    res = max_independent_set(g, time_budget, symmetry="orbital",
                              propagate=_degree_cap(h, pairs))
    F = SetFamily(n, k, tuple(pl for pl, _ in res.witness.pairs))
    details = {"h": h, "degree": F.max_degree() if len(F) else 0,
               "optimal": res.optimal, "upper_bound": res.upper_bound,
               "extra_ok": F.is_intersecting() and (not len(F) or F.max_degree() <= h)}
    if not res.optimal:
        # an unfinished search certifies the bound only through its upper bound
        details["extra_ok"] = details["extra_ok"] and res.upper_bound <= rhs
    return BoundReport("frankl", {"n": n, "k": k, "i": i}, res.alpha, rhs, "g(i)", F, details)


def cordeg_check(F: SetFamily, i: int) -> BoundReport:
    """If |F| - d(F) >= C(n-i, k-i+1) then |F| <= g(i); otherwise the check is vacuous."""
    n, k = F.n, F.k
    _need(4 <= i <= k + 1, f"need 4 <= i <= k+1, got i={i}, k={k}")
    _need(F.is_intersecting(), "family is not intersecting")
    rhs = frankl_g(n, k, i)
    d = F.max_degree() if len(F) else 0
    need = binom(n - i, k - i + 1)
    hyp = len(F) - d >= need
    return BoundReport("cordeg", {"n": n, "k": k, "i": i}, len(F), rhs, "g(i)", F,
                       {"hypothesis": hyp, "vacuous": not hyp, "excess": len(F) - d,
                        "required_excess": need})


# -- the sharpened bound with a cap on |B| ----------------------------------------

def _thm10_pre(n: int, k: int, c, i: int) -> None:
    _need(k >= 2 and n >= 2 * k + 1, f"need k >= 2 and n >= 2k+1, got n={n}, k={k}")
    _need(2 <= i <= k, f"need 2 <= i <= k, got i={i}, k={k}")
    _check_c(c)


def thm10_cap(n: int, k: int, i: int) -> int:
    return binom(n - 1, k - 1) - binom(n - i, k - 1)


def thm10_terms(n: int, k: int, c, i: int) -> dict[str, int]:
    _thm10_pre(n, k, c, i)
    star = (c + 1) * binom(n - 1, k - 1)
    return {
        "expr1": star - c * binom(n - i, k - 1) + binom(n - i, k - i + 1),
        "expr2": star - (c - 1) * binom(n - 2, k - 1),
        "expr3": binom(n, k),
    }


def thm10_bound(n: int, k: int, c, i: int) -> int:
    return max(thm10_terms(n, k, c, i).values())


def cor_cross3_terms(n: int, k: int, c, i: int, x: int, slack_weight=None) -> dict[str, int]:
    """The three expressions with ``slack_weight * x`` (default k*x) added to the first."""
    _need(x >= 0, f"need x >= 0, got x={x}")
    terms = thm10_terms(n, k, c, i)
    w = k if slack_weight is None else slack_weight
    terms["expr1"] += w * x
    return terms


def cor_cross3_bound(n: int, k: int, c, i: int, x: int, slack_weight=None) -> int:
    return max(cor_cross3_terms(n, k, c, i, x, slack_weight).values())


def _capped_report(name: str, params: dict, terms: dict, n: int, k: int, c, cap: int) -> BoundReport:
    rhs, label = argmax_label(terms)
    val, m, r = segment_pair_max(n, k, k, c, nested=True, cap=cap)
    mp, _ = maximal_pair_max(n, k, k, c, nested=True, cap=cap)
    witness = (LexSegment(n, k, m), LexSegment(n, k, r))
    return BoundReport(name, params, val, rhs, label, witness,
                       {"cap": cap, "maximal_pairs_only": mp})


def thm10_verify(n: int, k: int, c, i: int) -> BoundReport:
    """Max of |A| + c|B| over nested segment pairs with |B| at most the cap."""
    terms = thm10_terms(n, k, c, i)
    return _capped_report("thm10", {"n": n, "k": k, "c": c, "i": i}, terms, n, k, c,
                          thm10_cap(n, k, i))


def cor_cross3_verify(n: int, k: int, c, i: int, x: int, slack_weight=None) -> BoundReport:
    terms = cor_cross3_terms(n, k, c, i, x, slack_weight)
    params = {"n": n, "k": k, "c": c, "i": i, "x": x}
    if slack_weight is not None:
        params["slack_weight"] = slack_weight
    return _capped_report("cor_cross3", params, terms, n, k, c, thm10_cap(n, k, i) + x)

