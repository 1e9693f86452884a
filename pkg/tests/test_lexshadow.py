import itertools
import random

import pytest
from hypothesis import given, strategies as st

from signedekr.core import ParameterError, SetFamily, binom, mask_of
from signedekr.lexshadow import (CyclicPermutation, LexSegment, TruncVec, cross_intersecting,
                                 cyclic_intervals, enumerate_maximal_lex_pairs, hilton_compress,
                                 interval_shadow_bound_check, interval_shadow_exhaustive,
                                 is_initial_segment, lemma12_transform, lemma13_transform,
                                 lex_less, lex_pair_cross_check, lex_segment, lex_segment_of,
                                 maximal_pairs_oracle, restrict, segment_cross_limits,
                                 segment_length, shadow, strongly_intersect)


def fam(n, k, *sets):
    return SetFamily.from_sets(n, k, sets)


def test_lex_less_examples():
    assert lex_less({1, 2}, {1, 3})
    assert lex_less({1, 2, 3}, {1, 2})
    assert not lex_less({2, 3}, {1, 4})
    assert lex_less({2, 3}, {2, 3})


def test_lex_less_is_total_on_equal_sizes():
    sets = [mask_of(c) for c in itertools.combinations(range(1, 6), 2)]
    for a, b in itertools.combinations(sets, 2):
        assert lex_less(a, b) != lex_less(b, a)
    assert sorted(sets, key=lambda m: sum(not lex_less(m, o) for o in sets)) == sets


def test_lex_segments():
    assert lex_segment(4, 2, 3) == fam(4, 2, {1, 2}, {1, 3}, {1, 4})
    assert len(lex_segment_of({1}, 2, 4)) == 3
    assert len(lex_segment(4, 2, 0)) == 0
    with pytest.raises(ParameterError):
        lex_segment(4, 2, 7)
    with pytest.raises(ParameterError):
        lex_segment_of({1, 2, 3}, 2, 4)


def test_segments_are_downward_closed():
    for n, k in [(5, 2), (6, 3)]:
        for m in range(binom(n, k) + 1):
            seg = lex_segment(n, k, m)
            assert len(seg) == m and is_initial_segment(seg)
            if m:
                last = seg.members[-1]
                assert seg == lex_segment_of(last, k, n)
                assert segment_length(last, k, n) == m


def test_shadow_examples():
    F = fam(3, 3, {1, 2, 3})
    assert shadow(F) == fam(3, 2, {1, 2}, {1, 3}, {2, 3})
    assert shadow(F, 2) == fam(3, 1, {1}, {2}, {3})
    assert len(shadow(SetFamily(4, 3, ()))) == 0
    with pytest.raises(ParameterError):
        shadow(F, 3)


@given(st.sets(st.frozensets(st.integers(1, 6), min_size=3, max_size=3), max_size=8),
       st.sets(st.frozensets(st.integers(1, 6), min_size=3, max_size=3), max_size=8))
def test_shadow_monotone_and_composes(a, b):
    F = SetFamily.from_sets(6, 3, a)
    G = SetFamily.from_sets(6, 3, a | b)
    assert set(shadow(F).members) <= set(shadow(G).members)
    assert shadow(G, 2) == shadow(shadow(G, 1), 1)


def test_cyclic_intervals():
    ident5 = CyclicPermutation.identity(5)
    assert cyclic_intervals(ident5, 2) == fam(5, 2, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5})
    assert cyclic_intervals(CyclicPermutation.identity(4), 3) == \
        fam(4, 3, {1, 2, 3}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4})
    with pytest.raises(ParameterError):
        cyclic_intervals(CyclicPermutation.identity(4), 4)
    with pytest.raises(ParameterError):
        CyclicPermutation((1, 1, 2))
    pi = CyclicPermutation((3, 1, 5, 2, 4))
    assert len(cyclic_intervals(pi, 2)) == 5


def test_interval_shadow_examples():
    pi = CyclicPermutation.identity(5)
    one = interval_shadow_bound_check(pi, fam(5, 2, {1, 2}), 1)
    assert (one.lhs, one.rhs, one.satisfied) == (2, 2, True)
    full = interval_shadow_bound_check(pi, cyclic_intervals(pi, 2), 1)
    assert (full.lhs, full.rhs, full.satisfied) == (5, 5, True)
    empty = interval_shadow_bound_check(pi, SetFamily(5, 2, ()), 1)
    assert (empty.lhs, empty.rhs, empty.satisfied) == (0, 0, True)
    with pytest.raises(ParameterError):
        interval_shadow_bound_check(pi, fam(5, 2, {1, 3}), 1)


def test_interval_shadow_exhaustive_all_permutations_small():
    checks, bad = interval_shadow_exhaustive(5, 3, all_perms=True)
    assert checks == 120 * 31 * 2 and bad == []


@pytest.mark.parametrize("S,T,want", [({1}, {1}, True), ({2}, {1, 2}, True), ({2}, {3}, False),
                                      ({1, 3}, {2, 3}, True), ({2, 3}, {3}, False)])
def test_strongly_intersect(S, T, want):
    assert strongly_intersect(S, T) == want


def test_cross_intersecting_examples():
    A = fam(4, 2, {1, 2})
    assert cross_intersecting(A, A)
    assert not cross_intersecting(A, fam(4, 2, {3, 4}))
    assert cross_intersecting(A, SetFamily(4, 2, ()))


def test_lex_pair_cross_check_examples():
    assert lex_pair_cross_check({1}, {1}, 2, 2, 5)
    assert not lex_pair_cross_check({2}, {3}, 2, 2, 5)
    assert lex_pair_cross_check({2}, {1, 2}, 2, 2, 4)
    with pytest.raises(ParameterError):
        lex_pair_cross_check({1}, {1}, 3, 3, 5)


def test_enumerate_maximal_pairs_examples():
    assert enumerate_maximal_lex_pairs(1, 1, 2) == [(1, 1)]
    pairs = enumerate_maximal_lex_pairs(2, 2, 4)
    assert pairs == [(0b1, 0b1), (0b10, 0b11), (0b11, 0b10), (0b101, 0b110), (0b110, 0b101)]
    with pytest.raises(ParameterError):
        enumerate_maximal_lex_pairs(3, 3, 5)


def test_maximal_pairs_agree_with_oracle_n8():
    for a, b in [(2, 3), (3, 3), (3, 2)]:
        found = {(segment_length(P, a, 8), segment_length(Q, b, 8))
                 for P, Q in enumerate_maximal_lex_pairs(a, b, 8)}
        assert found == maximal_pairs_oracle(a, b, 8)


def test_strong_intersection_characterization_n8():
    n, a, b = 8, 3, 2
    smalls = lambda t: [mask_of(c) for s in range(1, t + 1) for c in itertools.combinations(range(1, n + 1), s)]
    rng = random.Random(7)
    Ps, Qs = rng.sample(smalls(a), 40), rng.sample(smalls(b), 30)
    for P in Ps:
        for Q in Qs:
            assert lex_pair_cross_check(P, Q, a, b, n) == strongly_intersect(P, Q)


def test_segment_cross_limits_match_direct_search():
    n, a, b = 6, 2, 3
    limits = segment_cross_limits(n, a, b)
    for r, m in enumerate(limits):
        B = lex_segment(n, b, r)
        assert cross_intersecting(lex_segment(n, a, m), B)
        if m < binom(n, a):
            assert not cross_intersecting(lex_segment(n, a, m + 1), B)


def test_restrict_examples():
    F = fam(3, 2, {1, 2}, {1, 3}, {2, 3})
    assert restrict(F, {1}, set()) == fam(3, 1, {2}, {3})
    assert restrict(F, set(), {1}) == fam(3, 2, {2, 3})
    assert restrict(F, {1}, {3}) == fam(3, 1, {2})
    with pytest.raises(ParameterError):
        restrict(F, {1}, {1})


def test_lemma12_transform_example():
    (w1, v1), (w2, v2) = lemma12_transform((0, 1, 1), (1, 1, 0), 2)
    assert (w1.bits, v1.bits, w2.bits, v2.bits) == ((0, 1), (1, 1), (0, 1, 1), (1, 1, 1))
    (w1, v1), _ = lemma12_transform((1, 0), (1, 0), 1)
    assert (w1.bits, v1.bits) == ((1,), (1,))
    with pytest.raises(ParameterError):
        lemma12_transform((0, 1, 1), (1, 1, 1), 2)


def test_lemma13_transform_example():
    w1, v1 = lemma13_transform((0, 1, 1), (1, 1, 1), 2)
    assert (w1.bits, v1.bits) == ((0, 1), (1, 1))
    w1, v1 = lemma13_transform((0, 1), (1, 1), 1)
    assert (w1.bits, v1.bits) == ((1,), (1,))
    with pytest.raises(ParameterError):
        lemma13_transform((0, 1, 1), (1, 0, 1), 1)


def test_truncvec_validation():
    with pytest.raises(ParameterError):
        TruncVec((0, 2), 4, 2)
    with pytest.raises(ParameterError):
        TruncVec((1, 1, 0), 4, 2).family()
    assert TruncVec((0, 1), 4, 2).family() == lex_segment_of({2}, 2, 4)


def _transform_cases(n_max=8):
    for n in range(2, n_max + 1):
        for a in (1, 2, 3):
            for b in (1, 2, 3):
                if a + b > n:
                    continue
                for P, Q in enumerate_maximal_lex_pairs(a, b, n):
                    i = (P & Q).bit_length()
                    yield n, a, b, TruncVec.of(P, i, n, a), TruncVec.of(Q, i, n, b)


def test_transform_inequalities_on_all_maximal_pairs():
    seen12 = seen13 = 0
    for n, a, b, w, v in _transform_cases():
        base = (w.size(), v.size())
        for j in range(1, len(v.bits)):
            pattern = v.bits[j - 1:j + 1]
            for c in sorted({1, 2, a, b}):
                lhs = base[0] + c * base[1]
                if pattern == (1, 0):
                    (w1, v1), (w2, v2) = lemma12_transform(w, v, j)
                    assert cross_intersecting(w1.family(), v1.family())
                    assert cross_intersecting(w2.family(), v2.family())
                    assert lhs <= max(w1.size() + c * v1.size(), w2.size() + c * v2.size())
                    seen12 += 1
                elif pattern == (1, 1):
                    w1, v1 = lemma13_transform(w, v, j)
                    assert cross_intersecting(w1.family(), v1.family())
                    assert lhs <= max(w1.size() + c * v1.size(), binom(n, a))
                    seen13 += 1
    assert seen12 > 50 and seen13 > 50


def test_hilton_compress_examples():
    A, B = fam(4, 2, {1, 2}, {1, 3}), fam(4, 2, {1, 2})
    assert hilton_compress(A, B) == (LexSegment(4, 2, 2), LexSegment(4, 2, 1))
    sa, sb = hilton_compress(fam(4, 2, {2, 3}), fam(4, 2, {2, 3}))
    assert sa.family() == fam(4, 2, {1, 2}) == sb.family()
    with pytest.raises(ParameterError):
        hilton_compress(fam(4, 2, {1, 2}), fam(4, 2, {3, 4}))


@given(st.randoms(use_true_random=False))
def test_hilton_compress_keeps_cross_intersection(rng):
    n, k = 7, 3
    all_sets = [mask_of(c) for c in itertools.combinations(range(1, n + 1), k)]
    A = set(rng.sample(all_sets, rng.randint(1, 12)))
    # repair: keep only B-candidates meeting all of A
    B = [y for y in all_sets if all(x & y for x in A)]
    B = rng.sample(B, min(len(B), rng.randint(0, 10)))
    sa, sb = hilton_compress(SetFamily(n, k, tuple(A)), SetFamily(n, k, tuple(B)))
    assert cross_intersecting(sa.family(), sb.family())
