"""Lexicographic segments, shadows, cyclic intervals and cross-intersecting pairs.

The order used throughout is ``A < B`` iff ``B`` is a subset of ``A`` or the
least element of ``A - B`` is smaller than the least element of ``B - A``.
On sets of equal size this is the ordinary lexicographic order, so an initial
segment ``L(m, k)`` is the first ``m`` k-sets in that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .core import ParameterError, SetFamily, binom, elements_of, iter_k_masks, mask_of
from .report import BoundReport


def _mask(s) -> int:
    return s if isinstance(s, int) else mask_of(s)


def _low(mask: int) -> int:
    return mask & -mask


def lex_less(A, B) -> bool:
    """The order ``A < B``; note ``A < A`` holds."""
    a, b = _mask(A), _mask(B)
    if b & ~a == 0:
        return True
    a_only = a & ~b
    if not a_only:
        return False
    return _low(a_only) < _low(b & ~a)


@lru_cache(maxsize=None)
def _lex_list(n: int, k: int) -> tuple[int, ...]:
    return tuple(iter_k_masks(n, k))


@dataclass(frozen=True)
class LexSegment:
    """The initial segment L(count, member_size) of k-subsets of [ambient_n]."""

    ambient_n: int
    member_size: int
    count: int

    def __post_init__(self):
        top = binom(self.ambient_n, self.member_size)
        if not 0 <= self.count <= top:
            raise ParameterError(f"segment length {self.count} outside [0, {top}]")

    def family(self) -> SetFamily:
        members = _lex_list(self.ambient_n, self.member_size)[:self.count]
        return SetFamily(self.ambient_n, self.member_size, members)


def lex_segment(n: int, k: int, m: int) -> SetFamily:
    return LexSegment(n, k, m).family()


def lex_segment_of(S, t: int, n: int) -> SetFamily:
    """All t-subsets T of [n] with ``T < S``."""
    s = _mask(S)
    if s.bit_count() > t:
        raise ParameterError(f"|S|={s.bit_count()} exceeds t={t}")
    return SetFamily(n, t, tuple(T for T in _lex_list(n, t) if lex_less(T, s)))


def segment_length(S, t: int, n: int) -> int:
    """|L(S, t)| without materialising it."""
    s = _mask(S)
    return sum(1 for T in _lex_list(n, t) if lex_less(T, s))


def is_initial_segment(fam: SetFamily) -> bool:
    return fam.members == _lex_list(fam.n, fam.k)[:len(fam)]


# -- shadows ----------------------------------------------------------------

def shadow(fam: SetFamily, depth: int = 1) -> SetFamily:
    """All (k - depth)-sets contained in some member."""
    if not 0 <= depth < fam.k:
        raise ParameterError(f"shadow depth {depth} needs 0 <= depth < k={fam.k}")
    out = set()
    for m in fam.members:
        elems = [1 << (x - 1) for x in elements_of(m)]
        for drop in itertools.combinations(elems, depth):
            out.add(m & ~sum(drop))
    return SetFamily(fam.n, fam.k - depth, tuple(out))


# -- cyclic permutations ----------------------------------------------------

@dataclass(frozen=True)
class CyclicPermutation:
    """A cyclic arrangement of [n], stored as the sequence of its elements."""

    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(1, len(self.order) + 1)):
            raise ParameterError(f"{self.order} is not a permutation of [{len(self.order)}]")

    @classmethod
    def identity(cls, n: int) -> "CyclicPermutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.order)


def _windows(pi: CyclicPermutation, k: int) -> list[int]:
    n, o = pi.n, pi.order
    return [mask_of(o[(s + t) % n] for t in range(k)) for s in range(n)]


def cyclic_intervals(pi: CyclicPermutation, k: int) -> SetFamily:
    """U(pi, k): the n cyclically consecutive k-windows of pi (needs 1 <= k < n)."""
    if not 1 <= k < pi.n:
        raise ParameterError(f"cyclic intervals need 1 <= k < n, got k={k}, n={pi.n}")
    return SetFamily(pi.n, k, tuple(_windows(pi, k)))


def interval_shadow_bound_check(pi: CyclicPermutation, sub: SetFamily, depth: int) -> BoundReport:
    """Compare min(|F| + depth, n) with the number of (k-depth)-intervals under F."""
    n, k = pi.n, sub.k
    if not 0 <= depth < k:
        raise ParameterError(f"need 0 <= l < k, got l={depth}, k={k}")
    if sub.n != n:
        raise ParameterError("subfamily lives on a different ground set")
    U = set(_windows(pi, k))
    if not set(sub.members) <= U:
        raise ParameterError("subfamily is not contained in U(pi, k)")
    params = {"n": n, "k": k, "l": depth, "pi": list(pi.order), "size": len(sub)}
    if not sub.members:
        return BoundReport("interval_shadow", params, 0, 0, "empty")
    small = set(_windows(pi, k - depth))
    covered = [u for u in small if any(u & ~w == 0 for w in sub.members)]
    need = min(len(sub) + depth, n)
    return BoundReport("interval_shadow", params, need, len(covered),
                       "interval_shadow", witness=sorted(covered))


def rotation_representatives(n: int) -> Iterable[CyclicPermutation]:
    """One permutation per rotation class: those starting with 1."""
    for rest in itertools.permutations(range(2, n + 1)):
        yield CyclicPermutation((1,) + rest)


def all_permutations(n: int) -> Iterable[CyclicPermutation]:
    for o in itertools.permutations(range(1, n + 1)):
        yield CyclicPermutation(o)


def interval_shadow_exhaustive(n: int, k: int, all_perms: bool = False) -> tuple[int, list[BoundReport]]:
    """Check the interval-shadow inequality on every subfamily of every U(pi, k).

    Returns (number of checks, violating reports).
    """
    perms = all_permutations(n) if all_perms else rotation_representatives(n)
    checks, bad = 0, []
    for pi in perms:
        wins = _windows(pi, k)
        smalls = {d: _windows(pi, k - d) for d in range(1, k)}
        for pick in range(1, 1 << n):
            sub = [wins[s] for s in range(n) if pick >> s & 1]
            for d, small in smalls.items():
                checks += 1
                got = sum(1 for u in small if any(u & ~w == 0 for w in sub))
                if got < min(len(sub) + d, n):
                    fam = SetFamily(n, k, tuple(sub))
                    bad.append(interval_shadow_bound_check(pi, fam, d))
    return checks, bad


# -- cross-intersecting machinery -----------------------------------------

def strongly_intersect(S, T) -> bool:
    """Some j has S & T & [j] == {j} and S | T covering [j]."""
    s, t = _mask(S), _mask(T)
    common = s & t
    if not common:
        return False
    j_bit = _low(common)
    below = j_bit - 1
    return (s | t) & (below | j_bit) == below | j_bit


def cross_intersecting(A, B) -> bool:
    am = A.members if isinstance(A, SetFamily) else tuple(A)
    bm = B.members if isinstance(B, SetFamily) else tuple(B)
    return all(x & y for x in am for y in bm)


def lex_pair_cross_check(P, Q, a: int, b: int, n: int) -> bool:
    """Whether L(P, a) and L(Q, b) are cross-intersecting."""
    if a + b > n:
        raise ParameterError(f"need a + b <= n, got a={a}, b={b}, n={n}")
    return cross_intersecting(lex_segment_of(P, a, n), lex_segment_of(Q, b, n))


def enumerate_maximal_lex_pairs(a: int, b: int, n: int) -> list[tuple[int, int]]:
    """All (P, Q) with P & Q = {j}, P | Q = [j], |P| <= a, |Q| <= b.

    Returned as mask pairs, ordered by (j, P mask).
    """
    if a + b > n:
        raise ParameterError(f"need a + b <= n, got a={a}, b={b}, n={n}")
    out = []
    for j in range(1, n + 1):
        jb = 1 << (j - 1)
        below = jb - 1
        found = []
        for part in range(1 << (j - 1)):
            P = part | jb
            Q = (below & ~part) | jb
            if P.bit_count() <= a and Q.bit_count() <= b:
                found.append((P, Q))
        out.extend(sorted(found))
    return out


def maximal_pairs_oracle(a: int, b: int, n: int) -> set[tuple[int, int]]:
    """Brute-force (m, r), m, r >= 1, with (L(m,a), L(r,b)) a maximal cross-intersecting pair.

    Maximality is checked against every a-set and b-set, not only the next one.
    """
    if a + b > n:
        raise ParameterError(f"need a + b <= n, got a={a}, b={b}, n={n}")
    As, Bs = _lex_list(n, a), _lex_list(n, b)
    out = set()
    for r in range(1, len(Bs) + 1):
        B = Bs[:r]
        # longest prefix of a-sets meeting every member of B
        m = 0
        while m < len(As) and all(As[m] & y for y in B):
            m += 1
        if m == 0:
            continue
        A = As[:m]
        if any(all(x & y for y in B) for x in As[m:]):
            continue
        if any(all(x & y for x in A) for y in Bs[r:]):
            continue
        out.add((m, r))
    return out


def restrict(fam: SetFamily, X, Y) -> SetFamily:
    """F(X, not Y) = {F - X : X subset of F, F disjoint from Y}."""
    x, y = _mask(X), _mask(Y)
    if x & y:
        raise ParameterError("X and Y must be disjoint")
    out = tuple(m & ~x for m in fam.members if m & x == x and not m & y)
    return SetFamily(fam.n, fam.k - x.bit_count(), out)


# -- truncated characteristic vectors -------------------------------------

@dataclass(frozen=True)
class TruncVec:
    """A 0/1 prefix (w_1..w_i) whose 1-positions generate L(P, target_size)."""

    bits: tuple[int, ...]
    ambient_n: int
    target_size: int

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise ParameterError("truncated vectors are 0/1")
        if len(self.bits) > self.ambient_n:
            raise ParameterError(f"length {len(self.bits)} exceeds n={self.ambient_n}")

    @classmethod
    def of(cls, P, length: int, n: int, target: int) -> "TruncVec":
        p = _mask(P)
        return cls(tuple(p >> t & 1 for t in range(length)), n, target)

    @property
    def is_proper(self) -> bool:
        """Last bit set and no more ones than the target size."""
        return bool(self.bits) and self.bits[-1] == 1 and sum(self.bits) <= self.target_size

    def support(self) -> int:
        return sum(1 << t for t, b in enumerate(self.bits) if b)

    def family(self) -> SetFamily:
        if not self.is_proper:
            raise ParameterError(f"{self.bits} does not define a segment of {self.target_size}-sets")
        return lex_segment_of(self.support(), self.target_size, self.ambient_n)

    def size(self) -> int:
        if not self.is_proper:
            raise ParameterError(f"{self.bits} does not define a segment of {self.target_size}-sets")
        return segment_length(self.support(), self.target_size, self.ambient_n)


def _tv(x, n: int | None, target: int | None) -> TruncVec:
    if isinstance(x, TruncVec):
        return x
    bits = tuple(x)
    return TruncVec(bits, n if n is not None else len(bits), target if target is not None else sum(bits))


def _like(src: TruncVec, bits: Sequence[int]) -> TruncVec:
    return TruncVec(tuple(bits), src.ambient_n, src.target_size)


def lemma12_transform(w, v, j: int, n: int | None = None):
    """Split point (v_j, v_{j+1}) = (1, 0); returns ((w', v'), (w'', v'')).

    ``w`` generates the first family, ``v`` the second; j is 1-based.
    """
    w, v = _tv(w, n, None), _tv(v, n, None)
    if not (1 <= j < len(v.bits) and j <= len(w.bits)):
        raise ParameterError(f"index j={j} out of range")
    if (v.bits[j - 1], v.bits[j]) != (1, 0):
        raise ParameterError(f"need (v_j, v_j+1) = (1, 0) at j={j}, got {v.bits[j - 1:j + 1]}")
    w1 = _like(w, w.bits[:j - 1] + (1,))
    v1 = _like(v, v.bits[:j])
    w2 = _like(w, w.bits[:j] + (1,))
    v2 = _like(v, v.bits[:j] + (1,))
    return (w1, v1), (w2, v2)


def lemma13_transform(w, v, j: int, n: int | None = None):
    """Split point (v_j, v_{j+1}) = (1, 1); returns (w', v')."""
    w, v = _tv(w, n, None), _tv(v, n, None)
    if not (1 <= j < len(v.bits) and j <= len(w.bits)):
        raise ParameterError(f"index j={j} out of range")
    if (v.bits[j - 1], v.bits[j]) != (1, 1):
        raise ParameterError(f"need (v_j, v_j+1) = (1, 1) at j={j}, got {v.bits[j - 1:j + 1]}")
    return _like(w, w.bits[:j - 1] + (1,)), _like(v, v.bits[:j])


def hilton_compress(A: SetFamily, B: SetFamily) -> tuple[LexSegment, LexSegment]:
    """Replace a cross-intersecting pair by the initial segments of the same sizes."""
    if A.n != B.n:
        raise ParameterError("families live on different ground sets")
    if not cross_intersecting(A, B):
        raise ParameterError("input families are not cross-intersecting")
    return LexSegment(A.n, A.k, len(A)), LexSegment(B.n, B.k, len(B))


def segment_cross_limits(n: int, a: int, b: int) -> list[int]:
    """Entry r is the largest m with L(m, a), L(r, b) cross-intersecting."""
    As, Bs = _lex_list(n, a), _lex_list(n, b)
    m = len(As)
    limits = [m]
    for y in Bs:
        for t in range(m):
            if not As[t] & y:
                m = t
                break
        limits.append(m)
    return limits
