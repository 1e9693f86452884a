"""Left compression of signed vectors and families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import ParameterError, SignedFamily, SignedSet


@dataclass(frozen=True)
class ShiftPair:
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ParameterError(f"need 1 <= i < j, got ({self.i}, {self.j})")


def _value(v: tuple[int, int], b: int) -> int:
    if v[0] & b:
        return 1
    if v[1] & b:
        return -1
    return 0


def _swap_bits(mask: int, bi: int, bj: int) -> int:
    if bool(mask & bi) != bool(mask & bj):
        mask ^= bi | bj
    return mask


def shift_pair(v: tuple[int, int], i: int, j: int) -> tuple[int, int]:
    """(i,j)-shift of a (plus, minus) pair, coordinates 1-based."""
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    if _value(v, bi) >= _value(v, bj):
        return v
    return (_swap_bits(v[0], bi, bj), _swap_bits(v[1], bi, bj))


def shift_vector(v: SignedSet, s: ShiftPair) -> SignedSet:
    if s.j > v.ambient.n:
        raise ParameterError(f"shift {s} outside [{v.ambient.n}]")
    w = shift_pair(v.key, s.i, s.j)
    return v if w == v.key else SignedSet(w[0], w[1], v.ambient)


def _shift_pairs(pairs: frozenset, i: int, j: int) -> frozenset:
    out = set()
    for v in pairs:
        w = shift_pair(v, i, j)
        out.add(v if w in pairs else w)
    return frozenset(out)


def shift_family(fam: SignedFamily, s: ShiftPair) -> SignedFamily:
    """Replace each member by its shift unless the shift is already present."""
    if s.j > fam.ambient.n:
        raise ParameterError(f"shift {s} outside [{fam.ambient.n}]")
    pairs = frozenset(fam.pairs)
    new = _shift_pairs(pairs, s.i, s.j)
    if new == pairs:
        return fam
    return SignedFamily.from_pairs(fam.ambient, new)


def all_shift_pairs(n: int) -> Iterator[ShiftPair]:
    """Every (i, j) with i < j, in lexicographic order."""
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            yield ShiftPair(i, j)


def fully_shift(fam: SignedFamily, max_passes: int | None = None) -> SignedFamily:
    """Sweep all (i, j) lexicographically until a whole pass changes nothing."""
    n = fam.ambient.n
    pairs = frozenset(fam.pairs)
    passes = 0
    while True:
        changed = False
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                new = _shift_pairs(pairs, i, j)
                if new != pairs:
                    pairs, changed = new, True
        passes += 1
        if not changed:
            break
        if max_passes is not None and passes >= max_passes:
            raise RuntimeError(f"no fixed point after {passes} passes")
    return SignedFamily.from_pairs(fam.ambient, pairs)


def is_shifted(fam: SignedFamily) -> bool:
    pairs = frozenset(fam.pairs)
    n = fam.ambient.n
    return all(_shift_pairs(pairs, s.i, s.j) == pairs for s in all_shift_pairs(n))


def shift_potential(pairs: Iterable[tuple[int, int]]) -> int:
    """Sum of i * v_i over all members; every effective shift lowers it."""
    total = 0
    for plus, minus in pairs:
        while plus:
            low = plus & -plus
            total += low.bit_length()
            plus ^= low
        while minus:
            low = minus & -minus
            total -= low.bit_length()
            minus ^= low
    return total
