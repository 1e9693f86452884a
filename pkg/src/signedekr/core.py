"""Ground types for signed sets and set families.

Sets are stored as integer bit masks with bit ``i`` standing for element
``i + 1`` of the ground set ``[n]``.  A signed set is a pair of disjoint
masks (plus, minus); it is the support data of one {0, +1, -1}-vector.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable, Iterator

WORD_BITS = 64


class ParameterError(ValueError):
    """Invalid or inconsistent parameters."""


class SizeError(ValueError):
    """A size or word-width cap was exceeded."""


def binom(n: int, r: int) -> int:
    """Binomial coefficient, zero outside ``0 <= r <= n``."""
    if r < 0 or n < 0 or r > n:
        return 0
    return comb(n, r)


# -- bit mask helpers -------------------------------------------------------

def mask_of(elements: Iterable[int]) -> int:
    """Mask of a collection of 1-based elements."""
    m = 0
    for x in elements:
        if x < 1:
            raise ParameterError(f"elements are 1-based, got {x}")
        m |= 1 << (x - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """Ascending 1-based elements of a mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def iter_k_masks(n: int, k: int) -> Iterator[int]:
    """All k-subsets of [n] as masks, in lexicographic order of their elements."""
    for combo in itertools.combinations(range(n), k):
        m = 0
        for x in combo:
            m |= 1 << x
        yield m


def lex_key(mask: int) -> tuple[int, ...]:
    return elements_of(mask)


def _check_width(n: int) -> None:
    if n > WORD_BITS:
        raise SizeError(f"n={n} exceeds the word-width cap of {WORD_BITS}")


# -- parameters -------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Params:
    """Ambient parameters (n, k, l) of V(n, k, l)."""

    n: int
    k: int
    l: int = 0

    def __post_init__(self):
        n, k, l = self.n, self.k, self.l
        if not all(isinstance(v, int) for v in (n, k, l)):
            raise ParameterError("n, k, l must be integers")
        if k < 1:
            raise ParameterError(f"k must be at least 1, got k={k}")
        if l < 0 or l > k:
            raise ParameterError(f"need 0 <= l <= k, got k={k}, l={l}")
        if n < k + l:
            raise ParameterError(f"need n >= k + l, got n={n}, k={k}, l={l}")
        _check_width(n)

    @property
    def min_product(self) -> int:
        """Minimum scalar product in V(n, k, l), valid once n >= 2k."""
        return -2 * self.l

    def size(self) -> int:
        return binom(self.n, self.k) * binom(self.n - self.k, self.l)

    def require_theorem_range(self) -> None:
        """Reject parameters outside the range the main theorems talk about."""
        if self.k < 2:
            raise ParameterError("theorem verifiers need k >= 2")
        if self.n < 2 * self.k:
            raise ParameterError(f"theorem verifiers need n >= 2k, got n={self.n}, k={self.k}")


# -- signed sets and families ----------------------------------------------

@dataclass(frozen=True)
class SignedSet:
    """A vector of V(n, k, l) held as its (plus, minus) support masks."""

    plus: int
    minus: int
    ambient: Params = field(compare=True)

    def __post_init__(self):
        p = self.ambient
        if self.plus & self.minus:
            raise ParameterError("plus and minus supports overlap")
        if (self.plus | self.minus) >> p.n:
            raise ParameterError(f"support outside [{p.n}]")
        if self.plus.bit_count() != p.k or self.minus.bit_count() != p.l:
            raise ParameterError(
                f"need |plus|={p.k} and |minus|={p.l}, got "
                f"{self.plus.bit_count()} and {self.minus.bit_count()}")

    @classmethod
    def from_elements(cls, plus: Iterable[int], minus: Iterable[int], n: int) -> "SignedSet":
        pm, mm = mask_of(plus), mask_of(minus)
        return cls(pm, mm, Params(n, pm.bit_count(), mm.bit_count()))

    @property
    def key(self) -> tuple[int, int]:
        return (self.plus, self.minus)

    def coordinate(self, i: int) -> int:
        """Value (+1, 0 or -1) of the 1-based coordinate i."""
        b = 1 << (i - 1)
        if self.plus & b:
            return 1
        if self.minus & b:
            return -1
        return 0

    def as_vector(self) -> tuple[int, ...]:
        return tuple(self.coordinate(i) for i in range(1, self.ambient.n + 1))

    def __lt__(self, other: "SignedSet") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return format_signed_set(self)


def pair_product(v: tuple[int, int], w: tuple[int, int]) -> int:
    """Scalar product of two (plus, minus) mask pairs."""
    return ((v[0] & w[0]).bit_count() + (v[1] & w[1]).bit_count()
            - (v[0] & w[1]).bit_count() - (v[1] & w[0]).bit_count())


def scalar_product(v: SignedSet, w: SignedSet) -> int:
    if v.ambient != w.ambient:
        raise ParameterError(f"ambient mismatch: {v.ambient} vs {w.ambient}")
    return pair_product(v.key, w.key)


@dataclass(frozen=True)
class SignedFamily:
    """A duplicate-free family of signed sets sharing one ambient V(n, k, l).

    Members are kept sorted by (plus mask, minus mask).
    """

    ambient: Params
    members: tuple[SignedSet, ...] = ()

    def __post_init__(self):
        ms = sorted(set(self.members), key=lambda s: s.key)
        for s in ms:
            if s.ambient != self.ambient:
                raise ParameterError(f"member {s} lives in {s.ambient}, not {self.ambient}")
        object.__setattr__(self, "members", tuple(ms))

    @classmethod
    def from_pairs(cls, ambient: Params, pairs: Iterable[tuple[int, int]]) -> "SignedFamily":
        return cls(ambient, tuple(SignedSet(p, m, ambient) for p, m in pairs))

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(s.key for s in self.members)

    @cached_property
    def _keys(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.pairs)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SignedSet]:
        return iter(self.members)

    def __contains__(self, s: object) -> bool:
        if isinstance(s, SignedSet):
            return s.ambient == self.ambient and s.key in self._keys
        return s in self._keys


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family of k-subsets of [n], kept in lexicographic order."""

    n: int
    k: int
    members: tuple[int, ...] = ()

    def __post_init__(self):
        _check_width(self.n)
        if self.k < 0 or self.k > self.n:
            raise ParameterError(f"member size {self.k} impossible in [{self.n}]")
        ms = sorted(set(self.members), key=lex_key)
        for m in ms:
            if m >> self.n or m.bit_count() != self.k:
                raise ParameterError(f"{set(elements_of(m))} is not a {self.k}-subset of [{self.n}]")
        object.__setattr__(self, "members", tuple(ms))

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        return cls(n, k, tuple(mask_of(s) for s in sets))

    def as_sets(self) -> list[frozenset[int]]:
        return [frozenset(elements_of(m)) for m in self.members]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    @cached_property
    def _keys(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, m: object) -> bool:
        return m in self._keys

    def degree(self, x: int) -> int:
        b = 1 << (x - 1)
        return sum(1 for m in self.members if m & b)

    def max_degree(self) -> int:
        """Largest number of members containing a single element."""
        return max((self.degree(x) for x in range(1, self.n + 1)), default=0)

    def is_intersecting(self) -> bool:
        ms = self.members
        return all(ms[a] & ms[b] for a in range(len(ms)) for b in range(a + 1, len(ms)))


# -- intersecting test and generation ---------------------------------------

def min_pair_product(fam: SignedFamily) -> int | None:
    """Minimum scalar product over distinct pairs; None for fewer than two members."""
    ps = fam.pairs
    best = None
    for a in range(len(ps)):
        for b in range(a + 1, len(ps)):
            s = pair_product(ps[a], ps[b])
            if best is None or s < best:
                best = s
    return best


def is_intersecting(fam: SignedFamily) -> bool:
    """True iff no two distinct members attain the scalar product -2l."""
    p = fam.ambient
    if p.n < 2 * p.k:
        warnings.warn(f"n={p.n} < 2k={2 * p.k}: -2l need not be the minimum product",
                      stacklevel=2)
    ps = fam.pairs
    bad = p.min_product
    for a in range(len(ps)):
        va = ps[a]
        for b in range(a + 1, len(ps)):
            if pair_product(va, ps[b]) == bad:
                return False
    return True


def iter_V_pairs(p: Params) -> Iterator[tuple[int, int]]:
    """(plus, minus) pairs of V(n, k, l) in canonical order."""
    n = p.n
    out = []
    for plus in iter_k_masks(n, p.k):
        rest = [x for x in range(n) if not plus >> x & 1]
        for combo in itertools.combinations(rest, p.l):
            minus = 0
            for x in combo:
                minus |= 1 << x
            out.append((plus, minus))
    out.sort()
    return iter(out)


def generate_V(p: Params) -> SignedFamily:
    """All of V(n, k, l); |V| = C(n,k) * C(n-k,l)."""
    size = p.size()
    if size >= 1 << 63:
        raise SizeError(f"|V{(p.n, p.k, p.l)}| = {size} overflows a 64-bit count")
    fam = SignedFamily.from_pairs(p, iter_V_pairs(p))
    assert len(fam) == size
    return fam


# -- the constructions ------------------------------------------------------

def _require_l1(p: Params) -> None:
    if p.l != 1:
        raise ParameterError(f"construction needs l = 1, got l={p.l}")
    if p.n < 2 * p.k:
        raise ParameterError(f"construction needs n >= 2k, got n={p.n}, k={p.k}")


def construct_E(p: Params) -> SignedFamily:
    """All vectors with +1 in the first coordinate."""
    _require_l1(p)
    return SignedFamily.from_pairs(p, (v for v in iter_V_pairs(p) if v[0] & 1))


def construct_P(p: Params) -> SignedFamily:
    """All vectors whose last non-zero coordinate is -1."""
    _require_l1(p)
    return SignedFamily.from_pairs(p, (v for v in iter_V_pairs(p) if v[1] > v[0]))


def lift_P(fam: SignedFamily) -> SignedFamily:
    """Pad with a zero coordinate, then add every vector with -1 in the new coordinate."""
    p = fam.ambient
    if p.l != 1:
        raise ParameterError(f"lift needs l = 1, got l={p.l}")
    q = Params(p.n + 1, p.k, 1)
    new = 1 << p.n
    added = ((plus, new) for plus in iter_k_masks(p.n, p.k))
    return SignedFamily.from_pairs(q, itertools.chain(fam.pairs, added))


def construct_C(p: Params, threshold_offset: int = 0) -> SignedFamily:
    """E(n,k,1) up to n = k^2, lifted with P(.) beyond it.

    ``threshold_offset=1`` gives the equal-size variant that switches at k^2 + 1.
    """
    _require_l1(p)
    if threshold_offset not in (0, 1):
        raise ParameterError("threshold_offset must be 0 or 1")
    t = p.k * p.k + threshold_offset
    if p.n <= t:
        return construct_E(p)
    if t < 2 * p.k:
        raise ParameterError(f"no lift threshold for k={p.k} with offset {threshold_offset}")
    fam = construct_E(Params(t, p.k, 1))
    for _ in range(p.n - t):
        fam = lift_P(fam)
    return fam


def e_size(n: int, k: int) -> int:
    return k * binom(n - 1, k)


def p_size(n: int, k: int) -> int:
    return binom(n, k + 1)


def c_size(n: int, k: int) -> int:
    """|C(n,k,1)| by the closed form."""
    t = k * k
    if n <= t:
        return e_size(n, k)
    return e_size(t, k) - p_size(t, k) + p_size(n, k)


def construction_deltas(k: int, n: int) -> tuple[int, int]:
    """(e(n+1,k,1) - e(n,k,1), p(n+1,k,1) - p(n,k,1))."""
    if k < 1 or n < 1:
        raise ParameterError("need k >= 1 and n >= 1")
    return k * binom(n - 1, k - 1), binom(n, k)


# -- text format ------------------------------------------------------------

def _fmt_block(mask: int) -> str:
    return "{" + ",".join(str(x) for x in elements_of(mask)) + "}"


def format_signed_set(s: SignedSet) -> str:
    return f"+{_fmt_block(s.plus)} -{_fmt_block(s.minus)}"


def format_signed_family(fam: SignedFamily) -> str:
    return "".join(format_signed_set(s) + "\n" for s in fam)


def format_set_family(fam: SetFamily) -> str:
    return "".join(f"+{_fmt_block(m)}\n" for m in fam)


def _parse_block(tok: str, sign: str, lineno: int) -> int:
    if not (tok.startswith(sign + "{") and tok.endswith("}")):
        raise ParameterError(f"line {lineno}: malformed block {tok!r}")
    body = tok[2:-1].strip()
    if not body:
        return 0
    try:
        xs = [int(t) for t in body.split(",")]
    except ValueError:
        raise ParameterError(f"line {lineno}: non-integer element in {tok!r}") from None
    if xs != sorted(set(xs)):
        raise ParameterError(f"line {lineno}: elements must be ascending and distinct")
    return mask_of(xs)


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_signed_family(text: str, n: int | None = None, k: int | None = None,
                        l: int | None = None) -> SignedFamily:
    """Parse lines ``+{a,b,...} -{c,...}``.

    Missing n is taken as the largest element seen; missing k, l from the
    first member.
    """
    pairs = []
    for lineno, line in _content_lines(text):
        toks = line.split()
        if len(toks) != 2:
            raise ParameterError(f"line {lineno}: need a plus and a minus block")
        pairs.append((_parse_block(toks[0], "+", lineno), _parse_block(toks[1], "-", lineno)))
    if n is None:
        n = max(((p | m).bit_length() for p, m in pairs), default=0)
    if pairs:
        k = pairs[0][0].bit_count() if k is None else k
        l = pairs[0][1].bit_count() if l is None else l
    if k is None or l is None:
        raise ParameterError("empty family: k and l must be given")
    return SignedFamily.from_pairs(Params(n, k, l), pairs)


def parse_set_family(text: str, n: int | None = None, k: int | None = None) -> SetFamily:
    masks = []
    for lineno, line in _content_lines(text):
        toks = line.split()
        if len(toks) != 1:
            raise ParameterError(f"line {lineno}: set family lines carry one block")
        masks.append(_parse_block(toks[0], "+", lineno))
    if n is None:
        n = max((m.bit_length() for m in masks), default=0)
    if k is None:
        if not masks:
            raise ParameterError("empty family: k must be given")
        k = masks[0].bit_count()
    return SetFamily(n, k, tuple(masks))
