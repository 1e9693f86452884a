"""Exact maximum intersecting families by branch and bound on the conflict graph.

Vertices of the conflict graph are the vectors of V(n, k, l); two are joined
when their scalar product is -2l, so independent sets are exactly the
intersecting families.  Adjacency rows are Python ints used as bitsets.

The solver branches include/exclude on a highest-degree candidate and prunes
with a greedy clique cover of the candidate set.  With ``symmetry="orbital"``
the exclude branch drops the whole orbit of the branching vertex under the
coordinate permutations that fix every included vertex; those permutations
form a Young subgroup, so orbits are read off from cell counts.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .core import (ParameterError, Params, SignedFamily, SizeError, e_size, iter_V_pairs,
                   mask_of, pair_product)
from .report import BoundReport

DEFAULT_VERTEX_CAP = 5000
DEFAULT_BUDGET = 60.0
SYMMETRY_MODES = ("none", "root", "orbital")


@dataclass(frozen=True)
class ConflictGraph:
    params: Params
    vertices: SignedFamily
    adjacency: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.adjacency)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def index(self, pair: tuple[int, int]) -> int:
        return _index_map(self.vertices.pairs)[pair]

    def mask_of_pairs(self, pairs) -> int:
        idx = _index_map(self.vertices.pairs)
        m = 0
        for p in pairs:
            m |= 1 << idx[p]
        return m

    def is_independent(self, mask: int) -> bool:
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if self.adjacency[v] & mask:
                return False
            rest ^= low
        return True


@lru_cache(maxsize=64)
def _index_map(pairs: tuple[tuple[int, int], ...]) -> dict[tuple[int, int], int]:
    return {p: t for t, p in enumerate(pairs)}


@dataclass(frozen=True)
class SearchResult:
    alpha: int
    witness: SignedFamily
    nodes_explored: int
    elapsed: float
    optimal: bool
    upper_bound: int

    @property
    def lower_bound(self) -> int:
        return self.alpha


def build_conflict_graph(p: Params, vertex_cap: int = DEFAULT_VERTEX_CAP) -> ConflictGraph:
    size = p.size()
    if size > vertex_cap:
        raise SizeError(f"|V{(p.n, p.k, p.l)}| = {size} exceeds the vertex cap {vertex_cap}")
    return _cached_graph(p)


@lru_cache(maxsize=32)
def _cached_graph(p: Params) -> ConflictGraph:
    pairs = tuple(iter_V_pairs(p))
    target = p.min_product
    N = len(pairs)
    adj = [0] * N
    for a in range(N):
        va = pairs[a]
        row = 0
        for b in range(a + 1, N):
            if pair_product(va, pairs[b]) == target:
                row |= 1 << b
                adj[b] |= 1 << a
        adj[a] |= row
    return ConflictGraph(p, SignedFamily.from_pairs(p, pairs), tuple(adj))


# -- the branch and bound core ----------------------------------------------

class _Timeout(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Solver:
    def __init__(self, adj: Sequence[int], pairs: Sequence[tuple[int, int]], n: int,
                 start: int, budget: float, symmetry: str,
                 propagate: Callable[[tuple[int, ...], int], int] | None = None,
                 reduce: bool = True):
        self.adj = adj
        self.pairs = pairs
        self.n = n
        self.start = start
        self.budget = budget
        self.symmetry = symmetry
        self.propagate = propagate
        self.reduce = reduce and propagate is None
        self.nodes = 0
        self.best = 0
        self.best_inc: tuple[int, ...] = ()

    # bounds ---------------------------------------------------------------
    def cover_bound(self, P: int) -> int:
        """Number of cliques in a greedy clique cover of P."""
        adj = self.adj
        count = 0
        Q = P
        while Q:
            low = Q & -Q
            Q ^= low
            cand = adj[low.bit_length() - 1] & Q
            while cand:
                u = cand & -cand
                Q ^= u
                cand &= adj[u.bit_length() - 1] & Q
            count += 1
        return count

    # reductions -----------------------------------------------------------
    def reduce_node(self, P: int, inc: tuple[int, ...]):
        adj = self.adj
        changed = True
        while changed and P:
            changed = False
            for v in _bits(P):
                if not P >> v & 1:
                    continue
                nb = adj[v] & P
                if nb & (nb - 1) == 0:
                    # degree 0 or 1: some maximum independent set takes v
                    P &= ~((1 << v) | nb)
                    inc = inc + (v,)
                    changed = True
        return P, inc

    # symmetry ---------------------------------------------------------------
    def orbit(self, v: int, P: int, inc: tuple[int, ...]) -> int:
        pairs, n = self.pairs, self.n
        cells: dict[tuple, int] = {}
        for x in range(n):
            b = 1 << x
            sig = tuple(1 if pairs[u][0] & b else (2 if pairs[u][1] & b else 0) for u in inc)
            cells[sig] = cells.get(sig, 0) | b
        cl = tuple(cells.values())

        def key(u):
            pl, mi = pairs[u]
            return tuple((pl & c).bit_count() for c in cl) + tuple((mi & c).bit_count() for c in cl)

        k0 = key(v)
        orb = 0
        for u in _bits(P):
            if key(u) == k0:
                orb |= 1 << u
        return orb

    def pick(self, P: int) -> int:
        adj = self.adj
        best_v, best_d = -1, -1
        for v in _bits(P):
            d = (adj[v] & P).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        return best_v

    def greedy(self, P: int) -> tuple[int, ...]:
        """Min-degree greedy independent set, used as the first incumbent."""
        adj = self.adj
        inc: tuple[int, ...] = ()
        while P:
            v = min(_bits(P), key=lambda u: ((adj[u] & P).bit_count(), u))
            inc = inc + (v,)
            P &= ~(adj[v] | (1 << v))
            if self.propagate is not None:
                P = self.propagate(inc, P)
        return inc

    # search ---------------------------------------------------------------
    def run(self):
        t0 = time.perf_counter()
        deadline = t0 + self.budget
        inc0 = self.greedy(self.start)
        self.best, self.best_inc = len(inc0), inc0
        stack = [(self.start, (), 0)]
        optimal = True
        upper = None
        while stack:
            P, inc, depth = stack.pop()
            self.nodes += 1
            if self.nodes & 255 == 0 and time.perf_counter() > deadline:
                stack.append((P, inc, depth))
                optimal = False
                break
            if self.reduce:
                P, inc = self.reduce_node(P, inc)
            if not P:
                if len(inc) > self.best:
                    self.best, self.best_inc = len(inc), inc
                continue
            if len(inc) + self.cover_bound(P) <= self.best:
                continue
            v = self.pick(P)
            use_orbit = self.symmetry == "orbital" or (self.symmetry == "root" and depth == 0)
            drop = self.orbit(v, P, inc) if use_orbit else 1 << v
            # exclude branch pushed first so the include branch is explored first
            stack.append((P & ~drop, inc, depth + 1))
            Pin = P & ~(self.adj[v] | (1 << v))
            inc_v = inc + (v,)
            if self.propagate is not None:
                Pin = self.propagate(inc_v, Pin)
            stack.append((Pin, inc_v, depth + 1))
        if not optimal:
            upper = max([self.best] + [len(inc) + self.cover_bound(P) for P, inc, _ in stack])
        elapsed = time.perf_counter() - t0
        return self.best_inc, optimal, (self.best if optimal else upper), elapsed


def _check_symmetry(symmetry: str) -> None:
    if symmetry not in SYMMETRY_MODES:
        raise ParameterError(f"unknown symmetry mode {symmetry!r}; choose from {SYMMETRY_MODES}")


def max_independent_set(g: ConflictGraph, time_budget: float = DEFAULT_BUDGET,
                        symmetry: str = "none", restrict_to: int | None = None,
                        propagate: Callable[[tuple[int, ...], int], int] | None = None) -> SearchResult:
    """Maximum independent set of ``g`` (optionally of the subgraph on ``restrict_to``).

    Symmetry reduction relies on the coordinate permutations of [n] acting on
    the whole vertex set, so it is only allowed without ``restrict_to``.
    When the budget runs out the result carries the best set found and a
    valid upper bound, with ``optimal=False``.
    """
    _check_symmetry(symmetry)
    if time_budget <= 0:
        raise ParameterError("time budget must be positive")
    start = g.full if restrict_to is None else restrict_to & g.full
    if symmetry != "none" and start != g.full:
        raise ParameterError("symmetry reduction needs the full vertex set")
    solver = _Solver(g.adjacency, g.vertices.pairs, g.params.n, start, time_budget, symmetry,
                     propagate=propagate)
    inc, optimal, upper, elapsed = solver.run()
    pairs = g.vertices.pairs
    witness = SignedFamily.from_pairs(g.params, (pairs[v] for v in inc))
    return SearchResult(len(inc), witness, solver.nodes, elapsed, optimal, upper)


def m_exact(p: Params, time_budget: float = DEFAULT_BUDGET, symmetry: str = "orbital",
            vertex_cap: int = DEFAULT_VERTEX_CAP) -> SearchResult:
    """m(n, k, l): the largest intersecting family in V(n, k, l)."""
    g = build_conflict_graph(p, vertex_cap)
    return max_independent_set(g, time_budget, symmetry)


def result_line(p: Params, res: SearchResult) -> str:
    return (f"RESULT n={p.n} k={p.k} l={p.l} alpha={res.alpha} optimal={int(res.optimal)} "
            f"nodes={res.nodes_explored} ms={int(round(res.elapsed * 1000))}")


# -- circle method --------------------------------------------------------

def build_signed_circle(n: int, k: int) -> SignedFamily:
    """The n vectors with a cyclic run of k ones at i..i+k-1 and -1 at i-k (mod n)."""
    if n < 2 * k:
        raise ParameterError(f"signed circle needs n >= 2k, got n={n}, k={k}")
    p = Params(n, k, 1)
    pairs = []
    for i in range(1, n + 1):
        plus = mask_of(((i - 1 + t) % n) + 1 for t in range(k))
        minus = mask_of([((i - k - 1) % n) + 1])
        pairs.append((plus, minus))
    return SignedFamily.from_pairs(p, pairs)


def averaged_bound(alpha_sub: int, size_sub: int, size_all: int) -> Fraction:
    """alpha(H) / |H| * |G| for a subgraph H of a vertex-transitive G."""
    return Fraction(alpha_sub * size_all, size_sub)


def circle_alpha_check(n: int, k: int, time_budget: float = DEFAULT_BUDGET) -> BoundReport:
    """alpha of the conflict graph on the signed circle, and the averaged bound."""
    if not 2 * k <= n <= 3 * k - 1:
        raise ParameterError(f"circle check needs 2k <= n <= 3k-1, got n={n}, k={k}")
    p = Params(n, k, 1)
    g = build_conflict_graph(p)
    H = build_signed_circle(n, k)
    res = max_independent_set(g, time_budget, restrict_to=g.mask_of_pairs(H.pairs))
    avg = averaged_bound(res.alpha, len(H), g.size)
    e = e_size(n, k)
    details = {"expect_equal": True, "circle_size": len(H), "averaged_bound": str(avg),
               "e": e, "extra_ok": res.optimal and len(H) == n and avg == e}
    return BoundReport("circle_alpha", {"n": n, "k": k}, res.alpha, k, "k",
                       witness=res.witness, details=details)


# -- the averaging identity over the last coordinate ----------------------

def averaging_identity_check(F: SignedFamily, k: int | None = None) -> BoundReport:
    """Sum over i <= n of |A(i)| + k|B(-i)| against k(|A| + |B|).

    F lives in V(n+1, k, 1); A are the members with -1 in the last coordinate,
    B those with +1 there.  For a shifted F the check also requires
    B(-i) to be contained in A(i) as families of (k-1)-sets.
    """
    from .shifting import is_shifted

    p = F.ambient
    if p.l != 1:
        raise ParameterError("the averaging identity is stated for l = 1")
    if k is not None and k != p.k:
        raise ParameterError(f"k={k} does not match the family's k={p.k}")
    k = p.k
    last = 1 << (p.n - 1)
    n = p.n - 1
    A = [v for v in F.pairs if v[1] & last]
    B = [v for v in F.pairs if v[0] & last]
    zero = [v for v in F.pairs if not (v[0] | v[1]) & last]
    lhs = 0
    nested = True
    for i in range(1, n + 1):
        b = 1 << (i - 1)
        Ai = {pl & ~b for pl, _ in A if pl & b}
        Bi = {pl & ~last for pl, mi in B if mi & b}
        lhs += len(Ai) + k * len(Bi)
        nested = nested and Bi <= Ai
    rhs = k * (len(A) + len(B))
    shifted = is_shifted(F)
    decomposition = len(F) == len(zero) + len(A) + len(B)
    details = {"expect_equal": True, "A": len(A), "B": len(B), "zero_part": len(zero),
               "shifted": shifted, "nested": nested,
               "extra_ok": decomposition and (nested or not shifted)}
    return BoundReport("averaging_identity", {"n": n, "k": k}, lhs, rhs, "k(|A|+|B|)",
                       details=details)
