"""Domination primitives, maximal independent sets, and brute-force oracles."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .core import (
    ContractError,
    Graph,
    Poset,
    Sink,
    VertexSet,
    drive,
    full,
    iter_members,
    size,
)


@dataclass(frozen=True)
class RedBlueInstance:
    """A graph with disjoint red and blue vertex sets (not necessarily a partition)."""

    graph: Graph
    red: VertexSet
    blue: VertexSet

    def __post_init__(self):
        if self.red & self.blue:
            raise ContractError("red and blue sets must be disjoint")
        if (self.red | self.blue) >> self.graph.n:
            raise ContractError("red/blue vertices outside the graph")


def closed_neighborhood(G: Graph, S: VertexSet) -> VertexSet:
    out = 0
    for x in iter_members(S):
        out |= G.closed[x]
    return out


def dominates(G: Graph, D: VertexSet, X: VertexSet) -> bool:
    return not (X & ~closed_neighborhood(G, D))


def private_neighbors(G: Graph, D: VertexSet, u: int) -> VertexSet:
    """``priv(D, u)``: vertices whose closed neighborhood meets ``D`` exactly in ``u``."""
    if not D >> u & 1:
        raise ContractError(f"{u} is not a member of D")
    bit = 1 << u
    out = 0
    for v in iter_members(G.closed[u]):
        if G.closed[v] & D == bit:
            out |= 1 << v
    return out


def is_irredundant(G: Graph, I: VertexSet) -> bool:
    return all(private_neighbors(G, I, x) for x in iter_members(I))


def is_minimal_dominating(G: Graph, D: VertexSet) -> bool:
    return dominates(G, D, G.vertices) and is_irredundant(G, D)


def greedy_reduce(G: Graph, D: VertexSet, target: Optional[VertexSet] = None) -> VertexSet:
    """Drop redundant members of ``D`` smallest index first.

    A member is redundant when no vertex of ``target`` (default: all vertices)
    is dominated by it alone.  Removing a vertex never takes private
    neighbors away from the others, so one ascending pass reaches the same
    set as re-scanning from the smallest index after every removal.
    """
    if target is None:
        target = G.vertices
    if not dominates(G, D, target):
        raise ContractError("greedy_reduce needs a dominating set of the target")
    current = D
    closed = G.closed
    for z in iter_members(D):
        bit = 1 << z
        needed = False
        for y in iter_members(closed[z] & target):
            if closed[y] & current == bit:
                needed = True
                break
        if not needed:
            current &= ~bit
    return current


def lex_smallest_mis(G: Graph, X: VertexSet) -> VertexSet:
    """Lexicographically smallest maximal independent set of ``G[X]``."""
    chosen = 0
    avail = X
    while avail:
        low = avail & -avail
        v = low.bit_length() - 1
        chosen |= low
        avail &= ~G.closed[v]
    return chosen


def iter_mis(G: Graph) -> Iterator[VertexSet]:
    """Maximal independent sets by prefix extension (Tsukiyama-style reverse search).

    A maximal independent set ``S`` of ``G[0..i-1]`` has at most two children
    in ``G[0..i]``: ``S + i`` when ``i`` has no neighbor in ``S``; otherwise
    ``S`` itself and ``(S - N(i)) + i`` when the latter is maximal and its
    lexicographic completion in ``G[0..i-1]`` is ``S``.  Each leaf at depth
    ``n`` is a distinct maximal independent set; space is O(n) masks.
    """
    n = G.n
    adj = G.adj
    closed = G.closed

    def maximal_in_prefix(T: VertexSet, i: int) -> bool:
        missing = full(i) & ~T
        for u in iter_members(missing):
            if not adj[u] & T:
                return False
        return True

    def complete(T: VertexSet, i: int) -> VertexSet:
        avail = full(i) & ~T
        for u in iter_members(T):
            avail &= ~closed[u]
        while avail:
            low = avail & -avail
            T |= low
            avail &= ~closed[low.bit_length() - 1]
        return T

    def rec(i: int, S: VertexSet) -> Iterator[VertexSet]:
        if i == n:
            yield S
            return
        bit = 1 << i
        if not adj[i] & S:
            yield from rec(i + 1, S | bit)
            return
        yield from rec(i + 1, S)
        T = (S & ~adj[i]) | bit
        if maximal_in_prefix(T, i + 1) and complete(T & ~bit, i) == S:
            yield from rec(i + 1, T)

    yield from rec(0, 0)


def enumerate_mis(G: Graph, sink: Sink) -> None:
    drive(iter_mis(G), sink)


# ---------------------------------------------------------------------------
# oracles: definition checks over every candidate, no shared enumeration logic
# ---------------------------------------------------------------------------

def _neighborhoods(G: Graph) -> list[frozenset[int]]:
    return [frozenset(v for v in range(G.n) if v == u or G.adjacent(u, v)) for u in range(G.n)]


def _covered(nbhd, D) -> set[int]:
    out: set[int] = set()
    for x in D:
        out |= nbhd[x]
    return out


def brute_force_mds(G: Graph) -> set[VertexSet]:
    """All minimal dominating sets, by testing minimality of every dominating subset."""
    nbhd = [G.closed[u] for u in range(G.n)]
    everything = full(G.n)
    found = set()
    for mask in range(1 << G.n):
        dom = 0
        m = mask
        while m:
            low = m & -m
            dom |= nbhd[low.bit_length() - 1]
            m ^= low
        if dom != everything:
            continue
        minimal = True
        m = mask
        while m:
            low = m & -m
            m ^= low
            rest = mask ^ low
            cover = 0
            r = rest
            while r:
                lo = r & -r
                cover |= nbhd[lo.bit_length() - 1]
                r ^= lo
            if cover == everything:
                minimal = False
                break
        if minimal:
            found.add(mask)
    return found


def brute_force_mis(G: Graph) -> set[VertexSet]:
    vertices = range(G.n)
    found = set()
    for k in range(G.n + 1):
        for S in combinations(vertices, k):
            if any(G.adjacent(a, b) for a, b in combinations(S, 2)):
                continue
            if all(v in S or any(G.adjacent(v, s) for s in S) for v in vertices):
                found.add(sum(1 << s for s in S))
    return found


def brute_force_red_blue(G: Graph, R: VertexSet, B: VertexSet) -> set[VertexSet]:
    """All minimal ``D`` within ``R`` whose closed neighborhood covers ``B``."""
    nbhd = _neighborhoods(G)
    red = [v for v in range(G.n) if R >> v & 1]
    blue = {v for v in range(G.n) if B >> v & 1}
    found = set()
    for k in range(len(red) + 1):
        for D in combinations(red, k):
            if not blue <= _covered(nbhd, D):
                continue
            if all(not blue <= _covered(nbhd, [y for y in D if y != x]) for x in D):
                found.add(sum(1 << x for x in D))
    return found


def width(P: Poset) -> int:
    """Size of a largest antichain, by exhaustive growth of antichains."""
    best = 0

    def grow(S: VertexSet, start: int, k: int) -> None:
        nonlocal best
        best = max(best, k)
        for x in range(start, P.n):
            if not ((P.up[x] | P.down[x]) & S):
                grow(S | (1 << x), x + 1, k + 1)

    grow(0, 0, 0)
    return best


def check_width_bound(P: Poset, D: VertexSet, alpha: Optional[int] = None) -> bool:
    """``|D| <= 2 * width(P)`` for a minimal dominating set of the comparability graph."""
    if alpha is None:
        alpha = width(P)
    return size(D) <= 2 * alpha
