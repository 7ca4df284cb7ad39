"""Flipping method for minimal dominating sets of comparability graphs.

A minimal dominating set ``D`` whose induced subgraph has an edge at ``u``
has, for every private neighbor ``v`` of ``u``, a parent obtained by trading
``u`` for ``v`` and greedily repairing.  Parents have strictly fewer induced
edges, so every solution is reachable from the maximal independent sets.

The search here is polynomial-space: a depth-first walk that pauses child
generators on a stack (bounded by the number of induced edges), plus a
re-simulation pass that drops repeated outputs without remembering them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .core import (
    ContractError,
    Graph,
    Poset,
    SearchStats,
    Sink,
    VertexSet,
    comparability_graph,
    drive,
    iter_members,
)
from .domination import (
    greedy_reduce,
    is_minimal_dominating,
    iter_mis,
    lex_smallest_mis,
    private_neighbors,
)
from .hypergraph import iter_transversals, redblue_to_hypergraph, sperner_reduce


# ---------------------------------------------------------------------------
# the flipping operation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Flip:
    """Result of flipping ``u`` for ``v``: ``parent = (D - u + X + v) - Z``."""

    parent: VertexSet
    added: VertexSet    # X_uv
    removed: VertexSet  # Z_uv


def flip(G: Graph, D: VertexSet, u: int, v: int, check: bool = True) -> Flip:
    if check:
        if not is_minimal_dominating(G, D):
            raise ContractError("D must be a minimal dominating set")
        if not D >> u & 1 or not G.adj[u] & D:
            raise ContractError(f"{u} must be a member of D with a neighbor in D")
    priv = private_neighbors(G, D, u)
    if not priv >> v & 1:
        raise ContractError(f"{v} is not a private neighbor of {u}")
    X = lex_smallest_mis(G, priv & ~G.closed[v])
    widened = (D & ~(1 << u)) | X | (1 << v)
    parent = greedy_reduce(G, widened)
    return Flip(parent, X, widened & ~parent)


def flip_parent(G: Graph, D: VertexSet, u: int, v: int) -> VertexSet:
    """Parent of ``D`` with respect to flipping ``u`` and ``v``."""
    return flip(G, D, u, v).parent


def flip_pairs(G: Graph, D: VertexSet) -> Iterator[tuple[int, int]]:
    """Valid ``(u, v)``: ``u`` in ``D`` not isolated in ``G[D]``, ``v`` private to ``u``."""
    for u in iter_members(D):
        if G.adj[u] & D:
            for v in iter_members(private_neighbors(G, D, u)):
                yield u, v


def is_child(G: Graph, D: VertexSet, D_star: VertexSet) -> bool:
    """True iff some flip of ``D`` has parent ``D_star``."""
    return any(flip(G, D, u, v, check=False).parent == D_star for u, v in flip_pairs(G, D))


def canonical_pair(G: Graph, D: VertexSet, D_star: VertexSet) -> Optional[tuple[int, int]]:
    """First ``(u, v)``, ordered by ``v`` then ``u``, whose flip takes ``D`` to ``D_star``.

    This is the order in which the child generator visits pairs at
    ``D_star``, so the search descends into each child exactly once per
    parent.
    """
    best = None
    for u, v in flip_pairs(G, D):
        if best is not None and (v, u) >= (best[1], best[0]):
            continue
        if flip(G, D, u, v, check=False).parent == D_star:
            best = (u, v)
    return best


# ---------------------------------------------------------------------------
# red-blue reduction for one (u, v) pair
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FlipSets:
    """Sets built from ``D*`` and a pair ``(u, v)``, read in the orientation where ``u <= v``.

    ``upward`` is False when the dual poset was used (``v < u``).
    """

    R1: VertexSet
    B: VertexSet
    R2: VertexSet
    R: VertexSet
    max_blue: VertexSet
    red_for_max: VertexSet
    upward: bool


def flip_contexts(G: Graph, D_star: VertexSet) -> Iterator[tuple[int, int]]:
    """``(u, v)`` with ``v`` isolated in ``G[D*]`` and ``u`` a neighbor of ``v``; by ``v`` then ``u``."""
    for v in iter_members(D_star):
        if not G.adj[v] & D_star:
            for u in iter_members(G.adj[v]):
                yield u, v


def _union(table, S: VertexSet) -> VertexSet:
    out = 0
    for x in iter_members(S):
        out |= table[x]
    return out


def compute_flip_sets(P: Poset, G: Graph, D_star: VertexSet, u: int, v: int) -> FlipSets:
    if not D_star >> v & 1 or G.adj[v] & D_star:
        raise ContractError(f"{v} must be an isolated member of D*")
    if not G.adj[u] >> v & 1:
        raise ContractError(f"{u} must be adjacent to {v}")
    upward = P.leq(u, v)
    up, down = (P.up, P.down) if upward else (P.down, P.up)
    closed = G.closed

    R1 = 0
    for x in iter_members(up[u] & D_star):
        if closed[x] & D_star == 1 << x:
            R1 |= 1 << x
    B = G.vertices & ~_union(closed, (D_star & ~R1) | (1 << u))
    R2 = _union(up, B) & ~_union(closed, R1)
    R = (R1 & ~(1 << v)) | R2
    max_blue = 0
    for x in iter_members(B):
        if not up[x] & B & ~(1 << x):
            max_blue |= 1 << x
    red_for_max = R & _union(up, max_blue)

    assert R1 >> v & 1
    assert all(not (G.adj[x] & R1) for x in iter_members(R1)), "R1 is not an antichain"
    assert not B & ~(_union(down, R1) & ~R1), "B escapes the down-set of R1"
    assert not _union(G.adj, R1) & R2, "edge between R1 and R2"
    return FlipSets(R1, B, R2, R, max_blue, red_for_max, upward)


def iter_children_candidates(P: Poset, G: Graph, D_star: VertexSet, u: int, v: int) -> Iterator[VertexSet]:
    """Superset of the children of ``D_star`` for the pair ``(u, v)``.

    For every minimal red set ``X`` dominating the maximal blue vertices,
    yields ``(D* - R1) + u + X`` greedily reduced.  Distinct ``X`` give
    distinct outputs, all minimal dominating.
    """
    fs = compute_flip_sets(P, G, D_star, u, v)
    H = sperner_reduce(redblue_to_hypergraph(G, fs.red_for_max, fs.max_blue))
    if H.infeasible:
        return
    base = (D_star & ~fs.R1) | (1 << u)
    for T in iter_transversals(H):
        X = H.to_labels(T)
        D = greedy_reduce(G, base | X)
        assert D & fs.R == X, "greedy reduction dropped a red vertex"
        yield D


def children_candidates(P: Poset, G: Graph, D_star: VertexSet, u: int, v: int, sink: Sink) -> None:
    drive(iter_children_candidates(P, G, D_star, u, v), sink)


def comparability_child_family(P: Poset, G: Graph) -> Callable[[VertexSet], Iterator[tuple[VertexSet, int, int]]]:
    """Child generator for the search: every pair's candidates, pairs in sequence."""

    def family(D_star: VertexSet) -> Iterator[tuple[VertexSet, int, int]]:
        for u, v in flip_contexts(G, D_star):
            for D in iter_children_candidates(P, G, D_star, u, v):
                yield D, u, v

    return family


# ---------------------------------------------------------------------------
# the search
# ---------------------------------------------------------------------------

_DONE = object()

ChildFamily = Callable[[VertexSet], Iterator[tuple[VertexSet, int, int]]]


class FlipSearch:
    """Depth-first walk over parent/child links, outputs possibly repeated.

    The root's children are the maximal independent sets.  Every set the
    child generator yields is output; when it is a child of the current node
    for the pair that produced it, the generator is paused and the search
    descends.  ``depth`` is the number of paused generators on the stack.
    """

    def __init__(self, G: Graph, family: ChildFamily):
        self.G = G
        self.family = family
        self.depth = 0
        self.peak = 0
        self._run = self._walk()

    def __iter__(self):
        return self

    def __next__(self) -> VertexSet:
        return next(self._run)

    def close(self) -> None:
        self._run.close()

    def _walk(self) -> Iterator[VertexSet]:
        G = self.G
        stack: list[tuple[Optional[VertexSet], Iterator]] = [(None, iter_mis(G))]
        self._track(1)
        while stack:
            node, gen = stack[-1]
            item = next(gen, _DONE)
            if item is _DONE:
                stack.pop()
                self.depth = len(stack)
                continue
            if node is None:
                D = item
                yield D
                descend = True
            else:
                D, u, v = item
                yield D
                descend = canonical_pair(G, D, node) == (u, v)
            if descend:
                stack.append((D, self.family(D)))
                self._track(len(stack))

    def _track(self, depth: int) -> None:
        self.depth = depth
        if depth > self.peak:
            self.peak = depth


def iter_flipping_outputs(P: Poset) -> Iterator[VertexSet]:
    """Raw search outputs for the comparability graph of ``P``, with repeats."""
    G = comparability_graph(P)
    return FlipSearch(G, comparability_child_family(P, G))


def without_repeats(make_search: Callable[[], FlipSearch], stats: Optional[SearchStats] = None) -> Iterator[VertexSet]:
    """Drop repeated outputs by re-simulation instead of a visited set.

    When the master search emits its i-th set, a fresh search is replayed
    for at most ``i - 1`` outputs; the set is new iff the replay never
    produces it.  Retained state: two searches and a counter.
    """
    master = make_search()
    i = 0
    try:
        for D in master:
            i += 1
            if stats is not None:
                stats.nodes = i
                stats.frames(master.depth)
            replay = make_search()
            seen = False
            try:
                for _, E in zip(range(i - 1), replay):
                    if E == D:
                        seen = True
                        break
            finally:
                if stats is not None:
                    stats.frames(master.depth + replay.peak)
                replay.close()
            if not seen:
                yield D
    finally:
        master.close()


def iter_mds_flipping(P: Poset, stats: Optional[SearchStats] = None) -> Iterator[VertexSet]:
    """Every minimal dominating set of the comparability graph of ``P``, once each, in polynomial space."""
    G = comparability_graph(P)
    family = comparability_child_family(P, G)
    return without_repeats(lambda: FlipSearch(G, family), stats)


def enumerate_mds_flipping(P: Poset, sink: Sink, stats: Optional[SearchStats] = None) -> None:
    drive(iter_mds_flipping(P, stats), sink)
