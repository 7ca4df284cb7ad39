"""Hypergraphs, minimal transversals, conformality, and the domination reductions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .core import (
    ContractError,
    Graph,
    MalformedInputError,
    Poset,
    SearchStats,
    Sink,
    VertexSet,
    drive,
    full,
    iter_members,
    members,
    min_elements,
    size,
    vset,
)
from .domination import RedBlueInstance


@dataclass(frozen=True)
class Hypergraph:
    """Edges over the ground set ``0..m-1``.

    ``labels`` optionally maps ground index ``i`` to an external vertex id
    (e.g. the original graph vertex after a reduction); ``None`` means the
    identity.
    """

    m: int
    edges: tuple[VertexSet, ...]
    labels: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        for e in self.edges:
            if e >> self.m:
                raise MalformedInputError("edge outside the ground set")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.m:
                raise MalformedInputError("labels must name every ground vertex")

    @property
    def infeasible(self) -> bool:
        """True when some edge is empty, so no transversal exists."""
        return any(e == 0 for e in self.edges)

    def is_sperner(self) -> bool:
        edges = self.edges
        for i, e in enumerate(edges):
            for j, f in enumerate(edges):
                if i != j and e & f == e:
                    return False
        return True

    def to_labels(self, T: VertexSet) -> VertexSet:
        """Translate a ground-set mask into the labelled vertex ids."""
        if self.labels is None:
            return T
        return vset(self.labels[i] for i in iter_members(T))

    def from_labels(self, S: VertexSet) -> VertexSet:
        if self.labels is None:
            return S
        index = {lab: i for i, lab in enumerate(self.labels)}
        return vset(index[x] for x in iter_members(S))


def sperner_reduce(H: Hypergraph) -> Hypergraph:
    """Keep the inclusion-minimal edges, one copy each, in first-seen order."""
    kept: list[VertexSet] = []
    seen = set()
    for e in H.edges:
        if e in seen:
            continue
        seen.add(e)
        if any(f & e == f and f != e for f in H.edges):
            continue
        kept.append(e)
    return Hypergraph(H.m, tuple(kept), H.labels)


def is_transversal(H: Hypergraph, T: VertexSet) -> bool:
    return all(e & T for e in H.edges)


def brute_force_transversals(H: Hypergraph) -> set[VertexSet]:
    """Minimal transversals by definition over every subset of the ground set."""
    edges = [set(members(e)) for e in H.edges]
    found = set()
    for k in range(H.m + 1):
        for T in combinations(range(H.m), k):
            chosen = set(T)
            if not all(e & chosen for e in edges):
                continue
            if all(any(not (e & (chosen - {x})) for e in edges) for x in T):
                found.add(vset(T))
    return found


def iter_transversals(H: Hypergraph, stats: Optional[SearchStats] = None) -> Iterator[VertexSet]:
    """Minimal transversals of a Sperner hypergraph, each exactly once.

    Depth-first minimal hitting set search with criticality bookkeeping
    (Murakami-Uno MMCS).  ``crit[u]`` is the set of edge indices hit by ``u``
    alone; a branch is cut when some chosen vertex loses all critical edges.
    Pick-rule: the uncovered edge with fewest remaining candidates.
    Space is O(m + |edges|) masks per recursion level, depth at most ``m``.
    """
    if not H.is_sperner():
        raise ContractError("enumerate_transversals needs a Sperner hypergraph")
    if H.infeasible:
        return
    edges = H.edges
    k = len(edges)
    # inc[v]: indices of edges containing v
    inc = [0] * H.m
    for j, e in enumerate(edges):
        for v in iter_members(e):
            inc[v] |= 1 << j

    def rec(S: VertexSet, cand: VertexSet, crit: dict[int, int], uncov: int) -> Iterator[VertexSet]:
        if stats is not None:
            stats.nodes += 1
            stats.frames(len(crit) + 1)
        if not uncov:
            yield S
            return
        best_j, best_c = -1, None
        u = uncov
        while u:
            low = u & -u
            j = low.bit_length() - 1
            u ^= low
            c = edges[j] & cand
            if best_c is None or size(c) < size(best_c):
                best_j, best_c = j, c
                if not c:
                    break
        C = best_c
        cand &= ~C
        for v in iter_members(C):
            hit = inc[v]
            new_crit = {}
            ok = True
            for w, cw in crit.items():
                cw &= ~hit
                if not cw:
                    ok = False
                    break
                new_crit[w] = cw
            if ok:
                new_crit[v] = uncov & hit
                if new_crit[v]:
                    yield from rec(S | (1 << v), cand, new_crit, uncov & ~hit)
            cand |= 1 << v

    yield from rec(0, full(H.m), {}, full(k))


def enumerate_transversals(H: Hypergraph, sink: Sink) -> bool:
    """Stream ``Tr(H)`` into ``sink``; returns False when ``H`` is infeasible."""
    if H.infeasible:
        if not H.is_sperner():
            raise ContractError("enumerate_transversals needs a Sperner hypergraph")
        return False
    drive(iter_transversals(H), sink)
    return True


def conformality_violation(H: Hypergraph, c: int) -> Optional[VertexSet]:
    """A set not inside any edge whose subsets of size <= c all are, or None.

    Any violation contains an inclusion-minimal uncovered set larger than
    ``c``; the first such set in ascending mask order is returned.
    """
    m = H.m
    covered = bytearray(1 << m)
    for e in H.edges:
        covered[e] = 1
    # downward closure: X covered iff X is a subset of some edge
    for bit in range(m):
        step = 1 << bit
        for X in range(1 << m):
            if X & step and covered[X]:
                covered[X ^ step] = 1
    for X in range(1 << m):
        if covered[X] or size(X) <= c:
            continue
        if all(covered[X ^ (1 << x)] for x in iter_members(X)):
            return X
    return None


def conformality_at_most(H: Hypergraph, c: int) -> bool:
    return conformality_violation(H, c) is None


# ---------------------------------------------------------------------------
# reductions
# ---------------------------------------------------------------------------

def neighborhood_hypergraph(G: Graph) -> Hypergraph:
    """Closed neighborhoods as edges; its minimal transversals are the minimal dominating sets."""
    return Hypergraph(G.n, tuple(G.closed))


def redblue_to_hypergraph(G: Graph, R: VertexSet, B: VertexSet) -> Hypergraph:
    """Ground set = red vertices (labelled by vertex id); one edge ``N(x) & R`` per blue ``x``.

    A blue vertex without red neighbors yields an empty edge, flagged by
    ``Hypergraph.infeasible``.
    """
    if R & B:
        raise ContractError("red and blue sets must be disjoint")
    red = members(R)
    index = {x: i for i, x in enumerate(red)}
    edges = []
    for x in iter_members(B):
        edges.append(vset(index[y] for y in iter_members(G.adj[x] & R)))
    return Hypergraph(len(red), tuple(edges), tuple(red))


def hypergraph_to_redblue(H: Hypergraph) -> RedBlueInstance:
    """Bipartite red-blue graph: red ``0..m-1``, blue ``m + j`` for edge ``j``."""
    m = H.m
    pairs = [(x, m + j) for j, e in enumerate(H.edges) for x in iter_members(e)]
    G = Graph.from_edges(m + len(H.edges), pairs)
    return RedBlueInstance(G, full(m), full(m + len(H.edges)) & ~full(m))


def minimal_filter_hypergraph(P: Poset) -> Hypergraph:
    """Sperner hypergraph of strict filters of the minimal elements.

    Ground set: the non-minimal elements (labels give their element ids).
    Edges: inclusion-minimal sets ``up(x) - {x}`` for minimal ``x``.
    Isolated elements (minimal and maximal at once) contribute no edge;
    their empty filter would otherwise swallow every other edge.
    """
    B = min_elements(P, P.elements)
    rest = members(P.elements & ~B)
    index = {x: i for i, x in enumerate(rest)}
    edges = tuple(
        vset(index[y] for y in iter_members(P.up[x] & ~(1 << x)))
        for x in iter_members(B)
        if P.up[x] != 1 << x
    )
    return sperner_reduce(Hypergraph(len(rest), edges, tuple(rest)))


lemma6_hypergraph = minimal_filter_hypergraph


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def parse_hypergraph(text: str) -> Hypergraph:
    """Parse ``m k`` then ``k`` edge lines.

    Lines starting with ``#`` are comments.  An edge line that is blank or
    reads ``-`` is the empty edge.
    """
    lines = [ln.strip() for ln in text.splitlines() if not ln.lstrip().startswith("#")]
    while lines and not lines[0]:
        lines.pop(0)
    if not lines:
        raise MalformedInputError("empty hypergraph file")
    try:
        header = [int(tok) for tok in lines[0].split()]
        if len(header) != 2:
            raise ValueError
        m, k = header
    except ValueError as exc:
        raise MalformedInputError("header must be 'm k'") from exc
    if m < 0 or k < 0:
        raise MalformedInputError("m and k must be non-negative")
    body = lines[1:]
    if len(body) < k or any(body[k:]):
        raise MalformedInputError(f"expected {k} edge lines")
    edges = []
    for ln in body[:k]:
        if ln in ("", "-"):
            edges.append(0)
            continue
        try:
            verts = [int(tok) for tok in ln.split()]
        except ValueError as exc:
            raise MalformedInputError(f"bad edge line {ln!r}") from exc
        if any(v < 0 or v >= m for v in verts):
            raise MalformedInputError(f"edge {ln!r} leaves the ground set 0..{m - 1}")
        edges.append(vset(verts))
    return Hypergraph(m, tuple(edges))


def format_hypergraph(H: Hypergraph) -> str:
    lines = [f"{H.m} {len(H.edges)}"]
    lines += [" ".join(map(str, members(e))) or "-" for e in H.edges]
    return "\n".join(lines) + "\n"
