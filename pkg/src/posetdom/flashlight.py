"""Flashlight search for minimal dominating sets of incomparability graphs.

Elements are drawn as curves across ``d`` vertical lines (one per linear
order); two elements are adjacent in the incomparability graph iff their
curves cross.  Partial solutions grow only *upwards*: a new element must lie
above the current line-maximum in at least one order.  Whether a partial
solution can still be completed is decided by guessing private neighbors
for at most ``3d`` border elements.

Orders are indexed from 0 in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .core import (
    ContractError,
    Graph,
    Poset,
    SearchStats,
    Sink,
    VertexSet,
    drive,
    incomparability_graph,
    iter_members,
    members,
    size,
)
from .domination import closed_neighborhood, greedy_reduce, is_irredundant, private_neighbors


def line_max(P: Poset, S: VertexSet, i: int) -> int:
    """Maximum element of ``S`` in the i-th order."""
    if not S:
        raise ContractError("line_max of an empty set")
    rank = P.rank[i]
    return max(iter_members(S), key=rank.__getitem__)


def upward_set(P: Poset, S: VertexSet) -> VertexSet:
    """Elements outside ``S`` above ``line_max(P, S, i)`` in some order ``i``.

    Every element is upward from the empty set.
    """
    if not S:
        return P.elements
    out = 0
    for i, order in enumerate(P.orders):
        top = P.rank[i][line_max(P, S, i)]
        for x in order[top + 1:]:
            out |= 1 << x
    return out & ~S


@dataclass(frozen=True)
class Border:
    """Three layers of per-order maxima: ``a`` from ``S``, ``b`` and ``c`` from what remains."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]

    @property
    def tuple(self) -> tuple[int, ...]:
        return self.a + self.b + self.c


def _layer(P: Poset, S: VertexSet) -> tuple[tuple[int, ...], VertexSet]:
    picked = []
    for i in range(P.d):
        x = line_max(P, S, i)
        picked.append(x)
        S &= ~(1 << x)
    return tuple(picked), S


def border(P: Poset, S: VertexSet) -> Border:
    if size(S) < 3 * P.d:
        raise ContractError(f"border needs at least {3 * P.d} elements")
    a, rest = _layer(P, S)
    b, rest = _layer(P, rest)
    c, _ = _layer(P, rest)
    return Border(a, b, c)


def _first_extension(G: Graph, up: VertexSet, target: VertexSet, privs: list[VertexSet]) -> Optional[VertexSet]:
    """First tuple (odometer order) of private neighbors leaving ``up - N[tuple]`` dominating ``target``.

    Partial tuples are pruned: choosing more private neighbors only shrinks
    the candidate pool, so a failing prefix cannot be completed.
    """
    closed = G.closed

    def ok(pool: VertexSet) -> bool:
        return not target & ~closed_neighborhood(G, pool)

    def rec(k: int, pool: VertexSet) -> Optional[VertexSet]:
        if not ok(pool):
            return None
        if k == len(privs):
            return pool
        for w in iter_members(privs[k]):
            found = rec(k + 1, pool & ~closed[w])
            if found is not None:
                return found
        return None

    return rec(0, up)


def extension_guards(P: Poset, G: Graph, I: VertexSet) -> list[int]:
    """Members of ``I`` whose private neighbors are guessed: all of ``I`` when small, else the border."""
    if size(I) < 3 * P.d:
        return members(I)
    return list(border(P, I).tuple)


def can_extend_upwards(P: Poset, G: Graph, I: VertexSet, guards: Optional[list[int]] = None) -> Optional[VertexSet]:
    """A minimal dominating upward extension of the irredundant set ``I``, or None.

    ``G`` is the incomparability graph of ``P``.  ``guards`` overrides which
    members get a guessed private neighbor (used to compare the border test
    against the all-members test).
    """
    if not is_irredundant(G, I):
        raise ContractError("can_extend_upwards needs an irredundant set")
    if guards is None:
        guards = extension_guards(P, G, I)
    privs = [private_neighbors(G, I, x) for x in guards]
    target = G.vertices & ~closed_neighborhood(G, I)
    pool = _first_extension(G, upward_set(P, I), target, privs)
    if pool is None:
        return None
    return I | greedy_reduce(G, pool, target)


def parent_flashlight(P: Poset, I: VertexSet) -> VertexSet:
    """``I`` without its maximum in the first order."""
    if not I:
        raise ContractError("the empty set has no parent")
    return I & ~(1 << line_max(P, I, 0))


def iter_mds_incomparability(P: Poset, stats: Optional[SearchStats] = None) -> Iterator[VertexSet]:
    """Every minimal dominating set of the incomparability graph of ``P``, once each.

    Depth-first walk of the tree whose nodes are upward-extendable
    irredundant sets, rooted at the empty set; a child adds one upward
    element that becomes the new maximum of the first order.  Leaves are
    emitted.  The stack holds one paused candidate scan per level.
    """
    G = incomparability_graph(P)
    first = P.rank[0]
    everything = G.vertices

    def children(I: VertexSet) -> Iterator[VertexSet]:
        top = first[line_max(P, I, 0)] if I else -1
        for v in iter_members(upward_set(P, I)):
            if first[v] <= top:
                continue
            J = I | (1 << v)
            if not is_irredundant(G, J):
                continue
            if can_extend_upwards(P, G, J) is not None:
                yield J

    stack = [(0, children(0), False)]
    if stats is not None:
        stats.frames(1)
    while stack:
        node, gen, had_child = stack[-1]
        child = next(gen, None)
        if child is None:
            stack.pop()
            if not had_child:
                if closed_neighborhood(G, node) == everything:
                    yield node
                elif stats is not None:
                    stats.dead_ends += 1
            continue
        stack[-1] = (node, gen, True)
        stack.append((child, children(child), False))
        if stats is not None:
            stats.nodes += 1
            stats.frames(len(stack))


def enumerate_mds_incomparability(P: Poset, sink: Sink, stats: Optional[SearchStats] = None) -> None:
    drive(iter_mds_incomparability(P, stats), sink)
