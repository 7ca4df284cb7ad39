"""Posets given by realizers, their (in)comparability graphs, and vertex sets.

Vertex sets are plain ``int`` bitmasks: bit ``v`` is set iff vertex ``v`` is a
member.  Iteration over a set is always in ascending index order, which the
greedy rules elsewhere in the package rely on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

VertexSet = int


class MalformedInputError(ValueError):
    """Raised when user-supplied data (orders, files, parameters) is invalid."""


class ContractError(ValueError):
    """Raised when an operation is called outside its precondition."""


# ---------------------------------------------------------------------------
# vertex-set helpers
# ---------------------------------------------------------------------------

def vset(items: Iterable[int] = ()) -> VertexSet:
    """Build a bitmask from an iterable of vertex indices."""
    mask = 0
    for v in items:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Members of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def size(mask: VertexSet) -> int:
    return bin(mask).count("1")


def lowest(mask: VertexSet) -> int:
    """Smallest member of a non-empty set."""
    return (mask & -mask).bit_length() - 1


def full(n: int) -> VertexSet:
    return (1 << n) - 1


# ---------------------------------------------------------------------------
# streaming consumers
# ---------------------------------------------------------------------------

class Sink:
    """Serial consumer of enumerated solutions with cooperative cancellation.

    ``callback`` receives each solution bitmask.  Once :meth:`cancel` has been
    called (possibly from inside the callback) no further callbacks happen.
    """

    def __init__(self, callback: Optional[Callable[[VertexSet], None]] = None):
        self.callback = callback
        self.cancelled = False
        self.count = 0

    def cancel(self) -> None:
        self.cancelled = True

    def emit(self, solution: VertexSet) -> bool:
        """Deliver one solution; return False once the sink is cancelled."""
        if self.cancelled:
            return False
        self.count += 1
        if self.callback is not None:
            self.callback(solution)
        return not self.cancelled


class CollectingSink(Sink):
    """Sink that keeps every solution in emission order."""

    def __init__(self, limit: Optional[int] = None):
        super().__init__(self._store)
        self.solutions: list[VertexSet] = []
        self.limit = limit

    def _store(self, solution: VertexSet) -> None:
        self.solutions.append(solution)
        if self.limit is not None and len(self.solutions) >= self.limit:
            self.cancel()


def drive(solutions: Iterable[VertexSet], sink: Sink) -> int:
    """Feed a solution stream into ``sink`` until exhaustion or cancellation.

    The generator behind ``solutions`` is closed on cancellation so that no
    further enumeration work happens.  Returns the number of emissions.
    """
    emitted = 0
    it = iter(solutions)
    try:
        if sink.cancelled:
            return 0
        for s in it:
            emitted += 1
            if not sink.emit(s):
                break
    finally:
        close = getattr(it, "close", None)
        if close is not None:
            close()
    return emitted


@dataclass
class SearchStats:
    """Retained-state instrumentation filled in by the enumerators."""

    peak_frames: int = 0
    nodes: int = 0
    dead_ends: int = 0

    def frames(self, depth: int) -> None:
        if depth > self.peak_frames:
            self.peak_frames = depth


# ---------------------------------------------------------------------------
# graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on ``0..n-1`` stored as adjacency row masks."""

    n: int
    adj: tuple[int, ...]
    closed: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise MalformedInputError("adjacency has wrong number of rows")
        for u, row in enumerate(self.adj):
            if row >> u & 1:
                raise MalformedInputError(f"self-loop at {u}")
            if row >> self.n:
                raise MalformedInputError(f"row {u} names a vertex >= n")
            for v in iter_members(row):
                if not self.adj[v] >> u & 1:
                    raise MalformedInputError(f"asymmetric adjacency {u}-{v}")
        object.__setattr__(
            self, "closed", tuple(row | (1 << u) for u, row in enumerate(self.adj))
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise MalformedInputError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def vertices(self) -> VertexSet:
        return full(self.n)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u]) if u < v]

    def induced_edge_count(self, S: VertexSet) -> int:
        return sum(size(self.adj[u] & S) for u in iter_members(S)) // 2

    def complement(self) -> "Graph":
        everything = full(self.n)
        return Graph(self.n, tuple(everything & ~row & ~(1 << u) for u, row in enumerate(self.adj)))

    def to_matrix(self) -> list[list[bool]]:
        return [[self.adjacent(u, v) for v in range(self.n)] for u in range(self.n)]


# ---------------------------------------------------------------------------
# posets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Poset:
    """Intersection of ``d`` linear orders on ``0..n-1``.

    ``orders[i]`` lists the elements bottom-up in the i-th order.  ``rank``
    and the dense ``up``/``down`` masks are derived at construction:
    ``up[x]`` holds every ``y`` with ``x <= y`` (``x`` included).
    """

    orders: tuple[tuple[int, ...], ...]
    n: int = field(init=False)
    rank: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    up: tuple[int, ...] = field(init=False, repr=False, compare=False)
    down: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        orders = tuple(tuple(int(x) for x in o) for o in self.orders)
        if not orders:
            raise MalformedInputError("a poset needs at least one linear order")
        n = len(orders[0])
        for i, o in enumerate(orders):
            if sorted(o) != list(range(n)):
                raise MalformedInputError(f"order {i} is not a permutation of 0..{n - 1}")
        rank = []
        for o in orders:
            r = [0] * n
            for pos, x in enumerate(o):
                r[x] = pos
            rank.append(tuple(r))
        # above[i][x]: elements at or above x in order i
        up = [full(n)] * n
        for o in orders:
            above = 0
            for x in reversed(o):
                above |= 1 << x
                up[x] &= above
        down = [0] * n
        for x in range(n):
            for y in iter_members(up[x]):
                down[y] |= 1 << x
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rank", tuple(rank))
        object.__setattr__(self, "up", tuple(up))
        object.__setattr__(self, "down", tuple(down))

    @property
    def d(self) -> int:
        return len(self.orders)

    @property
    def elements(self) -> VertexSet:
        return full(self.n)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def less(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def dual(self) -> "Poset":
        """The upside-down poset (every order reversed)."""
        return Poset(tuple(tuple(reversed(o)) for o in self.orders))

    def leq_table(self) -> list[list[bool]]:
        return [[self.leq(x, y) for y in range(self.n)] for x in range(self.n)]


def poset_from_orders(orders: Sequence[Sequence[int]]) -> Poset:
    """Poset realized by ``orders`` (each a bottom-up permutation)."""
    return Poset(tuple(tuple(o) for o in orders))


def comparability_graph(P: Poset) -> Graph:
    return Graph(P.n, tuple((P.up[x] | P.down[x]) & ~(1 << x) for x in range(P.n)))


def incomparability_graph(P: Poset) -> Graph:
    everything = P.elements
    return Graph(P.n, tuple(everything & ~(P.up[x] | P.down[x]) for x in range(P.n)))


def chain(n: int) -> Poset:
    return Poset((tuple(range(n)),))


def antichain(n: int) -> Poset:
    return Poset((tuple(range(n)), tuple(reversed(range(n)))))


def standard_example(t: int) -> Poset:
    """The standard example: ``a_i = i`` and ``b_i = t + i`` with ``a_i < b_j`` iff ``i != j``.

    Order ``k`` lists the a's other than ``a_k``, then ``b_k``, ``a_k``, and the
    remaining b's.  For ``t == 1`` a second, reversed order is added, since a
    single linear order cannot realize two incomparable elements.
    """
    if t < 1:
        raise MalformedInputError("standard example needs t >= 1")
    orders = []
    for k in range(t):
        low = [i for i in range(t) if i != k]
        high = [t + j for j in range(t) if j != k]
        orders.append(low + [t + k, k] + high)
    if t == 1:
        orders.append([0, 1])
    P = poset_from_orders(orders)
    for i in range(t):
        for j in range(t):
            assert P.less(i, t + j) == (i != j)
            assert not P.leq(t + j, i)
            if i != j:
                assert not P.comparable(i, j) and not P.comparable(t + i, t + j)
    return P


def random_poset(n: int, d: int, seed: int) -> Poset:
    """Intersection of ``d`` uniformly random permutations; reproducible per seed."""
    if n < 1 or d < 1:
        raise MalformedInputError("random poset needs n >= 1 and d >= 1")
    rng = random.Random(seed)
    orders = []
    for _ in range(d):
        o = list(range(n))
        rng.shuffle(o)
        orders.append(o)
    return poset_from_orders(orders)


# ---------------------------------------------------------------------------
# order-theoretic queries
# ---------------------------------------------------------------------------

def up_set(P: Poset, S: VertexSet) -> VertexSet:
    out = 0
    for x in iter_members(S):
        out |= P.up[x]
    return out


def down_set(P: Poset, S: VertexSet) -> VertexSet:
    out = 0
    for x in iter_members(S):
        out |= P.down[x]
    return out


def min_elements(P: Poset, S: VertexSet) -> VertexSet:
    return vset(x for x in iter_members(S) if not (P.down[x] & S & ~(1 << x)))


def max_elements(P: Poset, S: VertexSet) -> VertexSet:
    return vset(x for x in iter_members(S) if not (P.up[x] & S & ~(1 << x)))


def is_antichain(P: Poset, S: VertexSet) -> bool:
    return all(not ((P.up[x] | P.down[x]) & S & ~(1 << x)) for x in iter_members(S))


def contains_st_suborder(P: Poset, t: int) -> Optional[tuple[int, ...]]:
    """Find ``(a_1..a_t, b_1..b_t)`` inducing the standard example of order ``t``.

    Exhaustive backtracking over pairs ``(a_i, b_i)`` of incomparable elements,
    with ``a_1 < a_2 < ...`` by index to skip relabelings.  Meant for small
    posets (n up to about a dozen).
    """
    if t < 1:
        raise MalformedInputError("t must be >= 1")
    n = P.n
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b and not P.comparable(a, b)]

    def consistent(chosen, a, b):
        for a2, b2 in chosen:
            if len({a, b, a2, b2}) < 4:
                return False
            if not (P.less(a, b2) and P.less(a2, b)):
                return False
            if P.comparable(a, a2) or P.comparable(b, b2):
                return False
        return True

    def search(chosen, start):
        if len(chosen) == t:
            return chosen
        for k in range(start, len(pairs)):
            a, b = pairs[k]
            if chosen and a <= chosen[-1][0]:
                continue
            if consistent(chosen, a, b):
                found = search(chosen + [(a, b)], k + 1)
                if found:
                    return found
        return None

    found = search([], 0)
    if found is None:
        return None
    return tuple(a for a, _ in found) + tuple(b for _, b in found)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def parse_poset(text: str) -> Poset:
    """Parse ``n d`` followed by ``d`` permutation lines; ``#`` lines are comments."""
    lines = _content_lines(text)
    if not lines:
        raise MalformedInputError("empty poset file")
    try:
        header = [int(tok) for tok in lines[0].split()]
        if len(header) != 2:
            raise ValueError
        n, d = header
        rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise MalformedInputError("poset file must contain integers only") from exc
    if n < 1 or d < 1:
        raise MalformedInputError("header needs n >= 1 and d >= 1")
    if len(rows) != d:
        raise MalformedInputError(f"expected {d} order lines, found {len(rows)}")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedInputError(f"order line {i + 1} has {len(row)} entries, expected {n}")
    return poset_from_orders(rows)


def format_poset(P: Poset) -> str:
    lines = [f"{P.n} {P.d}"] + [" ".join(map(str, o)) for o in P.orders]
    return "\n".join(lines) + "\n"
