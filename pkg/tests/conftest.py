from itertools import permutations

from hypothesis import strategies as st

from posetdom.core import Graph, iter_members, poset_from_orders


@st.composite
def posets(draw, max_n: int = 7, max_d: int = 3, min_n: int = 1):
    n = draw(st.integers(min_n, max_n))
    d = draw(st.integers(1, max_d))
    orders = [draw(st.permutations(range(n))) for _ in range(d)]
    return poset_from_orders(orders)


@st.composite
def graphs(draw, max_n: int = 7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def two_order_sweep(max_n: int):
    """Every poset with two orders up to relabelling: first order fixed to the identity."""
    for n in range(1, max_n + 1):
        for second in permutations(range(n)):
            yield poset_from_orders([list(range(n)), list(second)])


def subsets(mask: int):
    """All submasks of ``mask``, including 0 and ``mask``."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def edgeless(n: int) -> Graph:
    return Graph.from_edges(n, [])


__all__ = ["posets", "graphs", "two_order_sweep", "subsets", "path", "cycle", "complete", "edgeless", "iter_members"]


def flip_structure_failures(P) -> list[str]:
    """Check the flipping invariants for every valid (D, u, v) of the comparability graph of ``P``."""
    from posetdom.core import comparability_graph
    from posetdom.domination import brute_force_mds, brute_force_red_blue, is_minimal_dominating
    from posetdom.flipping import compute_flip_sets, flip, flip_pairs, iter_children_candidates

    G = comparability_graph(P)
    failures = []

    def induced(S):
        return {e for e in G.edges() if S >> e[0] & 1 and S >> e[1] & 1}

    for D in sorted(brute_force_mds(G)):
        if not induced(D):
            continue
        for u, v in flip_pairs(G, D):
            f = flip(G, D, u, v)
            Ds = f.parent
            tag = f"D={D:#x} u={u} v={v}"
            if not is_minimal_dominating(G, Ds):
                failures.append(f"{tag}: parent not minimal dominating")
            if not induced(Ds) < induced(D):
                failures.append(f"{tag}: induced edges did not shrink")
            if G.adj[v] & Ds or not Ds >> v & 1:
                failures.append(f"{tag}: v not isolated in the parent")
            cands = list(iter_children_candidates(P, G, Ds, u, v))
            if D not in cands:
                failures.append(f"{tag}: child missing from candidates")
            if len(cands) != len(set(cands)):
                failures.append(f"{tag}: repeated candidates")
            if not all(is_minimal_dominating(G, C) for C in cands):
                failures.append(f"{tag}: non-minimal candidate")
            fs = compute_flip_sets(P, G, Ds, u, v)
            red = (fs.R1 | f.removed) & ~(f.added | 1 << v)
            if red not in brute_force_red_blue(G, fs.R, fs.B):
                failures.append(f"{tag}: red set is not minimal red-blue dominating")
    return failures


def upward_extension_oracle(P, G, I) -> bool:
    """Some X inside the upward set of ``I`` makes ``I | X`` minimal dominating, by scanning every X."""
    from posetdom.domination import is_minimal_dominating

    if I:
        tops = [max(o.index(x) for x in range(P.n) if I >> x & 1) for o in P.orders]
        up = 0
        for x in range(P.n):
            if not I >> x & 1 and any(o.index(x) > tops[i] for i, o in enumerate(P.orders)):
                up |= 1 << x
    else:
        up = (1 << P.n) - 1
    return any(is_minimal_dominating(G, I | X) for X in subsets(up))


def irredundant_sets(G, min_size: int = 0):
    from posetdom.domination import is_irredundant

    for I in range(1 << G.n):
        if bin(I).count("1") >= min_size and is_irredundant(G, I):
            yield I


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
