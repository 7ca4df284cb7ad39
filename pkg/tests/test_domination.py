from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posetdom.core import (
    CollectingSink,
    ContractError,
    Graph,
    antichain,
    chain,
    comparability_graph,
    full,
    random_poset,
    standard_example,
    vset,
)
from posetdom.domination import (
    RedBlueInstance,
    brute_force_mds,
    brute_force_mis,
    brute_force_red_blue,
    check_width_bound,
    closed_neighborhood,
    dominates,
    enumerate_mis,
    greedy_reduce,
    is_irredundant,
    is_minimal_dominating,
    iter_mis,
    lex_smallest_mis,
    private_neighbors,
    width,
)

from conftest import complete, cycle, edgeless, graphs, path, posets, subsets


def naive_private(G: Graph, D: int, u: int) -> int:
    out = 0
    for v in range(G.n):
        if {x for x in range(G.n) if D >> x & 1 and (x == v or G.adjacent(x, v))} == {u}:
            out |= 1 << v
    return out


class TestNeighborhoods:
    def test_examples(self):
        assert closed_neighborhood(edgeless(4), vset([2])) == vset([2])
        assert closed_neighborhood(complete(4), vset([0])) == full(4)
        assert closed_neighborhood(cycle(4), vset([0])) == vset([0, 1, 3])

    def test_dominates(self):
        G = cycle(4)
        assert dominates(G, G.vertices, G.vertices)
        assert not dominates(edgeless(2), vset([0]), vset([1]))
        assert dominates(G, vset([0, 2]), G.vertices)


class TestPrivateNeighbors:
    def test_examples(self):
        assert private_neighbors(edgeless(3), vset([1]), 1) == vset([1])
        assert private_neighbors(complete(4), vset([0, 3]), 0) == 0
        assert private_neighbors(path(4), vset([0, 3]), 0) == vset([0, 1])

    def test_non_member(self):
        with pytest.raises(ContractError):
            private_neighbors(path(3), vset([0]), 2)

    @given(graphs(), st.data())
    def test_matches_definition(self, G, data):
        D = data.draw(st.integers(1, full(G.n)))
        for u in range(G.n):
            if D >> u & 1:
                assert private_neighbors(G, D, u) == naive_private(G, D, u)


class TestMinimality:
    def test_examples(self):
        assert is_minimal_dominating(edgeless(4), full(4))
        assert not is_irredundant(complete(3), full(3))
        C4 = cycle(4)
        assert private_neighbors(C4, vset([0, 1]), 0) == vset([3])
        assert private_neighbors(C4, vset([0, 1]), 1) == vset([2])
        assert is_minimal_dominating(C4, vset([0, 1]))

    @given(graphs())
    def test_irredundant_dominating_iff_minimal(self, G):
        oracle = brute_force_mds(G)
        for D in range(1 << G.n):
            assert is_minimal_dominating(G, D) == (D in oracle)


class TestGreedyReduce:
    def test_minimal_unchanged(self):
        assert greedy_reduce(cycle(4), vset([0, 1])) == vset([0, 1])

    def test_triangle_keeps_last(self):
        # 0 is redundant and goes first, then 1; 2 alone is needed
        assert greedy_reduce(complete(3), full(3)) == vset([2])

    def test_path(self):
        G = path(3)
        out = greedy_reduce(G, full(3))
        assert out in brute_force_mds(G)
        assert out & ~full(3) == 0

    def test_needs_domination(self):
        with pytest.raises(ContractError):
            greedy_reduce(path(3), vset([0]))

    @given(graphs(), st.data())
    def test_matches_repeated_rescan(self, G, data):
        D = data.draw(st.integers(0, full(G.n)))
        D |= full(G.n) & ~closed_neighborhood(G, D)
        current = D
        # reference: restart from the smallest index after every removal
        changed = True
        while changed:
            changed = False
            for z in range(G.n):
                if current >> z & 1 and dominates(G, current & ~(1 << z), G.vertices):
                    current &= ~(1 << z)
                    changed = True
                    break
        out = greedy_reduce(G, D)
        assert out == current
        assert is_minimal_dominating(G, out)
        assert greedy_reduce(G, out) == out

    @given(graphs(), st.data())
    def test_target_version(self, G, data):
        target = data.draw(st.integers(0, full(G.n)))
        out = greedy_reduce(G, G.vertices, target)
        assert dominates(G, out, target)
        for x in range(G.n):
            if out >> x & 1:
                assert not dominates(G, out & ~(1 << x), target)


class TestMIS:
    def test_lex_smallest(self):
        C4 = cycle(4)
        assert lex_smallest_mis(C4, 0) == 0
        assert lex_smallest_mis(C4, vset([0, 2])) == vset([0, 2])
        assert lex_smallest_mis(C4, full(4)) == vset([0, 2])
        assert lex_smallest_mis(C4, full(4)) in brute_force_mis(C4)

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_enumerate_examples(self, n):
        sink = CollectingSink()
        enumerate_mis(complete(n), sink)
        assert sorted(sink.solutions) == [1 << i for i in range(n)]
        sink = CollectingSink()
        enumerate_mis(edgeless(n), sink)
        assert sink.solutions == [full(n)]

    def test_cycle(self):
        assert sorted(iter_mis(cycle(4))) == [vset([0, 2]), vset([1, 3])]

    @settings(max_examples=150)
    @given(graphs(max_n=8))
    def test_against_brute_force(self, G):
        got = list(iter_mis(G))
        assert len(got) == len(set(got))
        assert set(got) == brute_force_mis(G)

    @given(graphs())
    def test_mis_are_minimal_dominating(self, G):
        mds = brute_force_mds(G)
        assert all(S in mds for S in iter_mis(G))


class TestOracles:
    def test_triangle(self):
        assert brute_force_mds(complete(3)) == {1, 2, 4}

    def test_red_blue_no_blue(self):
        assert brute_force_red_blue(path(4), vset([0, 1]), 0) == {0}

    def test_standard_example_two(self):
        # a1=0, a2=1, b1=2, b2=3; edges a1-b2 and a2-b1
        G = comparability_graph(standard_example(2))
        assert brute_force_mds(G) == {vset(s) for s in ([0, 1], [0, 2], [3, 1], [3, 2])}

    @given(graphs(max_n=6))
    def test_mds_by_combinations(self, G):
        expected = set()
        for k in range(G.n + 1):
            for D in combinations(range(G.n), k):
                m = vset(D)
                if dominates(G, m, G.vertices) and all(
                    not dominates(G, m & ~(1 << x), G.vertices) for x in D
                ):
                    expected.add(m)
        assert brute_force_mds(G) == expected

    def test_red_blue_instance_disjoint(self):
        with pytest.raises(ContractError):
            RedBlueInstance(path(3), vset([0, 1]), vset([1, 2]))


class TestWidthBound:
    def test_chain(self):
        P = chain(5)
        assert width(P) == 1
        assert all(check_width_bound(P, D) for D in brute_force_mds(comparability_graph(P)))

    def test_antichain(self):
        P = antichain(5)
        assert width(P) == 5
        assert check_width_bound(P, full(5))

    @pytest.mark.parametrize("seed", range(5))
    def test_random(self, seed):
        P = random_poset(8, 2, seed)
        alpha = width(P)
        assert all(check_width_bound(P, D, alpha) for D in brute_force_mds(comparability_graph(P)))

    @given(posets(max_n=7))
    def test_width_is_largest_antichain(self, P):
        best = 0
        for S in subsets(P.elements):
            if all(not P.comparable(x, y) for x in range(P.n) for y in range(P.n) if x != y and S >> x & 1 and S >> y & 1):
                best = max(best, bin(S).count("1"))
        assert width(P) == best
