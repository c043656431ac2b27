import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from abcindex import graph as gc
from abcindex.graph import (
    CapacityError,
    GraphError,
    chromatic_number,
    complete,
    cycle,
    disjoint_union,
    edge_connectivity,
    empty,
    from_edges,
    from_mask,
    independence_number,
    is_connected,
    is_isomorphic,
    join,
    path,
    pendant_count,
    star,
)

from conftest import brute_chromatic, brute_independence, to_nx


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    return from_mask(n, draw(st.integers(0, (1 << m) - 1)))


@st.composite
def graph_and_perm(draw, max_n=7):
    g = draw(graphs(max_n=max_n))
    return g, draw(st.permutations(range(g.n)))


class TestConstruction:
    def test_path3(self):
        g = from_edges(3, [(0, 1), (1, 2)])
        assert g.degrees() == [1, 2, 1]

    def test_single_vertex(self):
        g = from_edges(1, [])
        assert g.n == 1 and g.num_edges == 0

    def test_k4_from_all_pairs(self):
        g = from_edges(4, itertools.combinations(range(4), 2))
        assert g == complete(4)
        assert g.degrees() == [3, 3, 3, 3]

    def test_duplicates_collapse(self):
        assert from_edges(3, [(0, 1), (1, 0), (0, 1)]).num_edges == 1

    @pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
    def test_bad_edges(self, edges):
        with pytest.raises(GraphError):
            from_edges(3, edges)

    def test_asymmetric_rows_rejected(self):
        with pytest.raises(GraphError):
            gc.Graph(2, (0b10, 0))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            join(complete(20), empty(13))
        with pytest.raises(CapacityError):
            disjoint_union(complete(30), empty(3))
        assert join(complete(16), empty(16)).n == 32


class TestStandardGraphs:
    def test_complete4(self):
        assert complete(4).num_edges == 6

    def test_star5(self):
        assert star(5).degrees() == [4, 1, 1, 1, 1]

    def test_path2_is_k2_is_s2(self):
        assert path(2) == complete(2) == star(2)


class TestJoinUnion:
    def test_join_empties_is_complete_bipartite(self):
        g = join(empty(2), empty(3))
        assert nx.is_isomorphic(to_nx(g), nx.complete_bipartite_graph(2, 3))

    def test_cone_over_k3(self):
        assert join(empty(1), complete(3)) == complete(4)

    def test_edgeconn_extremal_degrees(self):
        g = join(complete(2), disjoint_union(complete(1), complete(3)))
        assert g.degrees() == [5, 5, 2, 4, 4, 4]

    @given(graphs(max_n=5), graphs(max_n=5))
    def test_join_counts(self, g, h):
        j = join(g, h)
        assert j.n == g.n + h.n
        assert j.num_edges == g.num_edges + h.num_edges + g.n * h.n

    def test_union_examples(self):
        assert disjoint_union(complete(1), complete(1)) == empty(2)
        u = disjoint_union(complete(1), complete(4))
        assert (u.n, u.num_edges, is_connected(u)) == (5, 6, False)
        m = disjoint_union(path(2), path(2))
        assert m.degrees() == [1, 1, 1, 1] and m.num_edges == 2


class TestInvariants:
    def test_connected_examples(self):
        assert is_connected(path(5))
        assert not is_connected(disjoint_union(complete(1), complete(1)))
        assert is_connected(join(empty(3), empty(4)))
        assert is_connected(complete(1))

    def test_independence_examples(self, c5):
        assert independence_number(complete(5)) == 1
        assert independence_number(star(6)) == 5
        assert independence_number(c5) == 2

    def test_chromatic_examples(self, c5):
        assert chromatic_number(complete(4)) == 4
        assert chromatic_number(c5) == 3
        assert chromatic_number(join(empty(3), empty(3))) == 2

    def test_edge_connectivity_examples(self):
        assert edge_connectivity(complete(5)) == 4
        assert edge_connectivity(cycle(6)) == 2
        assert edge_connectivity(star(5)) == 1
        assert edge_connectivity(disjoint_union(complete(2), complete(2))) == 0

    def test_pendant_examples(self):
        assert pendant_count(star(7)) == 6
        assert pendant_count(complete(4)) == 0
        assert pendant_count(path(4)) == 2

    @pytest.mark.parametrize("n", range(2, 9))
    def test_complete_graph_invariants(self, n):
        k = complete(n)
        assert independence_number(k) == 1
        assert chromatic_number(k) == n
        assert edge_connectivity(k) == n - 1

    @given(graphs())
    def test_against_oracles(self, g):
        h = to_nx(g)
        assert is_connected(g) == nx.is_connected(h)
        assert independence_number(g) == brute_independence(g)
        assert chromatic_number(g) == brute_chromatic(g)
        if g.n >= 2 and nx.is_connected(h):
            assert edge_connectivity(g) == nx.edge_connectivity(h)

    @given(graphs(min_n=2))
    def test_chromatic_bounds(self, g):
        chi = chromatic_number(g)
        assert chi <= g.n
        bipartite = g.num_edges > 0 and nx.is_bipartite(to_nx(g))
        assert (chi == 2) == bipartite

    @given(graphs(min_n=2))
    def test_edge_connectivity_below_min_degree(self, g):
        assert edge_connectivity(g) <= g.min_degree()

    @given(st.integers(1, 6), st.integers(1, 6))
    def test_join_of_empties(self, a, b):
        g = join(empty(a), empty(b))
        assert independence_number(g) == max(a, b)
        assert chromatic_number(g) == 2

    @given(graph_and_perm())
    def test_invariants_permutation_invariant(self, gp):
        g, perm = gp
        h = g.relabel(perm)
        for fn in (independence_number, chromatic_number, edge_connectivity, pendant_count):
            assert fn(g) == fn(h)


class TestIsomorphism:
    def test_c5_relabelled(self, c5):
        for perm in itertools.permutations(range(5)):
            assert is_isomorphic(c5, c5.relabel(perm))

    def test_star_vs_path(self):
        assert not is_isomorphic(star(4), path(4))

    def test_join_vs_manual(self):
        manual = from_edges(5, [(u, v) for u in range(2) for v in range(2, 5)] + [(2, 3), (2, 4), (3, 4)])
        assert is_isomorphic(join(empty(2), complete(3)), manual)
        assert nx.is_isomorphic(to_nx(join(empty(2), complete(3))), to_nx(manual))

    def test_same_degrees_different_graphs(self):
        # C6 and two triangles are both 2-regular on 6 vertices
        assert not is_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3)))

    @given(graph_and_perm())
    def test_relabel_isomorphic(self, gp):
        g, perm = gp
        assert is_isomorphic(g, g.relabel(perm))

    @given(graphs(min_n=4, max_n=7), graphs(min_n=4, max_n=7))
    def test_against_networkx(self, g, h):
        assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))

    def test_equivalence_relation_on_sample(self):
        sample = [from_mask(5, m) for m in range(0, 1 << 10, 7)]
        for a in sample[:40]:
            assert is_isomorphic(a, a)
            for b in sample[:40]:
                assert is_isomorphic(a, b) == is_isomorphic(b, a)
                if is_isomorphic(a, b):
                    for c in sample[:40]:
                        if is_isomorphic(b, c):
                            assert is_isomorphic(a, c)


@given(graphs())
def test_mask_round_trip(g):
    assert from_mask(g.n, g.edge_mask()) == g
