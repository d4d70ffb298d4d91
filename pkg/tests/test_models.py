"""
Tests for the core graph types.
"""

import networkx as nx
import numpy as np
import pytest

from extraconn.errors import BudgetExceeded
from extraconn.families import gen_named
from extraconn.models import (
    Graph,
    VertexSet,
    are_isomorphic,
    build_graph,
    min_degree,
    remove_and_split,
    set_neighborhood,
)
from extraconn.services.mycielskian import mycielskian


def vs(n, *members):
    return VertexSet.from_iterable(n, members)


class TestBuildGraph:
    """Tests for graph construction and validation."""

    def test_path_degree_sequence(self):
        """A 4-vertex path has degrees 1, 2, 2, 1 by id."""
        G = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        assert G.degree_sequence() == [1, 2, 2, 1]
        assert G.m == 3

    def test_cycle_counts(self):
        """C5 has five vertices and five edges."""
        G = build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert (G.n, G.m) == (5, 5)

    def test_self_loop_rejected(self):
        """A self-loop is invalid input."""
        with pytest.raises(ValueError, match="Self-loop"):
            build_graph(3, [(0, 0)])

    def test_duplicate_edge_rejected(self):
        """The same pair in either orientation is a duplicate."""
        with pytest.raises(ValueError, match="Duplicate"):
            build_graph(3, [(0, 1), (1, 0)])

    def test_out_of_range_rejected(self):
        """Edge ids must lie in 0..n-1."""
        with pytest.raises(ValueError, match="out of range"):
            build_graph(3, [(0, 3)])

    def test_edge_order_irrelevant(self):
        """Permuting the edge list gives an equal graph."""
        a = build_graph(4, [(0, 1), (2, 3), (1, 2)])
        b = build_graph(4, [(3, 2), (1, 0), (2, 1)])
        assert a == b

    def test_asymmetric_rows_rejected(self):
        """A hand-built adjacency tuple must be symmetric."""
        with pytest.raises(ValueError, match="Asymmetric"):
            Graph(2, (0b10, 0b00))

    def test_edges_are_lexicographic(self):
        """edges() lists u < v pairs in lexicographic order."""
        G = build_graph(4, [(2, 3), (0, 2), (0, 1)])
        assert G.edges() == [(0, 1), (0, 2), (2, 3)]

    def test_degrees_array(self, petersen):
        """degrees() agrees with the degree sequence."""
        assert np.array_equal(petersen.degrees(), np.full(10, 3))


class TestVertexSet:
    """Tests for bitmask vertex sets."""

    def test_members_sorted(self):
        """Members come back in increasing order."""
        assert vs(6, 4, 0, 3).to_list() == [0, 3, 4]

    def test_set_algebra(self):
        """Union, intersection, difference and complement."""
        a, b = vs(5, 0, 1), vs(5, 1, 2)
        assert (a | b).to_list() == [0, 1, 2]
        assert (a & b).to_list() == [1]
        assert (a - b).to_list() == [0]
        assert a.complement().to_list() == [2, 3, 4]

    def test_universe_mismatch(self):
        """Sets over different universes cannot be combined."""
        with pytest.raises(ValueError, match="different universes"):
            vs(4, 0) | vs(5, 0)

    def test_out_of_range_member(self):
        with pytest.raises(ValueError):
            vs(3, 3)

    def test_sort_key_is_lexicographic(self):
        """sort_key orders sets by their sorted member lists."""
        sets = [vs(6, 1, 2), vs(6, 0, 5), vs(6, 0, 3)]
        assert [s.to_list() for s in sorted(sets, key=VertexSet.sort_key)] == [
            [0, 3],
            [0, 5],
            [1, 2],
        ]


class TestDegreeAndNeighborhood:
    """Tests for min_degree and set_neighborhood."""

    def test_min_degree(self):
        """δ(P4) = 1, δ(K4) = 3, δ(μ(P4)) = 2."""
        p4 = gen_named("path:4")
        assert min_degree(p4) == 1
        assert min_degree(gen_named("complete:4")) == 3
        assert min_degree(mycielskian(p4)[0]) == 2

    def test_min_degree_empty_graph(self):
        with pytest.raises(ValueError):
            min_degree(build_graph(0, []))

    def test_neighborhood_single_vertex(self):
        """N({0}) in C5 is {1, 4}."""
        assert set_neighborhood(gen_named("cycle:5"), vs(5, 0)).to_list() == [1, 4]

    def test_neighborhood_of_edge(self, c6):
        """N({1, 2}) in C6 is {0, 3}."""
        assert set_neighborhood(c6, vs(6, 1, 2)).to_list() == [0, 3]

    def test_neighborhood_of_everything(self, k4):
        """N(V) is empty."""
        assert not set_neighborhood(k4, k4.vertices())


class TestRemoveAndSplit:
    """Tests for component splitting."""

    def test_cycle_split(self, c6):
        """C6 - {0, 3} splits into {1, 2} and {4, 5}."""
        parts = remove_and_split(c6, vs(6, 0, 3))
        assert [p.to_list() for p in parts] == [[1, 2], [4, 5]]

    def test_path_split(self, p5):
        """P5 - {2} splits into {0, 1} and {3, 4}."""
        parts = remove_and_split(p5, vs(5, 2))
        assert [p.to_list() for p in parts] == [[0, 1], [3, 4]]

    def test_complete_graph_stays_whole(self, k4):
        """K4 - {0} is one component."""
        parts = remove_and_split(k4, vs(4, 0))
        assert [p.to_list() for p in parts] == [[1, 2, 3]]

    def test_remove_everything(self, k4):
        """Removing V leaves no components."""
        assert remove_and_split(k4, k4.vertices()) == []

    def test_components_partition_the_rest(self, random_graphs):
        """Components are disjoint, cover V - S and agree with networkx."""
        for seed, G in random_graphs[:60]:
            S = VertexSet(G.n, seed % (1 << G.n))
            parts = remove_and_split(G, S)
            union = 0
            for part in parts:
                assert union & part.mask == 0
                union |= part.mask
            assert union == G.full_mask & ~S.mask
            nxG = G.to_networkx()
            nxG.remove_nodes_from(S.members)
            expected = sorted(sorted(c) for c in nx.connected_components(nxG))
            assert [p.to_list() for p in parts] == expected


class TestIsomorphism:
    """Tests for the small-graph isomorphism check."""

    def test_c4_is_k22(self):
        assert are_isomorphic(gen_named("cycle:4"), gen_named("complete_bipartite:2,2"))

    def test_c5_is_not_p5(self, p5):
        assert not are_isomorphic(gen_named("cycle:5"), p5)

    def test_relabelled_graph(self, c6):
        """A permuted copy is isomorphic to the original."""
        perm = [3, 5, 0, 1, 4, 2]
        H = build_graph(6, [(perm[u], perm[v]) for u, v in c6.edges()])
        assert are_isomorphic(c6, H)

    def test_budget(self):
        """Orders above the bound are refused."""
        big = gen_named("cycle:13")
        with pytest.raises(BudgetExceeded):
            are_isomorphic(big, big)


class TestNetworkxConversion:
    def test_round_trip(self, petersen):
        """to_networkx / from_networkx preserve the labelled graph."""
        nxG = petersen.to_networkx()
        assert nxG.number_of_edges() == 15
        assert Graph.from_networkx(nxG) == petersen
