import random
from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psiarr.enumeration import corpus
from psiarr.psi_graph import (
    Chordal,
    NotChordal,
    PsiGraph,
    certificate_for_order,
    chordality,
    connected_partitions,
    elimination_stall,
    nonfree_edge_witness,
    psi_elimination_order,
    set_partitions,
    simplicial_vertices,
    verify_certificate,
)

from strategies import psi_graphs
from oracles import (
    has_induced_long_cycle,
    is_induced_chordless_cycle,
    random_chordal_graph,
    simplicial_by_inspection,
    valid_orders,
)


class TestPsiGraph:
    def test_build_normalizes(self):
        g = PsiGraph.build(3, [(1, 0), (0, 1), [2, 1]], {2: ["1/2", 3, "6/2"]})
        assert g.edges == {(0, 1), (1, 2)}
        assert g.psi[2] == {Fraction(1, 2), Fraction(3)}
        assert g.names == ("v1", "v2", "v3")

    @pytest.mark.parametrize(
        "edges,psi",
        [([(0, 0)], None), ([(0, 3)], None), ([], {5: [1]}), ([], {0: [0.5]})],
    )
    def test_build_rejects(self, edges, psi):
        with pytest.raises((ValueError, TypeError)):
            PsiGraph.build(3, edges, psi)

    def test_delete_relabels(self, p3psi):
        g = p3psi.delete(0)
        assert g.n == 2
        assert g.edges == {(0, 1)}
        assert g.psi == (frozenset({Fraction(1)}), frozenset())
        assert g.names == ("v2", "v3")


class TestSimplicial:
    def test_triangle(self, k3):
        assert simplicial_vertices(k3) == {0, 1, 2}

    def test_four_cycle(self, c4):
        assert simplicial_by_inspection(4, c4.edges) == set()
        assert simplicial_vertices(c4) == set()

    def test_path(self):
        g = PsiGraph.build(3, [(0, 1), (1, 2)])
        assert simplicial_by_inspection(3, g.edges) == {0, 2}
        assert simplicial_vertices(g) == {0, 2}

    @given(psi_graphs(max_n=7))
    def test_matches_inspection(self, g):
        assert simplicial_vertices(g) == simplicial_by_inspection(g.n, g.edges)
        assert {v for v in range(g.n) if g.degree(v) <= 1} <= simplicial_vertices(g)


class TestChordality:
    def test_triangle(self, k3):
        assert isinstance(chordality(k3), Chordal)

    def test_four_cycle_witness(self, c4):
        verdict = chordality(c4)
        assert isinstance(verdict, NotChordal)
        assert sorted(verdict.cycle) == [0, 1, 2, 3]
        assert is_induced_chordless_cycle(4, c4.edges, verdict.cycle)

    def test_path_order(self):
        g = PsiGraph.build(3, [(0, 1), (1, 2)])
        verdict = chordality(g)
        assert verdict
        assert verify_certificate(g, certificate_for_order(g, verdict.order))

    def test_empty_graph(self):
        assert chordality(PsiGraph.build(0)) == Chordal(())

    @settings(max_examples=300)
    @given(psi_graphs(max_n=7, pool=()))
    def test_agrees_with_brute_force_and_networkx(self, g):
        verdict = chordality(g)
        expected = not has_induced_long_cycle(g.n, g.edges)
        assert bool(verdict) == expected
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from(g.edges)
        assert bool(verdict) == nx.is_chordal(nxg)
        if verdict:
            # each vertex's earlier neighbours form a clique
            assert verify_certificate(g, certificate_for_order(g, verdict.order))
        else:
            assert is_induced_chordless_cycle(g.n, g.edges, verdict.cycle)

    @given(psi_graphs(max_n=7, pool=()))
    def test_hereditary(self, g):
        if chordality(g):
            for v in range(g.n):
                assert chordality(g.delete(v))


def test_dirac_two_nonadjacent_simplicial():
    rng = random.Random(20240611)
    checked = 0
    while checked < 200:
        n = rng.randint(2, 8)
        g = PsiGraph.build(n, random_chordal_graph(rng, n))
        if len(g.edges) == n * (n - 1) // 2:
            continue
        assert chordality(g)
        simp = simplicial_vertices(g)
        assert any(not g.adjacent(a, b) for a, b in combinations(simp, 2))
        checked += 1


class TestEliminationOrder:
    def test_p3psi(self, p3psi):
        cert = psi_elimination_order(p3psi)
        assert cert.order == (0, 1, 2)
        assert verify_certificate(p3psi, cert)
        assert [s.earlier_neighbors for s in cert.steps] == [set(), {0}, {1}]
        assert all(ok for s in cert.steps for _, ok in s.psi_included)

    def test_split_edge(self, split_edge):
        assert simplicial_vertices(split_edge) == {0, 1}
        assert psi_elimination_order(split_edge) is None
        assert elimination_stall(split_edge) == {0, 1}

    @given(psi_graphs(max_n=6, pool=()))
    def test_equal_labels_chordal(self, g):
        g = PsiGraph.build(g.n, g.edges, [[1, 2]] * g.n)
        assert (psi_elimination_order(g) is not None) == bool(chordality(g))

    def test_complete_against_brute_force_orders(self):
        for g in corpus(4, [1, 2], 2, connected=False):
            cert = psi_elimination_order(g)
            brute = next(valid_orders(g), None)
            assert (cert is None) == (brute is None), g
            if cert is not None:
                assert verify_certificate(g, cert)

    @given(psi_graphs(max_n=6))
    def test_certificate_soundness(self, g):
        cert = psi_elimination_order(g)
        if cert is not None:
            assert verify_certificate(g, cert)
            assert cert.order in set(valid_orders(g)) if g.n <= 5 else True

    def test_verify_rejects_bad_orders(self, p3psi):
        # v3 before v2 puts {1} after {} along the edge v2 v3
        assert not verify_certificate(p3psi, certificate_for_order(p3psi, (0, 2, 1)))
        assert not verify_certificate(p3psi, certificate_for_order(p3psi, (2, 1, 0)))


class TestNonfreeWitness:
    def test_split_edge(self, split_edge):
        assert nonfree_edge_witness(split_edge) == (0, 1)

    def test_p3psi(self, p3psi):
        assert nonfree_edge_witness(p3psi) is None

    @given(psi_graphs(pool=()))
    def test_empty_labels(self, g):
        assert nonfree_edge_witness(g) is None

    @given(psi_graphs(max_n=5))
    def test_witness_excludes_certificate(self, g):
        if nonfree_edge_witness(g) is not None:
            assert psi_elimination_order(g) is None


class TestPartitions:
    @pytest.mark.parametrize("n,bell", [(0, 1), (1, 1), (3, 5), (5, 52)])
    def test_bell_numbers(self, n, bell):
        parts = list(set_partitions(range(n)))
        assert len(parts) == bell
        assert len({frozenset(p) for p in parts}) == bell

    def test_connected_partitions_path(self):
        g = PsiGraph.build(3, [(0, 1), (1, 2)])
        # {0,2} is disconnected, so 5 - 1 partitions remain
        assert len(connected_partitions(g)) == 4
