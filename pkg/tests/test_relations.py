"""Tests for the Θ and τ relations and their closure."""

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import fibcube.relations as relations
from fibcube.config import Config
from fibcube.errors import DisconnectedGraphError, GraphTooLargeError, TrivialGraphError, UnlabeledGraphError
from fibcube.graph import (
    Edge,
    Graph,
    all_pairs_distances,
    build_cube,
    cartesian_product,
    complete_graph,
    cycle_graph,
    fibonacci_cube,
    path_graph,
    star_graph,
)
from fibcube.relations import (
    Violation,
    coordinate_theta_suite,
    format_violations,
    is_prime,
    lemma_2_1_suite,
    sigma_classes,
    tau_pairs,
    tau_test,
    tau_witness_suite,
    theta_matrix,
    theta_test,
    tilde_relation,
)
from fibcube.words import CubeParams, Family

from strategies import PROPERTY_SETTINGS, connected_graphs


class TestTheta:
    def test_square(self, c4):
        # cycle 0-1-2-3-0: opposite edges are related, adjacent ones are not
        D = all_pairs_distances(c4)
        assert theta_test(c4, D, Edge(0, 1), Edge(2, 3))
        assert not theta_test(c4, D, Edge(0, 1), Edge(1, 2))
        assert theta_test(c4, D, Edge(0, 1), Edge(0, 1))

    @PROPERTY_SETTINGS
    @given(G=connected_graphs())
    def test_matrix_matches_pairwise_test(self, G):
        D = all_pairs_distances(G)
        theta = theta_matrix(G, D)
        assert theta.shape == (G.edge_count, G.edge_count)
        assert np.array_equal(theta, theta.T)
        assert theta.diagonal().all()
        for (x, e), (y, f) in itertools.product(enumerate(G.edges), repeat=2):
            assert theta[x, y] == theta_test(G, D, e, f)

    def test_blocked_evaluation(self, monkeypatch, q3):
        D = all_pairs_distances(q3)
        expected = theta_matrix(q3, D)
        monkeypatch.setattr(relations, "_THETA_BLOCK_CELLS", 12)
        assert np.array_equal(theta_matrix(q3, D), expected)

    def test_disconnected(self):
        G = Graph.from_edges(4, [(0, 1), (2, 3)])
        D = all_pairs_distances(G)
        with pytest.raises(DisconnectedGraphError, match="Θ undefined on disconnected graph"):
            theta_matrix(G, D)
        with pytest.raises(DisconnectedGraphError):
            theta_test(G, D, Edge(0, 1), Edge(2, 3))
        with pytest.raises(DisconnectedGraphError):
            sigma_classes(G)

    def test_size_limit(self, monkeypatch):
        monkeypatch.setattr(Config, "THETA_VERTEX_LIMIT", 4)
        with pytest.raises(GraphTooLargeError):
            sigma_classes(path_graph(5))


class TestTau:
    def test_path(self):
        P3 = path_graph(3)
        assert tau_test(P3, Edge(0, 1), Edge(1, 2))
        assert list(tau_pairs(P3)) == [(0, 1)]

    def test_square_has_no_tau(self, c4):
        assert not tau_test(c4, Edge(0, 1), Edge(1, 2))
        assert list(tau_pairs(c4)) == []

    def test_requires_one_shared_endpoint(self):
        P4 = path_graph(4)
        assert not tau_test(P4, Edge(0, 1), Edge(2, 3))
        assert not tau_test(P4, Edge(0, 1), Edge(0, 1))

    @PROPERTY_SETTINGS
    @given(G=connected_graphs())
    def test_pairs_match_pairwise_test(self, G):
        found = {frozenset(pair) for pair in tau_pairs(G)}
        expected = {
            frozenset((x, y))
            for (x, e), (y, f) in itertools.combinations(enumerate(G.edges), 2)
            if tau_test(G, e, f)
        }
        assert found == expected


class TestClosure:
    def test_hypercube_classes(self, q3):
        sigma = sigma_classes(q3)
        assert sigma.class_count == 3
        assert all(len(members) == 4 for members in sigma.classes)
        for members in sigma.classes:
            # every edge of a class flips the same coordinate
            flipped = {
                frozenset(q3.label(u).ones()) ^ frozenset(q3.label(v).ones())
                for u, v in (q3.edges[k] for k in members)
            }
            assert len(flipped) == 1
        assert sigma.class_id(q3.edges[0]) == 0

    @pytest.mark.parametrize(
        "G, expected",
        [
            (path_graph(3), True),
            (cycle_graph(5), True),
            (complete_graph(3), True),
            (star_graph(4), True),
            (fibonacci_cube(4), True),
            (cycle_graph(4), False),
            (cartesian_product(path_graph(3), cycle_graph(5)), False),
        ],
    )
    def test_is_prime(self, G, expected):
        assert is_prime(G) is expected

    def test_trivial_graph(self):
        with pytest.raises(TrivialGraphError):
            is_prime(Graph.from_edges(1, []))

    @PROPERTY_SETTINGS
    @given(G=connected_graphs(max_vertices=5), H=connected_graphs(max_vertices=5))
    def test_products_are_composite(self, G, H):
        assert sigma_classes(cartesian_product(G, H)).class_count >= 2

    @pytest.mark.parametrize(
        "G, H",
        itertools.combinations_with_replacement(
            [path_graph(3), cycle_graph(5), star_graph(4), fibonacci_cube(4), complete_graph(3)], 2
        ),
    )
    def test_prime_pair_classes_are_product_colors(self, G, H):
        product = cartesian_product(G, H)
        sigma = sigma_classes(product)
        assert sigma.class_count == 2
        matching = set(zip(sigma.class_of, product.edge_colors))
        # one class per color, up to renaming
        assert len(matching) == 2
        assert {c for c, _ in matching} == {0, 1}
        assert {color for _, color in matching} == {0, 1}

    @PROPERTY_SETTINGS
    @given(G=connected_graphs(max_vertices=5), H=connected_graphs(max_vertices=5))
    def test_same_projection_edges_are_theta_related(self, G, H):
        assert lemma_2_1_suite(G, H) == []


class TestCubeSuites:
    @PROPERTY_SETTINGS
    @given(p=st.integers(1, 3), r=st.integers(1, 3), n=st.integers(1, 6))
    def test_coordinate_classes_are_theta_related(self, p, r, n):
        assert coordinate_theta_suite(build_cube(CubeParams(Family.O, p, r, n))) == []

    @pytest.mark.parametrize("p, r, n", [(2, 1, 4), (2, 2, 5), (3, 2, 6), (3, 3, 4)])
    def test_tau_witnesses(self, p, r, n):
        G = build_cube(CubeParams(Family.O, p, r, n))
        assert tau_witness_suite(G) == []
        assert tilde_relation(G).is_total

    def test_tilde_links_neighbouring_coordinates(self):
        relation = tilde_relation(build_cube(CubeParams(Family.O, 2, 2, 5)))
        assert relation.pairs >= {(i, i + 1) for i in range(1, 5)}
        assert relation.classes == ((1, 2, 3, 4, 5),)

    def test_witness_fails_on_hypercube(self, q3):
        violations = tau_witness_suite(q3)
        assert len(violations) == 2
        assert all(v.kind == "pair" for v in violations)

    def test_tilde_on_hypercube(self, q3):
        relation = tilde_relation(q3)
        assert relation.pairs == frozenset()
        assert relation.classes == ((1,), (2,), (3,))
        assert not relation.is_total

    def test_unlabeled(self):
        with pytest.raises(UnlabeledGraphError):
            coordinate_theta_suite(path_graph(3))
        with pytest.raises(UnlabeledGraphError):
            tilde_relation(path_graph(3))


def test_violation_format():
    violations = [Violation("class", Edge(0, 1), Edge(2, 3)), Violation("pair", Edge(1, 4), Edge(1, 5))]
    assert str(violations[0]) == "class 0-1 2-3"
    assert format_violations(violations) == "class 0-1 2-3\npair 1-4 1-5\n"
