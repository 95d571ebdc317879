import random
from itertools import combinations

import pytest

from rainbow_brooms import (
    Graph,
    complete_graph,
    good_subgraph,
    is_proper,
    k_edge_color,
    near_one_factorization,
    one_factorization,
)

from conftest import random_graph


@pytest.mark.parametrize("m", [2, 4, 6, 8, 10])
def test_one_factorization(m):
    cg = one_factorization(m)
    assert is_proper(cg.graph, cg.coloring)
    part = cg.color_classes()
    assert part.num_colors() == m - 1
    for _, es in part.classes:
        assert len(es) == m // 2
        assert len({v for e in es for v in e}) == m  # perfect matching


def test_one_factorization_k4_classes():
    part = one_factorization(4).color_classes()
    got = {frozenset(map(frozenset, es)) for _, es in part.classes}
    want = {
        frozenset({frozenset({0, 1}), frozenset({2, 3})}),
        frozenset({frozenset({0, 2}), frozenset({1, 3})}),
        frozenset({frozenset({0, 3}), frozenset({1, 2})}),
    }
    assert got == want


def test_one_factorization_rejects_odd():
    for m in (1, 3, 7):
        with pytest.raises(ValueError):
            one_factorization(m)
    with pytest.raises(ValueError):
        one_factorization(0)


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_near_one_factorization(m):
    cg = near_one_factorization(m)
    assert is_proper(cg.graph, cg.coloring)
    part = cg.color_classes()
    assert part.num_colors() == m
    for c, es in part.classes:
        assert len(es) == (m - 1) // 2
        covered = {v for e in es for v in e}
        assert covered == set(range(m)) - {c}  # class i misses exactly vertex i


def test_near_one_factorization_small_cases():
    assert all(s == 1 for s in near_one_factorization(3).color_classes().class_sizes().values())
    part5 = dict(near_one_factorization(5).color_classes().classes)
    assert set(part5[0]) == {(1, 4), (2, 3)}
    assert near_one_factorization(7).graph.edge_count == 21


def test_near_one_factorization_rejects_even():
    for m in (0, 2, 4):
        with pytest.raises(ValueError):
            near_one_factorization(m)
    with pytest.raises(ValueError):
        near_one_factorization(1)


def test_k_edge_color_infeasible():
    assert k_edge_color(complete_graph(3), 2) is None
    # three colors cover at most 3 matchings of size 2 on 5 vertices
    assert k_edge_color(Graph(5, tuple(combinations(range(5), 2))[:7]), 3) is None


def test_k_edge_color_small_successes():
    cg = k_edge_color(complete_graph(3), 3)
    assert cg is not None and len(cg.coloring.colors_used()) == 3

    cg = k_edge_color(good_subgraph(6).graph, 6)
    assert cg is not None
    assert is_proper(cg.graph, cg.coloring)
    assert len(cg.coloring.colors_used()) <= 6

    k33 = Graph(6, tuple((a, b) for a in range(3) for b in range(3, 6)))
    cg = k_edge_color(k33, 3)
    assert cg is not None and len(cg.coloring.colors_used()) == 3


def test_k_edge_color_empty_graph():
    cg = k_edge_color(Graph(3, ()), 0)
    assert cg is not None and cg.graph.edge_count == 0


def test_k_edge_color_guaranteed_subgraphs_of_k5():
    # a sample of the 8-edge subgraphs of K_5 (all have max degree 4)
    all_edges = list(combinations(range(5), 2))
    seen = 0
    for comp in list(combinations(range(10), 2))[:12]:
        g = Graph(5, tuple(e for i, e in enumerate(all_edges) if i not in comp))
        assert g.max_degree() == 4
        cg = k_edge_color(g, 4)
        assert cg is not None
        assert len(cg.coloring.colors_used()) <= 4
        seen += 1
    assert seen == 12


def test_k_edge_color_always_succeeds_above_max_degree():
    # a complete search always succeeds with max_degree + 1 colors
    rng = random.Random(303)
    for _ in range(25):
        g = random_graph(rng, n_max=7)
        budget = g.max_degree() + 1
        cg = k_edge_color(g, budget)
        assert cg is not None
        assert is_proper(cg.graph, cg.coloring)
        assert len(cg.coloring.colors_used()) <= budget


def test_k_edge_color_rejects_negative_budget():
    with pytest.raises(ValueError):
        k_edge_color(complete_graph(3), -1)
