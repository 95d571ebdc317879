"""Shared fixtures and generators for the test suite."""

import random
from itertools import combinations

import pytest

from rainbow_brooms import ColoredGraph, EdgeColoring, Graph

# The known 4-colored, 8-edge subgraph of K_5 obtained by deleting the color
# class {03, 12} from a proper 5-coloring of K_5.  Vertices 0..4; it contains
# a rainbow 4-edge broom with handle 0-1-3 and bristles {2, 4}.
K5_MINUS_CLASS_CLASSES = {
    0: ((1, 4), (2, 3)),
    1: ((0, 2), (3, 4)),
    2: ((0, 4), (1, 3)),
    3: ((2, 4), (0, 1)),
}
K5_DELETED_CLASS = ((0, 3), (1, 2))


def k5_minus_class() -> ColoredGraph:
    items = []
    for c, es in K5_MINUS_CLASS_CLASSES.items():
        for e in es:
            items.append((e, c))
    edges = tuple(e for _, es in sorted(K5_MINUS_CLASS_CLASSES.items()) for e in es)
    return ColoredGraph(Graph(5, edges), EdgeColoring(tuple(items)))


@pytest.fixture
def k5_minus_class_cg() -> ColoredGraph:
    return k5_minus_class()


def random_graph(rng: random.Random, n_max: int = 8, n_min: int = 2) -> Graph:
    n = rng.randint(n_min, n_max)
    p = rng.choice([0.15, 0.3, 0.5, 0.7, 0.85])
    edges = tuple(e for e in combinations(range(n), 2) if rng.random() < p)
    return Graph(n, edges)


def random_proper_coloring(rng: random.Random, g: Graph) -> ColoredGraph:
    """Greedy proper coloring over a shuffled edge order.

    Half the time first-fit (few colors, more repeats), half the time a random
    feasible color from a widened palette (more rainbow-prone).
    """
    order = list(g.edges)
    rng.shuffle(order)
    used = [set() for _ in range(g.n)]
    items = []
    first_fit = rng.random() < 0.5
    dmax = g.max_degree()
    for u, v in order:
        if first_fit:
            c = 0
            while c in used[u] or c in used[v]:
                c += 1
        else:
            c = rng.choice(
                [x for x in range(2 * dmax + 1) if x not in used[u] and x not in used[v]]
            )
        used[u].add(c)
        used[v].add(c)
        items.append(((u, v), c))
    return ColoredGraph(g, EdgeColoring(tuple(items)))


def random_colored_graph(rng: random.Random, n_max: int = 8) -> ColoredGraph:
    return random_proper_coloring(rng, random_graph(rng, n_max))
