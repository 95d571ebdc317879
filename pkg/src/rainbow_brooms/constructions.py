"""Generators for the extremal and near-miss colored constructions.

Three regimes of extremal lower-bound constructions for rainbow-broom-free
colorings (odd k, even k in {2,4}, even k >= 6), the deleted-color-class
construction that looks extremal but never is (the negative control), and
the good-subgraph machinery for the even k >= 6 regime.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations, permutations

from .core import (
    ColoredGraph,
    Graph,
    InstanceTooLargeError,
    colored_disjoint_union,
    complement,
    complete_graph,
    cycle_graph,
    delete_color_class,
    empty_graph,
    disjoint_union,
)
from .colorings import k_edge_color, near_one_factorization, one_factorization


class Regime(Enum):
    ODD_K = "odd_k"
    EVEN_SMALL = "even_small"   # k in {2, 4}
    EVEN_LARGE = "even_large"   # even k >= 6

    @staticmethod
    def for_k(k: int) -> "Regime":
        if k < 2:
            raise ValueError(f"regime defined for k >= 2, got {k}")
        if k % 2:
            return Regime.ODD_K
        return Regime.EVEN_SMALL if k in (2, 4) else Regime.EVEN_LARGE


def theorem_slope(k: int) -> Fraction:
    """Leading coefficient of the extremal edge count in n, as an exact rational.

    k/2 for odd k, (k-1)/2 for k in {2,4}, k^2/(2(k+1)) for even k >= 6.
    """
    regime = Regime.for_k(k)
    if regime is Regime.ODD_K:
        return Fraction(k, 2)
    if regime is Regime.EVEN_SMALL:
        return Fraction(k - 1, 2)
    return Fraction(k * k, 2 * (k + 1))


def _colored_remainder(r: int) -> ColoredGraph | None:
    """Properly colored K_r for leftover vertices (r <= k, so no broom fits)."""
    if r == 0:
        return None
    if r == 1:
        return ColoredGraph(empty_graph(1), _empty_coloring())
    if r % 2 == 0:
        return one_factorization(r)
    return near_one_factorization(r)


def _empty_coloring():
    from .core import EdgeColoring

    return EdgeColoring(())


def construct_odd(n: int, k: int) -> ColoredGraph:
    """floor(n/(k+1)) disjoint 1-factorized copies of K_{k+1}, leftovers as K_r.

    For odd k every proper k-coloring of K_{k+1} avoids rainbow brooms with
    2-edge handles, so the packing has (k/2)n edges exactly when k+1 | n.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError(f"construct_odd needs odd k >= 3, got {k}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    q, r = divmod(n, k + 1)
    parts = [one_factorization(k + 1)] * q
    rem = _colored_remainder(r)
    if rem is not None:
        parts.append(rem)
    return _assemble(parts, n)


def construct_even_small(n: int, k: int) -> ColoredGraph:
    """floor(n/k) disjoint (k-1)-edge-colored copies of K_k, leftovers as K_r."""
    if k not in (2, 4):
        raise ValueError(f"construct_even_small needs k in {{2, 4}}, got {k}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    q, r = divmod(n, k)
    parts = [one_factorization(k)] * q
    rem = _colored_remainder(r)
    if rem is not None:
        parts.append(rem)
    return _assemble(parts, n)


@dataclass(frozen=True)
class GoodSubgraph:
    """A k^2/2-edge subgraph of K_{k+1} with no vertex of degree exactly k-1."""

    host_order: int
    graph: Graph

    def __post_init__(self):
        k = self.host_order - 1
        if k < 2 or k % 2:
            raise ValueError(f"host order must be odd (k even), got {self.host_order}")
        if self.graph.n != self.host_order:
            raise ValueError("graph order does not match host order")
        if self.graph.edge_count != k * k // 2:
            raise ValueError(
                f"good subgraph needs {k * k // 2} edges, got {self.graph.edge_count}"
            )
        if any(self.graph.degree(v) == k - 1 for v in range(self.graph.n)):
            raise ValueError(f"vertex of degree {k - 1} present")

    @property
    def k(self) -> int:
        return self.host_order - 1


def good_subgraph(k: int) -> GoodSubgraph:
    """Complement of C_{k/2} plus k/2+1 isolated vertices, inside K_{k+1}.

    The complement has k/2 edges and no degree-1 vertex, so the subgraph has
    k^2/2 edges and no vertex of degree k-1.  Needs even k >= 6: a cycle on
    k/2 < 3 vertices is not simple.
    """
    if k % 2 or k < 6:
        raise ValueError(f"good_subgraph needs even k >= 6, got {k}")
    comp = disjoint_union(cycle_graph(k // 2), empty_graph(k // 2 + 1))
    return GoodSubgraph(k + 1, complement(comp))


def construct_even_large(n: int, k: int) -> ColoredGraph:
    """floor(n/(k+1)) k-edge-colored copies of the good subgraph; leftovers isolated."""
    if k % 2 or k < 6:
        raise ValueError(f"construct_even_large needs even k >= 6, got {k}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    q, r = divmod(n, k + 1)
    colored = k_edge_color(good_subgraph(k).graph, k)
    if colored is None:
        raise RuntimeError(
            f"good subgraph of K_{k + 1} must be {k}-edge-colorable"
        )
    parts = [colored] * q
    if r:
        parts.append(ColoredGraph(empty_graph(r), _empty_coloring()))
    return _assemble(parts, n)


def construct_deleted_class(k: int) -> ColoredGraph:
    """K_{k+1} (k even) with one near-1-factorization class deleted.

    The result is k-edge-colored with k^2/2 edges and meets every necessary
    density condition for extremality, yet it always contains a rainbow
    k-edge broom with a 2-edge handle: the deletion leaves k vertices of
    degree k-1.  Serves as the negative control.  Class 0 is deleted; all
    classes of the circle method are equivalent under rotation.
    """
    if k % 2 or k < 2:
        raise ValueError(f"construct_deleted_class needs even k >= 2, got {k}")
    return delete_color_class(near_one_factorization(k + 1), 0)


def _assemble(parts: list[ColoredGraph], n: int) -> ColoredGraph:
    acc = ColoredGraph(empty_graph(0), _empty_coloring())
    for p in parts:
        acc = colored_disjoint_union(acc, p)
    if acc.n != n:
        raise AssertionError(f"assembled {acc.n} vertices, expected {n}")
    return acc


def enumerate_good_subgraphs(k: int, up_to_isomorphism: bool = False) -> list[GoodSubgraph]:
    """All k^2/2-edge subgraphs of K_{k+1} with no degree-(k-1) vertex.

    Enumerated through their complements: k/2-edge subgraphs of K_{k+1} with
    no degree-1 vertex.  Empty for k in {2, 4} (every 1- or 2-edge graph has
    a degree-1 vertex).  With up_to_isomorphism=True only one representative
    per isomorphism class is kept.
    """
    if k % 2 or k < 2:
        raise ValueError(f"enumerate_good_subgraphs needs even k >= 2, got {k}")
    if k > 8:
        raise InstanceTooLargeError(f"desk scale is k <= 8, got {k}")
    m = k + 1
    all_edges = list(combinations(range(m), 2))
    found: list[GoodSubgraph] = []
    for comp_edges in combinations(all_edges, k // 2):
        deg = [0] * m
        for u, v in comp_edges:
            deg[u] += 1
            deg[v] += 1
        if any(d == 1 for d in deg):
            continue
        comp = Graph(m, comp_edges)
        found.append(GoodSubgraph(m, complement(comp)))
    if not up_to_isomorphism:
        return found
    reps: list[GoodSubgraph] = []
    for gs in found:
        if not any(are_isomorphic(gs.graph, r.graph) for r in reps):
            reps.append(gs)
    return reps


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for desk-scale graphs.

    Degree-sequence refinement first, then a backtracking vertex mapping.
    Fine for hosts with <= 10 or so vertices; not meant for anything bigger.
    """
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    n = g.n
    gdeg = [g.degree(v) for v in range(n)]
    hdeg = [h.degree(v) for v in range(n)]
    # neighbor-degree multiset refinement
    gsig = [tuple(sorted(gdeg[w] for w in g.neighborhood(v))) for v in range(n)]
    hsig = [tuple(sorted(hdeg[w] for w in h.neighborhood(v))) for v in range(n)]
    if sorted(gsig) != sorted(hsig):
        return False
    image = [-1] * n
    taken = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if taken[w] or gdeg[v] != hdeg[w] or gsig[v] != hsig[w]:
                continue
            ok = True
            for u in range(v):
                if (g.adj[v] >> u & 1) != (h.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                taken[w] = True
                if extend(v + 1):
                    return True
                taken[w] = False
                image[v] = -1
        return False

    return extend(0)
