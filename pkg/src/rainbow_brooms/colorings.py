"""Proper edge colorings of complete graphs and a budgeted coloring search.

The circle method gives canonical 1-factorizations of K_m for even m and
near-1-factorizations for odd m.  ``k_edge_color`` is a complete backtracking
search with first-use color canonicalization; on a (k+1)-vertex graph with
max degree k, even k, and at most k^2/2 edges it is guaranteed to succeed
because such graphs are known to be k-edge-colorable.
"""

from enum import Enum

from .core import ColoredGraph, EdgeColoring, Graph, complete_graph


class FactorizationKind(Enum):
    PERFECT = "perfect"            # even order: every class a perfect matching
    NEAR_PERFECT = "near_perfect"  # odd order: every class misses one vertex


def one_factorization(m: int) -> ColoredGraph:
    """K_m (m even) properly colored with m-1 colors, each class a perfect matching.

    Circle construction: vertex m-1 is fixed; in round i it pairs with i, and
    (i+j) mod (m-1) pairs with (i-j) mod (m-1) for j = 1..m/2-1.
    """
    if m < 2 or m % 2:
        raise ValueError(f"one_factorization needs even m >= 2, got {m}")
    mm = m - 1
    items = []
    for i in range(mm):
        items.append(((m - 1, i), i))
        for j in range(1, m // 2):
            items.append((((i + j) % mm, (i - j) % mm), i))
    return ColoredGraph(complete_graph(m), EdgeColoring(tuple(items)))


def near_one_factorization(m: int) -> ColoredGraph:
    """K_m (m odd) properly colored with m colors; class i misses exactly vertex i."""
    if m < 3 or m % 2 == 0:
        raise ValueError(f"near_one_factorization needs odd m >= 3, got {m}")
    items = []
    for i in range(m):
        for j in range(1, (m - 1) // 2 + 1):
            items.append((((i + j) % m, (i - j) % m), i))
    return ColoredGraph(complete_graph(m), EdgeColoring(tuple(items)))


def k_edge_color(g: Graph, k: int) -> ColoredGraph | None:
    """Proper coloring of g with at most k colors, or None if none exists.

    Complete backtracking search: edges are processed most-saturated-first
    and colors are introduced in first-use order, which collapses the color
    permutation symmetry without losing completeness.  No timeout; callers
    bound the instance size.
    """
    if k < 0:
        raise ValueError(f"color budget must be nonnegative, got {k}")
    edges = list(g.edges)
    if not edges:
        return ColoredGraph(g, EdgeColoring(()))
    used = [0] * g.n          # bitmask of colors present at each vertex
    assigned: dict = {}
    remaining = set(range(len(edges)))

    def pick() -> int:
        best, best_key = -1, (-1, ())
        for i in remaining:
            u, v = edges[i]
            key = ((used[u] | used[v]).bit_count(), (-u, -v))
            if key > best_key:
                best, best_key = i, key
        return best

    def solve(num_used: int) -> bool:
        if not remaining:
            return True
        i = pick()
        u, v = edges[i]
        remaining.discard(i)
        blocked = used[u] | used[v]
        limit = min(num_used + 1, k)
        for c in range(limit):
            if blocked >> c & 1:
                continue
            bit = 1 << c
            assigned[edges[i]] = c
            used[u] |= bit
            used[v] |= bit
            if solve(max(num_used, c + 1)):
                return True
            used[u] ^= bit
            used[v] ^= bit
            del assigned[edges[i]]
        remaining.add(i)
        return False

    if solve(0):
        return ColoredGraph(g, EdgeColoring(tuple(assigned.items())))
    return None
