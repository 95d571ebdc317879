"""Vertex-indexed simple graphs and proper edge colorings.

Graphs live on dense vertex indices 0..n-1, edges are canonical (min, max)
pairs, and colors are opaque nonnegative integers.  Everything here is
immutable after construction so instances can be shared freely.
"""

from dataclasses import dataclass, field
from itertools import combinations

Edge = tuple[int, int]

_DOT_PALETTE = (
    "red", "blue", "forestgreen", "orange", "purple",
    "brown", "cadetblue", "magenta", "gray40", "olive",
)


class InstanceTooLargeError(ValueError):
    """Raised when an exhaustive routine refuses an over-budget instance."""


class DetectorDisagreementError(RuntimeError):
    """Raised when two independent rainbow detectors disagree (internal bug)."""


def canon_edge(u: int, v: int) -> Edge:
    """Canonical unordered representation of an edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` may be passed as any iterable of pairs; it is normalized to a
    sorted tuple of (min, max) pairs.  Self-loops, duplicates, and
    out-of-range endpoints are rejected.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        canon = []
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            canon.append(canon_edge(u, v))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.adj), default=0)

    def neighborhood(self, v: int) -> set[int]:
        self._check_vertex(v)
        m = self.adj[v]
        return {i for i in range(self.n) if m >> i & 1}

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((m.bit_count() for m in self.adj), reverse=True))

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")


def complete_graph(m: int) -> Graph:
    """K_m: all m(m-1)/2 edges."""
    return Graph(m, tuple(combinations(range(m), 2)))


def empty_graph(m: int) -> Graph:
    return Graph(m, ())


def complement(g: Graph) -> Graph:
    """Same vertices; an edge is present iff absent in g."""
    present = set(g.edges)
    return Graph(g.n, tuple(e for e in combinations(range(g.n), 2) if e not in present))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Union with h's vertices re-indexed by offset g.n."""
    off = g.n
    return Graph(g.n + h.n, g.edges + tuple((u + off, v + off) for u, v in h.edges))


def cycle_graph(m: int) -> Graph:
    """C_m (requires m >= 3 to be simple)."""
    if m < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {m}")
    return Graph(m, tuple((i, (i + 1) % m) for i in range(m)))


@dataclass(frozen=True)
class EdgeColoring:
    """Total map from the edges of some graph to color ids.

    Stored as a sorted tuple of ((u, v), color) items with canonical edges;
    accepts any mapping or item iterable at construction.
    """

    items: tuple[tuple[Edge, int], ...]

    def __post_init__(self):
        raw = self.items.items() if isinstance(self.items, dict) else self.items
        norm = {}
        for (u, v), c in raw:
            e = canon_edge(u, v)
            if e in norm:
                raise ValueError(f"edge {e} colored twice")
            if c < 0:
                raise ValueError(f"negative color {c} on edge {e}")
            norm[e] = int(c)
        object.__setattr__(self, "items", tuple(sorted(norm.items())))
        object.__setattr__(self, "_map", norm)

    def color_of(self, u: int, v: int) -> int:
        return self._map[canon_edge(u, v)]

    def __contains__(self, edge: Edge) -> bool:
        return canon_edge(*edge) in self._map

    def __len__(self) -> int:
        return len(self.items)

    def as_dict(self) -> dict[Edge, int]:
        return dict(self._map)

    def colors_used(self) -> set[int]:
        return set(self._map.values())

    def restricted_to(self, edges) -> "EdgeColoring":
        keep = {canon_edge(u, v) for u, v in edges}
        return EdgeColoring(tuple((e, c) for e, c in self.items if e in keep))


@dataclass(frozen=True)
class ColorClassPartition:
    """Edges grouped by color; from a proper coloring every class is a matching."""

    classes: tuple[tuple[int, tuple[Edge, ...]], ...]

    def as_dict(self) -> dict[int, tuple[Edge, ...]]:
        return dict(self.classes)

    def class_sizes(self) -> dict[int, int]:
        return {c: len(es) for c, es in self.classes}

    def num_colors(self) -> int:
        return len(self.classes)


def color_classes(coloring: EdgeColoring) -> ColorClassPartition:
    """Partition the colored edges by color, keys sorted ascending."""
    by_color: dict[int, list[Edge]] = {}
    for e, c in coloring.items:
        by_color.setdefault(c, []).append(e)
    return ColorClassPartition(
        tuple((c, tuple(sorted(es))) for c, es in sorted(by_color.items()))
    )


def is_proper(g: Graph, coloring: EdgeColoring) -> bool:
    """True iff at every vertex all incident edge colors are pairwise distinct.

    The coloring must be total on g's edges (and carry nothing else).
    """
    if len(coloring) != g.edge_count or any(e not in coloring for e in g.edges):
        raise ValueError("coloring does not cover exactly the graph's edge set")
    seen: list[set[int]] = [set() for _ in range(g.n)]
    for (u, v), c in coloring.items:
        if c in seen[u] or c in seen[v]:
            return False
        seen[u].add(c)
        seen[v].add(c)
    return True


@dataclass(frozen=True)
class ColoredGraph:
    """A graph with a proper edge coloring; properness is enforced eagerly."""

    graph: Graph
    coloring: EdgeColoring

    def __post_init__(self):
        if not is_proper(self.graph, self.coloring):
            raise ValueError("coloring is not proper")
        # colored adjacency: per vertex, {neighbor: color}; treat as read-only
        cadj: list[dict[int, int]] = [{} for _ in range(self.graph.n)]
        for (u, v), c in self.coloring.items:
            cadj[u][v] = c
            cadj[v][u] = c
        object.__setattr__(self, "_cadj", tuple(cadj))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    def color_of(self, u: int, v: int) -> int:
        return self.coloring.color_of(u, v)

    def colored_adjacency(self) -> tuple[dict[int, int], ...]:
        """Per-vertex {neighbor: color} maps (do not mutate)."""
        return self._cadj

    def color_classes(self) -> ColorClassPartition:
        return color_classes(self.coloring)


def delete_color_class(cg: ColoredGraph, color: int) -> ColoredGraph:
    """Drop every edge of the given color; vertex set is unchanged."""
    victims = {e for e, c in cg.coloring.items if c == color}
    if not victims:
        raise ValueError(f"color {color} does not occur")
    kept = tuple(e for e in cg.graph.edges if e not in victims)
    return ColoredGraph(Graph(cg.graph.n, kept), cg.coloring.restricted_to(kept))


def colored_disjoint_union(a: ColoredGraph, b: ColoredGraph) -> ColoredGraph:
    """Disjoint union keeping both colorings; color ids may be shared.

    Sharing ids across components cannot break properness, and any connected
    pattern lies inside one component, so rainbow-freeness is preserved too.
    """
    off = a.graph.n
    g = disjoint_union(a.graph, b.graph)
    items = a.coloring.items + tuple(
        (((u + off), (v + off)), c) for (u, v), c in b.coloring.items
    )
    return ColoredGraph(g, EdgeColoring(items))


# ---------------------------------------------------------------------------
# JSON / DOT interchange
# ---------------------------------------------------------------------------

def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json_dict(d: dict) -> Graph:
    return Graph(int(d["n"]), tuple((int(u), int(v)) for u, v in d["edges"]))


def colored_graph_to_json_dict(cg: ColoredGraph) -> dict:
    d = graph_to_json_dict(cg.graph)
    d["colors"] = [cg.color_of(u, v) for u, v in cg.graph.edges]
    return d


def colored_graph_from_json_dict(d: dict) -> ColoredGraph:
    g = graph_from_json_dict(d)
    colors = d["colors"]
    if len(colors) != g.edge_count:
        raise ValueError("colors array does not align with edges array")
    return ColoredGraph(g, EdgeColoring(tuple(zip(g.edges, map(int, colors)))))


def to_dot(obj: "Graph | ColoredGraph", name: str = "G") -> str:
    """DOT rendering; edge colors are mapped onto a fixed palette cyclically."""
    if isinstance(obj, ColoredGraph):
        g, cg = obj.graph, obj
    else:
        g, cg = obj, None
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges:
        if cg is None:
            lines.append(f"  {u} -- {v};")
        else:
            c = cg.color_of(u, v)
            dot_color = _DOT_PALETTE[c % len(_DOT_PALETTE)]
            lines.append(f'  {u} -- {v} [color={dot_color}, label={c}];')
    lines.append("}")
    return "\n".join(lines)
