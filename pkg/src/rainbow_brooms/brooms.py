"""Brooms, rainbow-copy detectors, and re-checkable certificates.

A broom with k edges and handle length l is the tree made of a path on l
edges plus k - l pendant edges at one endpoint of the path.  The l = 2 case
has a fast counting detector; arbitrary trees go through a brute-force
embedding search that doubles as its independent oracle.
"""

from dataclasses import dataclass

from .core import ColoredGraph, Graph


@dataclass(frozen=True)
class BroomSpec:
    """The pair (k, handle_length) identifying a broom; bristles = k - handle."""

    k: int
    handle_length: int = 2

    def __post_init__(self):
        if not self.k >= self.handle_length >= 1:
            raise ValueError(
                f"need k >= handle_length >= 1, got ({self.k}, {self.handle_length})"
            )

    @property
    def bristles(self) -> int:
        return self.k - self.handle_length


@dataclass(frozen=True)
class RainbowCertificate:
    """Explicit witness of a rainbow broom copy; the center is handle[-1]."""

    handle: tuple[int, ...]
    bristle_ends: tuple[int, ...]
    colors_used: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "handle", tuple(self.handle))
        object.__setattr__(self, "bristle_ends", tuple(sorted(self.bristle_ends)))
        object.__setattr__(self, "colors_used", tuple(sorted(self.colors_used)))

    def to_json_dict(self) -> dict:
        return {
            "handle": list(self.handle),
            "bristles": list(self.bristle_ends),
            "colors": list(self.colors_used),
        }


def certificate_from_json_dict(d: dict) -> RainbowCertificate:
    return RainbowCertificate(
        tuple(int(v) for v in d["handle"]),
        tuple(int(v) for v in d["bristles"]),
        tuple(int(c) for c in d["colors"]),
    )


def build_broom(spec: BroomSpec) -> Graph:
    """Tree on k+1 vertices: handle path 0-1-...-l, bristles hang off vertex l."""
    l = spec.handle_length
    edges = [(i, i + 1) for i in range(l)]
    edges += [(l, j) for j in range(l + 1, spec.k + 1)]
    return Graph(spec.k + 1, tuple(edges))


def find_rainbow_broom2(cg: ColoredGraph, k: int) -> RainbowCertificate | None:
    """First rainbow copy of the k-edge broom with a 2-edge handle, if any.

    For a handle w-x-u (center u) a copy exists iff u has at least k-2
    neighbors v outside {w, x} with c(uv) != c(wx); properness already keeps
    bristle colors distinct from each other and from c(xu).  Scan order is
    lexicographic on (u, x, w) so the result is deterministic.
    """
    if k < 2:
        raise ValueError(f"broom needs k >= 2, got {k}")
    cert = _find_b2_cadj(cg.colored_adjacency(), k)
    if cert is None:
        return None
    w, x, u, bristles = cert
    colors = [cg.color_of(w, x), cg.color_of(x, u)]
    colors += [cg.color_of(u, v) for v in bristles]
    return RainbowCertificate((w, x, u), tuple(bristles), tuple(colors))


def _find_b2_cadj(cadj, k: int):
    """Core scan over {neighbor: color} adjacency; returns (w, x, u, bristles)."""
    need = k - 2
    for u in range(len(cadj)):
        nu = cadj[u]
        if len(nu) < k - 1:
            continue
        nu_sorted = sorted(nu.items())
        for x, cxu in nu_sorted:
            for w, cwx in sorted(cadj[x].items()):
                if w == u:
                    continue
                bristles = [v for v, cuv in nu_sorted
                            if v != w and v != x and cuv != cwx]
                if len(bristles) >= need:
                    return w, x, u, bristles[:need]
    return None


@dataclass(frozen=True)
class TreeEmbedding:
    """Injective map tree vertex -> host vertex whose image is rainbow."""

    mapping: tuple[int, ...]
    colors_used: tuple[int, ...]


def find_rainbow_tree(cg: ColoredGraph, t: Graph) -> TreeEmbedding | None:
    """Brute-force rainbow embedding of the tree t into cg, or None.

    Backtracks over injective vertex maps in BFS order from tree vertex 0,
    pruning on repeated colors.  Sibling leaves are forced into ascending
    host order, which removes the factorial symmetry of pendant edges.
    """
    _check_tree(t)
    hit = _embed_rainbow_tree(cg.colored_adjacency(), cg.n, t)
    if hit is None:
        return None
    mapping, colors = hit
    return TreeEmbedding(tuple(mapping), tuple(sorted(colors)))


def _check_tree(t: Graph):
    if t.n == 0 or t.edge_count != t.n - 1:
        raise ValueError("pattern is not a tree")
    # connectivity via bitmask flood fill
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        m = t.adj[v] & ~seen
        while m:
            low = m & -m
            w = low.bit_length() - 1
            seen |= low
            m ^= low
            frontier.append(w)
    if seen != (1 << t.n) - 1:
        raise ValueError("pattern is not a tree")


def _tree_order(t: Graph):
    """BFS order from vertex 0 with parents, plus sibling-leaf predecessors."""
    order = [0]
    parent = [-1] * t.n
    seen = {0}
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in sorted(t.neighborhood(v)):
            if w not in seen:
                seen.add(w)
                parent[w] = v
                order.append(w)
    # prev_sibling[v] = previously ordered leaf with the same parent, if any
    prev_sibling = [-1] * t.n
    last_leaf_child: dict[int, int] = {}
    for v in order[1:]:
        if t.degree(v) == 1:
            p = parent[v]
            if p in last_leaf_child:
                prev_sibling[v] = last_leaf_child[p]
            last_leaf_child[p] = v
    return order, parent, prev_sibling


def _embed_rainbow_tree(cadj, n: int, t: Graph):
    order, parent, prev_sibling = _tree_order(t)
    tdeg = [t.degree(v) for v in range(t.n)]
    image = [-1] * t.n
    used_hosts = [False] * n
    used_colors: set[int] = set()

    def place(idx: int):
        if idx == t.n:
            return True
        tv = order[idx]
        par = parent[tv]
        lo = 0
        if prev_sibling[tv] != -1:
            lo = image[prev_sibling[tv]] + 1
        for hv in range(lo, n):
            if used_hosts[hv] or len(cadj[hv]) < tdeg[tv]:
                continue
            if par == -1:
                c = None
            else:
                c = cadj[image[par]].get(hv)
                if c is None or c in used_colors:
                    continue
            image[tv] = hv
            used_hosts[hv] = True
            if c is not None:
                used_colors.add(c)
            if place(idx + 1):
                return True
            used_hosts[hv] = False
            image[tv] = -1
            if c is not None:
                used_colors.discard(c)
        return False

    if t.n > n:
        return None
    if place(0):
        colors = []
        for v in range(t.n):
            if parent[v] != -1:
                colors.append(cadj[image[parent[v]]][image[v]])
        return list(image), colors
    return None


def verify_certificate(cg: ColoredGraph, cert: RainbowCertificate, k: int) -> bool:
    """Re-check every certificate invariant against cg from scratch.

    Never raises: any malformed or mismatched certificate is simply invalid.
    """
    try:
        handle = cert.handle
        if len(handle) != 3:
            return False
        vertices = list(handle) + list(cert.bristle_ends)
        if len(set(vertices)) != len(vertices):
            return False
        if any(not 0 <= v < cg.n for v in vertices):
            return False
        if len(cert.bristle_ends) != k - 2:
            return False
        w, x, u = handle
        edges = [(w, x), (x, u)] + [(u, v) for v in cert.bristle_ends]
        if any(not cg.graph.has_edge(a, b) for a, b in edges):
            return False
        colors = [cg.color_of(a, b) for a, b in edges]
        if len(set(colors)) != k:
            return False
        return tuple(sorted(colors)) == cert.colors_used
    except Exception:
        return False
