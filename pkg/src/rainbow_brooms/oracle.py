"""Brute-force ground truth: rainbow-free coloring search and exact extremal values.

Proper colorings are enumerated in first-use canonical color order (one
representative per partition of the edge set into matchings), with branches
pruned as soon as the already-colored edges contain a rainbow copy of the
target broom.  Everything here is deterministic; sampled modes take an
explicit seed that is echoed in the report.
"""

import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from .brooms import (
    BroomSpec,
    RainbowCertificate,
    TreeEmbedding,
    _embed_rainbow_tree,
    _find_b2_cadj,
    build_broom,
    find_rainbow_broom2,
    find_rainbow_tree,
    verify_certificate,
)
from .core import (
    ColoredGraph,
    DetectorDisagreementError,
    EdgeColoring,
    Graph,
    InstanceTooLargeError,
    colored_graph_to_json_dict,
    graph_to_json_dict,
)

FULL_MODE_MAX_N = 6
PRUNED_MODE_MAX_N = 8


@dataclass
class SearchReport:
    """Outcome of one exhaustive or sampled search."""

    instance: str
    verdict: str  # 'holds' | 'fails' | 'exhausted'
    witness: object = None  # ColoredGraph | RainbowCertificate | TreeEmbedding | None
    value: int | None = None
    counters: dict = field(default_factory=dict)
    wall_time: float = 0.0
    seed: int | None = None
    notes: str = ""

    def __post_init__(self):
        if self.verdict not in ("holds", "fails", "exhausted"):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == "fails" and self.witness is None:
            raise ValueError("a fails verdict must carry a witness")

    def to_json_dict(self) -> dict:
        w = self.witness
        if isinstance(w, ColoredGraph):
            witness = {"kind": "colored_graph", **colored_graph_to_json_dict(w)}
        elif isinstance(w, RainbowCertificate):
            witness = {"kind": "certificate", **w.to_json_dict()}
        elif isinstance(w, TreeEmbedding):
            witness = {
                "kind": "embedding",
                "mapping": list(w.mapping),
                "colors": list(w.colors_used),
            }
        elif isinstance(w, Graph):
            witness = {"kind": "graph", **graph_to_json_dict(w)}
        else:
            witness = None
        out = {
            "instance": self.instance,
            "verdict": self.verdict,
            "witness": witness,
            "counters": dict(self.counters),
            "wall_time": self.wall_time,
        }
        if self.value is not None:
            out["value"] = self.value
        if self.seed is not None:
            out["seed"] = self.seed
        if self.notes:
            out["notes"] = self.notes
        return out


# ---------------------------------------------------------------------------
# rainbow-free coloring search
# ---------------------------------------------------------------------------

def _b2_with_new_edge(cadj, a: int, b: int, k: int) -> bool:
    """True iff the properly colored partial graph has a rainbow 2-handle broom
    copy that uses the (already inserted) edge ab.  Checks all three roles the
    new edge can play: first handle edge, second handle edge, or a bristle.
    """
    need = k - 2
    cab = cadj[a][b]
    # role 1: ab is the handle edge wx
    for w, x in ((a, b), (b, a)):
        for u in cadj[x]:
            if u == w:
                continue
            if need == 0:
                return True
            cnt = 0
            for vv, cuv in cadj[u].items():
                if vv != w and vv != x and cuv != cab:
                    cnt += 1
                    if cnt >= need:
                        return True
    # roles 2 and 3: the copy's center u is an endpoint of ab
    for u, other in ((a, b), (b, a)):
        nu = cadj[u]
        if len(nu) < k - 1:
            continue
        # role 2: ab is the handle edge xu (x = other)
        for w, cwx in cadj[other].items():
            if w == u:
                continue
            if need == 0:
                return True
            cnt = 0
            for vv, cuv in nu.items():
                if vv != w and vv != other and cuv != cwx:
                    cnt += 1
                    if cnt >= need:
                        return True
        # role 3: ab is a bristle (v = other); handle runs w-x-u elsewhere
        if need == 0:
            continue
        for x in nu:
            if x == other:
                continue
            for w, cwx in cadj[x].items():
                if w == u or w == other:
                    continue
                cnt = 0
                for vv, cuv in nu.items():
                    if vv != w and vv != x and cuv != cwx:
                        cnt += 1
                        if cnt >= need:
                            return True
    return False


def _search_rainbow_free(n, edges, spec: BroomSpec, budget, counters):
    """Canonical-order coloring search; returns a color list or None."""
    m = len(edges)
    if m == 0:
        return []
    if budget <= 0:
        return None
    k = spec.k
    fast = spec.handle_length == 2
    tree = None if fast else build_broom(spec)
    cadj = [dict() for _ in range(n)]
    used = [0] * n
    colors = [-1] * m

    def rec(i, num_used):
        counters["search_nodes"] = counters.get("search_nodes", 0) + 1
        if i == m:
            return True
        u, v = edges[i]
        blocked = used[u] | used[v]
        for c in range(min(num_used + 1, budget)):
            if blocked >> c & 1:
                continue
            cadj[u][v] = c
            cadj[v][u] = c
            bit = 1 << c
            used[u] |= bit
            used[v] |= bit
            colors[i] = c
            if fast:
                dead = _b2_with_new_edge(cadj, u, v, k)
            else:
                dead = _embed_rainbow_tree(cadj, n, tree) is not None
            if not dead and rec(i + 1, max(num_used, c + 1)):
                return True
            del cadj[u][v]
            del cadj[v][u]
            used[u] ^= bit
            used[v] ^= bit
            colors[i] = -1
        return False

    if rec(0, 0):
        return list(colors)
    return None


def exists_rainbow_free_coloring(
    g: Graph, spec: BroomSpec, color_budget: int | None = None
) -> ColoredGraph | None:
    """A proper coloring of g with no rainbow copy of the broom, or None.

    Enumerates proper colorings canonically (budget defaults to |E|, the
    trivial bound), pruning branches that already show a rainbow copy.  An
    absent result means the enumeration was exhausted.
    """
    edges = list(g.edges)
    budget = len(edges) if color_budget is None else color_budget
    counters: dict = {}
    colors = _search_rainbow_free(g.n, edges, spec, budget, counters)
    if colors is None:
        return None
    cg = ColoredGraph(g, EdgeColoring(tuple(zip(edges, colors))))
    # paranoia: the witness must survive the standalone detectors
    if find_rainbow_tree(cg, build_broom(spec)) is not None:
        raise DetectorDisagreementError(
            "pruned search produced a coloring the oracle detector rejects"
        )
    return cg


# ---------------------------------------------------------------------------
# exact extremal values at desk scale
# ---------------------------------------------------------------------------

def _masks_with_popcount(total_bits: int, m: int):
    """All m-subsets of [0, total_bits) as bitmasks, ascending (Gosper's hack)."""
    if m == 0:
        yield 0
        return
    if m > total_bits:
        return
    x = (1 << m) - 1
    limit = 1 << total_bits
    while x < limit:
        yield x
        c = x & -x
        r = x + c
        x = (((x ^ r) >> 2) // c) | r


def _passes_dichotomy(n, edges, k) -> bool:
    """Structural filter for pruned mode (2-edge handles only).

    A graph admitting a rainbow-free coloring has every component a star or
    of max degree <= k, and a component attaining degree k fits inside
    K_{k+1}.  For k = 2 a properly colored 2-edge path is already rainbow,
    so only matchings survive.
    """
    deg = [0] * n
    adj = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if k == 2:
        return all(d <= 1 for d in deg)
    unseen = (1 << n) - 1
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        comp = 1 << start
        frontier = [start]
        while frontier:
            v = frontier.pop()
            fresh = adj[v] & ~comp
            comp |= fresh
            while fresh:
                low = fresh & -fresh
                fresh ^= low
                frontier.append(low.bit_length() - 1)
        unseen &= ~comp
        verts = [i for i in range(n) if comp >> i & 1]
        size = len(verts)
        dmax = max(deg[v] for v in verts)
        ecount = sum(deg[v] for v in verts) // 2
        is_star = ecount == size - 1 and dmax == size - 1 and size >= 2
        if dmax >= k + 1 and not is_star:
            return False
        if dmax == k and size > k + 1:
            return False
    return True


def ex_star_bruteforce(n: int, spec: BroomSpec, mode: str = "full") -> SearchReport:
    """Maximum edges of an n-vertex graph admitting a rainbow-broom-free coloring.

    Iterates edge counts downward, scanning the graphs of each level in
    ascending edge-set bitmask order, and stops at the first graph that
    admits a rainbow-free proper coloring; so the witness is the minimum
    bitmask one on the winning level.  Full mode tries all graphs and is the
    ground truth; pruned mode (2-edge handles only) skips graphs whose
    component structure provably forbids a rainbow-free coloring, and caps
    the starting level at the known density bound.
    """
    if mode not in ("full", "pruned"):
        raise ValueError(f"mode must be 'full' or 'pruned', got {mode!r}")
    if mode == "full" and n > FULL_MODE_MAX_N:
        raise InstanceTooLargeError(
            f"full mode enumerates 2^C(n,2) graphs; refusing n={n} > {FULL_MODE_MAX_N}"
        )
    if mode == "pruned":
        if n > PRUNED_MODE_MAX_N:
            raise InstanceTooLargeError(
                f"pruned mode refuses n={n} > {PRUNED_MODE_MAX_N}"
            )
        if spec.handle_length != 2:
            raise ValueError("pruned mode is justified for 2-edge handles only")
    if n < 0:
        raise ValueError("n must be nonnegative")
    t0 = time.perf_counter()
    all_edges = list(combinations(range(n), 2))
    total = len(all_edges)
    start = total
    if mode == "pruned":
        k = spec.k
        cap = n // 2 if k == 2 else (k * n) // 2
        start = min(total, cap)
    counters: dict = {"graphs_examined": 0, "graphs_filtered": 0, "search_nodes": 0}
    for m in range(start, -1, -1):
        for mask in _masks_with_popcount(total, m):
            edges = [all_edges[i] for i in range(total) if mask >> i & 1]
            if mode == "pruned" and not _passes_dichotomy(n, edges, spec.k):
                counters["graphs_filtered"] += 1
                continue
            counters["graphs_examined"] += 1
            colors = _search_rainbow_free(n, edges, spec, len(edges), counters)
            if colors is not None:
                g = Graph(n, tuple(edges))
                witness = ColoredGraph(g, EdgeColoring(tuple(zip(g.edges, colors))))
                return SearchReport(
                    instance=f"exstar n={n} broom=({spec.k},{spec.handle_length}) mode={mode}",
                    verdict="holds",
                    witness=witness,
                    value=m,
                    counters=counters,
                    wall_time=time.perf_counter() - t0,
                )
    raise AssertionError("unreachable: the empty graph is always rainbow-free")


# ---------------------------------------------------------------------------
# degree-(k-1) dichotomy verification
# ---------------------------------------------------------------------------

def _proper_colorings_canonical(n, edges, budget, counters):
    """Yield every canonical proper coloring (colors list, shared buffer)."""
    m = len(edges)
    used = [0] * n
    colors = [0] * m

    def rec(i, num_used):
        counters["coloring_nodes"] = counters.get("coloring_nodes", 0) + 1
        if i == m:
            yield colors
            return
        u, v = edges[i]
        blocked = used[u] | used[v]
        for c in range(min(num_used + 1, budget)):
            if blocked >> c & 1:
                continue
            bit = 1 << c
            used[u] |= bit
            used[v] |= bit
            colors[i] = c
            yield from rec(i + 1, max(num_used, c + 1))
            used[u] ^= bit
            used[v] ^= bit
        return

    if m == 0:
        yield colors
    else:
        yield from rec(0, 0)


def verify_no_k_minus_1(
    k: int,
    mode: str = "exhaustive",
    sample_count: int = 100,
    colorings_per_graph: int = 50,
    seed: int = 0,
) -> SearchReport:
    """Check: a k-edge-colored k^2/2-edge subgraph of K_{k+1} has a rainbow
    2-handle broom copy if and only if it has a vertex of degree exactly k-1.

    Exhaustive mode walks every subgraph and every canonical proper coloring
    with at most k colors; completed colorings necessarily use exactly k
    colors with every class of size k/2, which is asserted as a cross-check.
    Sampled mode draws subgraphs (and caps colorings per subgraph) with a
    seeded generator and is negative evidence only.
    """
    if k % 2 or k < 2:
        raise ValueError(f"needs even k >= 2, got {k}")
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"mode must be 'exhaustive' or 'sampled', got {mode!r}")
    if mode == "exhaustive" and k > 6:
        raise InstanceTooLargeError(
            f"exhaustive mode is mandated for k in {{4, 6}} only; use sampled for k={k}"
        )
    t0 = time.perf_counter()
    mhost = k + 1
    all_edges = list(combinations(range(mhost), 2))
    target = k * k // 2
    missing = len(all_edges) - target  # = k/2

    rng = random.Random(seed) if mode == "sampled" else None
    if mode == "exhaustive":
        complements = combinations(range(len(all_edges)), missing)
    else:
        complements = (
            tuple(sorted(rng.sample(range(len(all_edges)), missing)))
            for _ in range(sample_count)
        )

    counters: dict = {"subgraphs": 0, "colorings": 0, "coloring_nodes": 0}
    notes = "coloring side: canonical enumeration; exactly-k colors and class size k/2 asserted"
    if mode == "sampled":
        notes += f"; sampled evidence only ({sample_count} subgraphs, <= {colorings_per_graph} colorings each)"

    for comp in complements:
        comp_set = set(comp)
        edges = [e for i, e in enumerate(all_edges) if i not in comp_set]
        if rng is not None:
            edges = list(edges)
            rng.shuffle(edges)
        deg = [0] * mhost
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        has_deg = any(d == k - 1 for d in deg)
        counters["subgraphs"] += 1
        n_colorings = 0
        for colors in _proper_colorings_canonical(mhost, edges, k, counters):
            n_colorings += 1
            counters["colorings"] += 1
            class_sizes: dict[int, int] = {}
            for c in colors:
                class_sizes[c] = class_sizes.get(c, 0) + 1
            assert len(class_sizes) == k, "complete coloring must use exactly k colors"
            assert all(s == k // 2 for s in class_sizes.values()), (
                "every class must be a near-perfect matching"
            )
            cadj = [dict() for _ in range(mhost)]
            for (u, v), c in zip(edges, colors):
                cadj[u][v] = c
                cadj[v][u] = c
            found = _find_b2_cadj(cadj, k) is not None
            if found != has_deg:
                witness = ColoredGraph(
                    Graph(mhost, tuple(edges)),
                    EdgeColoring(tuple(zip(edges, colors))),
                )
                return SearchReport(
                    instance=f"no-k-minus-1 k={k} mode={mode}",
                    verdict="fails",
                    witness=witness,
                    counters=counters,
                    wall_time=time.perf_counter() - t0,
                    seed=seed if mode == "sampled" else None,
                    notes=f"rainbow={found} but degree-(k-1) vertex present={has_deg}",
                )
            if mode == "sampled" and n_colorings >= colorings_per_graph:
                break
        assert n_colorings > 0, "every k^2/2-edge subgraph is k-edge-colorable"
    return SearchReport(
        instance=f"no-k-minus-1 k={k} mode={mode}",
        verdict="holds",
        counters=counters,
        wall_time=time.perf_counter() - t0,
        seed=seed if mode == "sampled" else None,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# detector cross-check wrapper
# ---------------------------------------------------------------------------

def verify_construction(cg: ColoredGraph, spec: BroomSpec) -> SearchReport:
    """Run both detectors on cg, demand agreement, and report the outcome.

    'holds' means rainbow-free; 'fails' carries the certificate.  Detector
    disagreement is an invariant violation and aborts loudly.
    """
    t0 = time.perf_counter()
    emb = find_rainbow_tree(cg, build_broom(spec))
    witness: object = emb
    if spec.handle_length == 2:
        cert = find_rainbow_broom2(cg, spec.k)
        if (cert is None) != (emb is None):
            raise DetectorDisagreementError(
                f"find_rainbow_broom2={cert} but tree oracle={emb}"
            )
        if cert is not None and not verify_certificate(cg, cert, spec.k):
            raise DetectorDisagreementError(
                f"detector returned an invalid certificate: {cert}"
            )
        witness = cert
    rainbow = witness is not None
    return SearchReport(
        instance=f"verify-construction broom=({spec.k},{spec.handle_length}) n={cg.n}",
        verdict="fails" if rainbow else "holds",
        witness=witness,
        counters={"edges": cg.graph.edge_count},
        wall_time=time.perf_counter() - t0,
    )
