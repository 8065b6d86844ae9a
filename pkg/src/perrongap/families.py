"""Deterministic generators for the graph families under study.

The central family joins a complete bipartite block K_{m,m} to a clique
K_k through a long induced path: one side of the bipartite block (``SA``)
plus the odd path positions form the canonical independent set whose
Perron mass approaches 1/2.  Vertex numbering is fixed so reports and
golden files stay stable:

    SA        = 0 .. m-1
    y*        = m                  (the path anchor inside Y_A)
    YA plain  = m+1 .. 2m-1
    path p_i  = 2m-1+i             (i = 1 .. L, L = 2*ell + epsilon)
    clique c_j = 2m+L-1+j          (j = 1 .. k)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams, NotAConstruction
from .graph import Graph, VertexSet, new_graph


@dataclass(frozen=True)
class ConstructionParams:
    """Parameters of the bipartite-path-clique family.

    Hypotheses: k >= 3, ell >= 2, m >= 2k, epsilon in {0, 1}.  The path
    has order 2*ell + epsilon; epsilon exists only to hit odd target
    orders.
    """

    m: int
    ell: int
    k: int
    epsilon: int = 0

    def validate(self) -> "ConstructionParams":
        if self.k < 3:
            raise InvalidParams(f"k must be >= 3, got {self.k}")
        if self.ell < 2:
            raise InvalidParams(f"ell must be >= 2, got {self.ell}")
        if self.m < 2 * self.k:
            raise InvalidParams(f"m must be >= 2k = {2 * self.k}, got {self.m}")
        if self.epsilon not in (0, 1):
            raise InvalidParams(f"epsilon must be 0 or 1, got {self.epsilon}")
        return self

    @property
    def path_length(self) -> int:
        return 2 * self.ell + self.epsilon

    @property
    def order(self) -> int:
        return 2 * self.m + self.path_length + self.k


@dataclass(frozen=True)
class LabeledGraph:
    """A constructed graph together with its role layout."""

    graph: Graph
    params: ConstructionParams

    @property
    def m(self) -> int:
        return self.params.m

    @property
    def ell(self) -> int:
        return self.params.ell

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def epsilon(self) -> int:
        return self.params.epsilon

    @property
    def sa_vertices(self) -> VertexSet:
        return tuple(range(self.m))

    @property
    def y_star(self) -> int:
        return self.m

    @property
    def ya_plain_vertices(self) -> VertexSet:
        return tuple(range(self.m + 1, 2 * self.m))

    @property
    def path_vertices(self) -> VertexSet:
        """p_1 .. p_L in order."""
        base = 2 * self.m
        return tuple(range(base, base + self.params.path_length))

    @property
    def clique_vertices(self) -> VertexSet:
        base = 2 * self.m + self.params.path_length
        return tuple(range(base, base + self.k))

    def roles(self) -> dict[int, str]:
        """Human-readable role per vertex, for report sidecars."""
        out: dict[int, str] = {}
        for v in self.sa_vertices:
            out[v] = "SA"
        out[self.y_star] = "Y_STAR"
        for v in self.ya_plain_vertices:
            out[v] = "YA"
        for i, v in enumerate(self.path_vertices, start=1):
            out[v] = f"P{i}"
        for j, v in enumerate(self.clique_vertices, start=1):
            out[v] = f"C{j}"
        return out


def build_gmlk(m: int, ell: int, k: int, epsilon: int = 0) -> LabeledGraph:
    """Join K_{m,m} to K_k through a path of order 2*ell + epsilon.

    One fixed vertex y* of the Y side anchors the path; the final path
    vertex carries the single bridge edge into the clique.
    """
    params = ConstructionParams(m, ell, k, epsilon).validate()
    edges: list[tuple[int, int]] = []
    y_side = range(m, 2 * m)
    for u in range(m):
        for v in y_side:
            edges.append((u, v))
    base = 2 * m
    pl = params.path_length
    edges.append((m, base))  # y* to p_1
    for i in range(pl - 1):
        edges.append((base + i, base + i + 1))
    cq = base + pl
    edges.append((base + pl - 1, cq))  # bridge edge p_L to c_1
    for a in range(k):
        for b in range(a + 1, k):
            edges.append((cq + a, cq + b))
    return LabeledGraph(new_graph(params.order, edges), params)


def build_gmlk_for_n(n: int, k: int) -> LabeledGraph:
    """Instance of the family on exactly ``n`` vertices.

    Picks epsilon in {0, 1} so that n - k - epsilon is even, then
    m = floor((n-k-epsilon)/4) and ell = (n-k-epsilon)/2 - m.  Errors
    rather than relaxing m >= 2k: no graph outside the family hypotheses
    is ever emitted.
    """
    if k < 3:
        raise InvalidParams(f"k must be >= 3, got {k}")
    epsilon = (n - k) % 2
    even_part = n - k - epsilon
    if even_part <= 0:
        raise InvalidParams(f"n={n} too small for k={k}")
    m = even_part // 4
    ell = even_part // 2 - m
    if m < 2 * k or ell < 2:
        raise InvalidParams(
            f"n={n} too small for k={k}: requires m={m} >= {2 * k} and ell={ell} >= 2"
        )
    lg = build_gmlk(m, ell, k, epsilon)
    assert lg.graph.n == n
    return lg


def canonical_independent_set(lg: LabeledGraph) -> VertexSet:
    """The SA side plus the odd path positions: independent by layout."""
    if not isinstance(lg, LabeledGraph):
        raise NotAConstruction("expected a LabeledGraph from build_gmlk")
    odd_path = lg.path_vertices[0::2]  # p_1, p_3, ...
    return tuple(sorted(lg.sa_vertices + odd_path))


def k_coloring_certificate(lg: LabeledGraph) -> tuple[int, ...]:
    """A proper coloring with exactly k colors.

    SA takes color 0, the whole Y side color 1, the path alternates 0/1
    starting at p_1 = 0; clique colors are 0..k-1 except that the first
    two are swapped when the last path vertex would clash with c_1.
    """
    n = lg.graph.n
    colors = [0] * n
    colors[lg.y_star] = 1
    for v in lg.ya_plain_vertices:
        colors[v] = 1
    for i, v in enumerate(lg.path_vertices, start=1):
        colors[v] = 0 if i % 2 == 1 else 1
    clique_colors = list(range(lg.k))
    last_path_color = colors[lg.path_vertices[-1]]
    if clique_colors[0] == last_path_color:
        clique_colors[0], clique_colors[1] = clique_colors[1], clique_colors[0]
    for v, c in zip(lg.clique_vertices, clique_colors):
        colors[v] = c
    return tuple(colors)


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParams(f"cycle needs n >= 3, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def build_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParams(f"path needs n >= 1, got {n}")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def build_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParams("both sides must be nonempty")
    return new_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def build_split(k: int, n: int) -> Graph:
    """Clique K_{k-1} on vertices 0..k-2 joined to an independent set of size n-k+1."""
    if k < 2 or n < k:
        raise InvalidParams(f"split graph needs 2 <= k <= n, got k={k}, n={n}")
    edges = [(a, b) for a in range(k - 1) for b in range(a + 1, k - 1)]
    edges.extend((a, v) for a in range(k - 1) for v in range(k - 1, n))
    return new_graph(n, edges)


def build_complete_multipartite(k: int, part_size: int) -> Graph:
    if k < 2 or part_size < 1:
        raise InvalidParams("needs k >= 2 parts of positive size")
    n = k * part_size
    part = [v // part_size for v in range(n)]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    return new_graph(n, edges)
