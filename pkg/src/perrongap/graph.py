"""Immutable undirected simple graphs and their structural queries.

Vertices are dense 0-based indices.  Adjacency lists are kept sorted
ascending and edge iteration yields each undirected edge exactly once as
``(u, v)`` with ``u < v``, so that every numerical accumulation over edges
happens in one reproducible order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, TextIO

from .errors import EmptySet, InvalidEdge, InvalidVertexSet, NotConnected

VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Instances are immutable and safe to share; build them with
    :func:`new_graph` which validates, symmetrizes and deduplicates the
    edge list.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from an edge list.

    Edges are symmetrized and deduplicated.  Raises :class:`InvalidEdge`
    for self-loops or out-of-range endpoints.
    """
    if n < 0:
        raise InvalidEdge("vertex count must be nonnegative")
    sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        sets[u].add(v)
        sets[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in sets))


def vertex_set(g: Graph, members: Iterable[int]) -> VertexSet:
    """Validate and normalize a vertex set: sorted, distinct, in range."""
    ms = sorted(members)
    for i, v in enumerate(ms):
        if not (0 <= v < g.n):
            raise InvalidVertexSet(f"vertex {v} out of range for n={g.n}")
        if i > 0 and ms[i - 1] == v:
            raise InvalidVertexSet(f"duplicate vertex {v}")
    return tuple(ms)


def complement_set(g: Graph, s: Iterable[int]) -> VertexSet:
    """Vertices of ``g`` not in ``s``."""
    inside = set(vertex_set(g, s))
    return tuple(v for v in range(g.n) if v not in inside)


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability from vertex 0; vacuously true for n <= 1."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def bipartition(g: Graph) -> Optional[tuple[VertexSet, VertexSet]]:
    """Two-coloring classes of a connected bipartite graph, else ``None``.

    The class containing vertex 0 comes first.  Raises
    :class:`NotConnected` on disconnected input.
    """
    if not is_connected(g):
        raise NotConnected("bipartition requires a connected graph")
    if g.n == 0:
        return ((), ())
    color = [-1] * g.n
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if color[v] == -1:
                color[v] = 1 - color[u]
                queue.append(v)
            elif color[v] == color[u]:
                return None
    side0 = tuple(v for v in range(g.n) if color[v] == 0)
    side1 = tuple(v for v in range(g.n) if color[v] == 1)
    return (side0, side1)


def distances_from(g: Graph, v: int) -> tuple[int, ...]:
    """Hop distances from ``v`` to every vertex of a connected graph."""
    if not (0 <= v < g.n):
        raise InvalidVertexSet(f"vertex {v} out of range")
    dist = [-1] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                queue.append(w)
    if any(d == -1 for d in dist):
        raise NotConnected("distances_from requires a connected graph")
    return tuple(dist)


def diameter(g: Graph) -> int:
    """Largest hop distance between any two vertices of a connected graph."""
    if g.n == 0:
        return 0
    if not is_connected(g):
        raise NotConnected("diameter requires a connected graph")
    return max(max(distances_from(g, v)) for v in range(g.n))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Subgraph induced on ``s`` plus the map from new to original indices."""
    ms = vertex_set(g, s)
    pos = {v: i for i, v in enumerate(ms)}
    edges = []
    for u in ms:
        for v in g.adj[u]:
            if v > u and v in pos:
                edges.append((pos[u], pos[v]))
    return new_graph(len(ms), edges), ms


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``s``."""
    ms = vertex_set(g, s)
    inside = set(ms)
    for u in ms:
        for v in g.adj[u]:
            if v > u and v in inside:
                return False
    return True


def degree_extrema(g: Graph) -> tuple[int, int]:
    """(minimum degree, maximum degree); (0, 0) on the empty graph."""
    if g.n == 0:
        return (0, 0)
    degs = [len(row) for row in g.adj]
    return (min(degs), max(degs))


# Edge-list text format: first line "n m", then m lines "u v" with 0-based
# indices and LF line endings.  The reader rejects duplicate edges (in either
# orientation), self-loops and out-of-range endpoints.

def edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, fp: TextIO) -> None:
    fp.write(edge_list_text(g))


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InvalidEdge("empty edge-list document")
    head = lines[0].split()
    if len(head) != 2:
        raise InvalidEdge(f"bad header line: {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise InvalidEdge(f"bad header line: {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise InvalidEdge(f"header declares {m} edges, found {len(lines) - 1}")
    seen: set[tuple[int, int]] = set()
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InvalidEdge(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidEdge(f"bad edge line: {ln!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InvalidEdge(f"duplicate edge ({u},{v})")
        seen.add(key)
        edges.append((u, v))
    return new_graph(n, edges)


def read_edge_list(fp: TextIO) -> Graph:
    return parse_edge_list(fp.read())


def require_nonempty(s: VertexSet) -> VertexSet:
    if not s:
        raise EmptySet("vertex set must be nonempty")
    return s
