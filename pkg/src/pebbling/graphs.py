"""Core graph type, distance/metric computations, and the graph families
studied by the solver (flower snarks, Petersen, paths, cycles, cliques).

Every graph is simple, undirected, and connected; vertices are 0-based
indices. Optional labels (``"z0"``, ``"x-1"``, ...) are display metadata
only and never enter any algorithm.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph.

    Attributes:
        n: number of vertices (positive).
        adjacency: per-vertex sorted tuple of neighbour indices; symmetric,
            no self-loops, no duplicates.
        labels: optional per-vertex display names.
        name: optional graph identifier used in reports.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    name: str | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"vertex count must be positive, got {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbour list of {v} not sorted/deduplicated")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length does not match vertex count")
        if not _is_connected(self.n, self.adjacency):
            raise GraphError("graph is disconnected")

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def label(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency rows as bitmasks (bit u set iff u is a neighbour)."""
        masks = []
        for nbrs in self.adjacency:
            m = 0
            for u in nbrs:
                m |= 1 << u
            masks.append(m)
        return tuple(masks)

    def resolve_vertex(self, spec: int | str) -> int:
        """Resolve a vertex given as an index or a display label.

        Labels take precedence: on a graph labelled "1".."12", the string
        "1" names the vertex labelled 1 (index 0), not index 1.
        """
        if isinstance(spec, int):
            if not 0 <= spec < self.n:
                raise GraphError(f"vertex index {spec} out of range")
            return spec
        if self.labels is not None and spec in self.labels:
            return self.labels.index(spec)
        try:
            idx = int(spec)
        except ValueError:
            raise GraphError(f"unknown vertex {spec!r}") from None
        if not 0 <= idx < self.n:
            raise GraphError(f"vertex index {idx} out of range")
        return idx


def _is_connected(n: int, adjacency: Sequence[Sequence[int]]) -> bool:
    seen = bytearray(n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for u in adjacency[v]:
            if not seen[u]:
                seen[u] = 1
                count += 1
                queue.append(u)
    return count == n


def from_edge_list(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
    name: str | None = None,
) -> Graph:
    """Build a graph from unordered vertex pairs.

    Duplicate edges are stored once. Self-loops, out-of-range endpoints,
    and disconnected results are rejected.
    """
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    return Graph(
        n=n,
        adjacency=adjacency,
        labels=tuple(labels) if labels is not None else None,
        name=name,
    )


def distances_from(g: Graph, source: int) -> tuple[int, ...]:
    """Breadth-first distances from ``source`` to every vertex."""
    if not 0 <= source < g.n:
        raise GraphError(f"source {source} out of range")
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for u in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = d
                queue.append(u)
    return tuple(dist)


def neighborhood(g: Graph, source: int, k: int) -> frozenset[int]:
    """Vertices at exact distance k from ``source``."""
    dist = distances_from(g, source)
    return frozenset(v for v in range(g.n) if dist[v] == k)


@dataclass(frozen=True)
class GraphMetrics:
    """Distance and cycle metrics of a connected graph.

    ``girth`` is None for acyclic graphs (trees).
    """

    diameter: int
    girth: int | None
    eccentricity: tuple[int, ...]
    degree_sequence: tuple[int, ...]

    @property
    def is_regular(self) -> bool:
        return len(set(self.degree_sequence)) <= 1


def metrics(g: Graph) -> GraphMetrics:
    """Compute diameter, girth, per-vertex eccentricity, and degree sequence."""
    ecc = []
    girth: int | None = None
    for s in range(g.n):
        dist = list(distances_from(g, s))
        parent = _bfs_parents(g, s)
        ecc.append(max(dist))
        # Every shortest cycle is detected by rooting a BFS at one of its
        # vertices and inspecting non-tree edges.
        for u, v in g.edges():
            if parent[u] == v or parent[v] == u:
                continue
            cycle_len = dist[u] + dist[v] + 1
            if girth is None or cycle_len < girth:
                girth = cycle_len
    degree_sequence = tuple(sorted(len(nbrs) for nbrs in g.adjacency))
    return GraphMetrics(
        diameter=max(ecc),
        girth=girth,
        eccentricity=tuple(ecc),
        degree_sequence=degree_sequence,
    )


def _bfs_parents(g: Graph, source: int) -> list[int]:
    parent = [-1] * g.n
    parent[source] = source
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if parent[u] < 0:
                parent[u] = v
                queue.append(u)
    parent[source] = -1
    return parent


# ---------------------------------------------------------------------------
# Graph families
# ---------------------------------------------------------------------------


def flower_snark(m: int) -> Graph:
    """The flower snark J_m for odd m = 2k+1 >= 3 (4m vertices, cubic).

    Construction: an inner m-cycle v_i, star centres z_i joined to
    v_i, x_i, y_i, and a twisted outer 2m-cycle running through the x path
    x_{-k}..x_k and the y path y_{-k}..y_k, closed by the cross edges
    x_k y_{-k} and y_k x_{-k}. Indices are the symmetric residues
    -k..k of Z_m; for m=3 the result carries the labels v0, v1, v-1, ...
    """
    if m < 3 or m % 2 == 0:
        raise GraphError(f"flower snark requires odd m >= 3, got {m}")
    k = (m - 1) // 2

    def disp(j: int) -> int:
        return j if j <= k else j - m

    v = lambda j: j % m
    x = lambda j: m + j % m
    y = lambda j: 2 * m + j % m
    z = lambda j: 3 * m + j % m

    edges: list[tuple[int, int]] = []
    for j in range(m):
        edges.append((v(j), v(j + 1)))
        edges.append((z(j), v(j)))
        edges.append((z(j), x(j)))
        edges.append((z(j), y(j)))
    # outer paths over the symmetric index range, then the twist
    for j in range(-k, k):
        edges.append((x(j), x(j + 1)))
        edges.append((y(j), y(j + 1)))
    edges.append((x(k), y(-k)))
    edges.append((y(k), x(-k)))

    labels = (
        [f"v{disp(j)}" for j in range(m)]
        + [f"x{disp(j)}" for j in range(m)]
        + [f"y{disp(j)}" for j in range(m)]
        + [f"z{disp(j)}" for j in range(m)]
    )
    return from_edge_list(4 * m, edges, labels=labels, name=f"flower:{m}")


#: Adjacency of the Petersen graph in the label order below: outer 5-cycle
#: r e0 e1 b-1 b0 plus inner pentagram, drawn with spokes r-a0, e0-e-1,
#: e1-a-1, b-1-a1, b0-b1.
_PETERSEN_LABELS = ("r", "e0", "e1", "e-1", "a0", "a1", "a-1", "b0", "b1", "b-1")
_PETERSEN_EDGES = (
    ("r", "e0"), ("r", "a0"), ("r", "b0"),
    ("e0", "e1"), ("e0", "e-1"),
    ("a0", "a1"), ("a0", "a-1"),
    ("b0", "b1"), ("b0", "b-1"),
    ("e-1", "a1"), ("a-1", "b1"), ("e1", "a-1"),
    ("a1", "b-1"), ("e-1", "b1"), ("e1", "b-1"),
)


def petersen() -> Graph:
    """The 10-vertex Petersen graph (cubic, girth 5, diameter 2)."""
    index = {lab: i for i, lab in enumerate(_PETERSEN_LABELS)}
    edges = [(index[a], index[b]) for a, b in _PETERSEN_EDGES]
    return from_edge_list(10, edges, labels=_PETERSEN_LABELS, name="petersen")


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], name=f"path:{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return from_edge_list(n, edges, name=f"cycle:{n}")


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return from_edge_list(n, edges, name=f"complete:{n}")


_GENERATORS = {
    "flower": (flower_snark, True),
    "petersen": (petersen, False),
    "path": (path_graph, True),
    "cycle": (cycle_graph, True),
    "complete": (complete_graph, True),
}


def generate(spec: str) -> Graph:
    """Build a family graph from a spec string like "flower:3" or "petersen"."""
    head, _, arg = spec.partition(":")
    if head not in _GENERATORS:
        raise GraphError(f"unknown generator {head!r}")
    func, takes_arg = _GENERATORS[head]
    if takes_arg:
        if not arg:
            raise GraphError(f"generator {head!r} needs a size, e.g. {head}:3")
        return func(int(arg))
    if arg:
        raise GraphError(f"generator {head!r} takes no argument")
    return func()
