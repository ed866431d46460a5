"""Vertex orbits under the full automorphism group, for small graphs.

Orbits justify target symmetry reduction: two targets in the same orbit
have identical pebbling behaviour, so one representative per orbit
suffices. Computed exactly by iterated colour refinement plus a
backtracking search for an automorphism between each candidate pair;
the per-pair search is complete, so a failed search proves the pair
lies in different orbits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError

MAX_ORBIT_N = 32


class OrbitBudgetError(GraphError):
    """Raised when a graph exceeds the automorphism search budget."""


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of the vertices into automorphism orbits.

    ``orbit_of[v]`` is the orbit id of vertex v; ids number the orbits by
    their minimum vertex. ``representatives`` holds that minimum vertex
    for each orbit, in increasing order.
    """

    orbit_of: tuple[int, ...]
    representatives: tuple[int, ...]

    @property
    def orbit_count(self) -> int:
        return len(self.representatives)

    def members(self, orbit_id: int) -> tuple[int, ...]:
        return tuple(v for v, o in enumerate(self.orbit_of) if o == orbit_id)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(self.members(i)) for i in range(self.orbit_count))


def refined_colors(g: Graph) -> tuple[int, ...]:
    """Stable vertex colouring under iterated neighbour-multiset refinement.

    Vertices in the same orbit always share a colour; the converse may
    fail, which the backtracking search resolves.
    """
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in g.adjacency[v])))
            for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new_colors = [palette[sig] for sig in signatures]
        if new_colors == colors:
            return tuple(colors)
        colors = new_colors


def find_automorphism(g: Graph, source: int, image: int) -> tuple[int, ...] | None:
    """Search for an automorphism mapping ``source`` to ``image``.

    Returns one such permutation in one-line notation, or None if no
    automorphism maps source to image. The search is exhaustive over
    colour-consistent partial maps, extended in breadth-first order from
    ``source`` so every new vertex is constrained by a mapped neighbour.
    """
    colors = refined_colors(g)
    if colors[source] != colors[image]:
        return None
    order = _bfs_order(g, source)
    masks = g.neighbor_masks
    n = g.n
    perm = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for c in range(n):
            if used[c] or colors[c] != colors[v]:
                continue
            if _consistent(masks, perm, v, c):
                perm[v] = c
                used[c] = True
                if extend(pos + 1):
                    return True
                perm[v] = -1
                used[c] = False
        return False

    perm[source] = image
    used[image] = True
    if extend(1):
        return tuple(perm)
    return None


def _consistent(masks, perm, v, c) -> bool:
    # v -> c must preserve adjacency and non-adjacency against every
    # already-mapped vertex.
    vmask = masks[v]
    cmask = masks[c]
    for w, pw in enumerate(perm):
        if pw < 0 or w == v:
            continue
        if ((vmask >> w) & 1) != ((cmask >> pw) & 1):
            return False
    return True


def _bfs_order(g: Graph, start: int) -> list[int]:
    order = [start]
    seen = [False] * g.n
    seen[start] = True
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for u in g.adjacency[v]:
            if not seen[u]:
                seen[u] = True
                order.append(u)
    return order


def vertex_orbits(g: Graph) -> OrbitPartition:
    """Exact orbit partition of the automorphism group.

    Budget: n <= 32 (backtracking permutation search).
    """
    if g.n > MAX_ORBIT_N:
        raise OrbitBudgetError(
            f"orbit computation budgeted for n <= {MAX_ORBIT_N}, got {g.n}"
        )
    parent = list(range(g.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    colors = refined_colors(g)
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if colors[a] != colors[b] or find(a) == find(b):
                continue
            perm = find_automorphism(g, a, b)
            if perm is not None:
                for w in range(g.n):
                    union(w, perm[w])

    roots = sorted({find(v) for v in range(g.n)})
    root_ids = {r: i for i, r in enumerate(roots)}
    orbit_of = tuple(root_ids[find(v)] for v in range(g.n))
    return OrbitPartition(orbit_of=orbit_of, representatives=tuple(roots))
