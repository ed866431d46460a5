"""Exhaustive isomorph-free generation of small connected cubic graphs.

Used to cross-check the vendored fixture corpus: the five connected cubic
graphs on 12 vertices with girth 3 and diameter 3 are recovered from
scratch here, which both validates the hand-transcribed fixtures and
pins down the one member whose adjacency is not published alongside the
others. The canonical certificate is internal machinery for deduplication
and isomorphism checks, not a public graph interface.

Generation: backtracking over adjacency with the usual symmetry breaks
(the lowest-index incomplete vertex picks its neighbours in increasing
order, and among untouched vertices only the smallest may be picked).
A branch whose lowest incomplete vertex is still untouched is pruned,
which forces connectivity. Survivors are deduplicated by certificate.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .graphs import Graph, from_edge_list, metrics
from .orbits import refined_colors

#: Known counts of connected cubic graphs, for generator self-checks.
CONNECTED_CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


def canonical_certificate(g: Graph) -> tuple[int, ...]:
    """Canonical form of the adjacency matrix, invariant under relabeling.

    Individualisation-refinement search for the lexicographically least
    upper-triangle bitstring over all orderings compatible with the
    equitable partition. Suitable for the census sizes (n <= ~16).
    """
    n = g.n
    adjacency = g.adjacency

    def refine(partition: list[list[int]]) -> list[list[int]]:
        cells = [list(c) for c in partition]
        changed = True
        while changed:
            changed = False
            index_of = {}
            for ci, cell in enumerate(cells):
                for v in cell:
                    index_of[v] = ci
            for ci, cell in enumerate(cells):
                if len(cell) == 1:
                    continue
                signature = {}
                for v in cell:
                    counts = [0] * len(cells)
                    for u in adjacency[v]:
                        counts[index_of[u]] += 1
                    signature.setdefault(tuple(counts), []).append(v)
                if len(signature) > 1:
                    pieces = [signature[k] for k in sorted(signature)]
                    cells[ci : ci + 1] = pieces
                    changed = True
                    break
        return cells

    best: list[int] | None = None

    def triangle_bits(order: list[int]) -> list[int]:
        position = [0] * n
        for i, v in enumerate(order):
            position[v] = i
        bits = []
        for j in range(1, n):
            vj = order[j]
            row = 0
            for u in adjacency[vj]:
                if position[u] < j:
                    row |= 1 << position[u]
            bits.append(row)
        return bits

    def descend(partition: list[list[int]]) -> None:
        nonlocal best
        cells = refine(partition)
        split = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if split is None:
            order = [c[0] for c in cells]
            bits = triangle_bits(order)
            if best is None or bits < best:
                best = bits
            return
        for v in sorted(cells[split]):
            rest = [u for u in cells[split] if u != v]
            descend(cells[:split] + [[v], rest] + cells[split + 1 :])

    colors = refined_colors(g)
    initial: dict[int, list[int]] = {}
    for v in range(n):
        initial.setdefault(colors[v], []).append(v)
    descend([initial[c] for c in sorted(initial)])
    assert best is not None
    return (n, *best)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(map(len, g1.adjacency)) != sorted(map(len, g2.adjacency)):
        return False
    return canonical_certificate(g1) == canonical_certificate(g2)


def _cubic_adjacency_search(n: int) -> Iterator[list[tuple[int, int]]]:
    """Yield edge lists of connected cubic graphs on n labelled vertices,
    with symmetry-broken search order (duplicates per class remain)."""
    adj: list[set[int]] = [set() for _ in range(n)]
    deg = [0] * n
    edges: list[tuple[int, int]] = []

    def rec(active: int, min_next: int) -> Iterator[list[tuple[int, int]]]:
        v = next((w for w in range(n) if deg[w] < 3), -1)
        if v == -1:
            yield list(edges)
            return
        if deg[v] == 0 and v > 0:
            # lowest incomplete vertex untouched: earlier component closed
            return
        if v != active:
            min_next = v + 1
        needed = 3 - deg[v]
        candidates = [
            u
            for u in range(min_next, n)
            if deg[u] < 3 and u not in adj[v]
        ]
        if len(candidates) < needed:
            return
        first_fresh = next((u for u in candidates if deg[u] == 0), None)
        for u in candidates:
            if deg[u] == 0 and u != first_fresh:
                continue
            adj[v].add(u)
            adj[u].add(v)
            deg[v] += 1
            deg[u] += 1
            edges.append((v, u))
            yield from rec(v, u + 1)
            edges.pop()
            adj[v].discard(u)
            adj[u].discard(v)
            deg[v] -= 1
            deg[u] -= 1

    yield from rec(-1, 0)


def connected_cubic_graphs(
    n: int, keep: Callable[[Graph], bool] | None = None
) -> list[Graph]:
    """All connected cubic graphs on n vertices up to isomorphism.

    ``keep`` optionally filters classes (applied before deduplication to
    skip certificate work on rejects). Practical up to n = 14.
    """
    if n < 4 or n % 2:
        raise ValueError("cubic graphs need even n >= 4")
    seen: set[tuple[int, ...]] = set()
    out: list[Graph] = []
    for edges in _cubic_adjacency_search(n):
        g = from_edge_list(n, edges)
        if keep is not None and not keep(g):
            continue
        cert = canonical_certificate(g)
        if cert not in seen:
            seen.add(cert)
            out.append(g)
    return out


def cubic_girth3_diameter3_on_12() -> list[Graph]:
    """The connected cubic graphs on 12 vertices with girth 3, diameter 3."""

    def keep(g: Graph) -> bool:
        m = metrics(g)
        return m.girth == 3 and m.diameter == 3

    return connected_cubic_graphs(12, keep=keep)
