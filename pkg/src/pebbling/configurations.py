"""Pebble configurations, pebbling moves, and the weight function.

A configuration assigns a non-negative pebble count to every vertex. A
move removes two pebbles from a vertex and places one on a neighbour, so
the total drops by exactly one per move. The weight of a configuration
against a target r is sum(C(v) / 2^d(v,r)); it never increases under a
move, so weight < 1 certifies unsolvability. Conversely a vertex holding
at least 2^d(v,r) pebbles can ship one pebble to r greedily along a
shortest path, which gives the trivial-solvability fast path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import Graph, distances_from

#: A pebbling move as (source, target) vertex indices.
Move = tuple[int, int]


class MoveError(ValueError):
    """Raised for an illegal pebbling move."""


@dataclass(frozen=True)
class Configuration:
    """Immutable per-vertex pebble counts with a cached total."""

    counts: tuple[int, ...]
    total: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.counts):
            raise ValueError("pebble counts must be non-negative")
        object.__setattr__(self, "total", sum(self.counts))

    @classmethod
    def of(cls, counts: Iterable[int]) -> "Configuration":
        return cls(tuple(int(c) for c in counts))

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, v: int) -> int:
        return self.counts[v]


def as_counts(config: Configuration | Sequence[int]) -> tuple[int, ...]:
    if isinstance(config, Configuration):
        return config.counts
    return tuple(int(c) for c in config)


def apply_move(g: Graph, config: Configuration, move: Move) -> Configuration:
    """Apply one pebbling move, returning a new configuration.

    Requires at least two pebbles at the source and an edge between the
    endpoints; the input configuration is never mutated.
    """
    src, dst = move
    counts = as_counts(config)
    if len(counts) != g.n:
        raise MoveError("configuration size does not match graph")
    if not (0 <= src < g.n and 0 <= dst < g.n):
        raise MoveError(f"move ({src}, {dst}) out of range")
    if dst not in g.adjacency[src]:
        raise MoveError(f"vertices {src} and {dst} are not adjacent")
    if counts[src] < 2:
        raise MoveError(f"vertex {src} holds {counts[src]} pebbles, need 2")
    out = list(counts)
    out[src] -= 2
    out[dst] += 1
    return Configuration(tuple(out))


def weight(config: Configuration | Sequence[int], dist: Sequence[int]) -> Fraction:
    """Exact weight sum(C(v) / 2^dist(v)); no floating point."""
    counts = as_counts(config)
    if len(counts) != len(dist):
        raise ValueError("distance vector does not match configuration size")
    return sum(
        (Fraction(c, 1 << d) for c, d in zip(counts, dist)),
        start=Fraction(0),
    )


def trivially_solvable(
    config: Configuration | Sequence[int], dist: Sequence[int]
) -> bool:
    """True iff some vertex v holds at least 2^dist(v) pebbles.

    At the target itself (dist 0) this reads "at least one pebble", so a
    single predicate covers both fast paths.
    """
    counts = as_counts(config)
    if len(counts) != len(dist):
        raise ValueError("distance vector does not match configuration size")
    return any(c >= (1 << d) for c, d in zip(counts, dist))


def unsolvability_caps(g: Graph, target: int) -> tuple[int, ...]:
    """Per-vertex maxima 2^d(v,target) - 1 that any unsolvable configuration
    respects (cap 0 at the target itself)."""
    return tuple((1 << d) - 1 for d in distances_from(g, target))


def shortest_path_to(g: Graph, dist: Sequence[int], start: int) -> list[int]:
    """One shortest path from ``start`` to the BFS root of ``dist``.

    Deterministic: each hop picks the smallest-index neighbour one step
    closer to the root.
    """
    path = [start]
    v = start
    while dist[v] > 0:
        v = min(u for u in g.adjacency[v] if dist[u] == dist[v] - 1)
        path.append(v)
    return path


def transport_moves(g: Graph, dist: Sequence[int], source: int) -> list[Move]:
    """Moves delivering one pebble from a stack of 2^d at ``source`` to the
    BFS root, halving along the deterministic shortest path."""
    path = shortest_path_to(g, dist, source)
    moves: list[Move] = []
    for i in range(len(path) - 1):
        repeats = 1 << (dist[source] - 1 - i)
        moves.extend([(path[i], path[i + 1])] * repeats)
    return moves
