"""Enumeration of capped configurations with a fixed pebble total.

A family is described by per-vertex caps plus a required total. Streams
are produced in lexicographic order of the counts vector, and a dynamic
programming counter provides exact family sizes, ranks, and unranking so
scans can be sharded into contiguous lexicographic ranges with
deterministic bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


@dataclass(frozen=True)
class EnumSpec:
    """Per-vertex caps and the required total of a finite family."""

    caps: tuple[int, ...]
    total: int

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.caps):
            raise ValueError("caps must be non-negative")
        if self.total < 0:
            raise ValueError("total must be non-negative")


def enumerate_capped(spec: EnumSpec) -> Iterator[tuple[int, ...]]:
    """Yield every counts vector with the given total respecting the caps,
    in lexicographic order. Empty stream when infeasible."""
    caps = spec.caps
    n = len(caps)
    suffix_cap = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_cap[i] = suffix_cap[i + 1] + caps[i]
    current = [0] * n

    def gen(pos: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            if remaining == 0:
                yield tuple(current)
            return
        lo = max(0, remaining - suffix_cap[pos + 1])
        hi = min(caps[pos], remaining)
        for value in range(lo, hi + 1):
            current[pos] = value
            yield from gen(pos + 1, remaining - value)
        current[pos] = 0

    if spec.total <= suffix_cap[0]:
        yield from gen(0, spec.total)


@lru_cache(maxsize=4096)
def _level_counts(caps: tuple[int, ...]) -> tuple[int, ...]:
    # coefficients of prod_v (1 + q + ... + q^caps[v])
    poly = [1]
    for cap in caps:
        prefix = [0]
        for c in poly:
            prefix.append(prefix[-1] + c)
        out = []
        for t in range(len(poly) + cap):
            hi = min(t, len(poly) - 1)
            lo = max(0, t - cap)
            out.append(prefix[hi + 1] - prefix[lo])
        poly = out
    return tuple(poly)


def count_capped(caps: Sequence[int], total: int) -> int:
    """Number of capped counts vectors with the given total (DP, exact)."""
    counts = _level_counts(tuple(caps))
    if not 0 <= total < len(counts):
        return 0
    return counts[total]


def level_counts(caps: Sequence[int]) -> tuple[int, ...]:
    """Family size of every total 0..sum(caps)."""
    return _level_counts(tuple(caps))


def rank_capped(caps: Sequence[int], vector: Sequence[int]) -> int:
    """Position of ``vector`` in the lexicographic stream of its family."""
    caps = tuple(caps)
    if len(vector) != len(caps):
        raise ValueError("vector length does not match caps")
    total = sum(vector)
    rank = 0
    remaining = total
    for pos, value in enumerate(vector):
        if not 0 <= value <= caps[pos]:
            raise ValueError(f"entry {value} at position {pos} violates cap")
        suffix = caps[pos + 1 :]
        for smaller in range(value):
            rank += count_capped(suffix, remaining - smaller)
        remaining -= value
    return rank


def unrank_capped(caps: Sequence[int], total: int, index: int) -> tuple[int, ...]:
    """Inverse of :func:`rank_capped` within the family (caps, total)."""
    caps = tuple(caps)
    if not 0 <= index < count_capped(caps, total):
        raise IndexError(f"index {index} outside family of size {count_capped(caps, total)}")
    out = []
    remaining = total
    for pos in range(len(caps)):
        suffix = caps[pos + 1 :]
        for value in range(min(caps[pos], remaining) + 1):
            block = count_capped(suffix, remaining - value)
            if index < block:
                out.append(value)
                remaining -= value
                break
            index -= block
        else:
            raise AssertionError("unrank ran out of digits")
    return tuple(out)


def enumerate_capped_range(
    spec: EnumSpec, start: int, stop: int
) -> Iterator[tuple[int, ...]]:
    """Stream the lexicographic slice [start, stop) of a capped family."""
    size = count_capped(spec.caps, spec.total)
    start = max(0, start)
    stop = min(stop, size)
    if start >= stop:
        return
    vector = list(unrank_capped(spec.caps, spec.total, start))
    stream = _resume_stream(spec, vector)
    for _ in range(stop - start):
        yield next(stream)


def _resume_stream(spec: EnumSpec, first: list[int]) -> Iterator[tuple[int, ...]]:
    caps = spec.caps
    n = len(caps)
    suffix_cap = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_cap[i] = suffix_cap[i + 1] + caps[i]
    current = list(first)

    def gen(pos: int, remaining: int, resume: bool) -> Iterator[tuple[int, ...]]:
        if pos == n:
            if remaining == 0:
                yield tuple(current)
            return
        lo = max(0, remaining - suffix_cap[pos + 1])
        if resume:
            lo = first[pos]
        hi = min(caps[pos], remaining)
        for value in range(lo, hi + 1):
            current[pos] = value
            yield from gen(pos + 1, remaining - value, resume and value == first[pos])
        current[pos] = 0

    yield from gen(0, spec.total, True)


def shard_ranges(family_size: int, shards: int) -> list[tuple[int, int]]:
    """Split [0, family_size) into near-even contiguous ranges."""
    shards = max(1, shards)
    base, extra = divmod(family_size, shards)
    ranges = []
    start = 0
    for i in range(shards):
        width = base + (1 if i < extra else 0)
        if width:
            ranges.append((start, start + width))
        start += width
    return ranges
