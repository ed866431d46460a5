"""Exact decision procedure for r-solvability of a pebble configuration.

The search explores the move tree depth first. Before expanding a state it
(a) returns solvable when some vertex meets the 2^d trivial cap, emitting
the greedy transport certificate, (b) abandons the branch when the weight
drops below 1, and (c) consults a memo table of previously refuted states.
Children are generated in ascending (source, target) order, so the first
certificate found is deterministic. Refuted states are memoized (solvable
states short-circuit the whole search); the table is bounded and rejects
new entries when full, which affects speed, never verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .configurations import (
    Configuration,
    Move,
    MoveError,
    as_counts,
    transport_moves,
)
from .graphs import Graph, GraphError, distances_from

#: Fixed per-vertex width of the packed-configuration memo key.
PACK_BITS = 6
PACK_MAX_COUNT = (1 << PACK_BITS) - 1
DEFAULT_MEMO_LIMIT = 1 << 24
#: Totals above this use the explicit-stack engine instead of recursion.
RECURSION_TOTAL_LIMIT = 64

NAIVE_MAX_TOTAL = 12
NAIVE_MAX_N = 8
NAIVE_NODE_LIMIT = 50_000_000


class CountOverflowError(OverflowError):
    """A pebble count exceeded the packed encoding's 6-bit field."""


class BudgetError(RuntimeError):
    """An operation exceeded its documented size budget."""


@dataclass
class SearchStats:
    """Counters describing one solver invocation.

    ``pruned_by_cap`` counts states resolved solvable by the trivial-cap
    fast path; ``pruned_by_weight`` counts branches refuted by weight < 1.
    """

    nodes_expanded: int = 0
    memo_hits: int = 0
    pruned_by_weight: int = 0
    pruned_by_cap: int = 0
    max_depth: int = 0

    def to_json_dict(self) -> dict:
        return {
            "nodesExpanded": self.nodes_expanded,
            "memoHits": self.memo_hits,
            "prunedByWeight": self.pruned_by_weight,
            "prunedByCap": self.pruned_by_cap,
            "maxDepth": self.max_depth,
        }


@dataclass
class SolveOutcome:
    """Verdict plus, when solvable, a replayable move sequence."""

    solvable: bool
    moves: tuple[Move, ...] | None
    stats: SearchStats

    @property
    def verdict(self) -> str:
        return "solvable" if self.solvable else "unsolvable"

    def to_json_dict(self, target: int, include_stats: bool = True) -> dict:
        out: dict = {
            "target": target,
            "verdict": self.verdict,
            "moves": [list(m) for m in self.moves] if self.moves is not None else None,
        }
        if include_stats:
            out["stats"] = self.stats.to_json_dict()
        return out


class RefutationCache:
    """Packed states known r-unsolvable, shareable across solver calls.

    Refutation is a property of (graph, target, state) alone, so reusing
    the set across many configurations of the same instance is sound and
    speeds up batch scans. The cache is bound to its instance and refuses
    use elsewhere.
    """

    def __init__(self, g: Graph, target: int, limit: int = DEFAULT_MEMO_LIMIT):
        self.graph = g
        self.target = target
        self.limit = limit
        self.keys: set[int] = set()

    def check_instance(self, g: Graph, target: int) -> None:
        if g is not self.graph and g != self.graph:
            raise ValueError("refutation cache bound to a different graph")
        if target != self.target:
            raise ValueError("refutation cache bound to a different target")


def pack_counts(counts: tuple[int, ...]) -> int:
    key = 0
    for v, c in enumerate(counts):
        if c > PACK_MAX_COUNT:
            raise CountOverflowError(
                f"count {c} at vertex {v} exceeds packed limit {PACK_MAX_COUNT}"
            )
        key |= c << (PACK_BITS * v)
    return key


def is_solvable(
    g: Graph,
    target: int,
    config: Configuration,
    *,
    memo: RefutationCache | None = None,
    memo_limit: int = DEFAULT_MEMO_LIMIT,
    engine: str = "auto",
) -> SolveOutcome:
    """Decide whether ``config`` is target-solvable on ``g``.

    Args:
        memo: optional shared refutation cache for batch scans over one
            (graph, target) instance; by default each call owns its table.
        memo_limit: entry budget when no shared cache is given.
        engine: "auto" picks recursion for totals <= 64 and the
            explicit-stack engine beyond; "recursive"/"iterative" force.

    Returns:
        SolveOutcome whose move list, when solvable, replays from
        ``config`` to a state with a pebble on the target.
    """
    counts = as_counts(config)
    if len(counts) != g.n:
        raise GraphError("configuration size does not match graph")
    if not 0 <= target < g.n:
        raise GraphError(f"target {target} out of range")
    if any(c > PACK_MAX_COUNT for c in counts):
        raise CountOverflowError(
            f"initial counts exceed the packed encoding limit {PACK_MAX_COUNT}"
        )

    if memo is not None:
        memo.check_instance(g, target)
        refuted = memo.keys
        limit = memo.limit
    else:
        refuted = set()
        limit = memo_limit

    dist = distances_from(g, target)
    maxd = max(dist)
    cap2 = [1 << d for d in dist]
    pweight = [1 << (maxd - d) for d in dist]
    threshold = 1 << maxd
    stats = SearchStats()

    # root fast paths, in contract order
    for v in range(g.n):
        if counts[v] >= cap2[v]:
            stats.pruned_by_cap += 1
            return SolveOutcome(True, tuple(transport_moves(g, dist, v)), stats)
    wnum = sum(c * p for c, p in zip(counts, pweight))
    if wnum < threshold:
        stats.pruned_by_weight += 1
        return SolveOutcome(False, None, stats)

    key = pack_counts(counts)
    if key in refuted:
        stats.memo_hits += 1
        return SolveOutcome(False, None, stats)

    total = sum(counts)
    if engine == "auto":
        engine = "recursive" if total <= RECURSION_TOTAL_LIMIT else "iterative"
    if engine == "recursive":
        moves = _search_recursive(
            g, target, list(counts), key, wnum, dist, cap2, pweight, threshold,
            refuted, limit, stats,
        )
    elif engine == "iterative":
        moves = _search_iterative(
            g, target, list(counts), key, wnum, dist, cap2, pweight, threshold,
            refuted, limit, stats,
        )
    else:
        raise ValueError(f"unknown engine {engine!r}")
    if moves is None:
        return SolveOutcome(False, None, stats)
    return SolveOutcome(True, tuple(moves), stats)


def _search_recursive(
    g, target, counts, key, wnum, dist, cap2, pweight, threshold,
    refuted, limit, stats,
):
    adjacency = g.adjacency
    n = g.n

    def rec(key: int, wnum: int, depth: int) -> list[Move] | None:
        stats.nodes_expanded += 1
        if depth > stats.max_depth:
            stats.max_depth = depth
        for u in range(n):
            cu = counts[u]
            if cu < 2:
                continue
            pu2 = 2 << (PACK_BITS * u)
            wu2 = 2 * pweight[u]
            for w in adjacency[u]:
                cw = counts[w] + 1
                if cw >= cap2[w]:
                    stats.pruned_by_cap += 1
                    if depth + 1 > stats.max_depth:
                        stats.max_depth = depth + 1
                    return [(u, w)] + transport_moves(g, dist, w)
                if cw > PACK_MAX_COUNT:
                    raise CountOverflowError(
                        f"count at vertex {w} exceeded {PACK_MAX_COUNT} mid-search"
                    )
                child_wnum = wnum - wu2 + pweight[w]
                if child_wnum < threshold:
                    stats.pruned_by_weight += 1
                    continue
                child_key = key - pu2 + (1 << (PACK_BITS * w))
                if child_key in refuted:
                    stats.memo_hits += 1
                    continue
                counts[u] = cu - 2
                counts[w] = cw
                sub = rec(child_key, child_wnum, depth + 1)
                counts[u] = cu
                counts[w] = cw - 1
                if sub is not None:
                    return [(u, w)] + sub
        if len(refuted) < limit:
            refuted.add(key)
        return None

    return rec(key, wnum, 0)


def _search_iterative(
    g, target, counts, key, wnum, dist, cap2, pweight, threshold,
    refuted, limit, stats,
):
    # Mirrors _search_recursive exactly (same visit order, same
    # certificate, same stats); recursion depth is bounded by the pebble
    # total, so this engine serves totals beyond the recursion limit.
    adjacency = g.adjacency
    n = g.n
    # frame: [key, wnum, u, wi] with (u, wi) the next child cursor
    frames: list[list[int]] = [[key, wnum, 0, 0]]
    path: list[Move] = []
    stats.nodes_expanded += 1
    while frames:
        frame = frames[-1]
        fkey, fwnum, u, wi = frame
        depth = len(frames) - 1
        if depth > stats.max_depth:
            stats.max_depth = depth
        advanced = False
        while u < n:
            cu = counts[u]
            if cu < 2:
                u += 1
                wi = 0
                continue
            adj_u = adjacency[u]
            if wi >= len(adj_u):
                u += 1
                wi = 0
                continue
            w = adj_u[wi]
            wi += 1
            cw = counts[w] + 1
            if cw >= cap2[w]:
                stats.pruned_by_cap += 1
                if depth + 1 > stats.max_depth:
                    stats.max_depth = depth + 1
                return path + [(u, w)] + transport_moves(g, dist, w)
            if cw > PACK_MAX_COUNT:
                raise CountOverflowError(
                    f"count at vertex {w} exceeded {PACK_MAX_COUNT} mid-search"
                )
            child_wnum = fwnum - 2 * pweight[u] + pweight[w]
            if child_wnum < threshold:
                stats.pruned_by_weight += 1
                continue
            child_key = fkey - (2 << (PACK_BITS * u)) + (1 << (PACK_BITS * w))
            if child_key in refuted:
                stats.memo_hits += 1
                continue
            # descend
            frame[2], frame[3] = u, wi
            counts[u] = cu - 2
            counts[w] = cw
            path.append((u, w))
            frames.append([child_key, child_wnum, 0, 0])
            stats.nodes_expanded += 1
            advanced = True
            break
        if advanced:
            continue
        # children exhausted: refute this state and backtrack
        if len(refuted) < limit:
            refuted.add(fkey)
        frames.pop()
        if path:
            src, dst = path.pop()
            counts[src] += 2
            counts[dst] -= 1
    return None


def is_solvable_naive(
    g: Graph,
    target: int,
    config: Configuration,
    *,
    node_limit: int = NAIVE_NODE_LIMIT,
) -> bool:
    """Ground-truth oracle: plain recursion, no memo, no pruning.

    Budget: total <= 12 pebbles and n <= 8 vertices, plus a node-count
    safety net; anything larger raises BudgetError.
    """
    counts = list(as_counts(config))
    if len(counts) != g.n:
        raise GraphError("configuration size does not match graph")
    total = sum(counts)
    if total > NAIVE_MAX_TOTAL or g.n > NAIVE_MAX_N:
        raise BudgetError(
            f"naive oracle budget is total <= {NAIVE_MAX_TOTAL} and "
            f"n <= {NAIVE_MAX_N}; got total={total}, n={g.n}"
        )
    adjacency = g.adjacency
    n = g.n
    nodes = 0

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            raise BudgetError(f"naive oracle exceeded {node_limit} nodes")
        if counts[target] >= 1:
            return True
        for u in range(n):
            if counts[u] >= 2:
                for w in adjacency[u]:
                    counts[u] -= 2
                    counts[w] += 1
                    hit = rec()
                    counts[u] += 2
                    counts[w] -= 1
                    if hit:
                        return True
        return False

    return rec()


@dataclass
class ReplayResult:
    """Outcome of replaying a move sequence against a configuration."""

    ok: bool
    final_counts: tuple[int, ...] | None = None
    failed_step: int | None = None
    reason: str | None = None


def replay(
    g: Graph, target: int, config: Configuration, moves: list[Move] | tuple[Move, ...]
) -> ReplayResult:
    """Replay ``moves`` from ``config``; independent of the solver."""
    counts = list(as_counts(config))
    if len(counts) != g.n:
        return ReplayResult(False, reason="configuration size does not match graph")
    for step, (src, dst) in enumerate(moves):
        if not (0 <= src < g.n and 0 <= dst < g.n):
            return ReplayResult(False, failed_step=step, reason="vertex out of range")
        if dst not in g.adjacency[src]:
            return ReplayResult(
                False, failed_step=step, reason=f"{src} and {dst} not adjacent"
            )
        if counts[src] < 2:
            return ReplayResult(
                False,
                failed_step=step,
                reason=f"vertex {src} holds {counts[src]} pebbles, need 2",
            )
        counts[src] -= 2
        counts[dst] += 1
    if counts[target] < 1:
        return ReplayResult(
            False, final_counts=tuple(counts), reason="no pebble on target after replay"
        )
    return ReplayResult(True, final_counts=tuple(counts))


def verify_certificate(
    g: Graph, target: int, config: Configuration, moves: list[Move] | tuple[Move, ...]
) -> bool:
    """True iff the moves replay legally and end with a pebble on target."""
    return replay(g, target, config, moves).ok
