"""Exact level-by-level computation of the whole unsolvable family.

For a fixed graph and target, every r-unsolvable configuration respects
the per-vertex caps 2^d(v,r) - 1 and has no pebble on r, and removing a
pebble from an unsolvable configuration leaves it unsolvable. The family
therefore decomposes into levels by total, computable as a fixed point:

  * a configuration with no legal move (every count <= 1) is unsolvable
    iff the target is empty;
  * a configuration with moves is unsolvable iff every legal move lands
    in the unsolvable set one level below (a move to the target, or one
    that pushes a vertex past its cap, lands in a solvable state).

Level t+1 members with moves always have all children in level t, so the
reverse expansion of level t (undoing one move) plus the moveless seeds
covers every candidate. Once a level comes out empty, all higher levels
are empty too, so the sweep terminates with the exact maximum unsolvable
total. Everything is vectorised over packed 64-bit configuration keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .configurations import unsolvability_caps
from .graphs import Graph

#: Packed keys must fit a signed 64-bit integer with room for arithmetic.
MAX_KEY_BITS = 62


class SweepBudgetError(RuntimeError):
    """The capped family cannot be packed into 64-bit sweep keys."""


def fits_sweep(g: Graph, target: int) -> bool:
    caps = unsolvability_caps(g, target)
    # uint8 count matrices bound individual caps at 255
    return sum(c.bit_length() for c in caps) <= MAX_KEY_BITS and max(caps) <= 255


@dataclass
class SweepResult:
    """Unsolvable family of one (graph, target), grouped by total.

    ``levels[t]`` is a lexicographically sorted uint8 matrix of the
    unsolvable configurations with t pebbles; the list covers totals
    0..max and drops trailing empty levels. ``complete`` is False only
    when the sweep was cut off at ``max_total`` before reaching an empty
    level.
    """

    target: int
    caps: tuple[int, ...]
    levels: list[np.ndarray]
    candidates_checked: int
    complete: bool

    @property
    def max_unsolvable(self) -> int:
        if not self.complete:
            raise ValueError("sweep was truncated; maximum not established")
        return len(self.levels) - 1

    def level_sizes(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def member_count(self) -> int:
        return sum(len(level) for level in self.levels)

    def witness(self, total: int) -> tuple[int, ...] | None:
        """Lexicographically least unsolvable configuration at ``total``."""
        if total >= len(self.levels) or len(self.levels[total]) == 0:
            return None
        return tuple(int(c) for c in self.levels[total][0])

    def stacked(self, totals: range | None = None) -> np.ndarray:
        """All members, optionally restricted to totals in ``totals``."""
        picks = [
            level
            for t, level in enumerate(self.levels)
            if totals is None or t in totals
        ]
        if not picks:
            return np.empty((0, len(self.caps)), dtype=np.uint8)
        return np.vstack(picks)


def _member_mask(sorted_keys: np.ndarray, queries: np.ndarray) -> np.ndarray:
    idx = np.searchsorted(sorted_keys, queries)
    found = np.zeros(len(queries), dtype=bool)
    inside = idx < len(sorted_keys)
    found[inside] = sorted_keys[idx[inside]] == queries[inside]
    return found


def sweep_unsolvable(
    g: Graph, target: int, *, max_total: int | None = None
) -> SweepResult:
    """Compute the unsolvable family of (g, target) level by level.

    Args:
        max_total: stop after this level even if it is non-empty (used by
            fixed-total witness queries); by default the sweep runs until
            a level comes out empty, establishing the maximum.

    Raises:
        SweepBudgetError: when the packed key width exceeds 62 bits.
    """
    caps = unsolvability_caps(g, target)
    n = g.n
    bits = [c.bit_length() for c in caps]
    if sum(bits) > MAX_KEY_BITS or max(caps) > 255:
        raise SweepBudgetError(
            f"capped family needs {sum(bits)} key bits (limit {MAX_KEY_BITS}) "
            f"and per-vertex caps <= 255 (max {max(caps)}); "
            "use a solver-driven scan instead"
        )
    shifts = [0] * n
    acc = 0
    for v in range(n - 1, -1, -1):
        shifts[v] = acc
        acc += bits[v]
    place = [1 << s for s in shifts]
    masks = [(1 << b) - 1 for b in bits]
    directed = [(u, w) for u in range(n) for w in g.adjacency[u]]
    pebbled = [v for v in range(n) if caps[v] >= 1]

    def decode(keys: np.ndarray) -> np.ndarray:
        out = np.zeros((len(keys), n), dtype=np.uint8)
        for v in range(n):
            if bits[v]:
                out[:, v] = ((keys >> shifts[v]) & masks[v]).astype(np.uint8)
        return out

    levels: list[np.ndarray] = [np.zeros((1, n), dtype=np.uint8)]
    level_keys = np.zeros(1, dtype=np.int64)
    candidates_checked = 1
    complete = True
    t = 0
    while True:
        if max_total is not None and t >= max_total:
            complete = False
            break
        t += 1
        prev = levels[-1]
        pieces: list[np.ndarray] = []
        # reverse moves: add 2 pebbles at u, remove 1 from a neighbour v
        for u, v in directed:
            if caps[u] < 2 or caps[v] < 1:
                continue
            mask = (prev[:, v] >= 1) & (prev[:, u] <= caps[u] - 2)
            if mask.any():
                pieces.append(level_keys[mask] + (2 * place[u] - place[v]))
        # moveless seeds: t distinct single pebbles off the target
        if t <= len(pebbled):
            seed_keys = [
                sum(place[v] for v in combo) for combo in combinations(pebbled, t)
            ]
            if seed_keys:
                pieces.append(np.array(seed_keys, dtype=np.int64))
        if not pieces:
            break
        cand_keys = np.unique(np.concatenate(pieces))
        cand = decode(cand_keys)
        candidates_checked += len(cand_keys)
        ok = np.ones(len(cand_keys), dtype=bool)
        for u, w in directed:
            if caps[u] < 2:
                # within caps no state holds 2 pebbles at u
                continue
            applicable = cand[:, u] >= 2
            if not applicable.any():
                continue
            if w == target:
                ok &= ~applicable
                continue
            past_cap = applicable & (cand[:, w] >= caps[w])
            ok &= ~past_cap
            check = np.nonzero(applicable & ~past_cap & ok)[0]
            if len(check):
                child = cand_keys[check] - (2 * place[u] - place[w])
                ok[check] &= _member_mask(level_keys, child)
        if not ok.any():
            break
        level_keys = cand_keys[ok]
        levels.append(cand[ok])
    return SweepResult(
        target=target,
        caps=caps,
        levels=levels,
        candidates_checked=candidates_checked,
        complete=complete,
    )
