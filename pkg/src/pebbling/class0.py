"""Pebbling numbers and Class 0 verdicts via capped enumeration.

For a target r, every r-unsolvable configuration keeps c(r) = 0 and at
most 2^d(v,r) - 1 pebbles per vertex, and removing a pebble preserves
unsolvability. The maximum unsolvable total is therefore the last
non-empty level of the capped family, and

    pi(G) = 1 + max over targets of that maximum.

Three interchangeable methods are provided: "sweep" (vectorised level
fixed point over the whole unsolvable family), "downward" (scan totals
from sum(caps) down, solver-classifying every configuration until the
first unsolvable one), and "upward" (scan totals from 0 up until a level
proves empty). They agree everywhere; "auto" picks the sweep whenever the
family packs into 64-bit keys.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .configurations import Configuration, unsolvability_caps
from .enumeration import (
    EnumSpec,
    count_capped,
    enumerate_capped,
    enumerate_capped_range,
    shard_ranges,
)
from .graphs import Graph
from .orbits import vertex_orbits
from .solver import RefutationCache, is_solvable
from .sweep import fits_sweep, sweep_unsolvable

METHODS = ("auto", "sweep", "downward", "upward")


class WitnessVerificationError(RuntimeError):
    """An emitted witness failed its independent re-verification."""


@dataclass
class TargetReport:
    """Maximum unsolvable total for one target, with its witness."""

    target: int
    target_label: str
    max_unsolvable: int
    witness: tuple[int, ...]
    configs_tested: int
    method: str
    elapsed: float

    def to_json_dict(self, include_timings: bool = True) -> dict:
        out = {
            "target": self.target,
            "targetLabel": self.target_label,
            "maxUnsolvable": self.max_unsolvable,
            "witness": list(self.witness),
            "configsTested": self.configs_tested,
            "method": self.method,
        }
        if include_timings:
            out["elapsedSeconds"] = round(self.elapsed, 6)
        return out


@dataclass
class ClassZeroReport:
    """Pebbling number and Class 0 verdict with per-target breakdown."""

    graph_name: str
    n: int
    pebbling_number: int
    class_zero: bool
    orbits_used: bool
    per_target: list[TargetReport]
    counterexample: dict | None
    settings: dict
    elapsed: float = field(default=0.0)

    def to_json_dict(self, include_timings: bool = True) -> dict:
        out = {
            "graph": self.graph_name,
            "n": self.n,
            "pebblingNumber": self.pebbling_number,
            "classZero": self.class_zero,
            "orbitsUsed": self.orbits_used,
            "perTarget": [
                t.to_json_dict(include_timings) for t in self.per_target
            ],
            "counterexample": self.counterexample,
            "settings": self.settings,
        }
        if include_timings:
            out["elapsedSeconds"] = round(self.elapsed, 6)
        return out


def _resolve_method(g: Graph, target: int, method: str) -> str:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if method == "auto":
        return "sweep" if fits_sweep(g, target) else "downward"
    return method


def _verify_witness(g: Graph, target: int, witness: tuple[int, ...]) -> None:
    caps = unsolvability_caps(g, target)
    if witness[target] != 0 or any(c > cap for c, cap in zip(witness, caps)):
        raise WitnessVerificationError(
            f"witness {witness} violates the unsolvability caps for target {target}"
        )
    if is_solvable(g, target, Configuration(witness)).solvable:
        raise WitnessVerificationError(
            f"witness {witness} for target {target} is solvable on re-verification"
        )


def _scan_range_worker(args) -> tuple[int, tuple[int, ...]] | None:
    g, target, caps, total, start, stop = args
    memo = RefutationCache(g, target)
    spec = EnumSpec(caps, total)
    for offset, vec in enumerate(enumerate_capped_range(spec, start, stop)):
        out = is_solvable(g, target, Configuration(vec), memo=memo)
        if not out.solvable:
            return (start + offset, vec)
    return None


def _scan_level(
    g: Graph,
    target: int,
    caps: tuple[int, ...],
    total: int,
    jobs: int,
    memo: RefutationCache | None = None,
) -> tuple[int | None, tuple[int, ...] | None, int]:
    """First (lex-least) unsolvable configuration at one total.

    Returns (rank, vector, level_size); rank is the witness's position in
    the lexicographic stream, independent of sharding.
    """
    size = count_capped(caps, total)
    if size == 0:
        return None, None, 0
    if jobs <= 1:
        memo = memo or RefutationCache(g, target)
        spec = EnumSpec(caps, total)
        for rank, vec in enumerate(enumerate_capped(spec)):
            out = is_solvable(g, target, Configuration(vec), memo=memo)
            if not out.solvable:
                return rank, vec, size
        return None, None, size
    ranges = shard_ranges(size, jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        hits = list(
            pool.map(
                _scan_range_worker,
                [(g, target, caps, total, a, b) for a, b in ranges],
            )
        )
    found = [h for h in hits if h is not None]
    if found:
        rank, vec = min(found)
        return rank, vec, size
    return None, None, size


def max_unsolvable(
    g: Graph,
    target: int,
    *,
    method: str = "auto",
    jobs: int = 1,
) -> TargetReport:
    """Largest total admitting a target-unsolvable configuration.

    The witness is the lexicographically least unsolvable configuration at
    that total, re-verified by the solver before emission; configs_tested
    counts scanned configurations (scan methods) or verified candidates
    (sweep), both scheduling-independent.
    """
    start_time = time.perf_counter()
    caps = unsolvability_caps(g, target)
    chosen = _resolve_method(g, target, method)

    if chosen == "sweep":
        result = sweep_unsolvable(g, target)
        best = result.max_unsolvable
        witness = result.witness(best)
        tested = result.candidates_checked
    elif chosen == "downward":
        tested = 0
        best, witness = None, None
        for total in range(sum(caps), -1, -1):
            rank, vec, size = _scan_level(g, target, caps, total, jobs)
            if rank is not None:
                tested += rank + 1
                best, witness = total, vec
                break
            tested += size
        if best is None:
            raise AssertionError("downward scan found no unsolvable level")
    elif chosen == "upward":
        tested = 0
        best, witness = None, None
        last_hit: tuple[int, tuple[int, ...]] | None = None
        for total in range(0, sum(caps) + 2):
            rank, vec, size = _scan_level(g, target, caps, total, jobs)
            if rank is None:
                tested += size
                # empty level: no unsolvable configuration exists above it
                break
            tested += rank + 1
            last_hit = (total, vec)
        if last_hit is None:
            raise AssertionError("level 0 must contain the empty configuration")
        best, witness = last_hit
    else:  # pragma: no cover
        raise AssertionError(chosen)

    if witness is None:
        raise AssertionError("maximum level lost its witness")
    _verify_witness(g, target, witness)
    if best < g.n - 1:
        raise AssertionError(
            f"max unsolvable {best} below the guaranteed n-1 = {g.n - 1}"
        )
    return TargetReport(
        target=target,
        target_label=g.label(target),
        max_unsolvable=best,
        witness=witness,
        configs_tested=tested,
        method=chosen,
        elapsed=time.perf_counter() - start_time,
    )


def find_unsolvable_witness(
    g: Graph,
    target: int,
    total: int,
    *,
    method: str = "auto",
    jobs: int = 1,
) -> tuple[int, ...] | None:
    """Lexicographically least target-unsolvable configuration with exactly
    ``total`` pebbles, or None when every such configuration is solvable."""
    if total < 0:
        raise ValueError("total must be non-negative")
    caps = unsolvability_caps(g, target)
    chosen = _resolve_method(g, target, method)
    if chosen == "sweep":
        witness = sweep_unsolvable(g, target, max_total=total).witness(total)
    else:
        if total > sum(caps):
            witness = None
        else:
            _, witness, _ = _scan_level(g, target, caps, total, jobs)
    if witness is not None:
        _verify_witness(g, target, witness)
    return witness


def _target_report_worker(args) -> TargetReport:
    g, target, method = args
    return max_unsolvable(g, target, method=method, jobs=1)


def pebbling_number(
    g: Graph,
    *,
    use_orbits: bool = True,
    method: str = "auto",
    jobs: int = 1,
    graph_name: str | None = None,
) -> ClassZeroReport:
    """pi(G) = 1 + max over targets of the maximum unsolvable total.

    With use_orbits, one representative target per automorphism orbit is
    analysed (targets in an orbit share pebbling behaviour); otherwise
    every vertex is. Reports are identical for any jobs value: the
    parallel path only distributes whole targets.
    """
    start_time = time.perf_counter()
    if use_orbits:
        targets = list(vertex_orbits(g).representatives)
    else:
        targets = list(range(g.n))

    if jobs > 1 and len(targets) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(
                pool.map(_target_report_worker, [(g, t, method) for t in targets])
            )
    else:
        reports = [max_unsolvable(g, t, method=method, jobs=jobs) for t in targets]

    best = max(r.max_unsolvable for r in reports)
    number = best + 1
    if number < g.n:
        raise AssertionError(f"pebbling number {number} below n = {g.n}")
    class_zero = number == g.n

    counterexample = None
    if not class_zero:
        # exhibit a verified witness with exactly n pebbles
        bad = min(r.target for r in reports if r.max_unsolvable >= g.n)
        counts = find_unsolvable_witness(g, bad, g.n, method=method, jobs=jobs)
        if counts is None:
            raise AssertionError("non-Class-0 graph must admit an n-pebble witness")
        counterexample = {
            "target": bad,
            "targetLabel": g.label(bad),
            "total": g.n,
            "counts": list(counts),
        }

    return ClassZeroReport(
        graph_name=graph_name or g.name or f"graph:{g.n}",
        n=g.n,
        pebbling_number=number,
        class_zero=class_zero,
        orbits_used=use_orbits,
        per_target=reports,
        counterexample=counterexample,
        settings={
            "useOrbits": use_orbits,
            "method": method,
            "capFilter": True,
            "witnessRule": "lexicographic-least",
        },
        elapsed=time.perf_counter() - start_time,
    )


def is_class_zero(
    g: Graph,
    *,
    use_orbits: bool = True,
    method: str = "auto",
    jobs: int = 1,
    graph_name: str | None = None,
) -> ClassZeroReport:
    """Class 0 verdict: pi(G) = n(G); same report as pebbling_number."""
    return pebbling_number(
        g, use_orbits=use_orbits, method=method, jobs=jobs, graph_name=graph_name
    )


def validate_cap_filter(g: Graph, target: int, total: int) -> dict:
    """No-cap-filter validation: enumerate all configurations of one total
    and check that every configuration the capped enumeration would skip
    (pebble on target or a cap violated) is solvable.

    The skipped ones hit the trivial 2^d transport bound, so this
    validates the enumeration filter against the actual solver.
    """
    caps = unsolvability_caps(g, target)
    memo = RefutationCache(g, target)
    spec = EnumSpec((total,) * g.n, total)
    family = 0
    filtered = 0
    filtered_solvable = 0
    for vec in enumerate_capped(spec):
        in_family = vec[target] == 0 and all(c <= cap for c, cap in zip(vec, caps))
        if in_family:
            family += 1
            continue
        filtered += 1
        if is_solvable(g, target, Configuration(vec), memo=memo).solvable:
            filtered_solvable += 1
    return {
        "target": target,
        "total": total,
        "enumerated": family + filtered,
        "inFamily": family,
        "filteredOut": filtered,
        "filteredSolvable": filtered_solvable,
        "filteredAllSolvable": filtered == filtered_solvable,
    }
