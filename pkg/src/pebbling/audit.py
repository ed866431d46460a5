"""Machine audit of linear pebble-sum bounds over unsolvable families.

A bound suite names vertex subsets of one (graph, target) instance and
asserts inequalities sum(coeff_i * C(S_i)) <= rhs that every
target-unsolvable configuration must satisfy. The audit enumerates the
whole unsolvable family (any totals range) and evaluates every bound on
every member, reporting each violation together with its re-verified
configuration. Suites are data, not code: they load from JSON so new
conjectured bounds can be audited without touching the library.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

import numpy as np

from .configurations import Configuration, unsolvability_caps
from .enumeration import EnumSpec, enumerate_capped, level_counts
from .graphs import Graph
from .solver import RefutationCache, is_solvable
from .sweep import fits_sweep, sweep_unsolvable


@dataclass(frozen=True)
class SetSystem:
    """Named vertex subsets of one (graph, target) context.

    Set names are single identifiers; bounds may reference unions with
    ``|`` (e.g. "A|B"). Sets may overlap.
    """

    name: str
    target: int
    sets: tuple[tuple[str, tuple[int, ...]], ...]

    def vertices(self, expr: str) -> tuple[int, ...]:
        table = dict(self.sets)
        members: set[int] = set()
        for part in expr.split("|"):
            part = part.strip()
            if part not in table:
                raise KeyError(f"unknown set {part!r} in system {self.name}")
            members.update(table[part])
        return tuple(sorted(members))


@dataclass(frozen=True)
class LinearBound:
    """Inequality sum(coeff * C(set_expr)) <= rhs with positive coefficients."""

    terms: tuple[tuple[int, str], ...]
    rhs: int
    description: str = ""

    def __post_init__(self) -> None:
        if any(coeff <= 0 for coeff, _ in self.terms):
            raise ValueError("bound coefficients must be positive")

    def label(self) -> str:
        lhs = " + ".join(
            f"C({expr})" if coeff == 1 else f"{coeff} C({expr})"
            for coeff, expr in self.terms
        )
        return f"{lhs} <= {self.rhs}"


@dataclass(frozen=True)
class BoundSuite:
    """A set system together with the bounds audited against it."""

    system: SetSystem
    bounds: tuple[LinearBound, ...]


@dataclass
class AuditReport:
    """Outcome of auditing one suite against one unsolvable family."""

    graph_name: str
    target: int
    target_label: str
    totals: tuple[int, int]
    bounds_checked: int
    configurations_scanned: int
    unsolvable_count: int
    per_bound: list[dict]
    violations: list[dict]
    violation_total: int
    passed: bool
    elapsed: float

    def to_json_dict(self, include_timings: bool = True) -> dict:
        out = {
            "graph": self.graph_name,
            "target": self.target,
            "targetLabel": self.target_label,
            "totalsRange": list(self.totals),
            "boundsChecked": self.bounds_checked,
            "configurationsScanned": self.configurations_scanned,
            "unsolvableCount": self.unsolvable_count,
            "solvableCount": self.configurations_scanned - self.unsolvable_count,
            "perBound": self.per_bound,
            "violations": self.violations,
            "violationTotal": self.violation_total,
            "passed": self.passed,
        }
        if include_timings:
            out["elapsedSeconds"] = round(self.elapsed, 6)
        return out


def _unsolvable_matrix(
    g: Graph, target: int, lo: int, hi: int, method: str
) -> np.ndarray:
    """All target-unsolvable configurations with totals in [lo, hi]."""
    if method == "auto":
        method = "sweep" if fits_sweep(g, target) else "scan"
    if method == "sweep":
        result = sweep_unsolvable(g, target)
        return result.stacked(range(lo, hi + 1))
    if method != "scan":
        raise ValueError(f"unknown audit method {method!r}")
    caps = unsolvability_caps(g, target)
    memo = RefutationCache(g, target)
    rows = []
    for total in range(lo, min(hi, sum(caps)) + 1):
        for vec in enumerate_capped(EnumSpec(caps, total)):
            if not is_solvable(g, target, Configuration(vec), memo=memo).solvable:
                rows.append(vec)
    if not rows:
        return np.empty((0, g.n), dtype=np.uint8)
    return np.array(rows, dtype=np.uint8)


def check_bound(
    g: Graph,
    target: int,
    system: SetSystem,
    bounds: Sequence[LinearBound],
    totals: tuple[int, int] | None = None,
    *,
    method: str = "auto",
    max_reported: int = 50,
) -> AuditReport:
    """Audit ``bounds`` against every target-unsolvable configuration.

    Args:
        totals: inclusive (lo, hi) totals range; defaults to every total
            the caps admit.
        max_reported: violations materialised (and re-verified unsolvable
            by the solver) per bound; the full count is always reported.
    """
    start_time = time.perf_counter()
    caps = unsolvability_caps(g, target)
    for set_name, members in system.sets:
        for v in members:
            if not 0 <= v < g.n:
                raise ValueError(f"set {set_name} lists vertex {v} outside the graph")
    lo, hi = totals if totals is not None else (0, sum(caps))
    matrix = _unsolvable_matrix(g, target, lo, hi, method)

    sizes = level_counts(caps)
    scanned = sum(sizes[t] for t in range(lo, min(hi, sum(caps)) + 1))

    per_bound: list[dict] = []
    violations: list[dict] = []
    violation_total = 0
    wide = matrix.astype(np.int64)
    for bound in bounds:
        lhs = np.zeros(len(matrix), dtype=np.int64)
        for coeff, expr in bound.terms:
            cols = system.vertices(expr)
            lhs += coeff * wide[:, cols].sum(axis=1)
        bad = np.nonzero(lhs > bound.rhs)[0]
        violation_total += len(bad)
        per_bound.append(
            {
                "bound": bound.label(),
                "description": bound.description,
                "violations": int(len(bad)),
                "maxLhs": int(lhs.max()) if len(lhs) else 0,
            }
        )
        for row in bad[:max_reported]:
            counts = tuple(int(c) for c in matrix[row])
            if is_solvable(g, target, Configuration(counts)).solvable:
                raise RuntimeError(
                    f"audit universe contained a solvable configuration {counts}"
                )
            violations.append(
                {
                    "bound": bound.label(),
                    "counts": list(counts),
                    "lhs": int(lhs[row]),
                    "rhs": bound.rhs,
                }
            )
    return AuditReport(
        graph_name=g.name or f"graph:{g.n}",
        target=target,
        target_label=g.label(target),
        totals=(lo, hi),
        bounds_checked=len(bounds),
        configurations_scanned=scanned,
        unsolvable_count=len(matrix),
        per_bound=per_bound,
        violations=violations,
        violation_total=violation_total,
        passed=violation_total == 0,
        elapsed=time.perf_counter() - start_time,
    )


def suite_from_dict(data: dict, g: Graph, name: str = "suite") -> BoundSuite:
    """Build a suite from the JSON form.

    Schema: {"target": "z0", "sets": {"A": ["x0", ...], ...},
    "bounds": [{"terms": [[1, "F"], [2, "A|B"]], "rhs": 14,
    "description": "..."}, ...]}; set members and the target may be
    labels or indices, union expressions use ``|``.
    """
    target = g.resolve_vertex(data["target"])
    sets = tuple(
        (set_name, tuple(sorted(g.resolve_vertex(v) for v in members)))
        for set_name, members in data["sets"].items()
    )
    system = SetSystem(name=f"{name}:{data['target']}", target=target, sets=sets)
    bounds = tuple(
        LinearBound(
            terms=tuple((int(c), str(expr)) for c, expr in item["terms"]),
            rhs=int(item["rhs"]),
            description=item.get("description", ""),
        )
        for item in data["bounds"]
    )
    return BoundSuite(system=system, bounds=bounds)


def load_suites(path_or_data, g: Graph) -> list[BoundSuite]:
    """Load one or more suites from a JSON file or parsed dict."""
    if isinstance(path_or_data, (str, bytes)):
        with open(path_or_data, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = path_or_data
    if "suites" in data:
        items: Iterable[dict] = data["suites"]
        name = data.get("name", "suite")
    else:
        items = [data]
        name = data.get("name", "suite")
    return [suite_from_dict(item, g, name=name) for item in items]


def builtin_j3_suite(g: Graph | None = None) -> list[BoundSuite]:
    """The packaged bound suites for the smallest flower snark, one per
    non-symmetric target (z0, x0, v0)."""
    from .graphs import flower_snark

    if g is None:
        g = flower_snark(3)
    data = json.loads(
        resources.files("pebbling.data").joinpath("j3_bounds.json").read_text()
    )
    return load_suites(data, g)
