from __future__ import annotations

import json

import pytest

from pebbling import (
    Configuration,
    LinearBound,
    SetSystem,
    builtin_j3_suite,
    check_bound,
    is_solvable,
    load_suites,
    suite_from_dict,
)


def suite_for(suites, g, label):
    want = g.resolve_vertex(label)
    return next(s for s in suites if s.system.target == want)


def labels_of(g, vertices):
    return {g.label(v) for v in vertices}


def test_builtin_suite_sets_match_proof_systems(j3):
    suites = builtin_j3_suite(j3)
    assert len(suites) == 3

    z0 = suite_for(suites, j3, "z0")
    sets = dict(z0.system.sets)
    assert labels_of(j3, sets["F"]) == {"z1", "z-1"}
    assert labels_of(j3, sets["A"]) == {"x0", "x1", "x-1"}
    assert labels_of(j3, sets["B"]) == {"y0", "y1", "y-1"}
    assert labels_of(j3, sets["E"]) == {"v0", "v1", "v-1"}

    x0 = suite_for(suites, j3, "x0")
    sets = dict(x0.system.sets)
    assert labels_of(j3, sets["A"]) == {"x1", "z1", "y-1"}
    assert labels_of(j3, sets["B"]) == {"x-1", "z-1", "y1"}
    assert labels_of(j3, sets["E"]) == {"z0", "v0", "y0"}
    assert labels_of(j3, sets["F"]) == {"v1", "v-1"}

    v0 = suite_for(suites, j3, "v0")
    sets = dict(v0.system.sets)
    assert labels_of(j3, sets["E"]) == {"x0", "y0"}
    assert labels_of(j3, sets["A"]) == {"z1", "x1", "y1"}
    assert labels_of(j3, sets["B"]) == {"z-1", "x-1", "y-1"}


def test_builtin_bound_shapes(j3):
    suites = builtin_j3_suite(j3)
    z0 = suite_for(suites, j3, "z0")
    labels = {b.label() for b in z0.bounds}
    assert "C(F) + 2 C(A) <= 10" in labels
    assert "C(F) + 2 C(A|B) <= 14" in labels
    assert "C(A|B) <= 6" in labels
    x0 = suite_for(suites, j3, "x0")
    pair_bounds = [b for b in x0.bounds if len(b.terms) == 2 and b.rhs == 10]
    # the 10-bound holds only against E for this target
    assert [b.terms[1][1] for b in pair_bounds] == ["E"]
    v0 = suite_for(suites, j3, "v0")
    assert {b.label() for b in v0.bounds} >= {
        "C(A) + 2 C(E) <= 11",
        "C(B) + 2 C(E) <= 11",
        "C(E) <= 4",
    }


def test_builtin_suite_passes_on_truncated_totals(j3):
    # fast slice; the full-range audit is an acceptance criterion
    for suite in builtin_j3_suite(j3):
        report = check_bound(
            j3, suite.system.target, suite.system, suite.bounds, totals=(0, 8)
        )
        assert report.passed
        assert report.violation_total == 0
        assert report.unsolvable_count > 0


def test_tightened_bound_reports_verified_violations(j3):
    suites = builtin_j3_suite(j3)
    z0 = suite_for(suites, j3, "z0")
    tightened = LinearBound(terms=((1, "F"), (2, "A|B")), rhs=5)
    report = check_bound(j3, z0.system.target, z0.system, [tightened])
    assert not report.passed
    assert report.violation_total > 0
    assert report.violations
    for violation in report.violations:
        counts = Configuration(tuple(violation["counts"]))
        assert violation["lhs"] > 5
        assert not is_solvable(j3, z0.system.target, counts).solvable


def test_union_expression_resolution(j3):
    suites = builtin_j3_suite(j3)
    z0 = suite_for(suites, j3, "z0").system
    union = z0.vertices("A|B")
    assert labels_of(j3, union) == {"x0", "x1", "x-1", "y0", "y1", "y-1"}
    with pytest.raises(KeyError):
        z0.vertices("A|Q")


def test_scan_method_matches_sweep_on_small_graph(c5):
    system = SetSystem(name="c5", target=0, sets=(("N", (1, 4)), ("FAR", (2, 3))))
    bounds = [LinearBound(terms=((1, "N"),), rhs=2), LinearBound(terms=((1, "FAR"),), rhs=6)]
    swept = check_bound(c5, 0, system, bounds, method="sweep")
    scanned = check_bound(c5, 0, system, bounds, method="scan")
    assert swept.passed == scanned.passed
    assert swept.unsolvable_count == scanned.unsolvable_count
    assert swept.per_bound == scanned.per_bound


def test_suite_json_round_trip(j3, tmp_path):
    data = {
        "target": "z0",
        "sets": {"A": ["x0", "x1", "x-1"], "F": ["z1", "z-1"]},
        "bounds": [{"terms": [[1, "F"], [2, "A"]], "rhs": 10}],
    }
    suite = suite_from_dict(data, j3)
    assert suite.system.target == j3.resolve_vertex("z0")
    assert suite.bounds[0].label() == "C(F) + 2 C(A) <= 10"

    path = tmp_path / "suite.json"
    path.write_text(json.dumps({"suites": [data]}))
    loaded = load_suites(str(path), j3)
    assert len(loaded) == 1
    assert loaded[0].bounds == suite.bounds


def test_bad_set_member_rejected(c5):
    system = SetSystem(name="bad", target=0, sets=(("A", (9,)),))
    with pytest.raises(ValueError, match="outside the graph"):
        check_bound(c5, 0, system, [LinearBound(terms=((1, "A"),), rhs=1)])


def test_nonpositive_coefficients_rejected():
    with pytest.raises(ValueError):
        LinearBound(terms=((0, "A"),), rhs=3)
