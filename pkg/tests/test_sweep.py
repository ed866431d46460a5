from __future__ import annotations

import pytest

from pebbling import (
    Configuration,
    EnumSpec,
    RefutationCache,
    complete_graph,
    cycle_graph,
    enumerate_capped,
    fits_sweep,
    is_solvable,
    path_graph,
    sweep_unsolvable,
    unsolvability_caps,
)
from pebbling.sweep import SweepBudgetError


def solver_unsolvable_by_level(g, target):
    """Reference classification: solver over the full capped family."""
    caps = unsolvability_caps(g, target)
    memo = RefutationCache(g, target)
    levels = []
    for total in range(sum(caps) + 1):
        members = [
            vec
            for vec in enumerate_capped(EnumSpec(caps, total))
            if not is_solvable(g, target, Configuration(vec), memo=memo).solvable
        ]
        levels.append(members)
    while levels and not levels[-1]:
        levels.pop()
    return levels


@pytest.mark.parametrize(
    "graph",
    [complete_graph(2), complete_graph(3), path_graph(3), path_graph(4), cycle_graph(5), cycle_graph(6)],
    ids=lambda g: g.name,
)
def test_sweep_matches_solver_classification(graph):
    for target in range(graph.n):
        result = sweep_unsolvable(graph, target)
        want = solver_unsolvable_by_level(graph, target)
        assert len(result.levels) == len(want)
        for level, expected in zip(result.levels, want):
            assert [tuple(int(c) for c in row) for row in level] == expected


def test_sweep_matches_solver_on_petersen(pete):
    result = sweep_unsolvable(pete, 0)
    want = solver_unsolvable_by_level(pete, 0)
    assert result.max_unsolvable == len(want) - 1 == 9
    assert [len(level) for level in result.levels] == [len(lv) for lv in want]
    assert result.witness(9) == want[9][0]


def test_levels_are_lex_sorted_and_capped(j3):
    target = j3.resolve_vertex("z0")
    result = sweep_unsolvable(j3, target)
    caps = unsolvability_caps(j3, target)
    for level in result.levels:
        rows = [tuple(int(c) for c in row) for row in level]
        assert rows == sorted(rows)
        for row in rows:
            assert row[target] == 0
            assert all(c <= cap for c, cap in zip(row, caps))


def test_truncated_sweep_for_witness_queries(j3):
    target = j3.resolve_vertex("z0")
    result = sweep_unsolvable(j3, target, max_total=5)
    assert not result.complete
    assert result.witness(5) is not None
    with pytest.raises(ValueError):
        _ = result.max_unsolvable


def test_all_ones_is_always_a_member(j3, pete):
    for g in (j3, pete):
        result = sweep_unsolvable(g, 0)
        ones = tuple(0 if v == 0 else 1 for v in range(g.n))
        level = [tuple(int(c) for c in row) for row in result.levels[g.n - 1]]
        assert ones in level


def test_budget_error_on_wide_keys():
    g = path_graph(24)
    assert not fits_sweep(g, 0)
    with pytest.raises(SweepBudgetError):
        sweep_unsolvable(g, 0)


def test_sampled_members_refute_and_nonmembers_solve(j3):
    # spot-check the family against the solver on one mid level
    target = j3.resolve_vertex("v0")
    result = sweep_unsolvable(j3, target)
    level = 7
    members = {tuple(int(c) for c in row) for row in result.levels[level]}
    sample = sorted(members)[:: max(1, len(members) // 25)]
    for vec in sample:
        assert not is_solvable(j3, target, Configuration(vec)).solvable
    caps = unsolvability_caps(j3, target)
    seen = 0
    for vec in enumerate_capped(EnumSpec(caps, level)):
        if vec not in members:
            assert is_solvable(j3, target, Configuration(vec)).solvable
            seen += 1
            if seen >= 40:
                break
