from __future__ import annotations

import itertools
import random

import pytest

from pebbling import (
    BudgetError,
    Configuration,
    CountOverflowError,
    EnumSpec,
    RefutationCache,
    apply_move,
    complete_graph,
    cycle_graph,
    enumerate_capped,
    is_solvable,
    is_solvable_naive,
    path_graph,
    replay,
    verify_certificate,
)


def test_pebble_already_on_target(c5):
    out = is_solvable(c5, 2, Configuration((0, 0, 1, 0, 0)))
    assert out.solvable
    assert out.moves == ()


def test_k2_basic(k2):
    out = is_solvable(k2, 1, Configuration((2, 0)))
    assert out.solvable
    assert out.moves == ((0, 1),)
    assert verify_certificate(k2, 1, Configuration((2, 0)), out.moves)
    assert not is_solvable(k2, 1, Configuration((1, 0))).solvable


def test_verify_rejects_empty_certificate(k2):
    assert not verify_certificate(k2, 1, Configuration((2, 0)), [])


def test_replay_diagnostics(k2):
    result = replay(k2, 1, Configuration((2, 0)), [(0, 1), (0, 1)])
    assert not result.ok
    assert result.failed_step == 1
    assert "need 2" in result.reason


def test_every_solvable_outcome_replays(j3, c5, p4):
    rng = random.Random(7)
    for g in (j3, c5, p4):
        for _ in range(150):
            counts = tuple(rng.choices(range(4), k=g.n))
            target = rng.randrange(g.n)
            out = is_solvable(g, target, Configuration(counts))
            if out.solvable:
                assert verify_certificate(g, target, Configuration(counts), out.moves)


def test_agrees_with_naive_on_c5_all_targets(c5):
    # every configuration of up to 6 pebbles, every target
    for total in range(7):
        for vec in enumerate_capped(EnumSpec((total,) * 5, total)):
            for target in range(5):
                fast = is_solvable(c5, target, Configuration(vec)).solvable
                assert fast == is_solvable_naive(c5, target, Configuration(vec))


def test_agrees_with_naive_on_k2_totals_up_to_4(k2):
    for total in range(5):
        for vec in enumerate_capped(EnumSpec((total,) * 2, total)):
            for target in range(2):
                fast = is_solvable(k2, target, Configuration(vec)).solvable
                assert fast == is_solvable_naive(k2, target, Configuration(vec))


def test_deterministic_certificates(j3):
    counts = Configuration((0, 0, 0, 0, 3, 0, 0, 2, 0, 0, 1, 3))
    first = is_solvable(j3, 9, counts)
    for _ in range(3):
        again = is_solvable(j3, 9, counts)
        assert again.solvable == first.solvable
        assert again.moves == first.moves


def test_engines_agree(c5, p4, j3):
    rng = random.Random(13)
    for g in (c5, p4, j3):
        for _ in range(80):
            counts = tuple(rng.choices(range(3), k=g.n))
            target = rng.randrange(g.n)
            rec = is_solvable(g, target, Configuration(counts), engine="recursive")
            it = is_solvable(g, target, Configuration(counts), engine="iterative")
            assert rec.solvable == it.solvable
            assert rec.moves == it.moves
            assert rec.stats.nodes_expanded == it.stats.nodes_expanded
            assert rec.stats.max_depth == it.stats.max_depth


def test_memo_budget_does_not_change_verdicts(c5):
    for total in range(7):
        for vec in enumerate_capped(EnumSpec((total,) * 5, total)):
            full = is_solvable(c5, 0, Configuration(vec))
            tiny = is_solvable(c5, 0, Configuration(vec), memo_limit=0)
            assert full.solvable == tiny.solvable
            assert full.moves == tiny.moves


def test_shared_cache_sound_and_bound(j3, c5):
    cache = RefutationCache(c5, 0)
    for total in range(7):
        for vec in enumerate_capped(EnumSpec((total,) * 5, total)):
            shared = is_solvable(c5, 0, Configuration(vec), memo=cache).solvable
            fresh = is_solvable(c5, 0, Configuration(vec)).solvable
            assert shared == fresh
    with pytest.raises(ValueError, match="different target"):
        is_solvable(c5, 1, Configuration((0,) * 5), memo=cache)
    with pytest.raises(ValueError, match="different graph"):
        is_solvable(j3, 0, Configuration((0,) * 12), memo=cache)


def test_initial_count_overflow_rejected(k2):
    with pytest.raises(CountOverflowError):
        is_solvable(k2, 1, Configuration((64, 0)))


def test_max_count_accepted(k2):
    assert is_solvable(k2, 1, Configuration((63, 0))).solvable


def test_monotonicity_adding_a_pebble(c5):
    # solvable stays solvable under any pointwise increase
    base = Configuration((0, 0, 0, 4, 0))
    assert is_solvable(c5, 0, base).solvable
    for v in range(5):
        bigger = list(base.counts)
        bigger[v] += 1
        assert is_solvable(c5, 0, Configuration(tuple(bigger))).solvable


def test_anti_monotonicity_removing_a_pebble(c5):
    base = Configuration((0, 0, 1, 3, 0))  # 0-unsolvable with 4 pebbles
    assert not is_solvable(c5, 0, base).solvable
    for v in range(5):
        if base[v] == 0:
            continue
        smaller = list(base.counts)
        smaller[v] -= 1
        assert not is_solvable(c5, 0, Configuration(tuple(smaller))).solvable


def test_stats_depth_below_total(j3):
    counts = Configuration((0, 0, 0, 0, 3, 0, 0, 2, 0, 0, 1, 3))
    out = is_solvable(j3, 9, counts)
    assert out.stats.max_depth < counts.total


def test_naive_budget_errors():
    with pytest.raises(BudgetError):
        is_solvable_naive(path_graph(9), 0, Configuration((0,) * 9))
    with pytest.raises(BudgetError):
        is_solvable_naive(complete_graph(3), 0, Configuration((13, 0, 0)))


def test_naive_on_target(c5):
    assert is_solvable_naive(c5, 3, Configuration((0, 0, 0, 1, 0)))


def test_moves_strictly_decrease_total(j3):
    rng = random.Random(3)
    counts = tuple(rng.choices(range(4), k=j3.n))
    out = is_solvable(j3, 0, Configuration(counts))
    if out.solvable:
        c = Configuration(counts)
        for move in out.moves:
            before = c.total
            c = apply_move(j3, c, move)
            assert c.total == before - 1
