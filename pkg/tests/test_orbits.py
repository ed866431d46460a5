from __future__ import annotations

import pytest

from pebbling import (
    complete_graph,
    cycle_graph,
    distances_from,
    metrics,
    path_graph,
    vertex_orbits,
)
from pebbling.graphs import from_edge_list
from pebbling.orbits import OrbitBudgetError, find_automorphism


def orbit_label_sets(g, partition):
    return sorted(
        sorted(g.label(v) for v in partition.members(i))
        for i in range(partition.orbit_count)
    )


def test_j3_three_orbits(j3):
    partition = vertex_orbits(j3)
    assert partition.orbit_count == 3
    assert sorted(partition.sizes()) == [3, 3, 6]
    assert {j3.label(r) for r in partition.representatives} == {"v0", "x0", "z0"}
    assert orbit_label_sets(j3, partition) == [
        ["v-1", "v0", "v1"],
        ["x-1", "x0", "x1", "y-1", "y0", "y1"],
        ["z-1", "z0", "z1"],
    ]


def test_petersen_vertex_transitive(pete):
    partition = vertex_orbits(pete)
    assert partition.orbit_count == 1
    assert partition.sizes() == (10,)


def test_k2_single_orbit(k2):
    partition = vertex_orbits(k2)
    assert partition.orbit_count == 1
    assert partition.sizes() == (2,)


def test_path_orbits():
    partition = vertex_orbits(path_graph(4))
    # ends {0,3} and middles {1,2}
    assert partition.orbit_count == 2
    assert sorted(partition.sizes()) == [2, 2]


def test_cycle_and_clique_transitive():
    for g in (cycle_graph(6), complete_graph(5)):
        assert vertex_orbits(g).orbit_count == 1


def test_asymmetric_graph_has_singletons():
    # smallest asymmetric tree (7 vertices): every orbit is a singleton
    g = from_edge_list(7, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (5, 6)])
    assert vertex_orbits(g).orbit_count == 7


def test_orbit_members_share_eccentricity_and_distance_profile(j3, pete):
    for g in (j3, pete):
        ecc = metrics(g).eccentricity
        profiles = [tuple(sorted(distances_from(g, v))) for v in range(g.n)]
        partition = vertex_orbits(g)
        for i in range(partition.orbit_count):
            members = partition.members(i)
            assert len({ecc[v] for v in members}) == 1
            assert len({profiles[v] for v in members}) == 1


def test_found_automorphisms_are_automorphisms(j3):
    edges = set(j3.edges())
    perm = find_automorphism(j3, 0, 1)  # v0 -> v1, same orbit
    assert perm is not None
    mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in edges}
    assert mapped == edges


def test_no_automorphism_across_orbits(j3):
    v0 = j3.resolve_vertex("v0")
    x0 = j3.resolve_vertex("x0")
    assert find_automorphism(j3, v0, x0) is None


def test_size_budget():
    with pytest.raises(OrbitBudgetError):
        vertex_orbits(cycle_graph(33))
