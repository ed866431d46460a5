from __future__ import annotations

import pytest

from pebbling import (
    GRAPH_FIXTURES,
    flower_snark,
    load_config_fixture,
    load_graph_fixture,
    metrics,
    petersen,
)
from pebbling.census import are_isomorphic, canonical_certificate

TWELVE_VERTEX = ("j3", "hog1395", "hog44170", "hog44172")


@pytest.mark.parametrize("name", sorted(GRAPH_FIXTURES))
def test_fixture_loads(name):
    g = load_graph_fixture(name)
    assert g.name == name
    info = GRAPH_FIXTURES[name]
    if info.labels is not None:
        assert g.labels == info.labels


@pytest.mark.parametrize("name", TWELVE_VERTEX)
def test_twelve_vertex_parameters(name):
    g = load_graph_fixture(name)
    m = metrics(g)
    assert g.n == 12
    assert set(m.degree_sequence) == {3}
    assert m.girth == 3
    assert m.diameter == 3


def test_generator_backed_fixtures_identical():
    assert load_graph_fixture("j3").adjacency == flower_snark(3).adjacency
    assert load_graph_fixture("petersen").adjacency == petersen().adjacency


def test_twelve_vertex_fixtures_pairwise_nonisomorphic():
    certs = {name: canonical_certificate(load_graph_fixture(name)) for name in TWELVE_VERTEX}
    assert len(set(certs.values())) == len(TWELVE_VERTEX)


def test_hog1395_is_vertex_transitive():
    # the truncated tetrahedron
    from pebbling import vertex_orbits

    assert vertex_orbits(load_graph_fixture("hog1395")).orbit_count == 1


def test_j3_not_isomorphic_to_petersen():
    assert not are_isomorphic(load_graph_fixture("j3"), load_graph_fixture("petersen"))


@pytest.mark.parametrize(
    "name,graph,target,total",
    [("fig3a", "hog1395", "1", 12), ("fig3b", "hog44170", "6", 12), ("fig3c", "hog44172", "1", 12)],
)
def test_witness_fixtures(name, graph, target, total):
    fx = load_config_fixture(name)
    assert fx.graph == graph
    assert fx.target == target
    assert sum(fx.counts) == total
    g = load_graph_fixture(graph)
    assert len(fx.counts) == g.n
    assert fx.counts[g.resolve_vertex(target)] == 0


def test_unknown_fixture():
    with pytest.raises(KeyError):
        load_graph_fixture("hog99999")
    with pytest.raises(KeyError):
        load_config_fixture("fig9z")
