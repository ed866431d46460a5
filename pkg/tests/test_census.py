from __future__ import annotations

import pytest

from pebbling import complete_graph, cycle_graph, load_graph_fixture, metrics, petersen
from pebbling.census import (
    CONNECTED_CUBIC_COUNTS,
    are_isomorphic,
    canonical_certificate,
    connected_cubic_graphs,
    cubic_girth3_diameter3_on_12,
)


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_known_counts(n):
    assert len(connected_cubic_graphs(n)) == CONNECTED_CUBIC_COUNTS[n]


def test_certificate_invariant_under_relabeling():
    g = petersen()
    # relabel by a rotation: rebuild from shifted edges
    from pebbling import from_edge_list

    shift = lambda v: (v + 3) % g.n
    h = from_edge_list(g.n, [(shift(u), shift(v)) for u, v in g.edges()])
    assert canonical_certificate(g) == canonical_certificate(h)
    assert are_isomorphic(g, h)


def test_nonisomorphic_detected():
    assert not are_isomorphic(cycle_graph(6), complete_graph(4))
    a, b = connected_cubic_graphs(6)
    assert not are_isomorphic(a, b)


def test_k4_is_the_only_cubic_on_4():
    (g,) = connected_cubic_graphs(4)
    assert are_isomorphic(g, complete_graph(4))


def test_odd_or_tiny_rejected():
    with pytest.raises(ValueError):
        connected_cubic_graphs(5)
    with pytest.raises(ValueError):
        connected_cubic_graphs(2)


@pytest.mark.slow
def test_twelve_vertex_census_and_parameter_family():
    everything = connected_cubic_graphs(12)
    assert len(everything) == CONNECTED_CUBIC_COUNTS[12]

    family = cubic_girth3_diameter3_on_12()
    assert len(family) == 16
    for g in family:
        m = metrics(g)
        assert set(m.degree_sequence) == {3} and m.girth == 3 and m.diameter == 3

    # the vendored 12-vertex graphs all appear in the family
    certs = {canonical_certificate(g) for g in family}
    for name in ("j3", "hog1395", "hog44170", "hog44172"):
        assert canonical_certificate(load_graph_fixture(name)) in certs
