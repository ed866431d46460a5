from __future__ import annotations

import itertools

import pytest

from pebbling import (
    Graph,
    complete_graph,
    cycle_graph,
    flower_snark,
    from_edge_list,
    path_graph,
    petersen,
)


@pytest.fixture(scope="session")
def j3() -> Graph:
    return flower_snark(3)


@pytest.fixture(scope="session")
def pete() -> Graph:
    return petersen()


@pytest.fixture(scope="session")
def k2() -> Graph:
    return complete_graph(2)


@pytest.fixture(scope="session")
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture(scope="session")
def p4() -> Graph:
    return path_graph(4)


def connected_graphs_upto(max_n: int):
    """Every connected graph with 1 <= n <= max_n, by edge-subset enumeration
    (labelled; isomorphic duplicates included on purpose)."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            try:
                out.append(from_edge_list(n, edges))
            except Exception:
                continue
    return out
