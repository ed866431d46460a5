"""Vendored graph and configuration fixtures.

The corpus ships inside the package so every check runs offline: the
tiny codec vectors (K2), the named families (Petersen, the smallest
flower snark), and the three House of Graphs entries whose 12-pebble
unsolvable witnesses are bundled alongside (fig3a/b/c). HoG-derived
graphs carry the database vertex labels "1".."12"; targets in the
configuration fixtures are given as such labels.

House of Graphs #6698 is deliberately not vendored: its adjacency is
published only as a database entry, and the census shows sixteen cubic
graphs on 12 vertices with girth 3 and diameter 3, so the entry cannot
be reconstructed offline without guessing. Use pebbling.hog.fetch_graph
when the network is available.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from importlib import resources

from .graph6 import decode_graph6
from .graphs import Graph

_HOG_LABELS_12 = tuple(str(i + 1) for i in range(12))
_FLOWER3_LABELS = (
    "v0", "v1", "v-1", "x0", "x1", "x-1", "y0", "y1", "y-1", "z0", "z1", "z-1",
)
_PETERSEN_LABELS = ("r", "e0", "e1", "e-1", "a0", "a1", "a-1", "b0", "b1", "b-1")


@dataclass(frozen=True)
class GraphFixture:
    name: str
    filename: str
    description: str
    labels: tuple[str, ...] | None = None
    hog_id: int | None = None


GRAPH_FIXTURES: dict[str, GraphFixture] = {
    f.name: f
    for f in (
        GraphFixture("k2", "k2.g6", "single edge, the smallest connected graph"),
        GraphFixture(
            "petersen", "petersen.g6", "Petersen graph", labels=_PETERSEN_LABELS
        ),
        GraphFixture(
            "j3",
            "j3.g6",
            "smallest flower snark (Tietze's graph)",
            labels=_FLOWER3_LABELS,
        ),
        GraphFixture(
            "hog1395",
            "hog1395.g6",
            "truncated tetrahedral graph, House of Graphs #1395",
            labels=_HOG_LABELS_12,
            hog_id=1395,
        ),
        GraphFixture(
            "hog44170",
            "hog44170.g6",
            "House of Graphs #44170",
            labels=_HOG_LABELS_12,
            hog_id=44170,
        ),
        GraphFixture(
            "hog44172",
            "hog44172.g6",
            "House of Graphs #44172",
            labels=_HOG_LABELS_12,
            hog_id=44172,
        ),
    )
}

CONFIG_FIXTURES = ("fig3a", "fig3b", "fig3c")


def _data_text(filename: str) -> str:
    return resources.files("pebbling.data").joinpath(filename).read_text()


def fixture_g6(name: str) -> str:
    """The raw graph6 line of a vendored graph fixture."""
    info = GRAPH_FIXTURES.get(name)
    if info is None:
        raise KeyError(f"unknown graph fixture {name!r}")
    return _data_text(info.filename).strip()


def load_graph_fixture(name: str) -> Graph:
    info = GRAPH_FIXTURES.get(name)
    if info is None:
        raise KeyError(f"unknown graph fixture {name!r}")
    g = decode_graph6(fixture_g6(name))
    return replace(g, labels=info.labels, name=name)


@dataclass(frozen=True)
class ConfigFixture:
    """A pebble configuration bound to a fixture graph and target."""

    name: str
    graph: str
    target: str
    counts: tuple[int, ...]


def load_config_fixture(name: str) -> ConfigFixture:
    if name not in CONFIG_FIXTURES:
        raise KeyError(f"unknown configuration fixture {name!r}")
    data = json.loads(_data_text(f"{name}.json"))
    return ConfigFixture(
        name=name,
        graph=data["graph"],
        target=str(data["target"]),
        counts=tuple(int(c) for c in data["counts"]),
    )


def parse_config_json(data: dict) -> tuple[str | dict | None, str | None, tuple[int, ...]]:
    """Parse the configuration JSON form {"graph": <id or inline>,
    "counts": [..]} with an optional "target"; returns (graph spec,
    target spec, counts)."""
    counts = tuple(int(c) for c in data["counts"])
    target = data.get("target")
    return data.get("graph"), (str(target) if target is not None else None), counts
