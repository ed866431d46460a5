#!/usr/bin/env python3
"""Regenerate the vendored fixture corpus under src/pebbling/data/.

Graph sources:
  * k2, petersen, j3: emitted from the library generators.
  * hog1395, hog44170, hog44172: edge lists transcribed from the drawings
    of the three 12-pebble unsolvable witnesses (House of Graphs vertex
    numbering, stored 0-based as label-1).

Also writes the three witness configuration fixtures (fig3a/b/c) and
sanity-checks every graph's parameters before writing anything.

With --census the script additionally cross-checks the transcriptions
against the exhaustive census of connected cubic graphs on 12 vertices
with girth 3 and diameter 3 (the transcribed graphs and the smallest
flower snark must appear among them, pairwise non-isomorphic). The
census finds sixteen such graphs, so House of Graphs #6698 cannot be
identified offline and is intentionally not vendored.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from pebbling import (
    complete_graph,
    encode_graph6,
    flower_snark,
    from_edge_list,
    metrics,
    petersen,
)

DATA = Path(__file__).resolve().parent.parent / "src" / "pebbling" / "data"

HOG_EDGES = {
    1395: [
        (1, 2), (1, 3), (1, 4), (2, 10), (2, 9), (3, 12), (4, 11), (12, 8),
        (12, 6), (11, 7), (11, 5), (3, 4), (10, 8), (9, 7), (10, 9), (8, 6),
        (7, 5), (6, 5),
    ],
    44170: [
        (6, 8), (6, 5), (6, 9), (8, 12), (8, 10), (5, 7), (9, 4), (5, 9),
        (7, 11), (4, 1), (10, 7), (12, 2), (12, 3), (3, 11), (10, 4), (2, 11),
        (3, 1), (2, 1),
    ],
    44172: [
        (1, 4), (1, 3), (1, 2), (4, 9), (4, 8), (3, 11), (3, 12), (2, 12),
        (9, 8), (2, 10), (9, 5), (11, 7), (10, 6), (5, 7), (11, 6), (10, 7),
        (8, 12), (5, 6),
    ],
}

# (graph fixture, target label, pebble counts by HoG label 1..12)
WITNESSES = {
    "fig3a": ("hog1395", "1", {6: 7, 7: 3, 10: 1, 11: 1}),
    "fig3b": ("hog44170", "6", {1: 5, 2: 1, 3: 1, 11: 5}),
    "fig3c": ("hog44172", "1", {5: 7, 6: 1, 7: 1, 10: 1, 11: 1, 12: 1}),
}


def hog_graph(hog_id: int):
    edges = [(a - 1, b - 1) for a, b in HOG_EDGES[hog_id]]
    return from_edge_list(12, edges, labels=[str(i + 1) for i in range(12)])


def check_parameters(name, g):
    m = metrics(g)
    assert set(m.degree_sequence) == {3}, f"{name} not cubic"
    assert m.girth == 3, f"{name} girth {m.girth}"
    assert m.diameter == 3, f"{name} diameter {m.diameter}"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--census", action="store_true",
                        help="cross-check the corpus against the cubic census (slow)")
    args = parser.parse_args()

    DATA.mkdir(parents=True, exist_ok=True)
    graphs = {
        "k2": complete_graph(2),
        "petersen": petersen(),
        "j3": flower_snark(3),
    }
    for hog_id in HOG_EDGES:
        g = hog_graph(hog_id)
        check_parameters(f"hog{hog_id}", g)
        graphs[f"hog{hog_id}"] = g
    check_parameters("j3", graphs["j3"])

    for name, g in graphs.items():
        line = encode_graph6(g)
        (DATA / f"{name}.g6").write_text(line + "\n")
        print(f"{name}.g6: {line}")

    for name, (graph, target, by_label) in WITNESSES.items():
        counts = [by_label.get(i + 1, 0) for i in range(12)]
        assert sum(counts) == 12
        payload = {"graph": graph, "target": target, "counts": counts}
        (DATA / f"{name}.json").write_text(json.dumps(payload, indent=2) + "\n")
        print(f"{name}.json: target {target} counts {counts}")

    if args.census:
        from pebbling.census import are_isomorphic, cubic_girth3_diameter3_on_12

        family = cubic_girth3_diameter3_on_12()
        print(f"census found {len(family)} graphs with the target parameters")
        known = {name: graphs[name] for name in ("j3", "hog1395", "hog44170", "hog44172")}
        matched = {}
        for g in family:
            for name, kg in known.items():
                if are_isomorphic(g, kg):
                    matched[name] = g
        missing = sorted(set(known) - set(matched))
        assert not missing, f"transcribed graphs missing from the census: {missing}"
        print(f"all {len(matched)} vendored 12-vertex graphs appear in the census")


if __name__ == "__main__":
    main()
