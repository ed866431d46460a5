"""Command-line interface: the ``pebble`` tool.

Subcommands: solve, witness, pi, class0, audit, gen, orbits, fetch.
Graphs come from exactly one source (--g6, --fixture, --hog, --gen, or a
configuration file's graph field); targets are addressable by label or
index. ``--json`` emits machine-readable reports; with ``--no-timings``
they are byte-identical across runs and across --jobs values.

Exit status: 0 on success, 1 when --expect is set and the computed answer
mismatches it, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .audit import builtin_j3_suite, check_bound, load_suites
from .class0 import (
    find_unsolvable_witness,
    max_unsolvable,
    pebbling_number,
    validate_cap_filter,
)
from .configurations import Configuration
from .fixtures import (
    GRAPH_FIXTURES,
    load_config_fixture,
    load_graph_fixture,
    parse_config_json,
)
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .graphs import Graph, GraphError, generate, metrics
from .hog import HogFetchError, fetch_graph
from .orbits import vertex_orbits
from .solver import BudgetError, CountOverflowError, is_solvable

USAGE_ERROR = 2
EXPECT_MISMATCH = 1


class UsageError(ValueError):
    pass


def _default_jobs() -> int:
    return max(1, os.cpu_count() or 1)


def _add_source_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("graph source (exactly one)")
    group.add_argument("--g6", metavar="LINE", help="inline graph6 string")
    group.add_argument(
        "--fixture",
        metavar="NAME",
        help=f"vendored fixture, one of: {', '.join(sorted(GRAPH_FIXTURES))}",
    )
    group.add_argument("--hog", metavar="ID", type=int, help="House of Graphs id (cached fetch)")
    group.add_argument("--gen", metavar="SPEC", help="generator spec, e.g. flower:3, petersen, cycle:5")


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument(
        "--no-timings", action="store_true", help="omit elapsed times (reproducible output)"
    )
    parser.add_argument(
        "--jobs", type=int, default=None, metavar="N",
        help="worker processes (default: available parallelism)",
    )
    parser.add_argument(
        "--expect", metavar="ANSWER",
        help="assert the answer (solvable, unsolvable, found, absent, "
        "class0, not-class0, pi=N, pass, fail); mismatch exits 1",
    )


def _resolve_graph(args, allow_missing: bool = False) -> Graph | None:
    picked = [
        name
        for name, value in (
            ("--g6", args.g6),
            ("--fixture", args.fixture),
            ("--hog", args.hog),
            ("--gen", getattr(args, "gen", None)),
        )
        if value is not None
    ]
    if len(picked) > 1:
        raise UsageError(f"give exactly one graph source, got {' and '.join(picked)}")
    if not picked:
        if allow_missing:
            return None
        raise UsageError("a graph source is required (--g6/--fixture/--hog/--gen)")
    if args.g6 is not None:
        return decode_graph6(args.g6)
    if args.fixture is not None:
        try:
            return load_graph_fixture(args.fixture)
        except KeyError as exc:
            raise UsageError(str(exc)) from exc
    if args.hog is not None:
        return fetch_graph(args.hog)
    return generate(args.gen)


def _graph_from_spec(spec) -> Graph:
    """Resolve a configuration file's graph field (fixture id, generator
    spec, graph6 string, or inline {"g6": ...} / {"n":, "edges":} form)."""
    if isinstance(spec, dict):
        if "g6" in spec:
            return decode_graph6(spec["g6"])
        if "n" in spec and "edges" in spec:
            from .graphs import from_edge_list

            return from_edge_list(
                int(spec["n"]),
                [tuple(e) for e in spec["edges"]],
                labels=spec.get("labels"),
            )
        raise UsageError(f"cannot interpret inline graph {spec!r}")
    if spec in GRAPH_FIXTURES:
        return load_graph_fixture(spec)
    try:
        return generate(spec)
    except GraphError:
        pass
    return decode_graph6(spec)


def _emit(args, payload: dict, human_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _check_expect(args, answer: str) -> int:
    if args.expect is None:
        return 0
    if args.expect == answer:
        return 0
    print(f"expected {args.expect}, got {answer}", file=sys.stderr)
    return EXPECT_MISMATCH


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_solve(args) -> int:
    counts = None
    target_spec = args.target
    g = _resolve_graph(args, allow_missing=True)
    if args.config is not None:
        with open(args.config, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        graph_spec, file_target, counts = parse_config_json(data)
        if g is None:
            if graph_spec is None:
                raise UsageError("configuration file names no graph and none was given")
            g = _graph_from_spec(graph_spec)
        elif graph_spec is not None and args.fixture is not None and graph_spec != args.fixture:
            raise UsageError(
                f"configuration file is for graph {graph_spec!r}, not {args.fixture!r}"
            )
        if target_spec is None:
            target_spec = file_target
    if args.counts is not None:
        counts = tuple(int(x) for x in args.counts.replace(",", " ").split())
    if g is None:
        raise UsageError("a graph source is required (--g6/--fixture/--hog/--gen)")
    if counts is None:
        raise UsageError("a configuration is required (--config or --counts)")
    if target_spec is None:
        raise UsageError("a target is required (--target or the config file's)")
    target = g.resolve_vertex(target_spec)
    outcome = is_solvable(g, target, Configuration(counts))
    payload = outcome.to_json_dict(target)
    human = [
        f"graph: {g.name or 'inline'}  target: {g.label(target)} (index {target})",
        f"verdict: {outcome.verdict}",
    ]
    if outcome.moves is not None:
        human.append(
            "moves: " + (" ".join(f"{g.label(a)}->{g.label(b)}" for a, b in outcome.moves) or "(none)")
        )
    human.append(f"stats: {outcome.stats.to_json_dict()}")
    _emit(args, payload, human)
    return _check_expect(args, outcome.verdict)


def cmd_witness(args) -> int:
    g = _resolve_graph(args)
    target = g.resolve_vertex(args.target)
    jobs = args.jobs or _default_jobs()
    witness = find_unsolvable_witness(
        g, target, args.total, method=args.method, jobs=jobs
    )
    payload = {
        "graph": g.name or "inline",
        "target": target,
        "targetLabel": g.label(target),
        "total": args.total,
        "found": witness is not None,
        "witness": list(witness) if witness is not None else None,
        "method": args.method,
    }
    human = [
        f"graph: {g.name or 'inline'}  target: {g.label(target)}  total: {args.total}",
        f"witness: {list(witness) if witness is not None else 'none (all solvable)'}",
    ]
    if args.no_cap_filter:
        validation = validate_cap_filter(g, target, args.total)
        payload["capFilterValidation"] = validation
        human.append(f"cap-filter validation: {validation}")
        if not validation["filteredAllSolvable"]:
            raise RuntimeError("cap filter skipped an unsolvable configuration")
    _emit(args, payload, human)
    return _check_expect(args, "found" if witness is not None else "absent")


def _run_class0(args) -> int:
    g = _resolve_graph(args)
    jobs = args.jobs or _default_jobs()
    report = pebbling_number(
        g,
        use_orbits=not args.all_targets,
        method=args.method,
        jobs=jobs,
    )
    payload = report.to_json_dict(include_timings=not args.no_timings)
    human = [
        f"graph: {report.graph_name}  n: {report.n}",
        f"pebbling number: {report.pebbling_number}",
        f"class 0: {report.class_zero}",
        f"targets analysed: {len(report.per_target)}"
        + (" (orbit representatives)" if report.orbits_used else " (all vertices)"),
    ]
    for tr in report.per_target:
        human.append(
            f"  target {tr.target_label}: max unsolvable {tr.max_unsolvable}, "
            f"witness {list(tr.witness)}"
        )
    if report.counterexample is not None:
        human.append(
            f"counterexample ({report.n} pebbles, target "
            f"{report.counterexample['targetLabel']}): {report.counterexample['counts']}"
        )
    _emit(args, payload, human)
    answer = "class0" if report.class_zero else "not-class0"
    if args.expect is not None and args.expect.startswith("pi="):
        return _check_expect(args, f"pi={report.pebbling_number}")
    return _check_expect(args, answer)


def cmd_class0(args) -> int:
    return _run_class0(args)


def cmd_pi(args) -> int:
    return _run_class0(args)


def cmd_audit(args) -> int:
    g = _resolve_graph(args)
    if args.suite == "builtin":
        suites = builtin_j3_suite(g)
    else:
        suites = load_suites(args.suite, g)
    if args.target is not None:
        want = g.resolve_vertex(args.target)
        suites = [s for s in suites if s.system.target == want]
        if not suites:
            raise UsageError(f"no suite for target {args.target!r}")
    totals = None
    if args.totals is not None:
        lo, _, hi = args.totals.partition(":")
        totals = (int(lo), int(hi))
    jobs = args.jobs or _default_jobs()
    reports = []
    if jobs > 1 and len(suites) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(
                    check_bound, g, s.system.target, s.system, s.bounds, totals,
                    method=args.method,
                )
                for s in suites
            ]
            reports = [f.result() for f in futures]
    else:
        reports = [
            check_bound(g, s.system.target, s.system, s.bounds, totals, method=args.method)
            for s in suites
        ]
    passed = all(r.passed for r in reports)
    payload = {
        "graph": g.name or "inline",
        "passed": passed,
        "suites": [r.to_json_dict(include_timings=not args.no_timings) for r in reports],
    }
    human = [f"graph: {g.name or 'inline'}  suites: {len(reports)}  passed: {passed}"]
    for r in reports:
        human.append(
            f"  target {r.target_label}: {r.bounds_checked} bounds over "
            f"{r.unsolvable_count} unsolvable configurations "
            f"(of {r.configurations_scanned} scanned), violations: {r.violation_total}"
        )
        for pb_item in r.per_bound:
            human.append(
                f"    {pb_item['bound']}: max lhs {pb_item['maxLhs']}, "
                f"violations {pb_item['violations']}"
            )
    _emit(args, payload, human)
    code = _check_expect(args, "pass" if passed else "fail")
    return code


def cmd_gen(args) -> int:
    g = generate(args.spec)
    line = encode_graph6(g)
    if args.emit_g6:
        print(line)
        return 0
    m = metrics(g)
    payload = {
        "graph": g.name,
        "n": g.n,
        "edges": g.edge_count,
        "g6": line,
        "degreeSequence": list(m.degree_sequence),
        "diameter": m.diameter,
        "girth": m.girth,
    }
    human = [
        f"graph: {g.name}  n: {g.n}  edges: {g.edge_count}",
        f"g6: {line}",
        f"diameter: {m.diameter}  girth: {m.girth if m.girth is not None else 'acyclic'}",
    ]
    _emit(args, payload, human)
    return 0


def cmd_orbits(args) -> int:
    g = _resolve_graph(args)
    partition = vertex_orbits(g)
    orbits = [
        {
            "representative": rep,
            "representativeLabel": g.label(rep),
            "members": list(partition.members(i)),
            "size": len(partition.members(i)),
        }
        for i, rep in enumerate(partition.representatives)
    ]
    payload = {
        "graph": g.name or "inline",
        "orbitCount": partition.orbit_count,
        "orbits": orbits,
    }
    human = [f"graph: {g.name or 'inline'}  orbits: {partition.orbit_count}"]
    for orb in orbits:
        labels = ", ".join(g.label(v) for v in orb["members"])
        human.append(f"  [{orb['representativeLabel']}] size {orb['size']}: {labels}")
    _emit(args, payload, human)
    return 0


def cmd_fetch(args) -> int:
    g = fetch_graph(args.id, cache_dir=args.cache_dir)
    m = metrics(g)
    payload = {
        "graph": g.name,
        "n": g.n,
        "edges": g.edge_count,
        "degreeSequence": list(m.degree_sequence),
        "diameter": m.diameter,
        "girth": m.girth,
        "g6": encode_graph6(g),
    }
    human = [
        f"fetched {g.name}: n={g.n} edges={g.edge_count} "
        f"diameter={m.diameter} girth={m.girth}",
    ]
    _emit(args, payload, human)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pebble",
        description="Graph pebbling solver toolkit: solvability, pebbling "
        "numbers, Class 0 verdicts, and bound audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide solvability of one configuration")
    _add_source_options(p)
    _add_common_options(p)
    p.add_argument("--target", help="target vertex (label or index)")
    p.add_argument("--config", help="configuration JSON file")
    p.add_argument("--counts", help="inline counts, e.g. '0,0,7,3,0'")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("witness", help="least unsolvable configuration of a total")
    _add_source_options(p)
    _add_common_options(p)
    p.add_argument("--target", required=True)
    p.add_argument("--total", required=True, type=int)
    p.add_argument("--method", default="auto", help="auto, sweep, downward, upward")
    p.add_argument(
        "--no-cap-filter", action="store_true",
        help="validation mode: enumerate everything and check the filtered-out "
        "configurations are all solvable",
    )
    p.set_defaults(func=cmd_witness)

    for name, help_text in (
        ("pi", "compute the pebbling number"),
        ("class0", "decide whether the graph is Class 0"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_source_options(p)
        _add_common_options(p)
        p.add_argument(
            "--all-targets", action="store_true",
            help="analyse every vertex instead of orbit representatives",
        )
        p.add_argument("--method", default="auto", help="auto, sweep, downward, upward")
        p.set_defaults(func=cmd_class0 if name == "class0" else cmd_pi)

    p = sub.add_parser("audit", help="audit bound suites over unsolvable families")
    _add_source_options(p)
    _add_common_options(p)
    p.add_argument("--suite", default="builtin", help="suite JSON file or 'builtin'")
    p.add_argument("--target", help="restrict to one suite target")
    p.add_argument("--totals", metavar="LO:HI", help="inclusive totals range")
    p.add_argument("--method", default="auto", help="auto, sweep, scan")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("gen", help="emit a family graph")
    p.add_argument("spec", help="e.g. flower:3, petersen, path:4, cycle:5, complete:4")
    p.add_argument("--emit-g6", action="store_true", help="print only the graph6 line")
    _add_common_options(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("orbits", help="vertex orbits under the automorphism group")
    _add_source_options(p)
    _add_common_options(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("fetch", help="fetch a House of Graphs entry into the cache")
    p.add_argument("id", type=int)
    p.add_argument("--cache-dir", help="override the cache directory")
    _add_common_options(p)
    p.set_defaults(func=cmd_fetch)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        UsageError,
        GraphError,
        Graph6Error,
        HogFetchError,
        BudgetError,
        CountOverflowError,
        FileNotFoundError,
        KeyError,
        ValueError,
    ) as exc:
        print(f"pebble: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
