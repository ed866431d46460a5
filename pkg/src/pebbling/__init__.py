"""Graph pebbling toolkit.

Decides solvability of pebble configurations by exhaustive search with
memoization and pruning, computes pebbling numbers and Class 0 status of
small graphs, and audits linear pebble-sum bounds over entire unsolvable
families. Ships the graph families and fixture corpus the checks run on,
plus a graph6 codec and automorphism-orbit target reduction.
"""

from .audit import (
    AuditReport,
    BoundSuite,
    LinearBound,
    SetSystem,
    builtin_j3_suite,
    check_bound,
    load_suites,
    suite_from_dict,
)
from .class0 import (
    ClassZeroReport,
    TargetReport,
    WitnessVerificationError,
    find_unsolvable_witness,
    is_class_zero,
    max_unsolvable,
    pebbling_number,
    validate_cap_filter,
)
from .configurations import (
    Configuration,
    Move,
    MoveError,
    apply_move,
    transport_moves,
    trivially_solvable,
    unsolvability_caps,
    weight,
)
from .enumeration import (
    EnumSpec,
    count_capped,
    enumerate_capped,
    enumerate_capped_range,
    level_counts,
    rank_capped,
    shard_ranges,
    unrank_capped,
)
from .fixtures import (
    CONFIG_FIXTURES,
    GRAPH_FIXTURES,
    ConfigFixture,
    fixture_g6,
    load_config_fixture,
    load_graph_fixture,
)
from .graph6 import Graph6Error, decode_graph6, encode_graph6
from .graphs import (
    Graph,
    GraphError,
    GraphMetrics,
    complete_graph,
    cycle_graph,
    distances_from,
    flower_snark,
    from_edge_list,
    generate,
    metrics,
    neighborhood,
    path_graph,
    petersen,
)
from .hog import HogFetchError, fetch_graph
from .orbits import OrbitPartition, vertex_orbits
from .solver import (
    BudgetError,
    CountOverflowError,
    RefutationCache,
    ReplayResult,
    SearchStats,
    SolveOutcome,
    is_solvable,
    is_solvable_naive,
    replay,
    verify_certificate,
)
from .sweep import SweepBudgetError, SweepResult, fits_sweep, sweep_unsolvable

__version__ = "1.0.0"

__all__ = [
    "AuditReport",
    "BoundSuite",
    "BudgetError",
    "ClassZeroReport",
    "CONFIG_FIXTURES",
    "ConfigFixture",
    "Configuration",
    "CountOverflowError",
    "EnumSpec",
    "Graph",
    "Graph6Error",
    "GraphError",
    "GraphMetrics",
    "GRAPH_FIXTURES",
    "HogFetchError",
    "LinearBound",
    "Move",
    "MoveError",
    "OrbitPartition",
    "RefutationCache",
    "ReplayResult",
    "SearchStats",
    "SetSystem",
    "SolveOutcome",
    "SweepBudgetError",
    "SweepResult",
    "TargetReport",
    "WitnessVerificationError",
    "apply_move",
    "builtin_j3_suite",
    "check_bound",
    "complete_graph",
    "count_capped",
    "cycle_graph",
    "decode_graph6",
    "distances_from",
    "encode_graph6",
    "enumerate_capped",
    "enumerate_capped_range",
    "fetch_graph",
    "find_unsolvable_witness",
    "fits_sweep",
    "fixture_g6",
    "flower_snark",
    "from_edge_list",
    "generate",
    "is_class_zero",
    "is_solvable",
    "is_solvable_naive",
    "level_counts",
    "load_config_fixture",
    "load_graph_fixture",
    "load_suites",
    "max_unsolvable",
    "metrics",
    "neighborhood",
    "path_graph",
    "pebbling_number",
    "petersen",
    "rank_capped",
    "replay",
    "shard_ranges",
    "suite_from_dict",
    "sweep_unsolvable",
    "transport_moves",
    "trivially_solvable",
    "unrank_capped",
    "unsolvability_caps",
    "validate_cap_filter",
    "verify_certificate",
    "vertex_orbits",
    "weight",
]
