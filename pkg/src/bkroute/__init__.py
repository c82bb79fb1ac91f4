"""Shortest-route solving on the min-plus semiring: dense cost-matrix
iteration in classic (simultaneous) and accelerated (in-place, bottom-up)
sweep orders, plus a seeded graph generator, a bit-exact set file format,
and a benchmark harness with fixed measurement grids."""

from .bench import (
    GRIDS,
    REPORT_COLUMNS,
    TABLE1_CELLS,
    TABLE2_CELLS,
    BenchReport,
    BenchRow,
    MethodTiming,
    TimingPolicy,
    UndefinedSpeedupError,
    VerificationSummary,
    aggregate_speedup,
    derive_cell_seed,
    emit_table,
    environment_note,
    range_label,
    run_grid,
    time_solver,
    verify_equivalence,
)
from .generator import (
    GeneratedSet,
    GenSpec,
    RngStream,
    draw_graph,
    draw_spec_instance,
    generate_set,
    generate_set_detailed,
)
from .graph import (
    INF,
    MAX_WEIGHT,
    Arc,
    CostMatrix,
    Graph,
    MalformedGraphError,
    Weight,
    build_cost_matrix,
    ext_add,
    max_arcs,
)
from .oracle import (
    BRUTE_FORCE_MAX_NODES,
    SizeLimitError,
    bounded_distances,
    brute_force_distance,
    oracle_distances,
)
from .setfile import CorruptFileError, UnsupportedFormatError, read_set, write_set
from .solver import (
    ConvergenceError,
    NoRouteError,
    Route,
    SolveResult,
    bk_accelerated,
    bk_classic,
    extract_route,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "MAX_WEIGHT",
    "Arc",
    "BenchReport",
    "BenchRow",
    "BRUTE_FORCE_MAX_NODES",
    "ConvergenceError",
    "CorruptFileError",
    "CostMatrix",
    "GeneratedSet",
    "GenSpec",
    "Graph",
    "GRIDS",
    "MalformedGraphError",
    "MethodTiming",
    "NoRouteError",
    "REPORT_COLUMNS",
    "RngStream",
    "Route",
    "SizeLimitError",
    "SolveResult",
    "TABLE1_CELLS",
    "TABLE2_CELLS",
    "TimingPolicy",
    "UndefinedSpeedupError",
    "UnsupportedFormatError",
    "VerificationSummary",
    "Weight",
    "aggregate_speedup",
    "bk_accelerated",
    "bk_classic",
    "bounded_distances",
    "brute_force_distance",
    "build_cost_matrix",
    "derive_cell_seed",
    "draw_graph",
    "draw_spec_instance",
    "emit_table",
    "environment_note",
    "ext_add",
    "extract_route",
    "generate_set",
    "generate_set_detailed",
    "max_arcs",
    "oracle_distances",
    "range_label",
    "read_set",
    "run_grid",
    "time_solver",
    "verify_equivalence",
    "write_set",
]
