"""Hidden binary search tree: rotation-free ordered set over fixed-width
integer keys, plus baselines, a differential oracle, and a benchmark
harness."""

from .baselines import BstStats, NaiveBst, OracleSet
from .bench import (
    CSV_HEADER,
    STRUCTURES,
    WORKLOAD_KINDS,
    BenchRecord,
    TrialError,
    WorkloadSpec,
    emit_report,
    generate,
    records_from_json,
    run_trial,
    sweep,
)
from .core import (
    IDEAL_TREE_MAX_BITS,
    LEFT,
    MAX_BITS,
    RIGHT,
    ROOT_FRAME,
    DuplicateKeyError,
    Frame,
    HiddenBst,
    InsertResult,
    KeyRangeError,
    Node,
    TreeStats,
    ValidationReport,
    Violation,
    build_ideal_tree,
    child_frame,
    frame_bounds,
    hidden_ref,
)
from .differential import DifferentialSummary, run_differential
from .render import render_dot, render_text
from .rng import SplitMix64
from .serde import (
    DocumentError,
    InvalidTreeError,
    dump,
    dumps,
    from_document,
    load,
    loads,
    to_document,
)

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "BstStats",
    "CSV_HEADER",
    "DifferentialSummary",
    "DocumentError",
    "DuplicateKeyError",
    "Frame",
    "HiddenBst",
    "IDEAL_TREE_MAX_BITS",
    "InsertResult",
    "InvalidTreeError",
    "KeyRangeError",
    "LEFT",
    "MAX_BITS",
    "NaiveBst",
    "Node",
    "OracleSet",
    "RIGHT",
    "ROOT_FRAME",
    "STRUCTURES",
    "SplitMix64",
    "TreeStats",
    "TrialError",
    "ValidationReport",
    "Violation",
    "WORKLOAD_KINDS",
    "WorkloadSpec",
    "build_ideal_tree",
    "child_frame",
    "dump",
    "dumps",
    "emit_report",
    "frame_bounds",
    "from_document",
    "generate",
    "hidden_ref",
    "load",
    "loads",
    "records_from_json",
    "render_dot",
    "render_text",
    "run_differential",
    "run_trial",
    "sweep",
    "to_document",
]
