"""Deterministic workload generation, trial execution, and report emission.

A ``WorkloadSpec`` pins down a key sequence exactly: the same spec always
generates the same keys, on any platform, because random sampling runs on
the seeded SplitMix64 stream.  ``run_trial`` builds one structure from a
spec, searches every inserted key once, and records heights, comparison
counts, and wall times; ``sweep`` crosses specs with structures; and
``emit_report`` renders CSV or JSON.  Timing fields are the only
non-deterministic columns.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, fields
from typing import NamedTuple, Optional, Sequence

from .baselines import NaiveBst
from .core import HiddenBst
from .rng import SplitMix64

log = logging.getLogger(__name__)

WORKLOAD_KINDS = ("ascending", "descending", "random", "clustered")
STRUCTURES = ("hbst", "naive_bst")

CSV_HEADER = (
    "structure,workload,bits,n,seed,height,avg_depth,"
    "comparisons_total,comparisons_per_search,build_ns,search_ns"
)


@dataclass(frozen=True)
class WorkloadSpec:
    """A reproducible key sequence: kind, size, key width, seed.

    ``base`` is the interval start for ``clustered`` workloads and must be
    left at 0 otherwise.  ``seed`` only matters for ``random``.
    """

    kind: str
    n: int
    bits: int
    seed: int = 1
    base: int = 0

    def __post_init__(self):
        if self.kind not in WORKLOAD_KINDS:
            raise ValueError(f"workload kind must be one of {WORKLOAD_KINDS}")
        if not 1 <= self.bits <= 64:
            raise ValueError(f"bits must be in [1, 64], got {self.bits}")
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if self.n > 1 << self.bits:
            raise ValueError(f"n={self.n} exceeds key space 2**{self.bits}")
        if self.kind == "clustered":
            if self.base < 0:
                raise ValueError(f"base must be non-negative, got {self.base}")
            if self.base + self.n > 1 << self.bits:
                raise ValueError(
                    f"base={self.base} + n={self.n} exceeds key space 2**{self.bits}"
                )
        elif self.base:
            raise ValueError(f"base is only meaningful for clustered workloads")


def generate(spec: WorkloadSpec) -> list[int]:
    """Distinct keys for *spec*, identical for identical specs.

    ``random`` draws from SplitMix64(seed) masked to the key width (exact
    uniformity, the width divides 64) and rejects repeats against a seen
    set.
    """
    if spec.kind == "ascending":
        return list(range(spec.n))
    if spec.kind == "descending":
        return list(range(spec.n - 1, -1, -1))
    if spec.kind == "clustered":
        return list(range(spec.base, spec.base + spec.n))
    rng = SplitMix64(spec.seed)
    mask = (1 << spec.bits) - 1
    keys: list[int] = []
    seen: set[int] = set()
    while len(keys) < spec.n:
        value = rng.next_u64() & mask
        if value not in seen:
            seen.add(value)
            keys.append(value)
    return keys


@dataclass(frozen=True)
class BenchRecord:
    """One trial's measurements; field order matches the CSV columns."""

    structure: str
    workload: str
    bits: int
    n: int
    seed: int
    height: int
    avg_depth: Optional[float]
    comparisons_total: int
    comparisons_per_search: Optional[float]
    build_ns: int
    search_ns: int


class TrialError(NamedTuple):
    structure: str
    spec: WorkloadSpec
    error: Exception


def run_trial(structure: str, spec: WorkloadSpec) -> BenchRecord:
    """Build *structure* from the spec's keys, then search each key once.

    Comparison counts cover the search pass: for the interval tree each
    successful search costs found-depth + 1 visits; the naive BST reports
    its own counter delta.
    """
    if structure not in STRUCTURES:
        raise ValueError(f"structure must be one of {STRUCTURES}")
    keys = generate(spec)

    if structure == "hbst":
        tree = HiddenBst(spec.bits)
        t0 = time.perf_counter_ns()
        for key in keys:
            tree.insert(key)
        build_ns = time.perf_counter_ns() - t0
        total = 0
        t0 = time.perf_counter_ns()
        for key in keys:
            depth = tree.search(key)
            total += depth + 1
        search_ns = time.perf_counter_ns() - t0
        height, _, _, avg_depth = tree.stats()
    else:
        bst = NaiveBst()
        t0 = time.perf_counter_ns()
        for key in keys:
            bst.insert(key)
        build_ns = time.perf_counter_ns() - t0
        before = bst.comparisons
        t0 = time.perf_counter_ns()
        for key in keys:
            bst.search(key)
        search_ns = time.perf_counter_ns() - t0
        total = bst.comparisons - before
        height, _, avg_depth = bst.stats()

    per_search = total / len(keys) if keys else None
    return BenchRecord(
        structure=structure,
        workload=spec.kind,
        bits=spec.bits,
        n=spec.n,
        seed=spec.seed,
        height=height,
        avg_depth=avg_depth,
        comparisons_total=total,
        comparisons_per_search=per_search,
        build_ns=build_ns,
        search_ns=search_ns,
    )


def sweep(
    specs: Sequence[WorkloadSpec],
    structures: Sequence[str],
    errors: Optional[list[TrialError]] = None,
) -> list[BenchRecord]:
    """Run every spec against every structure, spec-major order.

    A failing trial never aborts the sweep: it is appended to *errors* when
    a list is given, otherwise logged as a warning.
    """
    records: list[BenchRecord] = []
    for spec in specs:
        for structure in structures:
            try:
                records.append(run_trial(structure, spec))
            except Exception as exc:
                if errors is not None:
                    errors.append(TrialError(structure, spec, exc))
                else:
                    log.warning("trial %s / %s failed: %s", structure, spec, exc)
    return records


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def emit_report(records: Sequence[BenchRecord], format: str = "csv") -> str:
    """Render records as CSV (fixed header) or JSON (same fields)."""
    if format == "csv":
        lines = [CSV_HEADER]
        for record in records:
            lines.append(
                ",".join(_csv_cell(getattr(record, f.name)) for f in fields(BenchRecord))
            )
        return "\n".join(lines) + "\n"
    if format == "json":
        rows = [
            {f.name: getattr(record, f.name) for f in fields(BenchRecord)}
            for record in records
        ]
        return json.dumps(rows, indent=2) + "\n"
    raise ValueError(f"format must be 'csv' or 'json', got {format!r}")


def records_from_json(text: str) -> list[BenchRecord]:
    """Parse a JSON report back into records (inverse of ``emit_report``)."""
    rows = json.loads(text)
    if not isinstance(rows, list):
        raise ValueError("JSON report must be an array")
    names = {f.name for f in fields(BenchRecord)}
    records = []
    for row in rows:
        if not isinstance(row, dict) or set(row) != names:
            raise ValueError(f"report row fields must be {sorted(names)}")
        records.append(BenchRecord(**row))
    return records
