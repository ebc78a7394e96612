"""Lockstep differential fuzzing of the interval tree against an exact set.

Each step draws a weighted operation and a key from a seeded SplitMix64
stream, applies it to a ``HiddenBst`` and an ``OracleSet`` simultaneously,
and compares the observable outcomes.  Inserts always use a key that is
currently absent (membership semantics require distinct-at-insert keys),
re-drawing a bounded number of times if needed.  At a fixed cadence the
tree is structurally validated and its live count compared with the
oracle's size; a final checkpoint also compares the full sorted key sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .baselines import OracleSet
from .core import DuplicateKeyError, HiddenBst
from .rng import SplitMix64

# (name, weight): insert-heavy so the population grows and churns.
OP_WEIGHTS = (
    ("insert", 40),
    ("search", 20),
    ("lazy_delete", 20),
    ("hard_delete", 20),
)

_TOTAL_WEIGHT = sum(w for _, w in OP_WEIGHTS)
_INSERT_RETRIES = 64


@dataclass
class DifferentialSummary:
    ops: int
    bits: int
    seed: int
    op_counts: dict[str, int] = field(default_factory=dict)
    mismatches: int = 0
    mismatch_details: list[str] = field(default_factory=list)
    checkpoints: int = 0
    checkpoint_failures: int = 0
    skipped_inserts: int = 0
    final_live_count: int = 0

    @property
    def ok(self) -> bool:
        return self.mismatches == 0 and self.checkpoint_failures == 0

    def __str__(self) -> str:
        lines = [
            f"ops: {self.ops} (bits={self.bits}, seed={self.seed})",
            "op counts: "
            + ", ".join(f"{name}={self.op_counts.get(name, 0)}" for name, _ in OP_WEIGHTS),
            f"validation checkpoints: {self.checkpoints}"
            f" ({self.checkpoint_failures} failed)",
            f"final live keys: {self.final_live_count}",
            f"mismatches: {self.mismatches}",
        ]
        lines.extend(f"  {detail}" for detail in self.mismatch_details)
        return "\n".join(lines)


def _record_mismatch(summary: DifferentialSummary, detail: str) -> None:
    summary.mismatches += 1
    if len(summary.mismatch_details) < 10:
        summary.mismatch_details.append(detail)


def run_differential(
    ops: int, bits: int, seed: int, check_every: int = 1000
) -> DifferentialSummary:
    """Run *ops* randomized operations; see the module docstring.

    Deterministic for a given (ops, bits, seed, check_every); the summary's
    ``ok`` property is True iff there were no membership mismatches and no
    failed validation checkpoints.
    """
    if ops < 1:
        raise ValueError(f"ops must be >= 1, got {ops}")
    rng = SplitMix64(seed)
    tree = HiddenBst(bits)
    oracle = OracleSet()
    summary = DifferentialSummary(ops=ops, bits=bits, seed=seed)
    mask = (1 << bits) - 1
    history: list[int] = []  # every key ever inserted; biases draws to hits

    for step in range(1, ops + 1):
        roll = rng.below(_TOTAL_WEIGHT)
        for name, weight in OP_WEIGHTS:
            roll -= weight
            if roll < 0:
                op = name
                break
        if history and rng.below(2) == 0:
            key = history[rng.below(len(history))]
        else:
            key = rng.next_u64() & mask
        summary.op_counts[op] = summary.op_counts.get(op, 0) + 1

        if op == "insert":
            for _ in range(_INSERT_RETRIES):
                if not oracle.contains(key):
                    break
                key = rng.next_u64() & mask
            else:
                summary.skipped_inserts += 1
                continue
            try:
                tree.insert(key)
            except DuplicateKeyError:
                _record_mismatch(summary, f"op {step}: insert({key}) raised duplicate")
            else:
                if not oracle.insert(key):
                    _record_mismatch(
                        summary, f"op {step}: oracle already held fresh key {key}"
                    )
                history.append(key)
        elif op == "search":
            got = tree.search(key) is not None
            expected = oracle.contains(key)
            if got != expected:
                _record_mismatch(
                    summary,
                    f"op {step}: search({key}) -> {got}, oracle says {expected}",
                )
        else:
            deleter = tree.lazy_delete if op == "lazy_delete" else tree.hard_delete
            got = deleter(key)
            expected = oracle.delete(key)
            if got != expected:
                _record_mismatch(
                    summary,
                    f"op {step}: {op}({key}) -> {got}, oracle says {expected}",
                )

        if step % check_every == 0 or step == ops:
            summary.checkpoints += 1
            report = tree.validate()
            if not report.valid:
                summary.checkpoint_failures += 1
                _record_mismatch(
                    summary,
                    f"op {step}: validation failed: {report.violations[0].rule}"
                    f" at {report.violations[0].locator}",
                )
            if tree.live_count != len(oracle):
                _record_mismatch(
                    summary,
                    f"op {step}: live_count {tree.live_count} != oracle {len(oracle)}",
                )

    if tree.collect_keys("sorted") != oracle.sorted_keys():
        _record_mismatch(summary, "final sorted key sets differ")
    summary.final_live_count = tree.live_count
    return summary
