"""Hidden binary search tree over a fixed-width unsigned integer key space.

The tree never compares a probe key against stored node keys to pick a
branch.  Every slot in the tree is positionally associated with a half-open
interval of the key space, starting from ``[0, 2**bits)`` at the root; the
branch decision at a node compares the probe against the midpoint of that
node's interval (its *hidden reference value*) and recurses into the left
half ``[lo, mid)`` or the right half ``[mid, hi)``.  Intervals halve at each
level, so any root-to-leaf path has at most ``bits + 1`` nodes, no matter
how adversarial the insertion order is, and no rebalancing ever happens.

Deletion is lazy by default: a deleted node is flagged as a tombstone and
its slot is reclaimed by the next insertion routed through it.  A physical
``hard_delete`` is also provided; it substitutes the removed key with a
descendant leaf, which is always interval-compatible with the hole.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

MAX_BITS = 64

# build_ideal_tree materializes 2**bits - 1 nodes; keep desk-scale.
IDEAL_TREE_MAX_BITS = 20

LEFT = "left"
RIGHT = "right"


class KeyRangeError(ValueError):
    """Key is outside the tree's key space [0, 2**bits)."""


class DuplicateKeyError(ValueError):
    """A live node with the same key already sits on the insertion path."""


@dataclass(frozen=True)
class Frame:
    """Positional interval of a tree slot: the half-open range
    ``[lo, lo + 2**(bits - depth))`` of the key space.

    Frames are never stored in nodes; they are derived on the way down from
    the root frame ``Frame(0, 0)``.  ``lo`` is always a multiple of the
    interval span, and ``depth`` ranges from 0 (root) to ``bits`` (unit
    interval).
    """

    lo: int
    depth: int


ROOT_FRAME = Frame(0, 0)


def _check_bits(bits: int) -> int:
    bits = operator.index(bits)
    if not 1 <= bits <= MAX_BITS:
        raise ValueError(f"key width must be in [1, {MAX_BITS}], got {bits}")
    return bits


def _check_frame(frame: Frame, bits: int) -> None:
    if not 0 <= frame.depth <= bits:
        raise ValueError(f"frame depth {frame.depth} outside [0, {bits}]")
    span = 1 << (bits - frame.depth)
    if frame.lo < 0 or frame.lo % span != 0 or frame.lo + span > (1 << bits):
        raise ValueError(f"frame lo {frame.lo} misaligned for depth {frame.depth}")


def frame_bounds(frame: Frame, bits: int) -> tuple[int, int]:
    """Return the half-open interval ``(lo, hi)`` denoted by *frame*."""
    bits = _check_bits(bits)
    _check_frame(frame, bits)
    return frame.lo, frame.lo + (1 << (bits - frame.depth))


def hidden_ref(frame: Frame, bits: int) -> int:
    """Midpoint of the frame's interval: the branching value at this slot.

    For a unit interval (``depth == bits``) the floor midpoint is ``lo``
    itself.
    """
    bits = _check_bits(bits)
    _check_frame(frame, bits)
    if frame.depth == bits:
        return frame.lo
    return frame.lo + (1 << (bits - frame.depth - 1))


def child_frame(frame: Frame, side: str, bits: int) -> Frame:
    """Frame of the left or right child slot.

    Left keeps ``lo`` and halves the span; right starts at the hidden
    reference value.  Raises ``ValueError`` at ``depth == bits``: unit
    intervals cannot be subdivided.
    """
    bits = _check_bits(bits)
    _check_frame(frame, bits)
    if frame.depth >= bits:
        raise ValueError(f"cannot subdivide unit interval at depth {frame.depth}")
    if side == LEFT:
        return Frame(frame.lo, frame.depth + 1)
    if side == RIGHT:
        return Frame(frame.lo + (1 << (bits - frame.depth - 1)), frame.depth + 1)
    raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}, got {side!r}")


class Node:
    """Tree node: a key, a tombstone flag, and two child links.

    A tombstoned node keeps its last key value (still inside its frame) so
    that descents remain well-defined; it is invisible to membership.
    """

    __slots__ = ("key", "tombstone", "left", "right")

    def __init__(self, key: int):
        self.key = key
        self.tombstone = False
        self.left: Optional[Node] = None
        self.right: Optional[Node] = None

    def __repr__(self) -> str:
        flag = "+" if self.tombstone else ""
        return f"<Node {self.key}{flag}>"


class InsertResult(NamedTuple):
    depth: int
    reused_tombstone: bool


class TreeStats(NamedTuple):
    height: int
    live_count: int
    tombstone_count: int
    avg_live_depth: Optional[float]


@dataclass(frozen=True)
class Violation:
    locator: str
    rule: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        lines = [f"{v.rule} at {v.locator}: {v.detail}" for v in self.violations]
        lines.append("invalid")
        return "\n".join(lines)


class HiddenBst:
    """Mutable set of unsigned integers keyed by interval-midpoint descent.

    The key width is fixed at construction; every public operation checks
    its key against ``[0, 2**bits)``.  Single-threaded mutable value:
    concurrent readers are fine for the pure operations (``search``,
    ``stats``, ``validate``, ``collect_keys``), but no writer may run
    concurrently with anything else.
    """

    __slots__ = ("bits", "root", "live_count", "tombstone_count")

    def __init__(self, bits: int):
        self.bits = _check_bits(bits)
        self.root: Optional[Node] = None
        self.live_count = 0
        self.tombstone_count = 0

    @property
    def node_count(self) -> int:
        """Physical nodes, live and tombstoned."""
        return self.live_count + self.tombstone_count

    def __len__(self) -> int:
        return self.live_count

    def __contains__(self, key: int) -> bool:
        return self.search(key) is not None

    def __repr__(self) -> str:
        return (
            f"<HiddenBst bits={self.bits} live={self.live_count}"
            f" tombstones={self.tombstone_count}>"
        )

    def _check_key(self, key: int) -> int:
        key = operator.index(key)
        if key < 0 or key >> self.bits:
            raise KeyRangeError(f"key {key} outside [0, 2**{self.bits})")
        return key

    def insert(self, key: int) -> InsertResult:
        """Insert *key*, reusing the first tombstone on its descent path.

        Returns the landing depth and whether a tombstone slot was claimed.
        Raises ``DuplicateKeyError`` if a live node holding *key* is
        encountered on the path, ``KeyRangeError`` for out-of-range keys.
        """
        key = self._check_key(key)
        node = self.root
        if node is None:
            self.root = Node(key)
            self.live_count += 1
            return InsertResult(0, False)
        lo = 0
        span = 1 << self.bits
        depth = 0
        while True:
            if node.tombstone:
                node.key = key
                node.tombstone = False
                self.live_count += 1
                self.tombstone_count -= 1
                return InsertResult(depth, True)
            if node.key == key:
                raise DuplicateKeyError(f"key {key} is already present")
            # span == 1 is unreachable here: a unit frame holds exactly one
            # key, so the probe was claimed or rejected above.
            half = span >> 1
            if key < lo + half:
                span = half
                child = node.left
                if child is None:
                    node.left = Node(key)
                    self.live_count += 1
                    return InsertResult(depth + 1, False)
            else:
                lo += half
                span = half
                child = node.right
                if child is None:
                    node.right = Node(key)
                    self.live_count += 1
                    return InsertResult(depth + 1, False)
            node = child
            depth += 1

    def search(self, key: int) -> Optional[int]:
        """Depth of the live node holding *key*, or ``None`` if absent.

        Pure; visits at most ``bits + 1`` nodes.  Tombstoned nodes never
        match, but descent continues through them.
        """
        key = self._check_key(key)
        node = self.root
        lo = 0
        span = 1 << self.bits
        depth = 0
        while node is not None:
            if node.key == key and not node.tombstone:
                return depth
            half = span >> 1
            if key < lo + half:
                node = node.left
            else:
                lo += half
                node = node.right
            span = half
            depth += 1
        return None

    def lazy_delete(self, key: int) -> bool:
        """Tombstone the live node holding *key*; the shape is unchanged.

        Returns ``True`` if a node was deleted, ``False`` if *key* is not
        live (repeating the call returns ``False``).
        """
        key = self._check_key(key)
        node = self.root
        lo = 0
        span = 1 << self.bits
        while node is not None:
            if node.key == key and not node.tombstone:
                node.tombstone = True
                self.live_count -= 1
                self.tombstone_count += 1
                return True
            half = span >> 1
            if key < lo + half:
                node = node.left
            else:
                lo += half
                node = node.right
            span = half
        return False

    def hard_delete(self, key: int) -> bool:
        """Physically remove the live node holding *key*.

        A leaf is unlinked directly.  An internal node takes over the key
        and tombstone flag of a descendant leaf (descend preferring the left
        child, else right, until a leaf), and that leaf is unlinked; the
        substitute key was already inside every interval on the way down, so
        all structural invariants survive.  Node count drops by exactly one.
        """
        key = self._check_key(key)
        parent: Optional[Node] = None
        node = self.root
        lo = 0
        span = 1 << self.bits
        while node is not None and (node.key != key or node.tombstone):
            half = span >> 1
            parent = node
            if key < lo + half:
                node = node.left
            else:
                lo += half
                node = node.right
            span = half
        if node is None:
            return False
        if node.left is None and node.right is None:
            if parent is None:
                self.root = None
            elif parent.left is node:
                parent.left = None
            else:
                parent.right = None
            self.live_count -= 1
            return True
        leaf_parent = node
        leaf = node.left if node.left is not None else node.right
        while leaf.left is not None or leaf.right is not None:
            leaf_parent = leaf
            leaf = leaf.left if leaf.left is not None else leaf.right
        node.key = leaf.key
        node.tombstone = leaf.tombstone
        if leaf_parent.left is leaf:
            leaf_parent.left = None
        else:
            leaf_parent.right = None
        self.live_count -= 1
        return True

    def stats(self) -> TreeStats:
        """Recounted height (in edges; empty tree is -1), node counts, and
        mean depth of live nodes (``None`` when there are no live nodes)."""
        height = -1
        live = 0
        tomb = 0
        depth_sum = 0
        if self.root is not None:
            stack = [(self.root, 0)]
            while stack:
                node, depth = stack.pop()
                if depth > height:
                    height = depth
                if node.tombstone:
                    tomb += 1
                else:
                    live += 1
                    depth_sum += depth
                if node.right is not None:
                    stack.append((node.right, depth + 1))
                if node.left is not None:
                    stack.append((node.left, depth + 1))
        avg = depth_sum / live if live else None
        return TreeStats(height, live, tomb, avg)

    def collect_keys(self, order: str = "sorted") -> list[int]:
        """Live keys, in ``"preorder"`` or ``"sorted"`` order.

        Sorted mode collects and then sorts; it makes no attempt to walk the
        tree in key order.
        """
        if order not in ("sorted", "preorder"):
            raise ValueError(f"order must be 'sorted' or 'preorder', got {order!r}")
        keys: list[int] = []
        if self.root is not None:
            stack = [self.root]
            while stack:
                node = stack.pop()
                if not node.tombstone:
                    keys.append(node.key)
                if node.right is not None:
                    stack.append(node.right)
                if node.left is not None:
                    stack.append(node.left)
        if order == "sorted":
            keys.sort()
        return keys

    def walk(self) -> Iterator[tuple[Node, int, int, str]]:
        """Preorder iteration yielding ``(node, depth, frame_lo, side)``.

        ``side`` is ``""`` for the root, ``"L"`` or ``"R"`` otherwise.
        Children that would sit below a unit interval (possible only in a
        corrupted tree) are not traversed; ``validate`` reports them.
        """
        if self.root is None:
            return
        stack: list[tuple[Node, int, int, str]] = [(self.root, 0, 0, "")]
        while stack:
            entry = stack.pop()
            yield entry
            node, depth, lo, _ = entry
            if depth < self.bits:
                half = 1 << (self.bits - depth - 1)
                if node.right is not None:
                    stack.append((node.right, depth + 1, lo + half, "R"))
                if node.left is not None:
                    stack.append((node.left, depth + 1, lo, "L"))

    def validate(self) -> ValidationReport:
        """Check every structural rule and return all violations found.

        Rules: key inside its positional frame; every key (live or
        tombstoned) in a left subtree below the parent frame's reference
        value, right subtree at or above it; depth at most ``bits``; live
        keys distinct; stored counts matching a recount.
        """
        violations: list[Violation] = []
        seen_live: dict[int, str] = {}
        counted = [0, 0]  # live, tombstoned
        bits = self.bits

        def check(node: Node, lo: int, depth: int, path: str) -> tuple[int, int]:
            # Returns (min, max) key over the visited subtree.
            span = 1 << (bits - depth)
            key = node.key
            if not lo <= key < lo + span:
                violations.append(
                    Violation(
                        path,
                        "frame-containment",
                        f"key {key} outside frame [{lo},{lo + span})",
                    )
                )
            if node.tombstone:
                counted[1] += 1
            else:
                counted[0] += 1
                if key in seen_live:
                    violations.append(
                        Violation(
                            path,
                            "duplicate-live-key",
                            f"live key {key} already at {seen_live[key]}",
                        )
                    )
                else:
                    seen_live[key] = path
            if depth >= bits:
                for tag, child in (("L", node.left), ("R", node.right)):
                    if child is not None:
                        violations.append(
                            Violation(
                                f"{path}/{tag}",
                                "depth-bound",
                                f"node below unit interval exceeds depth {bits}",
                            )
                        )
                return key, key
            ref = lo + (span >> 1)
            mn = mx = key
            if node.left is not None:
                lmn, lmx = check(node.left, lo, depth + 1, f"{path}/L")
                if lmx >= ref:
                    violations.append(
                        Violation(
                            path,
                            "left-subtree-bound",
                            f"left subtree key {lmx} >= reference {ref}",
                        )
                    )
                mn = min(mn, lmn)
                mx = max(mx, lmx)
            if node.right is not None:
                rmn, rmx = check(node.right, ref, depth + 1, f"{path}/R")
                if rmn < ref:
                    violations.append(
                        Violation(
                            path,
                            "right-subtree-bound",
                            f"right subtree key {rmn} < reference {ref}",
                        )
                    )
                mn = min(mn, rmn)
                mx = max(mx, rmx)
            return mn, mx

        if self.root is not None:
            check(self.root, 0, 0, "root")
        if counted[0] != self.live_count:
            violations.append(
                Violation(
                    "tree",
                    "count-mismatch",
                    f"live_count {self.live_count} != recount {counted[0]}",
                )
            )
        if counted[1] != self.tombstone_count:
            violations.append(
                Violation(
                    "tree",
                    "count-mismatch",
                    f"tombstone_count {self.tombstone_count} != recount {counted[1]}",
                )
            )
        return ValidationReport(tuple(violations))


def build_ideal_tree(bits: int) -> HiddenBst:
    """Perfectly balanced tree of the interval midpoints over [0, 2**bits).

    Each interval of span >= 2 contributes its floor midpoint and recurses
    on both halves, yielding exactly the keys ``1 .. 2**bits - 1`` at height
    ``bits - 1``.  Capped at ``bits <= IDEAL_TREE_MAX_BITS`` because the
    tree holds ``2**bits - 1`` nodes.
    """
    bits = operator.index(bits)
    if not 1 <= bits <= IDEAL_TREE_MAX_BITS:
        raise ValueError(
            f"ideal tree width must be in [1, {IDEAL_TREE_MAX_BITS}], got {bits}"
        )
    tree = HiddenBst(bits)

    def build(lo: int, hi: int) -> Optional[Node]:
        if hi - lo < 2:
            return None
        mid = (lo + hi) >> 1
        node = Node(mid)
        node.left = build(lo, mid)
        node.right = build(mid, hi)
        return node

    tree.root = build(0, 1 << bits)
    tree.live_count = (1 << bits) - 1
    return tree
