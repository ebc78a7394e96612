"""Reference structures for differential testing and comparison.

``NaiveBst`` is a textbook unbalanced binary search tree with a comparison
counter: its height is linear for sorted insertion orders, which is the
contrast the benchmark suite measures.  ``OracleSet`` is a brute-force
membership oracle with exact set semantics, used as ground truth when
fuzzing the interval tree.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .core import DuplicateKeyError


class BstNode:
    __slots__ = ("key", "left", "right")

    def __init__(self, key):
        self.key = key
        self.left: Optional[BstNode] = None
        self.right: Optional[BstNode] = None


class BstStats(NamedTuple):
    height: int
    node_count: int
    avg_depth: Optional[float]


class NaiveBst:
    """Unbalanced BST; every three-way key comparison bumps ``comparisons``.

    Supports insert/search/stats only; no deletion and, deliberately, no
    rebalancing of any kind.
    """

    __slots__ = ("root", "node_count", "comparisons")

    def __init__(self):
        self.root: Optional[BstNode] = None
        self.node_count = 0
        self.comparisons = 0

    def __len__(self) -> int:
        return self.node_count

    def __contains__(self, key) -> bool:
        return self.search(key) is not None

    def insert(self, key) -> int:
        """Leafward insertion; returns the new node's depth.

        Raises ``DuplicateKeyError`` if *key* is already present.
        """
        node = self.root
        if node is None:
            self.root = BstNode(key)
            self.node_count = 1
            return 0
        comparisons = 0
        depth = 0
        while True:
            comparisons += 1
            if key == node.key:
                self.comparisons += comparisons
                raise DuplicateKeyError(f"key {key} is already present")
            depth += 1
            if key < node.key:
                if node.left is None:
                    node.left = BstNode(key)
                    break
                node = node.left
            else:
                if node.right is None:
                    node.right = BstNode(key)
                    break
                node = node.right
        self.comparisons += comparisons
        self.node_count += 1
        return depth

    def search(self, key) -> Optional[int]:
        """Depth of the node holding *key*, or ``None``; one comparison per
        visited node."""
        node = self.root
        depth = 0
        comparisons = 0
        found = None
        while node is not None:
            comparisons += 1
            if key == node.key:
                found = depth
                break
            node = node.left if key < node.key else node.right
            depth += 1
        self.comparisons += comparisons
        return found

    def stats(self) -> BstStats:
        """Height in edges (-1 when empty), node count, mean node depth."""
        height = -1
        count = 0
        depth_sum = 0
        if self.root is not None:
            stack = [(self.root, 0)]
            while stack:
                node, depth = stack.pop()
                count += 1
                depth_sum += depth
                if depth > height:
                    height = depth
                if node.right is not None:
                    stack.append((node.right, depth + 1))
                if node.left is not None:
                    stack.append((node.left, depth + 1))
        avg = depth_sum / count if count else None
        return BstStats(height, count, avg)


class OracleSet:
    """Exact set of keys; the trivially correct side of differential runs."""

    __slots__ = ("members",)

    def __init__(self):
        self.members: set = set()

    def __len__(self) -> int:
        return len(self.members)

    def insert(self, key) -> bool:
        """Add *key*; ``True`` if it was absent."""
        if key in self.members:
            return False
        self.members.add(key)
        return True

    def delete(self, key) -> bool:
        """Remove *key*; ``True`` if it was present."""
        if key in self.members:
            self.members.remove(key)
            return True
        return False

    def contains(self, key) -> bool:
        return key in self.members

    def apply(self, op: str, key) -> bool:
        """Dispatch ``insert``/``delete``/``contains`` by name."""
        if op == "insert":
            return self.insert(key)
        if op == "delete":
            return self.delete(key)
        if op == "contains":
            return self.contains(key)
        raise ValueError(f"unknown op {op!r}")

    def sorted_keys(self) -> list:
        return sorted(self.members)
