"""JSON dump format for trees.

A tree document is a single JSON object::

    {"bits": 4, "root": 0, "nodes": [{"key": 0, "tombstone": false,
                                      "left": 1, "right": 2}, ...]}

``root`` is a node index or ``null``; ``left``/``right`` are node indexes
or ``null``; nodes are listed in preorder, so the root is index 0 when
present.  Loading rejects documents that are not well-formed trees
(``DocumentError``) and, unless asked not to, documents whose tree breaks a
structural rule (``InvalidTreeError``, carrying the validation report).
"""

from __future__ import annotations

import json
from typing import Any

from .core import HiddenBst, Node, ValidationReport

_DOC_FIELDS = {"bits", "root", "nodes"}
_NODE_FIELDS = {"key", "tombstone", "left", "right"}


class DocumentError(ValueError):
    """Malformed tree document (bad JSON, schema, or graph shape)."""


class InvalidTreeError(ValueError):
    """Well-formed document whose tree fails structural validation."""

    def __init__(self, report: ValidationReport):
        super().__init__(str(report))
        self.report = report


def to_document(tree: HiddenBst) -> dict[str, Any]:
    """Plain-dict document for *tree*, nodes listed in preorder."""
    order: list[Node] = []
    if tree.root is not None:
        stack = [tree.root]
        while stack:
            node = stack.pop()
            order.append(node)
            if node.right is not None:
                stack.append(node.right)
            if node.left is not None:
                stack.append(node.left)
    index = {id(node): i for i, node in enumerate(order)}
    nodes = [
        {
            "key": node.key,
            "tombstone": node.tombstone,
            "left": index[id(node.left)] if node.left is not None else None,
            "right": index[id(node.right)] if node.right is not None else None,
        }
        for node in order
    ]
    return {"bits": tree.bits, "root": 0 if order else None, "nodes": nodes}


def _require_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{what} must be an integer, got {value!r}")
    return value


def _require_index(value: Any, count: int, what: str) -> int | None:
    if value is None:
        return None
    value = _require_int(value, what)
    if not 0 <= value < count:
        raise DocumentError(f"{what} {value} out of range for {count} nodes")
    return value


def from_document(doc: Any, validate: bool = True) -> HiddenBst:
    """Rebuild a tree from a document produced by :func:`to_document`.

    With ``validate=True`` (the default) the rebuilt tree must pass
    ``validate()``; pass ``validate=False`` to load a suspect dump for
    inspection.
    """
    if not isinstance(doc, dict):
        raise DocumentError(f"document must be an object, got {type(doc).__name__}")
    if set(doc) != _DOC_FIELDS:
        raise DocumentError(f"document fields must be {sorted(_DOC_FIELDS)}")
    bits = _require_int(doc["bits"], "bits")
    try:
        tree = HiddenBst(bits)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    raw_nodes = doc["nodes"]
    if not isinstance(raw_nodes, list):
        raise DocumentError("nodes must be an array")
    count = len(raw_nodes)
    root_index = _require_index(doc["root"], count, "root")

    nodes: list[Node] = []
    links: list[tuple[int | None, int | None]] = []
    for i, raw in enumerate(raw_nodes):
        if not isinstance(raw, dict) or set(raw) != _NODE_FIELDS:
            raise DocumentError(f"node {i} fields must be {sorted(_NODE_FIELDS)}")
        key = _require_int(raw["key"], f"node {i} key")
        if key < 0:
            raise DocumentError(f"node {i} key must be unsigned, got {key}")
        if not isinstance(raw["tombstone"], bool):
            raise DocumentError(f"node {i} tombstone must be a boolean")
        node = Node(key)
        node.tombstone = raw["tombstone"]
        nodes.append(node)
        links.append(
            (
                _require_index(raw["left"], count, f"node {i} left"),
                _require_index(raw["right"], count, f"node {i} right"),
            )
        )

    claimed: set[int] = set()
    for i, (left, right) in enumerate(links):
        for child in (left, right):
            if child is None:
                continue
            if child == root_index:
                raise DocumentError(f"root node {child} is a child of node {i}")
            if child in claimed:
                raise DocumentError(f"node {child} has more than one parent")
            claimed.add(child)
        nodes[i].left = nodes[left] if left is not None else None
        nodes[i].right = nodes[right] if right is not None else None

    if root_index is None:
        if count:
            raise DocumentError(f"{count} nodes but no root")
    else:
        reached = 0
        stack = [root_index]
        seen = {root_index}
        while stack:
            i = stack.pop()
            reached += 1
            for child in links[i]:
                if child is not None:
                    if child in seen:
                        raise DocumentError("node graph contains a cycle")
                    seen.add(child)
                    stack.append(child)
        if reached != count:
            raise DocumentError(f"{count - reached} nodes unreachable from root")
        tree.root = nodes[root_index]

    tree.live_count = sum(1 for n in nodes if not n.tombstone)
    tree.tombstone_count = count - tree.live_count

    if validate:
        report = tree.validate()
        if not report.valid:
            raise InvalidTreeError(report)
    return tree


def dumps(tree: HiddenBst) -> str:
    """Serialize *tree* to deterministic JSON text."""
    return json.dumps(to_document(tree), indent=2) + "\n"


def loads(text: str, validate: bool = True) -> HiddenBst:
    """Parse JSON text into a tree; see :func:`from_document`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    return from_document(doc, validate=validate)


def dump(tree: HiddenBst, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(tree))


def load(path: str, validate: bool = True) -> HiddenBst:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read(), validate=validate)
