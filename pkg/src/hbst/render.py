"""Text and DOT renderings of a tree, with per-node interval frames."""

from __future__ import annotations

from .core import HiddenBst, Node


def _frame_parts(bits: int, depth: int, lo: int) -> tuple[int, int]:
    span = 1 << (bits - depth)
    ref = lo + (span >> 1) if depth < bits else lo
    return lo + span, ref


def render_text(tree: HiddenBst) -> str:
    """Indented preorder listing: key, depth, frame interval, reference."""
    if tree.root is None:
        return f"(empty tree, bits={tree.bits})\n"
    lines = []
    for node, depth, lo, side in tree.walk():
        hi, ref = _frame_parts(tree.bits, depth, lo)
        tag = f"{side}: " if side else ""
        tomb = "  [tombstone]" if node.tombstone else ""
        lines.append(
            f"{'  ' * depth}{tag}key={node.key} depth={depth}"
            f" frame=[{lo},{hi}) ref={ref}{tomb}"
        )
    return "\n".join(lines) + "\n"


def render_dot(tree: HiddenBst) -> str:
    """Directed graph in DOT syntax; tombstones drawn dashed, edges tagged
    L/R."""
    lines = ["digraph hbst {", "  node [shape=box];"]
    order: list[tuple[Node, int, int]] = []
    index: dict[int, int] = {}
    for node, depth, lo, _ in tree.walk():
        index[id(node)] = len(order)
        order.append((node, depth, lo))
    for i, (node, depth, lo) in enumerate(order):
        hi, _ = _frame_parts(tree.bits, depth, lo)
        style = ", style=dashed" if node.tombstone else ""
        lines.append(f'  n{i} [label="{node.key} [{lo},{hi}) @{depth}"{style}];')
    for i, (node, _, _) in enumerate(order):
        if node.left is not None:
            lines.append(f'  n{i} -> n{index[id(node.left)]} [label="L"];')
        if node.right is not None:
            lines.append(f'  n{i} -> n{index[id(node.right)]} [label="R"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
