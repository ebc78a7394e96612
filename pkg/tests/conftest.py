import pytest

from hbst import HiddenBst, build_ideal_tree

# Exact shape of the tree grown by inserting 0..15 into an empty 4-bit
# tree: {key: (left child key, right child key)}.  Derived once by hand
# and cross-checked against tests/refmodel.py in test_tree_ops.
SEQ16_EDGES = {
    0: (1, 8),
    1: (2, 4),
    2: (None, 3),
    3: (None, None),
    4: (5, 6),
    5: (None, None),
    6: (None, 7),
    7: (None, None),
    8: (9, 12),
    9: (None, 10),
    10: (None, 11),
    11: (None, None),
    12: (13, 14),
    13: (None, None),
    14: (None, 15),
    15: (None, None),
}

# Exact shape of the 4-bit balanced midpoint tree (keys 1..15, height 3).
IDEAL4_EDGES = {
    8: (4, 12),
    4: (2, 6),
    12: (10, 14),
    2: (1, 3),
    6: (5, 7),
    10: (9, 11),
    14: (13, 15),
    1: (None, None),
    3: (None, None),
    5: (None, None),
    7: (None, None),
    9: (None, None),
    11: (None, None),
    13: (None, None),
    15: (None, None),
}


def edge_map(tree):
    """{key: (left key, right key)} over every node of a HiddenBst."""
    edges = {}
    for node, _, _, _ in tree.walk():
        left = node.left.key if node.left is not None else None
        right = node.right.key if node.right is not None else None
        edges[node.key] = (left, right)
    return edges


def seq16():
    tree = HiddenBst(4)
    for key in range(16):
        tree.insert(key)
    return tree


@pytest.fixture
def seq16_tree():
    return seq16()


@pytest.fixture
def ideal4_tree():
    return build_ideal_tree(4)
