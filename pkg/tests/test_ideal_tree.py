import pytest

from hbst import HiddenBst, build_ideal_tree

from conftest import IDEAL4_EDGES, edge_map


def test_b4_shape(ideal4_tree):
    assert edge_map(ideal4_tree) == IDEAL4_EDGES
    assert ideal4_tree.root.key == 8


def test_b1_single_node():
    tree = build_ideal_tree(1)
    assert tree.root.key == 1
    assert tree.node_count == 1
    assert tree.stats().height == 0


def test_b2_shape():
    tree = build_ideal_tree(2)
    assert edge_map(tree) == {2: (1, 3), 1: (None, None), 3: (None, None)}


@pytest.mark.parametrize("bits", [1, 2, 3, 4, 5, 8, 10])
def test_counts_height_and_validity(bits):
    tree = build_ideal_tree(bits)
    assert tree.live_count == (1 << bits) - 1
    assert tree.tombstone_count == 0
    assert tree.stats().height == bits - 1
    assert tree.collect_keys("sorted") == list(range(1, 1 << bits))
    assert tree.validate().valid


@pytest.mark.parametrize("bits", [2, 3, 4, 6])
def test_every_internal_node_has_two_children(bits):
    tree = build_ideal_tree(bits)
    for node, _, _, _ in tree.walk():
        assert (node.left is None) == (node.right is None)


def test_same_shape_as_inserting_midpoints_level_by_level():
    # The builder is a shortcut for inserting each interval midpoint in
    # breadth-first order through the normal insertion path.
    by_inserts = HiddenBst(4)
    for key in (8, 4, 12, 2, 6, 10, 14, 1, 3, 5, 7, 9, 11, 13, 15):
        by_inserts.insert(key)
    assert edge_map(by_inserts) == edge_map(build_ideal_tree(4))


def test_width_cap():
    with pytest.raises(ValueError):
        build_ideal_tree(21)
    with pytest.raises(ValueError):
        build_ideal_tree(0)
