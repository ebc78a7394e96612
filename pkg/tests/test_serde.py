import json

import pytest

from hbst import (
    DocumentError,
    HiddenBst,
    InvalidTreeError,
    dump,
    dumps,
    from_document,
    load,
    loads,
    to_document,
)

from conftest import edge_map


def test_empty_tree_document():
    doc = to_document(HiddenBst(4))
    assert doc == {"bits": 4, "root": None, "nodes": []}


def test_nodes_listed_in_preorder(seq16_tree):
    doc = to_document(seq16_tree)
    assert doc["root"] == 0
    assert [n["key"] for n in doc["nodes"]] == list(range(16))


def test_roundtrip_identity(seq16_tree):
    text = dumps(seq16_tree)
    back = loads(text)
    assert back.bits == seq16_tree.bits
    assert edge_map(back) == edge_map(seq16_tree)
    assert back.stats() == seq16_tree.stats()
    assert dumps(back) == text


def test_roundtrip_preserves_tombstones(seq16_tree):
    seq16_tree.lazy_delete(4)
    back = loads(dumps(seq16_tree))
    assert back.tombstone_count == 1
    assert back.search(4) is None
    assert dumps(back) == dumps(seq16_tree)


def test_roundtrip_through_files(tmp_path, seq16_tree):
    path = tmp_path / "tree.json"
    dump(seq16_tree, str(path))
    assert edge_map(load(str(path))) == edge_map(seq16_tree)


def test_misplaced_key_rejected(seq16_tree):
    doc = to_document(seq16_tree)
    doc["nodes"][1]["key"] = 8  # root's left child: frame [0,8)
    with pytest.raises(InvalidTreeError) as exc_info:
        from_document(doc)
    rules = {v.rule for v in exc_info.value.report.violations}
    assert "frame-containment" in rules or "left-subtree-bound" in rules


def test_invalid_tree_loadable_for_inspection(seq16_tree):
    doc = to_document(seq16_tree)
    doc["nodes"][1]["key"] = 8
    tree = from_document(doc, validate=False)
    assert not tree.validate().valid


def test_bad_json_rejected():
    with pytest.raises(DocumentError):
        loads("{not json")


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("bits"),
        lambda d: d.update(bits="four"),
        lambda d: d.update(bits=0),
        lambda d: d.update(bits=65),
        lambda d: d.update(extra=1),
        lambda d: d.update(root=99),
        lambda d: d.update(nodes={}),
        lambda d: d["nodes"][0].pop("key"),
        lambda d: d["nodes"][0].update(key=-1),
        lambda d: d["nodes"][0].update(key=True),
        lambda d: d["nodes"][0].update(tombstone=1),
        lambda d: d["nodes"][0].update(left=16),
        lambda d: d["nodes"][0].update(color="red"),
    ],
)
def test_malformed_documents_rejected(seq16_tree, mutate):
    doc = json.loads(dumps(seq16_tree))
    mutate(doc)
    with pytest.raises(DocumentError):
        from_document(doc)


def test_shared_child_rejected(seq16_tree):
    doc = to_document(seq16_tree)
    doc["nodes"][0]["right"] = doc["nodes"][0]["left"]
    with pytest.raises(DocumentError):
        from_document(doc)


def test_cycle_rejected():
    doc = {
        "bits": 4,
        "root": 0,
        "nodes": [
            {"key": 1, "tombstone": False, "left": 1, "right": None},
            {"key": 0, "tombstone": False, "left": 0, "right": None},
        ],
    }
    with pytest.raises(DocumentError):
        from_document(doc)


def test_root_as_child_rejected():
    doc = {
        "bits": 4,
        "root": 0,
        "nodes": [{"key": 8, "tombstone": False, "left": None, "right": 0}],
    }
    with pytest.raises(DocumentError):
        from_document(doc)


def test_unreachable_nodes_rejected():
    doc = {
        "bits": 4,
        "root": 0,
        "nodes": [
            {"key": 8, "tombstone": False, "left": None, "right": None},
            {"key": 1, "tombstone": False, "left": None, "right": None},
        ],
    }
    with pytest.raises(DocumentError):
        from_document(doc)


def test_nodes_without_root_rejected():
    doc = {
        "bits": 4,
        "root": None,
        "nodes": [{"key": 8, "tombstone": False, "left": None, "right": None}],
    }
    with pytest.raises(DocumentError):
        from_document(doc)


def test_empty_document_roundtrip():
    tree = loads(dumps(HiddenBst(7)))
    assert tree.bits == 7
    assert tree.root is None
    assert tree.validate().valid
