"""Smoke tests for the python bindings."""

import json

import pytest

import treeirr


def test_basic_indices():
    p4 = treeirr.path(4)
    assert treeirr.albertson(p4) == 2
    assert treeirr.sigma(p4) == 2
    assert treeirr.total_albertson(p4) == 4
    b = treeirr.compute_bundle(p4)
    assert b["irr"] == 2 and b["m1"] == 10 and b["forgotten"] == 18
    s5 = treeirr.star(5)
    assert treeirr.albertson(s5) == 12
    assert treeirr.sigma_t(s5) == 36


def test_tree_validation():
    with pytest.raises(ValueError):
        treeirr.make_tree(4, [(0, 1), (2, 3)])
    t = treeirr.make_tree(4, [(0, 1), (1, 2), (2, 3)])
    assert treeirr.degree_sequence(t) == [2, 2, 1, 1]


def test_graph6_round_trip():
    t = treeirr.path(4)
    g6 = treeirr.write_graph6(t)
    assert g6 == "Ch"
    back = treeirr.tree_from_graph6(g6)
    assert treeirr.canonical_code(back) == treeirr.canonical_code(t)


def test_enumeration_counts():
    assert [len(treeirr.free_trees(n)) for n in range(2, 9)] == [1, 1, 2, 3, 6, 11, 23]
    assert len(treeirr.free_trees(7, max_degree=2)) == 1
    assert treeirr.labeled_tree_class_count(5) == 3


def test_degree_sequences():
    assert treeirr.is_graphical([3, 1, 1, 1])
    assert not treeirr.is_graphical([3, 3, 1, 1])
    assert treeirr.degree_sequence(treeirr.realize_tree([3, 2, 1, 1, 1])) == [3, 2, 1, 1, 1]
    assert treeirr.majorizes([3, 1, 1, 1], [2, 2, 1, 1])
    assert treeirr.fibonacci_degrees(6, "paper") == [13, 8, 5, 3]


def test_extremal():
    r = treeirr.extremal(6, "irr", "max")
    assert r["value"] == 20 and r["exhaustive"]


def test_claims():
    ids = treeirr.claim_ids()
    assert len(ids) == 31 and ids[0] == "C1" and ids[-1] == "C31"
    report = treeirr.evaluate_claims(n_min=4, n_max=6, claims=["C31", "C9"])
    verdicts = {c["id"]: c for c in report["claims"]}
    assert verdicts["C31"]["fails"] == 0
    assert verdicts["C9"]["fails"] > 0
    assert verdicts["C9"]["first_counterexample"]["witness_g6"]


def test_cli_bridge():
    code, out, _ = treeirr.run_cli(["indices", "--format", "edgelist"], "0 1\n1 2\n2 3\n")
    assert code == 0
    assert json.loads(out)["irr"] == 2
