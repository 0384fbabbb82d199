import json

import pydot
import pytest

import dmlab


def test_build_and_classify():
    g = dmlab.build_qw([3])
    assert g.order == 6
    assert dmlab.is_regular(g, 4)
    assert g.to_graph6() == "E|^W"
    assert dmlab.are_isomorphic(g, dmlab.build_wreath(3))
    assert dmlab.profile_to_sequence([3, 3]) == [0, 1, 1, 0, 1, 1]

    c = dmlab.classify([11, 3, 5, 3, 7, 5, 3])
    assert c["distance_magic"]
    assert c["type_a"] == 5 and c["type_b"] == 2
    bad = dmlab.classify([5])
    assert not bad["distance_magic"]
    assert bad["reasons"]


def test_construct_and_verify():
    g = dmlab.build_qw([7])
    labels = dmlab.construct_labeling([7])
    report = dmlab.verify(g, labels)
    assert report["pass"]
    assert report["first_violation"] is None
    assert sorted(labels) == list(range(-13, 14, 2))

    standard = dmlab.to_standard(labels)
    assert sorted(standard) == list(range(1, 15))
    assert dmlab.from_standard(standard) == labels

    swapped = list(labels)
    swapped[0], swapped[3] = swapped[3], swapped[0]
    assert not dmlab.verify(g, swapped)["pass"]


def test_search_and_filter():
    assert dmlab.find_labeling(dmlab.build_wreath(3))["verdict"] == "Found"
    out = dmlab.find_labeling(dmlab.build_qw([4]), prefilter=False)
    assert out["verdict"] == "NotFound"
    counted = dmlab.find_labeling(dmlab.build_qw([3, 3]), count=True)
    assert counted["raw_count"] == 2 * counted["folded_count"] > 0
    budget = dmlab.find_labeling(dmlab.build_qw([2, 2, 3]), prefilter=False, node_budget=3)
    assert budget["verdict"] == "BudgetExhausted"

    assert dmlab.corollary_filter(dmlab.build_wreath(4))[0]
    assert dmlab.nullity(dmlab.build_wreath(3)) >= 1
    assert len(dmlab.enumerate_regular(10)) == 59


def test_expand():
    g = dmlab.build_qw([7])
    labels = dmlab.construct_labeling([7])
    assert dmlab.zero_antipodal_cycles(g, labels)
    h, new_labels = dmlab.expand(g, labels)
    assert h.order == 16
    assert dmlab.verify(h, new_labels)["pass"]
    # (x3, x4, y5, y4) gives a graph that is not a wreath graph.
    h2, labels2 = dmlab.expand(g, labels, [3, 4, 12, 11])
    assert dmlab.verify(h2, labels2)["pass"]
    assert not dmlab.are_isomorphic(h2, dmlab.build_wreath(8))


def test_serialization():
    g = dmlab.parse_graph6("E]~o")
    assert dmlab.write_graph6(g) == "E]~o"
    text = dmlab.labeling_to_json([5, 3, 1, -5, -3, -1])
    assert json.loads(text)["order"] == 6
    assert dmlab.labeling_from_json(text) == ("centered", [5, 3, 1, -5, -3, -1])


def test_dot_parses():
    g = dmlab.build_qw([3, 3])
    dot = dmlab.export_dot(g, dmlab.construct_labeling([3, 3]), qw_m=6)
    (parsed,) = pydot.graph_from_dot_data(dot)
    assert len(parsed.get_edges()) == 24
    labelled = [n for n in parsed.get_nodes() if n.get("label") is not None]
    assert len(labelled) == 12


def test_errors_are_value_errors():
    with pytest.raises(dmlab.ParseError):
        dmlab.parse_graph6("E??")
    with pytest.raises(ValueError):
        dmlab.build_qw([1, 3])
    with pytest.raises(dmlab.PreconditionError):
        dmlab.construct_labeling([5])
    with pytest.raises(dmlab.RangeError):
        dmlab.enumerate_regular(11)
