import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

import pdpoly


def chsh():
    return pdpoly.uniform_scenario(2, 2, 2)


def test_dimensions():
    info = json.loads(pdpoly.scenario_info(chsh()))
    assert info["d"] == 16
    assert info["full_dimension"] == 12
    assert info["pironio_dimension"] == 8


def test_vertex_counts():
    bell = json.loads(pdpoly.vertices(chsh(), "bell"))
    ns = json.loads(pdpoly.vertices(chsh(), "ns"))
    assert len(bell["vertices"]) == 16
    assert len(ns["vertices"]) == 24


def test_pr_box_membership():
    pr = pdpoly.pr_box(chsh())
    outside = json.loads(pdpoly.membership(chsh(), pr, "bell"))
    inside = json.loads(pdpoly.membership(chsh(), pr, "ns"))
    assert outside["status"] == "outside"
    assert inside["status"] == "inside"
    assert pdpoly.evaluate_inequality(chsh(), "chsh", pr) == "4"


def test_classification():
    report = json.loads(pdpoly.classify(pdpoly.uniform_scenario(2, 3, 2)))
    assert len(report["classes"]) == 17
    sizes = sorted(c["size"] for c in report["classes"])
    assert sizes[-1] == 48


def test_local_friendliness_mapping():
    s = pdpoly.uniform_scenario(2, 3, 2)
    one = json.loads(pdpoly.sequential_to_pd(s, [1, 1]))
    assert not one["is_bell"] and not one["is_ns"]
    two = json.loads(pdpoly.sequential_to_pd(s, [2, 2]))
    assert two["is_bell"]


def test_sliwa_values():
    tri = pdpoly.uniform_scenario(3, 2, 2)
    box_a = pdpoly.partial_pr_box(tri, 0)
    assert pdpoly.evaluate_inequality(tri, "sliwa3a", box_a) == "2"
    assert pdpoly.evaluate_inequality(tri, "sliwa3b", box_a) == "4"


def test_fine_round_trip():
    s = json.dumps(
        {
            "parties": ["A", "B"],
            "inputs": {"A": ["x"], "B": ["y1", "y2"]},
            "outputs": {
                "A": {"x": ["0", "1"]},
                "B": {"y1": ["0", "1"], "y2": ["0", "1"]},
            },
        }
    )
    table = {
        "x:y1": {"0:0": "1/2", "0:1": "0", "1:0": "0", "1:1": "1/2"},
        "x:y2": {"0:0": "1/4", "0:1": "1/4", "1:0": "1/4", "1:1": "1/4"},
    }
    assert pdpoly.fine_round_trip(s, json.dumps({"table": table}))
