"""Command-line front end: JSON I/O, plan/verify/fuzz/render, exit codes."""

import json
import math
import xml.etree.ElementTree as ET

import pytest

from discmotion.cli import _emit_json, main

CASE1 = {"s": 1.0, "A0": [5.0, 5.0], "B0": [0.0, 0.0],
         "A1": [6.0, 5.0], "B1": [10.0, 0.0]}
SYMMETRIC_CROSSING = {"s": 1.0, "A0": [1.0, 0.4], "B0": [0.0, 0.0],
           "A1": [3.0, 0.4], "B1": [4.0, 0.0]}
BLOCKED_CCW = {"s": 1.0, "A0": [1.6, -0.3], "B0": [0.0, 0.0],
            "A1": [0.6, -0.3], "B1": [2.2, 0.0]}


def write_instance(tmp_path, doc, name="inst.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_plan_to_stdout(tmp_path, capsys):
    path = write_instance(tmp_path, CASE1)
    code, out, _ = run(["plan", path], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["case"] == "Case1a"
    assert doc["certified"] is True
    assert doc["lengths"]["chosen"] == 11.0
    assert abs(doc["lengths"]["bound"] - 11.0) <= 1e-9
    kinds = [p["kind"] for p in doc["trajectories"]["A"]]
    assert kinds == ["segment"]
    assert doc["schedule"][0]["robot"] == "B"


def test_plan_file_round_trip_is_bit_identical(tmp_path, capsys):
    path = write_instance(tmp_path, SYMMETRIC_CROSSING)
    out_path = tmp_path / "plan.json"
    code, _, _ = run(["plan", path, "--out", str(out_path)], capsys)
    assert code == 0
    original = out_path.read_bytes()
    doc = json.loads(original.decode("utf-8"))
    again = tmp_path / "again.json"
    _emit_json(doc, str(again))
    assert again.read_bytes() == original


def test_plan_coupled_schedule(tmp_path, capsys):
    path = write_instance(tmp_path, SYMMETRIC_CROSSING)
    code, out, _ = run(["plan", path, "--couple"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert all("aFrom" in item for item in doc["schedule"])
    assert abs(doc["lengths"]["chosen"] - doc["lengths"]["bound"]) \
        <= 1e-6 * max(1.0, doc["lengths"]["bound"])


def test_plan_svg_output(tmp_path, capsys):
    path = write_instance(tmp_path, SYMMETRIC_CROSSING)
    svg = tmp_path / "scene.svg"
    code, _, _ = run(["plan", path, "--out", str(tmp_path / "p.json"),
                      "--svg", str(svg)], capsys)
    assert code == 0
    root = ET.parse(svg).getroot()
    assert root.tag.endswith("svg")
    assert "viewBox" in root.attrib
    paths = [el for el in root.iter() if el.tag.endswith("path")]
    assert len(paths) >= 2


def test_plan_orientation_cw_when_only_ccw_exists(tmp_path, capsys):
    path = write_instance(tmp_path, SYMMETRIC_CROSSING)
    code, out, err = run(["plan", path, "--orientation", "cw"], capsys)
    assert code == 2
    assert "no net-cw motion" in err
    assert json.loads(out)["certified"] is False


def test_plan_orientation_ccw_on_forced_instance(tmp_path, capsys):
    path = write_instance(tmp_path, BLOCKED_CCW)
    code, _, err = run(["plan", path, "--orientation", "ccw"], capsys)
    assert code == 2
    assert "no net-ccw motion" in err


def test_plan_orientation_cw_on_forced_instance(tmp_path, capsys):
    path = write_instance(tmp_path, BLOCKED_CCW)
    code, out, _ = run(["plan", path, "--orientation", "cw"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["forcedClockwise"] is True
    assert abs(doc["lengths"]["chosen"] - 3.521335323675482) <= 1e-9


def test_plan_orientation_on_straight_case(tmp_path, capsys):
    # The straight Case-1 motion meets the ccw bound, so requesting ccw
    # succeeds; the cw bound is strictly larger and no net-cw motion is
    # constructed, so requesting cw is refused.
    path = write_instance(tmp_path, CASE1)
    code, out, _ = run(["plan", path, "--orientation", "ccw"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["lengths"]["chosen"] == 11.0
    assert doc["lengths"]["bound"] == 11.0

    code, _, err = run(["plan", path, "--orientation", "cw"], capsys)
    assert code == 2
    assert "no net-cw motion is certifiable" in err


def test_malformed_json_reports_position(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"s": 1.0,, }', encoding="utf-8")
    code, _, err = run(["plan", str(path)], capsys)
    assert code == 1
    assert "malformed JSON at line 1 column" in err


def test_unknown_field_rejected(tmp_path, capsys):
    doc = dict(CASE1)
    doc["radius"] = 2.0
    path = write_instance(tmp_path, doc)
    code, _, err = run(["plan", path], capsys)
    assert code == 1
    assert "unknown field 'radius'" in err


def test_missing_field_rejected(tmp_path, capsys):
    doc = dict(CASE1)
    del doc["B1"]
    path = write_instance(tmp_path, doc)
    code, _, err = run(["plan", path], capsys)
    assert code == 1
    assert "missing field 'B1'" in err


def test_boolean_radius_sum_rejected(tmp_path, capsys):
    doc = dict(CASE1)
    doc["s"] = True
    path = write_instance(tmp_path, doc)
    code, _, err = run(["plan", path], capsys)
    assert code == 1
    assert "'s'" in err


def test_overlapping_placement_rejected(tmp_path, capsys):
    doc = dict(CASE1)
    doc["A0"] = [0.5, 0.0]
    path = write_instance(tmp_path, doc)
    code, _, err = run(["plan", path], capsys)
    assert code == 1
    assert err.startswith("error:")


def test_missing_file(tmp_path, capsys):
    code, _, err = run(["plan", str(tmp_path / "nope.json")], capsys)
    assert code == 1
    assert err.startswith("error:")


def test_verify_fresh_plan_passes(tmp_path, capsys):
    path = write_instance(tmp_path, SYMMETRIC_CROSSING)
    plan_path = tmp_path / "plan.json"
    run(["plan", path, "--out", str(plan_path)], capsys)
    code, out, _ = run(["verify", str(plan_path)], capsys)
    assert code == 0
    assert out.count("PASS") == 7
    assert "certificate: PASS" in out
    for name in ("feasibility", "convexity", "boundAgreement",
                 "quadratureAgreement", "oracleUpperBound",
                 "primitiveBudget"):
        assert name in out


def test_verify_corrupted_arc_fails(tmp_path, capsys):
    path = write_instance(tmp_path, SYMMETRIC_CROSSING)
    plan_path = tmp_path / "plan.json"
    run(["plan", path, "--out", str(plan_path)], capsys)
    doc = json.loads(plan_path.read_text(encoding="utf-8"))
    for prim in doc["trajectories"]["B"]:
        if prim["kind"] == "arc":
            prim["direction"] = "cw" if prim["direction"] == "ccw" else "ccw"
            break
    plan_path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run(["verify", str(plan_path)], capsys)
    assert code == 2
    assert "certificate: FAIL" in out
    lines = dict(line.split(None, 1) for line in out.splitlines()
                 if line and not line.startswith("certificate"))
    assert lines["boundAgreement"].startswith("FAIL")
    assert lines["oracleUpperBound"].startswith("FAIL")
    assert lines["feasibility"].startswith("PASS")


def test_fuzz_deterministic_and_passing(tmp_path, capsys):
    r1 = tmp_path / "r1.json"
    r2 = tmp_path / "r2.json"
    code1, _, _ = run(["fuzz", "--n", "25", "--seed", "3",
                       "--report", str(r1)], capsys)
    code2, _, _ = run(["fuzz", "--n", "25", "--seed", "3",
                       "--report", str(r2)], capsys)
    assert code1 == 0 and code2 == 0
    assert r1.read_bytes() == r2.read_bytes()
    doc = json.loads(r1.read_text(encoding="utf-8"))
    assert doc["allPassed"] is True
    assert doc["n"] == 25
    assert sum(doc["caseHistogram"].values()) == 25
    assert all(v == 25 for v in doc["checkPasses"].values())


def test_fuzz_different_seed_differs(tmp_path, capsys):
    r1 = tmp_path / "r1.json"
    r2 = tmp_path / "r2.json"
    run(["fuzz", "--n", "10", "--seed", "1", "--report", str(r1)], capsys)
    run(["fuzz", "--n", "10", "--seed", "2", "--report", str(r2)], capsys)
    d1 = json.loads(r1.read_text(encoding="utf-8"))
    d2 = json.loads(r2.read_text(encoding="utf-8"))
    assert d1["worstResiduals"] != d2["worstResiduals"]


def test_render_plan_file(tmp_path, capsys):
    path = write_instance(tmp_path, BLOCKED_CCW)
    plan_path = tmp_path / "plan.json"
    run(["plan", path, "--out", str(plan_path)], capsys)
    svg = tmp_path / "out.svg"
    code, _, _ = run(["render", str(plan_path), "--svg", str(svg),
                      "--frames", "3"], capsys)
    assert code == 0
    root = ET.parse(svg).getroot()
    assert root.tag.endswith("svg")
    circles = [el for el in root.iter() if el.tag.endswith("circle")]
    assert len(circles) >= 6


def test_render_zero_frames(tmp_path, capsys):
    path = write_instance(tmp_path, CASE1)
    plan_path = tmp_path / "plan.json"
    run(["plan", path, "--out", str(plan_path)], capsys)
    svg = tmp_path / "bare.svg"
    code, _, _ = run(["render", str(plan_path), "--svg", str(svg),
                      "--frames", "0"], capsys)
    assert code == 0
    assert ET.parse(svg).getroot().tag.endswith("svg")


def test_viewbox_margin_contains_scene(tmp_path, capsys):
    path = write_instance(tmp_path, CASE1)
    svg = tmp_path / "scene.svg"
    run(["plan", path, "--out", str(tmp_path / "p.json"),
         "--svg", str(svg)], capsys)
    x, y, w, h = (float(v) for v in
                  ET.parse(svg).getroot().attrib["viewBox"].split())
    # every input point (y negated for screen coordinates) is inside
    for px, py in ([5, 5], [0, 0], [6, 5], [10, 0]):
        assert x <= px <= x + w
        assert y <= -py <= y + h
    assert not math.isclose(w, 0.0) and not math.isclose(h, 0.0)
