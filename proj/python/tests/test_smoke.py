import json

import pytest

import tamecheck

SPLIT_LINE = "vars = x y\nparam = t\nF = y^2*(x^2 - (y - t)^2)\n"


def test_examples_listing():
    ex = tamecheck.examples()
    assert len(ex) == 4
    names = {e["name"] for e in ex}
    assert names == {"ex6.1", "ex6.2", "ex6.3", "ex6.4"}
    for e in ex:
        assert "F = " in e["text"]


def test_parse_check():
    info = tamecheck.parse_check(SPLIT_LINE)
    assert info["spatial"] == ["x", "y"]
    assert info["param"] == "t"
    assert info["witness_count"] == 0


def test_parse_rejects_bad_input():
    with pytest.raises(Exception):
        tamecheck.parse_check("vars = x\nF = x + t\n")


def test_analyze_and_verify_roundtrip():
    out = tamecheck.analyze(SPLIT_LINE)
    report = json.loads(out)
    verdicts = report["verdicts"]
    assert verdicts["cond0"]["status"] == "HOLDS"
    assert verdicts["tame"]["status"] == "HOLDS"
    assert verdicts["cond2"]["status"] == "FAILS"
    assert verdicts["jacobian"]["status"] == "FAILS"

    res = tamecheck.verify(out)
    assert res["ok"]
    assert res["checked"] > 0
    assert res["failures"] == []


def test_verify_catches_tampering():
    out = tamecheck.analyze(SPLIT_LINE)
    report = json.loads(out)
    ev = report["verdicts"]["cond2"]["evidence"]
    assert ev["kind"] == "arc_witness"
    ev["ord_f"] += 3
    res = tamecheck.verify(json.dumps(report))
    assert not res["ok"]
    assert res["failures"]


def test_analyze_options():
    out = tamecheck.analyze_text(SPLIT_LINE, checks=["cond0"], max_weight=2)
    assert "cond0: HOLDS" in out
    assert "jacobian:" not in out  # audit lines may mention the name, verdicts do not


def test_determinism():
    a = tamecheck.analyze(SPLIT_LINE)
    b = tamecheck.analyze(SPLIT_LINE)
    assert a == b
