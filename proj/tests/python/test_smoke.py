"""Smoke tests for the python surface of the inconsistency-analysis core."""

import math

import pytest

import pcx

CLASSIC = [
    [1.0, 2.0, 5.0],
    [0.5, 1.0, 3.0],
    [0.2, 1.0 / 3.0, 1.0],
]

CONSISTENT = [
    [1.0, 2.0, 4.0],
    [0.5, 1.0, 2.0],
    [0.25, 0.5, 1.0],
]


def test_version():
    assert pcx.__version__ == "0.1.0"


def test_indicator_call_and_metadata():
    ki = pcx.indicator("ki")
    assert ki.selector == "ki"
    assert "T[" in ki.name or ki.name  # human-readable, non-empty
    assert ki(2.0, 4.0, 2.0) == pytest.approx(0.0, abs=1e-15)
    assert ki(2.0, 5.0, 2.0) == pytest.approx(0.2, abs=1e-12)
    assert ki(1.0, 10.0, 1.0) == pytest.approx(0.9, abs=1e-12)


def test_indicator_combinators():
    sym = pcx.indicator("ki").symmetrized()
    inv = pcx.indicator("ki").inverse()
    # Symmetrization is the pointwise max of the map and its inverse.
    for triple in [(2.0, 5.0, 2.0), (0.5, 3.0, 7.0), (1.0, 1.0, 4.0)]:
        base = pcx.indicator("ki")(*triple)
        assert sym(*triple) == pytest.approx(max(base, inv(*triple)), abs=1e-15)


def test_three_level_on_additive_domain():
    coarse = pcx.indicator("three-level")
    assert coarse(1.0, 1.0, 1.0) == 1.0
    assert coarse(-1.0, -1.0, -1.0) == 2.0
    assert coarse(-1.0, -1.0, 1.0) == 3.0
    assert coarse(0.0, 0.0, 0.0) == 0.0


def test_analyze_report_shape():
    report = pcx.analyze(CLASSIC, indicator="ki", top=10, seed=7)
    assert set(report) == {"indicator_value", "consistent", "worst", "n",
                           "indicator", "seed"}
    assert report["n"] == 3
    assert report["indicator"] == "ki"
    assert report["seed"] == 7
    assert report["consistent"] is False
    assert report["indicator_value"] == pytest.approx(1.0 / 6.0, abs=1e-12)
    assert len(report["worst"]) == 6
    values = [t["value"] for t in report["worst"]]
    assert values == sorted(values, reverse=True)
    assert report["worst"][0]["value"] == pytest.approx(report["indicator_value"])


def test_analyze_consistent_matrix():
    report = pcx.analyze(CONSISTENT)
    assert report["consistent"] is True
    assert report["indicator_value"] == 0.0
    assert report["worst"] == []


def test_validate_and_consistent():
    assert pcx.validate(CLASSIC) == []
    assert pcx.consistent(CONSISTENT) is True
    assert pcx.consistent(CLASSIC) is False

    broken = [[1.0, 2.0], [0.4, 1.0]]
    problems = pcx.validate(broken)
    assert len(problems) == 1
    assert problems[0]["kind"] == "reciprocity"
    # The record carries the upper-triangle position; the message names
    # the offending mirror entry.
    assert (problems[0]["i"], problems[0]["j"]) == (0, 1)
    assert "(1, 0)" in problems[0]["message"]


def test_transport_round_trip():
    logs = pcx.transport([[1.0, 2.0], [0.5, 1.0]], base=2.0)
    assert logs == [[0.0, 1.0], [-1.0, 0.0]]
    back = pcx.transport(logs, base=2.0, direction="to-multiplicative",
                         group="additive")
    assert back[0][1] == pytest.approx(2.0, abs=1e-12)

    # Scale change preserves the analysis outcome.
    direct = pcx.analyze(CLASSIC, indicator="ki")["indicator_value"]
    moved = pcx.analyze(pcx.transport(CLASSIC, base=2.0), indicator="sa:2",
                        group="additive")["indicator_value"]
    assert moved == pytest.approx(direct, abs=1e-9)


def test_axioms_all_pass():
    reports = pcx.axioms(samples=100, seed=3)
    assert len(reports) >= 20
    assert all(r["passed"] for r in reports)
    subjects = {r["subject"] for r in reports}
    assert "indicator:ki" in subjects
    assert "indicator:three-level" in subjects


def test_axioms_negative_controls_fail_with_witnesses():
    reports = pcx.axioms(samples=100, seed=3, negative_controls=True)
    failing = [r for r in reports if not r["passed"]]
    assert len(failing) == 3
    for report in failing:
        witnessed = [law for law in report["laws"]
                     if not law["passed"] and law["witnesses"]]
        assert witnessed, f"no witness for {report['subject']}"


def test_error_mapping():
    with pytest.raises(pcx.ParseError):
        pcx.indicator("nope")
    with pytest.raises(pcx.ParseError):
        pcx.indicator("sa:1")
    with pytest.raises(pcx.PcxError):
        pcx.analyze([[1.0, 2.0], [0.5, 1.0], [1.0, 1.0]])  # not square
    with pytest.raises(pcx.PcxError):
        pcx.consistent([[1.0, -2.0], [-0.5, 1.0]])  # outside the group
    with pytest.raises(pcx.ParseError):
        pcx.transport(CLASSIC, base=2.0, direction="sideways")


def test_nan_rejected():
    with pytest.raises(pcx.PcxError):
        pcx.analyze([[1.0, math.nan], [math.nan, 1.0]])
