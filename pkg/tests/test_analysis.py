"""The orchestrated pipeline: reports, verdicts, and JSON shapes."""

import math
from fractions import Fraction

import pytest

from cclab.analysis import (
    analyze,
    render_report,
    report_dict,
    verdict_line,
)
from cclab.dynamics import Cycle, LimitCycleReport, NUMERIC_POINCARE, TWO_PI
from cclab.jsonout import dumps
from cclab.parsing import parse_system
from cclab.singularity import (
    A_FAILS_NO_SINGULARITY,
    A_FAILS_R_NEGATIVE,
    A_HOLDS,
    AssertionReport,
)


def make_assertions(verdict: str, b_count: int) -> AssertionReport:
    return AssertionReport(
        assertion_A=verdict,
        assertion_B_count=b_count,
        symmetric_pairs=0,
        equilibrium_signs=((
            (Fraction(0), Fraction(0)), "positive_neighborhood"),),
    )


def make_cycles(count: int, center: bool = False) -> LimitCycleReport:
    cycles = tuple(
        Cycle(radius=float(i + 1), period=TWO_PI, stability="unstable",
              source=NUMERIC_POINCARE)
        for i in range(count))
    return LimitCycleReport(cycles, center_flag=center)


# --- verdict lines -------------------------------------------------------------


def test_verdict_criterion_holds_but_no_cycles():
    line = verdict_line(make_assertions(A_HOLDS, 1), make_cycles(0, center=True))
    assert "differs" in line
    assert "no limit cycle exists" in line
    assert "ring of periodic orbits" in line


def test_verdict_criterion_holds_and_matches():
    line = verdict_line(make_assertions(A_HOLDS, 1), make_cycles(1))
    assert "matches" in line


def test_verdict_criterion_holds_with_wrong_count():
    line = verdict_line(make_assertions(A_HOLDS, 3), make_cycles(1))
    assert "differs" in line or "holds but" in line


def test_verdict_criterion_fails_with_cycles_present():
    line = verdict_line(make_assertions(A_FAILS_R_NEGATIVE, 0), make_cycles(2))
    assert "differs" in line
    assert "2 limit cycles" in line


def test_verdict_criterion_fails_no_cycles():
    line = verdict_line(make_assertions(A_FAILS_NO_SINGULARITY, 0), make_cycles(0))
    assert "agree" in line


# --- full pipeline on the catalogue ------------------------------------------------


def test_analyze_unit_circle_system(analyses):
    report = analyses["s1"]
    assert report.degrees == (3, 3)
    assert len(report.equilibria) == 1
    assert report.equilibria[0].point == (0, 0)
    assert report.equilibria[0].R_at_point.value == -1
    assert report.assertions.assertion_A == A_FAILS_R_NEGATIVE
    assert report.cycles_exact.cycle_count == 1
    assert report.cycles_numeric.cycle_count == 1
    assert abs(report.cycles_numeric.cycles[0].radius - 1.0) < 1e-6
    assert report.locus.certified_divergence_count == 0
    assert "agree on count, radii, stability" in " ".join(report.notes)
    assert "differs" in report.verdict


def test_analyze_two_cycle_system(analyses):
    report = analyses["s1a"]
    assert report.cycles_exact.cycle_count == 2
    assert report.assertions.assertion_B_count == 0
    assert len(report.locus.divergence_points) == 16
    assert "differs" in report.verdict


def test_analyze_transformed_system(analyses):
    report = analyses["s2"]
    assert report.cycles_exact is None
    assert report.cycles_numeric.cycle_count == 1
    assert abs(report.cycles_numeric.cycles[0].radius - math.sqrt(0.5)) < 1e-6
    assert report.assertions.assertion_A == A_FAILS_NO_SINGULARITY
    assert report.locus.all_branches_empty


def test_analyze_center_system(analyses):
    report = analyses["center"]
    assert report.assertions.assertion_A == A_HOLDS
    assert report.assertions.assertion_B_count == 1
    assert report.cycles.cycle_count == 0
    assert report.cycles_numeric.center_flag
    assert "no limit cycle exists" in report.verdict


def test_analyze_without_scan(catalogue):
    report = analyze(catalogue["s1"].system, scan=False)
    assert report.cycles_numeric is None
    assert report.cycles_exact.cycle_count == 1
    # the preferred report falls back to the exact one
    assert report.cycles is report.cycles_exact


def test_analyze_skips_scan_off_origin():
    # shift the equilibrium away from the origin: the scan must bow out
    # with a note instead of raising
    system = parse_system(
        "vars: x y\ndx = -(y - 1) + (x - 2)\ndy = (x - 2) + (y - 1)\n")
    report = analyze(system)
    assert report.cycles_numeric is None
    assert any("scan skipped" in note for note in report.notes)


# --- serialized shape ----------------------------------------------------------------


def test_report_dict_is_json_ready_and_deterministic(analyses):
    for key in ("s1", "center"):
        d1 = report_dict(analyses[key])
        d2 = report_dict(analyses[key])
        assert dumps(d1) == dumps(d2)
        assert d1["verdict"] == analyses[key].verdict
        for top in ("curvature", "assertions", "singular_locus",
                    "cycles_exact", "cycles_numeric", "equilibria"):
            assert top in d1, (key, top)


def test_report_dict_content(analyses):
    d = report_dict(analyses["s1"])
    assert d["assertions"]["assertion_A"] == A_FAILS_R_NEGATIVE
    assert d["assertions"]["assertion_B_count"] == 0
    assert len(d["cycles_exact"]["cycles"]) == 1
    assert len(d["cycles_numeric"]["cycles"]) == 1
    assert d["variables"] == ["x", "y"]
    assert d["degrees"] == [3, 3]
    curvature = d["curvature"]
    assert set(curvature) == {"raw", "reduced", "reduced_denominator_exponents"}
    assert len(curvature["reduced_denominator_exponents"]) == 2
    assert d["singular_locus"]["certified_divergence_count"] == 0


def test_render_report_mentions_the_essentials(analyses):
    text = render_report(analyses["s1"])
    assert "equilibri" in text.lower()
    assert "cycle" in text.lower()
    assert "criterion" in text.lower() or "verdict" in text.lower()
