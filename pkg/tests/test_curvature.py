"""Curvature rationalization: frozen values, identities, and the numeric probe."""

import random
from fractions import Fraction

import pytest
from hypothesis import given

from _strategies import XY, points
from cclab.curvature import (
    INDETERMINATE,
    SINGULAR,
    VALUE,
    DegenerateMetricError,
    PointValue,
    RationalFunction,
    metric_components,
    numeric_curvature_probe,
    scalar_curvature,
)
from cclab.parsing import parse_expression, parse_system
from cclab.polynomials import Poly2
from cclab.systems import PlanarSystem

ORIGIN_VALUES = {
    "s1": Fraction(-1),
    "s1a": Fraction(-80, 289),
    "s2": Fraction(6, 5),
    "center": Fraction(1),
}


def test_origin_values_exact(curvatures, catalogue):
    for key, expected in ORIGIN_VALUES.items():
        data = curvatures[key]
        outcome = data.reduced.function.evaluate(Fraction(0), Fraction(0))
        assert outcome.kind == VALUE, key
        assert outcome.value == expected, key


def test_denominator_is_twice_square_of_determinant(curvatures):
    for key, data in curvatures.items():
        det = data.metric.det
        assert det == data.metric.g11 * data.metric.g22
        assert data.curvature.denominator == (det * det).scale(2)


def test_transcribed_quotients_match(curvatures, references):
    for key, (num, den) in references.curvature.items():
        assert curvatures[key].curvature.equals_quotient(num, den), key


def test_center_closed_form(curvatures):
    data = curvatures["center"]
    num = parse_expression("1", XY)
    den = parse_expression("(x^2 + 1)^2 * (4*x^2 + (y + 1)^2)", XY)
    assert data.curvature.equals_quotient(num, den)


def test_reduced_form_is_the_same_function(curvatures):
    for key, data in curvatures.items():
        reduced = data.reduced
        assert reduced.function.same_function(data.curvature), key
        e1, e2 = reduced.den_exponents
        assert 0 <= e1 <= 2 and 0 <= e2 <= 2, key
        expected_den = (Poly2.constant(2, data.curvature.varnames)
                        * data.metric.g11 ** e1 * data.metric.g22 ** e2)
        assert reduced.function.denominator == expected_den, key


def test_center_reduction_exposes_the_pole(curvatures):
    data = curvatures["center"]
    assert data.reduced.den_exponents == (1, 2)
    raw = data.curvature.evaluate(Fraction(0), Fraction(-1))
    reduced = data.reduced.function.evaluate(Fraction(0), Fraction(-1))
    assert raw.kind == INDETERMINATE
    assert reduced.kind == SINGULAR


def test_branches_are_the_jacobian_columns(curvatures, catalogue):
    for key, data in curvatures.items():
        system = catalogue[key].system
        a, b = system.varnames
        first, second = data.branches
        assert first.column == a and second.column == b
        assert first.first == system.P.partial(a)
        assert first.second == system.Q.partial(a)
        # each metric entry is twice the sum of squares of its branch pair
        assert data.metric.g11 == (first.first ** 2 + first.second ** 2).scale(2)
        assert data.metric.g22 == (second.first ** 2 + second.second ** 2).scale(2)


@given(points)
def test_metric_entries_are_nonnegative(pt):
    system = parse_system(
        "vars: x y\n"
        "dx = -y + x*(x^2 + y^2 - 1)\n"
        "dy = x + y*(x^2 + y^2 - 1)\n")
    metric = metric_components(system)
    px, py = pt
    assert metric.g11.eval_at(px, py) >= 0
    assert metric.g22.eval_at(px, py) >= 0
    assert metric.det.eval_at(px, py) >= 0


def test_degenerate_metric_rejected():
    # both components independent of x: the first Jacobian column vanishes
    flat = parse_system("vars: x y\ndx = y^2\ndy = 1 - y\n")
    with pytest.raises(DegenerateMetricError):
        scalar_curvature(flat)
    with pytest.raises(DegenerateMetricError):
        numeric_curvature_probe(flat, 0.5, 0.5)


def probe_agreement_points(data, system, count, rng):
    """Yield (point, exact float, probe float) at nonsingular random points."""
    produced = 0
    while produced < count:
        px = rng.uniform(-1.5, 1.5)
        py = rng.uniform(-1.5, 1.5)
        fx, fy = Fraction(px), Fraction(py)
        outcome = data.reduced.function.evaluate(fx, fy)
        if outcome.kind != VALUE:
            continue
        den = data.reduced.function.denominator.eval_at(fx, fy)
        if abs(den) < Fraction(1, 100):
            continue  # too close to the singular locus for finite differences
        probe = numeric_curvature_probe(system, px, py)
        yield (px, py), float(outcome.value), probe
        produced += 1


def test_probe_matches_exact_rationalization(curvatures, catalogue):
    rng = random.Random(20260816)
    for key, data in curvatures.items():
        system = catalogue[key].system
        for pt, exact, probe in probe_agreement_points(data, system, 100, rng):
            assert abs(probe - exact) <= 1e-5 * (1 + abs(exact)), (key, pt)


# --- point-value semantics ------------------------------------------------------


def test_point_value_validation():
    with pytest.raises(ValueError):
        PointValue("nonsense")
    with pytest.raises(ValueError):
        PointValue(VALUE)  # a finite value must carry one
    with pytest.raises(ValueError):
        PointValue(SINGULAR, Fraction(1))


def test_rational_function_validation():
    x = Poly2.variable("x", XY)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(x, Poly2.zero(XY))
    other = RationalFunction(Poly2.variable("u", ("u", "v")),
                             Poly2.constant(1, ("u", "v")))
    with pytest.raises(ValueError):
        RationalFunction(x, Poly2.constant(1, XY)).same_function(other)


def test_evaluate_classifies_all_three_kinds():
    x = Poly2.variable("x", XY)
    y = Poly2.variable("y", XY)
    rf = RationalFunction(y, x)
    assert rf.evaluate(1, 5).kind == VALUE
    assert rf.evaluate(0, 5).kind == SINGULAR
    assert rf.evaluate(0, 0).kind == INDETERMINATE


def test_cross_multiplication_identity():
    x = Poly2.variable("x", XY)
    one = Poly2.constant(1, XY)
    # x/(x^2) equals 1/x as rational functions without any reduction
    assert RationalFunction(x, x * x).same_function(RationalFunction(one, x))
