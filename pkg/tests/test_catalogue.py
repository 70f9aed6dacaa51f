"""The built-in system catalogue and transcribed reference data."""

from fractions import Fraction

import pytest

from cclab.catalogue import (
    CATALOGUE_KEYS,
    get_system,
    load_catalogue,
    load_references,
)
from cclab.parsing import parse_expression
from cclab.systems import PlanarSystem


def test_catalogue_keys(catalogue):
    assert tuple(catalogue) == CATALOGUE_KEYS


def test_entries_are_well_formed(catalogue):
    for key, entry in catalogue.items():
        assert entry.key == key
        assert isinstance(entry.system, PlanarSystem)
        assert entry.summary
        assert isinstance(entry.curvature_at_origin.value, Fraction)
        assert entry.curvature_at_origin.provenance in ("reference", "derived")
        radii = entry.cycle_radii_squared.value
        stabilities = entry.cycle_stabilities.value
        assert len(radii) == len(stabilities)
        assert all(isinstance(r, Fraction) and r > 0 for r in radii)
        for point in entry.divergence_points.value:
            assert len(point) == 2
            assert all(isinstance(c, Fraction) for c in point)


def test_center_flag_is_exclusive(catalogue):
    flags = {key: entry.center for key, entry in catalogue.items()}
    assert flags == {"s1": False, "s1a": False, "s2": False, "center": True}


def test_catalogue_agrees_with_sources(catalogue):
    s1 = catalogue["s1"].system
    assert s1.varnames == ("x", "y")
    assert s1.P == parse_expression("-y + x*(x^2 + y^2 - 1)", ("x", "y"))
    assert catalogue["s1"].cycle_radii_squared.value == (Fraction(1),)
    assert catalogue["s1a"].cycle_radii_squared.value == (Fraction(1), Fraction(4))
    assert catalogue["s1a"].cycle_stabilities.value == ("stable", "unstable")
    assert catalogue["s2"].cycle_radii_squared.value == (Fraction(1, 2),)
    assert catalogue["s2"].system.varnames == ("u", "v")
    assert catalogue["center"].divergence_points.value == ((Fraction(0), Fraction(-1)),)


def test_get_system(catalogue):
    system = get_system("s1a")
    assert system.P == catalogue["s1a"].system.P
    with pytest.raises(KeyError):
        get_system("nonexistent")


def test_load_catalogue_from_explicit_path(tmp_path):
    text = (
        "[tiny]\n"
        "variables = x y\n"
        "dx = -y\n"
        "dy = x\n"
        "summary = linear rotation\n"
        "curvature_at_origin = 1\n"
        "curvature_at_origin_source = derived\n"
        "cycle_radii_squared =\n"
        "cycle_stabilities =\n"
        "cycles_source = derived\n"
        "divergence_points =\n"
        "divergence_points_source = derived\n"
        "center = yes\n"
    )
    path = tmp_path / "alt.ini"
    path.write_text(text)
    entries = load_catalogue(str(path))
    assert tuple(entries) == ("tiny",)
    assert entries["tiny"].center
    assert entries["tiny"].system.P == parse_expression("-y", ("x", "y"))


def test_references_cover_the_transcribed_systems(references):
    assert set(references.curvature) == {"s1", "s2", "center"}
    for key, (num, den) in references.curvature.items():
        assert not num.is_zero()
        assert not den.is_zero()
        assert num.varnames == den.varnames


def test_reference_eliminants(references):
    assert len(references.eliminants) == 2
    first, second = references.eliminants
    assert first.eliminated == "u"
    assert second.eliminated == "v"
    for stated in references.eliminants:
        assert stated.quartic.degree == 4
        f, g = stated.pair
        assert f.varnames == ("u", "v")


def test_malformed_catalogue_rejected(tmp_path):
    path = tmp_path / "broken.ini"
    path.write_text("[oops]\nvariables = x y\ndx = -y\n")
    with pytest.raises(Exception):
        load_catalogue(str(path))
