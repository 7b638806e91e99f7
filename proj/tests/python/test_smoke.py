"""End-to-end smoke checks of the Python bindings."""

import math

import pytest

import ngonstar


def test_version():
    assert ngonstar.__version__ == "0.1.0"


def test_radius_ratio_closed_form():
    assert ngonstar.radius_ratio(3, 0.5) == pytest.approx(2.0 - math.sqrt(3.0), rel=1e-14)


def test_stretch_roundtrip():
    a = ngonstar.stretch(5, 0.3)
    assert ngonstar.alpha_of_stretch(5, a) == pytest.approx(0.3, rel=1e-12)


def test_quartic_root_summary():
    summary = ngonstar.quartic_root_summary(4, 0.3)
    assert summary["admissible_count"] == 1
    assert summary["admissible_value"] == pytest.approx(
        ngonstar.radius_ratio(4, 0.3), rel=1e-12
    )


def test_anisotropy_ratio():
    assert ngonstar.anisotropy_ratio(3, 0.1) == pytest.approx(171.489, rel=1e-4)


def test_noniterability_gap():
    outer, inner = ngonstar.noniterability_gap(5, 0.35)
    assert outer <= 1e-12
    assert inner == pytest.approx(0.17009, rel=1e-3)


def test_energy_summary():
    summary = ngonstar.energy_summary(3, 0.47, 2)
    assert summary["elastic"] == pytest.approx(7.207653e-6, rel=1e-4)
    assert summary["ratio"] == summary["elastic"] / summary["bound"]


def test_limit_field():
    v = ngonstar.limit_deformation(0.2, 1.0, 0.0)
    assert v[0] == pytest.approx(0.8, abs=1e-14)
    assert v[1] == pytest.approx(0.6, abs=1e-14)
    g = ngonstar.limit_gradient(0.2, 1.0, 0.0)
    det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    assert det == pytest.approx(1.0, abs=1e-12)


def test_strain_wells_and_orbits():
    e11, e12 = ngonstar.strain_well(3, 1)
    assert e12 == pytest.approx(-math.sqrt(3.0), rel=1e-14)
    assert ngonstar.orbit_count(5) == 5
    assert ngonstar.orbit_count(4) == 4
    with pytest.raises(ValueError):
        ngonstar.strain_well(3, 7)


def test_scan_min_disparity():
    assert ngonstar.scan_min_disparity("vertex", 10, 10) > 1e-2
    with pytest.raises(ValueError):
        ngonstar.scan_min_disparity("sideways", 5, 5)


def test_verify_appendix():
    all_pass, text = ngonstar.verify("appendix", 7)
    assert all_pass
    assert "summary: PASS" in text
