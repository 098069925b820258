"""Series thresholds, coefficient domination, and the inequality sweeps."""

import math

import numpy as np
import pytest

from monokit.bohr import (bohr_radius, coefficient_domination, empirical_bohr_sum,
                          empirical_bohr_sweep, random_test_function,
                          series_f1_threshold, series_f1_threshold_truncated,
                          series_f2_threshold, series_f2_threshold_truncated,
                          series_s1, series_s1_truncated, series_s2,
                          series_s2_truncated, verify_constants_ratio_lemma,
                          verify_corollary_bounds, verify_pointwise_bounds,
                          verify_sc_ratio_lemmas)
from monokit.quadrature import QuadratureRule, fourier_expand

R1 = 0.049583846938703394
R2 = 0.5695633074465153


def test_series_closed_forms_match_truncation():
    for r in (0.01, 0.049, 0.2):
        assert abs(series_s1(r) - series_s1_truncated(r, 400)) < 1e-13
    for r in (0.1, 0.5695, 1.5):
        assert abs(series_s2(r) - series_s2_truncated(r, 40)) < 1e-13


def test_series_are_monotone():
    grid = np.linspace(0.0, 0.49, 50)
    s1 = [series_s1(r) for r in grid]
    s2 = [series_s2(r) for r in grid]
    assert all(a < b for a, b in zip(s1, s1[1:]))
    assert all(a < b for a, b in zip(s2, s2[1:]))


def test_series_domain():
    with pytest.raises(ValueError):
        series_s1(0.5)
    with pytest.raises(ValueError):
        series_s2(-0.1)


def test_first_threshold():
    r1 = series_f1_threshold()
    assert 0.0490 < r1 < 0.0500
    assert abs(r1 - 0.0496) < 0.0004
    assert abs(r1 - R1) < 1e-9
    assert abs(series_s1(r1) - 1.0) < 1e-10
    assert abs(r1 - series_f1_threshold_truncated()) < 1e-10


def test_second_threshold():
    r2 = series_f2_threshold()
    assert 0.5695 < r2 < 0.5700
    assert abs(r2 - 0.5697) < 0.0002
    assert r2 == math.log1p(math.sqrt(3.0 * math.pi) / 4.0)
    assert abs(r2 - R2) < 1e-12
    assert abs(series_s2(r2) - 1.0) < 1e-12
    assert abs(r2 - series_f2_threshold_truncated()) < 1e-10


def test_margin_anchors():
    # the headline 0.05 is a rounding of r1: already slightly past threshold
    assert series_s1(0.047) == pytest.approx(0.9387763414387241, rel=1e-12)
    assert series_s1(0.05) == pytest.approx(1.0099690075854897, rel=1e-12)
    assert series_s1(0.047) < 1.0
    assert series_s1(0.05) > 1.0


def test_radius_report():
    report = bohr_radius(extra_radii=(0.03,))
    assert report.radius == min(report.r1, report.r2) == report.r1
    assert report.f1_binds
    assert 0.03 in report.margins and 0.047 in report.margins
    doc = report.to_json_dict()
    assert doc["f1_binds"] is True
    assert doc["radius"] < 0.05


def test_coefficient_domination_examples():
    near_one = 1.0 - 1e-15
    assert coefficient_domination(1, "X", 0, 0.0, near_one) == \
        pytest.approx(3.0 / (2.0 * math.sqrt(math.pi)), rel=1e-12)
    assert coefficient_domination(1, "X", 1, 0.0, near_one) == \
        pytest.approx(2.0 / math.sqrt(math.pi), rel=1e-12)
    assert coefficient_domination(1, "X", 2, 0.0, 0.5) == \
        pytest.approx(0.5 / math.sqrt(3.0 * math.pi), rel=1e-12)


def test_coefficient_domination_validation():
    with pytest.raises(ValueError):
        coefficient_domination(1, "X", 0, 0.0, 0.0)
    with pytest.raises(ValueError):
        coefficient_domination(1, "X", 0, 0.0, 1.0)
    with pytest.raises(ValueError):
        coefficient_domination(1, "Y", 0, 0.0, 0.5)
    with pytest.raises(ValueError):
        coefficient_domination(1, "X", 3, 0.0, 0.5)


def test_corollary_bounds_sweep():
    report = verify_corollary_bounds(5)
    assert report.passed
    assert report.max_ratio <= 1.0 + 1e-12
    assert report.samples > 0


def test_pointwise_bounds_sweep():
    reports = verify_pointwise_bounds(4, n_samples=2000, seed=0)
    assert all(r.passed for r in reports.values())
    sc = reports["scalar-part"]
    assert {"n": 0, "index": "X:0"} in sc.tight_cases
    const = reports["constants-e1"]
    assert {"n": 0, "kind": "X"} in const.tight_cases
    assert all({"n": n, "kind": "X"} in const.tight_cases for n in range(5))


def test_ratio_lemmas():
    assert verify_sc_ratio_lemmas(6).passed
    report = verify_constants_ratio_lemma(6)
    assert report.passed
    assert "k0_note" in report.worst_case


def test_random_function_hypotheses():
    rng = np.random.default_rng(12)
    theta = np.linspace(0.0, math.pi, 361)[:, None]
    phi = np.linspace(0.0, 2.0 * math.pi, 720, endpoint=False)[None, :]
    x0 = np.cos(theta) * np.ones_like(phi)
    s = np.sin(theta)
    x1, x2 = s * np.cos(phi), s * np.sin(phi)
    for _ in range(5):
        f = random_test_function(rng)
        assert f.is_reduced()
        assert f.dirac().is_zero()
        values = f.eval_grid(x0, x1, x2)
        assert float(np.sqrt((values ** 2).sum(axis=-1)).max()) < 1.0
        assert float(values[..., 0].min()) > 0.0


def test_empirical_sum_for_constant():
    from fractions import Fraction
    from monokit.mpoly import MPoly
    f = MPoly.scalar(Fraction(3, 4))
    coeffs = fourier_expand(f, 2, QuadratureRule.for_degree(6))
    for r in (0.0, 0.049, 0.3):
        assert empirical_bohr_sum(coeffs, r) == pytest.approx(0.75, abs=1e-12)


def test_empirical_sweep_small():
    report = empirical_bohr_sweep(8, r=0.049, seed=42)
    assert report.passed
    assert report.max_ratio < 1.0
    assert report.samples == 8


def test_empirical_sum_rejects_bad_radius():
    rng = np.random.default_rng(1)
    f = random_test_function(rng, max_degree=2)
    coeffs = fourier_expand(f, 2, QuadratureRule.for_degree(6))
    with pytest.raises(ValueError):
        empirical_bohr_sum(coeffs, 1.0)
