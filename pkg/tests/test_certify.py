"""Unit tests for grids, range certification, the extremum search, the
sharpness probes, and the series/shape verifiers.

The frozen maxima below were located once with a dense oracle scan and
golden-section refinement at 50 digits:

    sup (atan - lower)/atan = 0.0026695501084367875 near x = 1.2814739967274817
    sup (upper - atan)/atan = 0.0023139223839542751 near x = 3.4673411730553337
"""

import math

import mpmath
import numpy as np
import pytest

from atanbounds import (
    BoundKind,
    CertificationReport,
    GridKind,
    ShaferCoefficients,
    build_grid,
    certify_range,
    envelope_max,
    find_max_relative_error,
    probe_sharpness,
    series_coefficients,
    verify_series,
    verify_shape_properties,
)
from atanbounds.bounds import lower_bound, upper_bound
from atanbounds.certify import _asymptotic_witness, _perturbed_triple, _quad_extrapolate

U = 2.0 ** -53

SUP_R_LOWER = 0.0026695501084367875
ARG_R_LOWER = 1.2814739967274817
SUP_R_UPPER = 0.0023139223839542751
ARG_R_UPPER = 3.4673411730553337

LOWER = BoundKind.SHARP_LOWER
UPPER = BoundKind.SHARP_UPPER
CLASSIC = BoundKind.CLASSIC_SHAFER


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------


def test_log_grid_basics():
    g = build_grid(1e-3, 1e3, 7, grid="log")
    assert g[0] == 1e-3 and g[-1] == 1e3
    assert len(g) == 7
    assert all(a < b for a, b in zip(g, g[1:]))
    ratios = g[1:] / g[:-1]
    assert np.allclose(ratios, ratios[0])


def test_uniform_grid_basics():
    g = build_grid(-2.0, 3.0, 11, grid=GridKind.UNIFORM)
    assert g[0] == -2.0 and g[-1] == 3.0
    assert np.allclose(np.diff(g), 0.5)


def test_mixed_grid_covers_zero_and_endpoints():
    g = build_grid(-1e6, 1e6, 101)
    assert g[0] == -1e6 and g[-1] == 1e6
    assert 0.0 in g
    assert all(a < b for a, b in zip(g, g[1:]))


def test_mixed_grid_two_points_is_just_the_endpoints():
    assert list(build_grid(0.0, 10.0, 2)) == [0.0, 10.0]


def test_mixed_grid_zero_endpoint_not_duplicated():
    g = build_grid(0.0, 0.001, 100)
    assert len(g) == 100
    assert g[0] == 0.0 and g[-1] == 0.001
    g = build_grid(-10.0, 0.0, 8)
    assert g[0] == -10.0 and g[-1] == 0.0
    assert len(g) == 8


def test_default_grid_kind_depends_on_range():
    assert float(build_grid(0.5, 2.0, 5)[0]) == 0.5          # log when lo > 0
    assert 0.0 in build_grid(-1.0, 1.0, 9)                    # mixed otherwise


def test_grid_validation():
    with pytest.raises(ValueError):
        build_grid(1.0, 1.0, 5)
    with pytest.raises(ValueError):
        build_grid(2.0, 1.0, 5)
    with pytest.raises(ValueError):
        build_grid(1.0, 2.0, 1)
    with pytest.raises(ValueError):
        build_grid(-1.0, 1.0, 5, grid="log")
    with pytest.raises(ValueError):
        build_grid(1.0, 2.0, 5, grid="banana")


# ---------------------------------------------------------------------------
# range certification
# ---------------------------------------------------------------------------


def test_certify_positive_range_passes():
    report = certify_range(0.0, 10.0, 800)
    assert isinstance(report, CertificationReport)
    assert report.passed
    assert report.envelope_violations == 0
    assert report.worst_lower_margin_rel >= -4 * U
    assert report.worst_upper_margin_rel >= -4 * U
    # the supremum of each relative error lives inside (0, 10)
    assert 0.0026 < report.max_r_f <= SUP_R_LOWER * (1 + 1e-9)
    assert 1.0 < report.argmax_r_f < 1.6
    assert 0.0022 < report.max_r_h <= SUP_R_UPPER * (1 + 1e-9)
    assert 2.7 < report.argmax_r_h < 4.4


def test_certify_symmetric_range_passes():
    report = certify_range(-10.0, 10.0, 501)
    assert report.passed
    assert report.envelope_violations == 0
    assert 1.0 < abs(report.argmax_r_f) < 1.6
    assert 2.7 < abs(report.argmax_r_h) < 4.4


def test_certify_argmax_ties_break_toward_smaller_x():
    # a uniform grid over a symmetric range puts bit-identical twins at
    # +-x; the first (negative) one must win the tie
    report = certify_range(-2.0, 2.0, 5, grid="uniform")
    assert report.argmax_r_f == -1.0   # r_f larger at |x| = 1 than at 2
    assert report.argmax_r_h == -2.0   # r_h still growing toward its peak


def test_certify_small_range_tracks_cubic_gap():
    # on [0, 1e-3] the worst r_f sits at the right endpoint and behaves
    # like (10 - pi^2) / (3 (pi^2 - 4)) * x^2
    report = certify_range(0.0, 1e-3, 100)
    coeff = (10.0 - math.pi ** 2) / (3.0 * (math.pi ** 2 - 4.0))
    want = coeff * 1e-6
    assert abs(report.max_r_f - want) <= 0.10 * want
    assert report.argmax_r_f == 1e-3


def test_certify_is_deterministic():
    assert certify_range(0.0, 5.0, 400) == certify_range(0.0, 5.0, 400)


def test_certify_report_renderings():
    report = certify_range(0.0, 2.0, 64)
    text = report.to_text()
    assert text.splitlines()[0] == "certification report"
    assert "passed                 = yes" in text
    assert "envelope violations    = 0" in text

    rows = report.to_csv().splitlines()
    assert len(rows) == 2
    header = rows[0].split(",")
    values = rows[1].split(",")
    assert header[0] == "lo" and header[-1] == "envelope_violations"
    record = dict(zip(header, values))
    assert float(record["lo"]) == 0.0
    assert float(record["hi"]) == 2.0
    assert int(record["sample_count"]) == report.sample_count
    assert float(record["max_r_f"]) == report.max_r_f
    assert record["passed"] == "True"


def test_certify_validation():
    with pytest.raises(ValueError):
        certify_range(1.0, 1.0, 10)
    with pytest.raises(ValueError):
        certify_range(0.0, 1.0, 1)
    with pytest.raises(ValueError):
        certify_range(0.0, 1.0, 10, oracle_digits=49)
    with pytest.raises(ValueError):
        certify_range(0.0, 1.0, 10, grid="nope")


# ---------------------------------------------------------------------------
# extremum search
# ---------------------------------------------------------------------------


def test_find_max_lower_matches_frozen_supremum():
    x_star, r_star = find_max_relative_error("lower", scan_points=2000)
    assert abs(r_star - SUP_R_LOWER) <= 1e-9 * SUP_R_LOWER
    assert abs(x_star - ARG_R_LOWER) < 1e-4
    # the local error never exceeds the envelope there
    assert r_star <= envelope_max(x_star)


def test_find_max_upper_matches_frozen_supremum():
    x_star, r_star = find_max_relative_error("upper", scan_points=2000)
    assert abs(r_star - SUP_R_UPPER) <= 1e-9 * SUP_R_UPPER
    assert abs(x_star - ARG_R_UPPER) < 1e-4
    assert r_star <= envelope_max(x_star)


def test_find_max_stable_under_density_doubling():
    _, r1 = find_max_relative_error("lower", scan_points=1500)
    _, r2 = find_max_relative_error("lower", scan_points=3000)
    assert abs(r1 - r2) <= 1e-6 * r2


def test_find_max_validation():
    with pytest.raises(ValueError):
        find_max_relative_error("middle")
    with pytest.raises(ValueError):
        find_max_relative_error("lower", scan_points=8)
    with pytest.raises(ValueError):
        find_max_relative_error("lower", oracle_digits=10)


# ---------------------------------------------------------------------------
# sharpness probes
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("which", ["lower", "upper"])
@pytest.mark.parametrize("component", [1, 2, 3])
def test_probe_finds_witness_for_every_component(which, component):
    witness = probe_sharpness(which, component, 1e-2)
    assert witness is not None
    assert witness.mode in ("scan", "asymptotic")
    if witness.mode == "scan":
        assert witness.x is not None and math.isfinite(witness.x) and witness.x > 0
    assert witness.detail


@pytest.mark.parametrize("epsilon", [1e-1, 1e-2, 1e-3])
def test_probe_witnesses_across_epsilon_ladder(epsilon):
    assert probe_sharpness("lower", 1, epsilon) is not None
    assert probe_sharpness("upper", 3, epsilon) is not None


def test_probe_unperturbed_triples_are_clean():
    for which in ("lower", "upper"):
        for component in (1, 2, 3):
            assert probe_sharpness(which, component, 0.0) is None


def test_probe_validation():
    with pytest.raises(ValueError):
        probe_sharpness("middle", 1, 1e-2)
    with pytest.raises(ValueError):
        probe_sharpness("lower", 0, 1e-2)
    with pytest.raises(ValueError):
        probe_sharpness("lower", 1, -1e-2)
    with pytest.raises(ValueError):
        probe_sharpness("lower", 1, 1.0)  # coefficient collapses to zero


def test_asymptotic_ladder_detects_limit_violations():
    # shrinking c3 of the lower triple raises its horizontal asymptote
    # above pi/2; the limit coefficient b0 is the dominant witness
    w = _asymptotic_witness("lower", _perturbed_triple("lower", 3, 1e-2))
    assert w is not None and w.mode == "asymptotic" and w.x is None
    assert "b0" in w.detail
    # growing c1 of the upper triple leaves the asymptote valid but
    # drops the leading Taylor coefficient below 1
    w = _asymptotic_witness("upper", _perturbed_triple("upper", 1, 1e-2))
    assert w is not None and "a1" in w.detail


def test_asymptotic_ladder_accepts_unperturbed_triples():
    assert _asymptotic_witness("lower", LOWER.coefficients()) is None
    assert _asymptotic_witness("upper", UPPER.coefficients()) is None


# ---------------------------------------------------------------------------
# series verification
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("kind", ["lower", "upper", "reference"])
def test_verify_series_within_budget(kind):
    rows = verify_series(kind)
    assert len(rows) == 6
    labels = [row.order for row in rows]
    tail = "b3" if kind == "reference" else "b2"
    assert labels == ["a1", "a3", "a5", "b0", "b1", tail]
    for row in rows:
        assert row.relative_gap < 1e-4, f"{kind}:{row.order} gap {row.relative_gap!r}"


def test_verify_series_accepts_enum_kinds():
    assert verify_series(LOWER) == verify_series("lower")
    assert verify_series(UPPER) == verify_series("upper")


def test_verify_series_rejects_untabulated_kind():
    with pytest.raises(ValueError):
        verify_series("classic")


def test_quad_extrapolation_is_exact_on_quadratics():
    ts = (0.9, 0.5, 0.2)
    ms = tuple(3.0 - 2.0 * t + 5.0 * t * t for t in ts)
    assert abs(_quad_extrapolate(ts, ms) - 3.0) < 1e-12


def test_two_point_extrapolation_cross_checks():
    # independent of verify_series' three-node scheme: two-node linear
    # extrapolation in t = x^2 for a5 and in u = 1/x for b2
    table = series_coefficients("lower")
    a1, a3, a5 = table.taylor
    xs = (1e-2, 1e-3)
    ms = [(lower_bound(x) - a1 * x - a3 * x ** 3) / x ** 5 for x in xs]
    ts = [x * x for x in xs]
    a5_meas = ms[1] + (ms[1] - ms[0]) * (0.0 - ts[1]) / (ts[1] - ts[0])
    assert abs(a5_meas - a5) <= 0.01 * abs(a5)

    b0, b1, b2 = table.asymptotic
    xs = (1e3, 1e4)
    ms = [(lower_bound(x) - b0 - b1 / x) * x * x for x in xs]
    us = [1.0 / x for x in xs]
    b2_meas = ms[1] + (ms[1] - ms[0]) * (0.0 - us[1]) / (us[1] - us[0])
    assert abs(b2_meas - b2) <= 1e-3 * abs(b2)


# ---------------------------------------------------------------------------
# shape verification
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("kind", [LOWER, UPPER])
def test_shape_report_for_sharp_kinds(kind):
    report = verify_shape_properties(kind, 400)
    assert report.passed
    assert report.monotonic and report.increasing and report.concavity_ok
    assert report.gap_sign_changes == 1
    assert report.gap_location_gap is not None and report.gap_location_gap < 1e-6
    assert report.gap_critical_point is not None
    assert report.gap_closed_form is not None


def test_shape_report_for_classic_and_custom_triples():
    report = verify_shape_properties(CLASSIC, 200)
    assert report.passed
    assert report.gap_sign_changes is None
    assert report.gap_critical_point is None

    custom = verify_shape_properties(ShaferCoefficients(0.5, 0.25, 0.5), 100)
    assert custom.kind == "custom"
    assert custom.monotonic and custom.increasing and custom.concavity_ok


def test_shape_validation():
    with pytest.raises(ValueError):
        verify_shape_properties(LOWER, 1)


# ---------------------------------------------------------------------------
# error crossover between the two bounds
# ---------------------------------------------------------------------------


def test_relative_error_crossover_against_oracle():
    # near 0 the upper bound is the tighter one, far out the lower one is
    with mpmath.workdps(50):
        def r_pair(x):
            g = mpmath.atan(mpmath.mpf(x))
            r_f = float((g - mpmath.mpf(lower_bound(x))) / g)
            r_h = float((mpmath.mpf(upper_bound(x)) - g) / g)
            return r_f, r_h

        r_f, r_h = r_pair(0.1)
        assert r_h < r_f
        r_f, r_h = r_pair(100.0)
        assert r_f < r_h
