"""Executable verification of the bound guarantees.

This module turns the library's mathematical claims into checks that run:
range certification of the two-sided ordering against an arbitrary-
precision oracle, location of the maximum relative errors, sharpness
probes for the extremal coefficient triples, series-coefficient
measurement, and shape (monotonicity/concavity/critical-point) checks.

All operations are pure; sample evaluation is associative (min/max with a
deterministic tie-break toward smaller x), so identical inputs produce
bit-identical reports regardless of how the work would be partitioned.
"""

from __future__ import annotations

import enum
import io
import csv
import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

import mpmath
import numpy as np

from .bounds import (
    UNIT_ROUNDOFF,
    BoundKind,
    ShaferCoefficients,
    SeriesCoefficients,
    _generic_asymptotic,
    _generic_taylor,
    _require_side,
    _resolve_coefficients,
    critical_points_delta,
    envelope_max,
    envelope_min,
    eval_shafer,
    first_derivative,
    lower_bound,
    second_derivative,
    series_coefficients,
    upper_bound,
)
from .oracle import ORACLE_DPS

__all__ = [
    "CERTIFICATION_MARGIN",
    "GridKind",
    "CertificationReport",
    "SharpnessWitness",
    "SeriesCheck",
    "ShapeReport",
    "build_grid",
    "certify_range",
    "find_max_relative_error",
    "probe_sharpness",
    "verify_series",
    "verify_shape_properties",
]

#: Round-off allowance of every certification check: four units of
#: round-off, applied relative to the oracle value for the ordering
#: margins and absolutely for the dimensionless envelope comparisons.
CERTIFICATION_MARGIN = 4.0 * UNIT_ROUNDOFF


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------


class GridKind(enum.Enum):
    """Sample placement strategy for range certification and sweeps."""

    LOG_UNIFORM = "log"
    UNIFORM = "uniform"
    MIXED = "mixed"


def _mixed_grid(lo: float, hi: float, n: int) -> np.ndarray:
    """Sign-split log-uniform grid, 0 and exact endpoints included.

    Magnitudes on each side run log-uniformly from the side's endpoint
    down to a floor 12 decades below the largest endpoint magnitude (the
    region below the floor is indistinguishable from 0 for bound work).
    """
    floor = 1e-12 * max(abs(lo), abs(hi))
    # A zero endpoint is already covered by the endpoint slot itself;
    # an explicit zero sample is only inserted when 0 is strictly interior.
    include_zero = lo < 0.0 < hi
    has_neg = lo < 0.0
    has_pos = hi > 0.0
    slots = n - (1 if include_zero else 0)
    if has_neg and has_pos:
        n_neg = max(2, slots // 2)
        n_pos = max(2, slots - n_neg)
    elif has_neg:
        n_neg, n_pos = max(2, slots), 0
    else:
        n_neg, n_pos = 0, max(2, slots)
    parts = []
    if has_neg:
        top = abs(lo)
        bottom = floor if hi >= 0.0 else abs(hi)
        parts.append(-np.geomspace(top, bottom, n_neg))
    if include_zero:
        parts.append(np.zeros(1))
    if has_pos:
        bottom = floor if lo <= 0.0 else lo
        parts.append(np.geomspace(bottom, hi, n_pos))
    grid = np.concatenate(parts)
    grid[0] = lo
    grid[-1] = hi
    return grid


def build_grid(
    lo: float,
    hi: float,
    n: int,
    grid: Union[GridKind, str, None] = None,
) -> np.ndarray:
    """Ascending sample grid over [lo, hi] with exact endpoints.

    ``grid`` defaults to log-uniform when lo > 0 and to the mixed
    sign-split grid otherwise.  The mixed grid always contains 0 when it
    lies strictly inside the range and may exceed ``n`` by a point or two
    for very small ``n`` (endpoint and zero inclusion take precedence).
    """
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError(f"range endpoints must be finite, got ({lo}, {hi})")
    if not lo < hi:
        raise ValueError(f"need lo < hi, got ({lo}, {hi})")
    if n < 2:
        raise ValueError(f"need n >= 2 grid points, got {n}")
    if grid is None:
        kind = GridKind.LOG_UNIFORM if lo > 0.0 else GridKind.MIXED
    elif isinstance(grid, str):
        kind = GridKind(grid)
    else:
        kind = grid
    if kind is GridKind.LOG_UNIFORM:
        if lo <= 0.0:
            raise ValueError("log grid requires lo > 0")
        out = np.geomspace(lo, hi, n)
    elif kind is GridKind.UNIFORM:
        out = np.linspace(lo, hi, n)
    else:
        out = _mixed_grid(lo, hi, n)
    out[0] = lo
    out[-1] = hi
    return out


# ---------------------------------------------------------------------------
# range certification
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class CertificationReport:
    """Aggregated result of certifying the two-sided ordering on a range.

    Margins are reported both as absolute gaps (oracle minus lower bound,
    upper bound minus oracle, computed on magnitudes since all curves are
    odd) and relative to the oracle value; ``passed`` requires both
    relative margins to clear -CERTIFICATION_MARGIN and zero envelope
    violations.
    """

    lo: float
    hi: float
    sample_count: int
    grid: GridKind
    oracle_digits: int
    passed: bool
    worst_lower_margin: float
    worst_upper_margin: float
    worst_lower_margin_rel: float
    worst_upper_margin_rel: float
    max_r_f: float
    argmax_r_f: float
    max_r_h: float
    argmax_r_h: float
    envelope_violations: int

    def to_text(self) -> str:
        """Fixed-schema plain-text rendering (documented in the README)."""
        lines = [
            "certification report",
            f"  range                  = [{self.lo!r}, {self.hi!r}]",
            f"  grid                   = {self.grid.value}",
            f"  samples                = {self.sample_count}",
            f"  oracle digits          = {self.oracle_digits}",
            f"  passed                 = {'yes' if self.passed else 'no'}",
            f"  worst lower margin     = {self.worst_lower_margin!r}"
            f" (relative {self.worst_lower_margin_rel!r})",
            f"  worst upper margin     = {self.worst_upper_margin!r}"
            f" (relative {self.worst_upper_margin_rel!r})",
            f"  max r_f                = {self.max_r_f!r} at x = {self.argmax_r_f!r}",
            f"  max r_h                = {self.max_r_h!r} at x = {self.argmax_r_h!r}",
            f"  envelope violations    = {self.envelope_violations}",
        ]
        return "\n".join(lines)

    def to_csv(self) -> str:
        """One-row CSV rendering with a header (schema mirrors the fields)."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        fields = [
            "lo", "hi", "sample_count", "grid", "oracle_digits", "passed",
            "worst_lower_margin", "worst_upper_margin",
            "worst_lower_margin_rel", "worst_upper_margin_rel",
            "max_r_f", "argmax_r_f", "max_r_h", "argmax_r_h",
            "envelope_violations",
        ]
        writer.writerow(fields)
        writer.writerow([
            repr(self.lo), repr(self.hi), self.sample_count, self.grid.value,
            self.oracle_digits, self.passed,
            repr(self.worst_lower_margin), repr(self.worst_upper_margin),
            repr(self.worst_lower_margin_rel), repr(self.worst_upper_margin_rel),
            repr(self.max_r_f), repr(self.argmax_r_f),
            repr(self.max_r_h), repr(self.argmax_r_h),
            self.envelope_violations,
        ])
        return buf.getvalue()


def certify_range(
    lo: float,
    hi: float,
    n: int,
    grid: Union[GridKind, str, None] = None,
    oracle_digits: int = ORACLE_DPS,
) -> CertificationReport:
    """Certify lower <= arctan <= upper plus the envelope sandwich on a range.

    Every grid point is checked against the arbitrary-precision oracle:
    the ordering margins (on magnitudes; all three curves are odd) must
    stay above -CERTIFICATION_MARGIN relative to the oracle, and the
    pointwise sandwich min(r_f, r_h) <= envelope_min <= max(r_f, r_h)
    <= envelope_max must hold within the same margin taken absolutely.
    Aggregation ties break toward smaller x.
    """
    if oracle_digits < 50:
        raise ValueError(f"oracle_digits must be >= 50, got {oracle_digits}")
    xs = build_grid(lo, hi, n, grid)
    grid_kind = (
        GridKind(grid) if isinstance(grid, str)
        else grid if isinstance(grid, GridKind)
        else (GridKind.LOG_UNIFORM if lo > 0.0 else GridKind.MIXED)
    )

    worst_lo = math.inf
    worst_up = math.inf
    worst_lo_rel = math.inf
    worst_up_rel = math.inf
    max_r_f = -math.inf
    argmax_r_f = math.nan
    max_r_h = -math.inf
    argmax_r_h = math.nan
    violations = 0

    with mpmath.workdps(oracle_digits):
        for x in xs:
            x = float(x)
            ax = abs(x)
            f_val = lower_bound(ax)
            h_val = upper_bound(ax)
            if ax == 0.0:
                margin_lo = margin_up = 0.0
                rel_lo = rel_up = 0.0
                r_f = r_h = 0.0
            else:
                g_val = mpmath.atan(mpmath.mpf(ax))
                margin_lo = float(g_val - f_val)
                margin_up = float(h_val - g_val)
                rel_lo = float((g_val - f_val) / g_val)
                rel_up = float((h_val - g_val) / g_val)
                r_f = rel_lo
                r_h = rel_up
            if margin_lo < worst_lo:
                worst_lo = margin_lo
            if margin_up < worst_up:
                worst_up = margin_up
            if rel_lo < worst_lo_rel:
                worst_lo_rel = rel_lo
            if rel_up < worst_up_rel:
                worst_up_rel = rel_up
            if r_f > max_r_f:
                max_r_f = r_f
                argmax_r_f = x
            if r_h > max_r_h:
                max_r_h = r_h
                argmax_r_h = x
            e_max = envelope_max(ax)
            e_min = envelope_min(ax)
            r_small = min(r_f, r_h)
            r_large = max(r_f, r_h)
            if (
                r_small > e_min + CERTIFICATION_MARGIN
                or e_min > r_large + CERTIFICATION_MARGIN
                or r_large > e_max + CERTIFICATION_MARGIN
            ):
                violations += 1

    passed = (
        worst_lo_rel >= -CERTIFICATION_MARGIN
        and worst_up_rel >= -CERTIFICATION_MARGIN
        and violations == 0
    )
    return CertificationReport(
        lo=lo,
        hi=hi,
        sample_count=len(xs),
        grid=grid_kind,
        oracle_digits=oracle_digits,
        passed=passed,
        worst_lower_margin=worst_lo,
        worst_upper_margin=worst_up,
        worst_lower_margin_rel=worst_lo_rel,
        worst_upper_margin_rel=worst_up_rel,
        max_r_f=max_r_f,
        argmax_r_f=argmax_r_f,
        max_r_h=max_r_h,
        argmax_r_h=argmax_r_h,
        envelope_violations=violations,
    )


# ---------------------------------------------------------------------------
# maximum relative error search
# ---------------------------------------------------------------------------

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_max(
    fn: Callable[[float], float], a: float, b: float, tol: float = 1e-10
) -> tuple[float, float]:
    """Golden-section maximization of a scalar function on [a, b]."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc = fn(c)
    fd = fn(d)
    while (b - a) > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = fn(d)
    mid = 0.5 * (a + b)
    return mid, fn(mid)


def _oracle_relative_error(kind: str, x: float) -> float:
    """Relative error of one bound at x > 0, against the active oracle.

    Must run inside an mpmath.workdps context; uses the float evaluation
    of the bound (the quantity being certified) against the full-precision
    arctan.
    """
    g_val = mpmath.atan(mpmath.mpf(x))
    if kind == "lower":
        return float((g_val - lower_bound(x)) / g_val)
    return float((upper_bound(x) - g_val) / g_val)


def find_max_relative_error(
    kind: str,
    scan_points: int = 10_000,
    oracle_digits: int = ORACLE_DPS,
) -> tuple[float, float]:
    """Locate the maximum relative error of one bound.

    Coarse scan of ``scan_points`` log-uniform points in [1e-3, 1e3]
    followed by golden-section refinement (to interval width 1e-10) around
    the best three separated scan maxima; no unimodality is assumed.  The
    error is always measured against the arbitrary-precision oracle.
    Returns (x_star, r_star).
    """
    _require_side(kind)
    if scan_points < 16:
        raise ValueError(f"scan_points must be >= 16, got {scan_points}")
    if oracle_digits < 50:
        raise ValueError(f"oracle_digits must be >= 50, got {oracle_digits}")
    xs = np.geomspace(1e-3, 1e3, scan_points)
    with mpmath.workdps(oracle_digits):
        rs = [_oracle_relative_error(kind, float(x)) for x in xs]
        # Indices of interior local maxima, best first.
        peaks = [
            i
            for i in range(1, len(xs) - 1)
            if rs[i] > rs[i - 1] and rs[i] >= rs[i + 1]
        ]
        peaks.sort(key=lambda i: rs[i], reverse=True)
        best_x = float(xs[0])
        best_r = rs[0]
        for i, r in enumerate(rs):
            if r > best_r:
                best_r = r
                best_x = float(xs[i])
        for i in peaks[:3]:
            x_ref, r_ref = _golden_max(
                lambda t: _oracle_relative_error(kind, t),
                float(xs[i - 1]),
                float(xs[i + 1]),
            )
            if r_ref > best_r:
                best_r = r_ref
                best_x = x_ref
    return best_x, best_r


# ---------------------------------------------------------------------------
# sharpness probes
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SharpnessWitness:
    """Evidence that a perturbed triple violates its side of the ordering.

    ``mode`` is "scan" when a concrete abscissa was found and confirmed by
    the oracle (then ``x`` holds it), or "asymptotic" when the violation
    only manifests in a series/limit coefficient (then ``x`` is None).
    """

    mode: str
    x: Optional[float]
    detail: str


def _perturbed_triple(which: str, component: int, epsilon: float) -> ShaferCoefficients:
    base = (
        BoundKind.SHARP_LOWER if which == "lower" else BoundKind.SHARP_UPPER
    ).coefficients()
    factor = (1.0 - epsilon) if which == "lower" else (1.0 + epsilon)
    values = [base.c1, base.c2, base.c3]
    values[component - 1] *= factor
    return ShaferCoefficients(*values)


def _chain_witness(
    sign: float,
    region: str,
    rows: list[tuple[str, float, float]],
) -> Optional[SharpnessWitness]:
    """Walk one region's coefficient chain in dominance order.

    The first coefficient that differs from arctan's decides the sign of
    the gap in that region: on the invalid side it is a witness, on the
    valid side the deeper rungs are irrelevant there and the chain stops.
    """
    tol = 1e-9
    for label, measured, target in rows:
        scale = max(abs(target), 1.0)
        diff = measured - target
        if sign * diff > tol * scale:
            side = "exceeds" if sign > 0 else "falls below"
            return SharpnessWitness(
                mode="asymptotic",
                x=None,
                detail=(
                    f"{label} = {measured!r} {side} the arctan value "
                    f"{target!r} as {region}, so the perturbed bound "
                    f"crosses arctan in that limit"
                ),
            )
        if abs(diff) > tol * scale:
            return None
    return None


def _asymptotic_witness(
    which: str, perturbed: ShaferCoefficients
) -> Optional[SharpnessWitness]:
    """Compare perturbed series/limit coefficients against arctan's.

    Two independent dominance chains are examined: (b0, b1) for x -> inf
    and (a1, a3, a5) for x -> 0.  A "lower" violation means a perturbed
    coefficient exceeds arctan's where the leading difference decides the
    gap; an "upper" violation means it falls below (the sign flip).
    """
    ref = series_coefficients("reference")
    a_ref = ref.taylor
    b_ref = ref.asymptotic
    a_pert = _generic_taylor(perturbed)
    b_pert = _generic_asymptotic(perturbed)
    sign = 1.0 if which == "lower" else -1.0
    witness = _chain_witness(
        sign,
        "x -> inf",
        [
            ("limit coefficient b0", b_pert[0], b_ref[0]),
            ("asymptotic coefficient b1", b_pert[1], b_ref[1]),
        ],
    )
    if witness is not None:
        return witness
    return _chain_witness(
        sign,
        "x -> 0",
        [
            ("taylor coefficient a1", a_pert[0], a_ref[0]),
            ("taylor coefficient a3", a_pert[1], a_ref[1]),
            ("taylor coefficient a5", a_pert[2], a_ref[2]),
        ],
    )


def probe_sharpness(
    which: str,
    component: int,
    epsilon: float,
    scan_points: int = 100_000,
    oracle_digits: int = ORACLE_DPS,
) -> Optional[SharpnessWitness]:
    """Try to break the ordering after nudging one coefficient.

    For the lower triple the chosen component is shrunk by (1 - epsilon);
    for the upper triple it is grown by (1 + epsilon).  A vectorized
    screen over ``scan_points`` log-uniform abscissas in [1e-6, 1e6]
    proposes violation candidates, each confirmed against the oracle
    before being returned; if the scan stays clean, the series/limit
    coefficient ladder is compared instead (violations can hide beyond
    any finite scan, at x -> 0 or x -> inf).  Returns None when no
    witness exists at this epsilon; epsilon = 0 (the unperturbed triple)
    is allowed and yields None.
    """
    _require_side(which)
    if component not in (1, 2, 3):
        raise ValueError(f"component must be 1, 2 or 3, got {component!r}")
    if not (isinstance(epsilon, (int, float)) and math.isfinite(epsilon) and epsilon >= 0.0):
        raise ValueError(f"epsilon must be a finite real >= 0, got {epsilon!r}")
    if oracle_digits < 50:
        raise ValueError(f"oracle_digits must be >= 50, got {oracle_digits}")
    perturbed = _perturbed_triple(which, component, epsilon)

    xs = np.geomspace(1e-6, 1e6, scan_points)
    stem = np.sqrt(perturbed.c2 + perturbed.c3 * xs * xs)
    vals = xs / (perturbed.c1 + stem)
    g_vals = np.arctan(xs)
    if which == "lower":
        excess = vals - g_vals * (1.0 + CERTIFICATION_MARGIN)
    else:
        excess = g_vals * (1.0 - CERTIFICATION_MARGIN) - vals
    candidates = np.flatnonzero(excess > 0.0)
    if candidates.size:
        order = candidates[np.argsort(excess[candidates])[::-1][:8]]
        with mpmath.workdps(oracle_digits):
            for idx in order:
                x = float(xs[idx])
                value = eval_shafer(perturbed, x)
                g_val = mpmath.atan(mpmath.mpf(x))
                gap = (
                    float(value - g_val) if which == "lower" else float(g_val - value)
                )
                if gap > 0.0:
                    side = "exceeds arctan" if which == "lower" else "falls below arctan"
                    return SharpnessWitness(
                        mode="scan",
                        x=x,
                        detail=(
                            f"perturbed {which} bound {side} at x = {x!r} "
                            f"by {gap!r} (oracle-confirmed)"
                        ),
                    )
    return _asymptotic_witness(which, perturbed)


# ---------------------------------------------------------------------------
# series verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SeriesCheck:
    """One measured-versus-tabulated series coefficient."""

    order: str
    expected: float
    measured: float
    relative_gap: float


def _quad_extrapolate(ts: tuple[float, float, float], ms: tuple[float, float, float]) -> float:
    """Value at t = 0 of the quadratic through three (t, m) nodes."""
    d01 = (ms[1] - ms[0]) / (ts[1] - ts[0])
    d12 = (ms[2] - ms[1]) / (ts[2] - ts[1])
    d012 = (d12 - d01) / (ts[2] - ts[0])
    return ms[0] - d01 * ts[0] + d012 * ts[0] * ts[1]


_SERIES_EVALUATORS: dict[str, Callable[[float], float]] = {
    "lower": lower_bound,
    "upper": upper_bound,
    "reference": math.atan,
}


def verify_series(kind: Union[BoundKind, str]) -> list[SeriesCheck]:
    """Measure series coefficients from evaluations and compare to the table.

    Taylor coefficients are extracted by quadratic extrapolation in
    t = x^2 at x in {1e-2, 5e-3, 2.5e-3}, asymptotic coefficients in
    u = 1/x at x in {1e3, 2e3, 4e3}; each extraction peels the previously
    tabulated terms.  Returns six rows (a1, a3, a5, b0, b1 and the
    asymptotic tail); tabulated agreement is 1e-4 relative or better.
    """
    table = series_coefficients(kind)
    if kind is BoundKind.SHARP_LOWER:
        key = "lower"
    elif kind is BoundKind.SHARP_UPPER:
        key = "upper"
    else:
        key = str(kind if isinstance(kind, str) else kind.value)
    evaluate = _SERIES_EVALUATORS[key]
    a1, a3, a5 = table.taylor
    b0, b1, b_tail = table.asymptotic
    tail_power = table.asymptotic_tail_power

    xs_small = (1e-2, 5e-3, 2.5e-3)
    ts = tuple(x * x for x in xs_small)
    vals_small = tuple(evaluate(x) for x in xs_small)
    a1_meas = _quad_extrapolate(ts, tuple(v / x for v, x in zip(vals_small, xs_small)))
    a3_meas = _quad_extrapolate(
        ts, tuple((v - a1 * x) / x**3 for v, x in zip(vals_small, xs_small))
    )
    a5_meas = _quad_extrapolate(
        ts,
        tuple((v - a1 * x - a3 * x**3) / x**5 for v, x in zip(vals_small, xs_small)),
    )

    xs_large = (1e3, 2e3, 4e3)
    us = tuple(1.0 / x for x in xs_large)
    vals_large = tuple(evaluate(x) for x in xs_large)
    b0_meas = _quad_extrapolate(us, vals_large)
    b1_meas = _quad_extrapolate(
        us, tuple((v - b0) * x for v, x in zip(vals_large, xs_large))
    )
    tail_meas = _quad_extrapolate(
        us,
        tuple((v - b0 - b1 / x) * x**tail_power for v, x in zip(vals_large, xs_large)),
    )

    rows = []
    pairs = [
        ("a1", a1, a1_meas),
        ("a3", a3, a3_meas),
        ("a5", a5, a5_meas),
        ("b0", b0, b0_meas),
        ("b1", b1, b1_meas),
        (f"b{tail_power}", b_tail, tail_meas),
    ]
    for order, expected, measured in pairs:
        gap = abs(measured - expected) / abs(expected)
        rows.append(SeriesCheck(order=order, expected=expected, measured=measured, relative_gap=gap))
    return rows


# ---------------------------------------------------------------------------
# shape verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ShapeReport:
    """Pass/fail detail of the monotonicity/concavity/critical-point checks.

    The gap fields are None for kinds whose gap against arctan has no
    tabulated closed-form critical point (classic and custom triples).
    """

    kind: str
    samples_per_sign: int
    monotonic: bool
    increasing: bool
    concavity_ok: bool
    gap_sign_changes: Optional[int]
    gap_critical_point: Optional[float]
    gap_closed_form: Optional[float]
    gap_location_gap: Optional[float]

    @property
    def passed(self) -> bool:
        core = self.monotonic and self.increasing and self.concavity_ok
        if self.gap_sign_changes is None:
            return core
        return (
            core
            and self.gap_sign_changes == 1
            and self.gap_location_gap is not None
            and self.gap_location_gap < 1e-6
        )


def _bisect_root(fn: Callable[[float], float], a: float, b: float) -> float:
    """Bisection root of a sign change of fn on [a, b]."""
    fa = fn(a)
    for _ in range(200):
        if (b - a) <= 1e-12 * max(1.0, abs(a)):
            break
        mid = 0.5 * (a + b)
        fm = fn(mid)
        if (fa > 0.0) == (fm > 0.0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def verify_shape_properties(kind: Union[BoundKind, ShaferCoefficients], n: int) -> ShapeReport:
    """Check monotonicity, concavity sign, and the gap's single critical point.

    Over ``n`` log-spaced magnitudes per sign in [1e-6, 1e6]: the first
    derivative must be positive everywhere (including 0), evaluations must
    strictly increase, and the second derivative's sign must equal
    -sign(x).  For the two sharp kinds the derivative of the gap against
    arctan is additionally scanned on [1e-2, 1e6] (below 1e-2 the gap
    derivative sits under double-precision noise), must change sign
    exactly once, and the bisected location must sit within 1e-6 of the
    tabulated closed form.
    """
    if n < 2:
        raise ValueError(f"need n >= 2 sample points, got {n}")
    coeffs = _resolve_coefficients(kind)
    label = kind.value if isinstance(kind, BoundKind) else "custom"

    mags = np.geomspace(1e-6, 1e6, n)
    xs = np.concatenate((-mags[::-1], [0.0], mags))
    monotonic = all(first_derivative(coeffs, float(x)) > 0.0 for x in xs)
    values = [eval_shafer(coeffs, float(x)) for x in xs]
    increasing = all(v1 < v2 for v1, v2 in zip(values, values[1:]))
    concavity_ok = True
    for x in xs:
        x = float(x)
        if x == 0.0:
            continue
        d2 = second_derivative(coeffs, x)
        if math.copysign(1.0, x) * d2 >= 0.0:
            concavity_ok = False
            break

    sign_changes: Optional[int] = None
    located: Optional[float] = None
    closed: Optional[float] = None
    location_gap: Optional[float] = None
    if kind in (BoundKind.SHARP_LOWER, BoundKind.SHARP_UPPER):
        side = "lower" if kind is BoundKind.SHARP_LOWER else "upper"

        if side == "lower":
            def gap_slope(x: float) -> float:
                return 1.0 / (1.0 + x * x) - first_derivative(coeffs, x)
        else:
            def gap_slope(x: float) -> float:
                return first_derivative(coeffs, x) - 1.0 / (1.0 + x * x)

        scan = np.geomspace(1e-2, 1e6, max(n, 64))
        slopes = [gap_slope(float(x)) for x in scan]
        sign_changes = 0
        bracket: Optional[tuple[float, float]] = None
        for i in range(1, len(scan)):
            if (slopes[i - 1] > 0.0) != (slopes[i] > 0.0):
                sign_changes += 1
                if bracket is None:
                    bracket = (float(scan[i - 1]), float(scan[i]))
        closed = critical_points_delta(side)[2]
        if bracket is not None:
            located = _bisect_root(gap_slope, *bracket)
            location_gap = abs(located - closed)

    return ShapeReport(
        kind=label,
        samples_per_sign=n,
        monotonic=monotonic,
        increasing=increasing,
        concavity_ok=concavity_ok,
        gap_sign_changes=sign_changes,
        gap_critical_point=located,
        gap_closed_form=closed,
        gap_location_gap=location_gap,
    )
