"""Closed-form algebraic bounds for the inverse tangent.

Everything here revolves around the bound family

    S(x) = x / (c1 + sqrt(c2 + c3 * x**2)),   c1, c2, c3 > 0,

which is odd, strictly increasing, concave on x >= 0, and saturates at
1/sqrt(c3) as x -> +inf.  Two built-in coefficient triples make the family
a certified two-sided approximation of arctan:

* the sharp lower triple  (4/pi^2, (1 - 4/pi^2)^2, 4/pi^2), whose value
  never exceeds |arctan(x)| in magnitude, and
* the sharp upper triple  (1 - 6/pi^2, (6/pi^2)^2, 4/pi^2), whose value
  never falls below it.

Both triples are extremal: shrinking any component of the lower triple or
growing any component of the upper triple breaks the ordering somewhere
(see the sharpness probe in the certification module).

The module also provides the first two derivatives of the family, the
signed gaps against arctan with their closed-form critical points, the
relative errors of the two bounds, and two closed-form error envelopes
that bracket the relative errors without ever evaluating arctan.

All functions are pure and thread-safe; module constants are immutable
after import.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from typing import NamedTuple, Union

__all__ = [
    "UNIT_ROUNDOFF",
    "ENVELOPE_MAX_SUP",
    "ShaferCoefficients",
    "BoundKind",
    "SeriesCoefficients",
    "EvaluationSample",
    "eval_shafer",
    "lower_bound",
    "upper_bound",
    "reference_arctan",
    "first_derivative",
    "second_derivative",
    "delta_f",
    "delta_h",
    "critical_points_delta",
    "relative_error",
    "envelope_max",
    "envelope_min",
    "series_coefficients",
    "pi_squared_bounds",
    "discriminant_values",
    "evaluate_sample",
]

# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

#: Unit round-off of binary64 (half the spacing of doubles in [1, 2)).
UNIT_ROUNDOFF = 2.0 ** -53

_PI = math.pi
_PI_HALF = math.pi / 2.0
_TINY = sys.float_info.min  # smallest positive normal magnitude

# Derived constants are precomputed with a single rounding each: every
# literal below is the nearest double to the exact real value it names
# (computed once with a 60-digit evaluation, then frozen).
_C3 = 0.4052847345693511           # 4 / pi^2, shared by both sharp triples
_C1_LOWER = 0.4052847345693511     # 4 / pi^2
_C2_LOWER = 0.3536862469362472     # (1 - 4/pi^2)^2
_C1_UPPER = 0.39207289814597335    # 1 - 6/pi^2
_C2_UPPER = 0.36957536116863604    # (6/pi^2)^2

_PI_SQ = 9.869604401089358         # pi^2
_TEN_MINUS_PI_SQ = 0.13039559891064137   # 10 - pi^2
_PI_SQ_PLUS_2 = 11.869604401089358       # pi^2 + 2
_PI_SQ_MINUS_2 = 7.869604401089359       # pi^2 - 2
_PI_SQ_MINUS_4 = 5.869604401089359       # pi^2 - 4
_PI_SQ_MINUS_6 = 3.8696044010893584      # pi^2 - 6
_PI_SQ_MINUS_4_SQ = 34.452255825287565   # (pi^2 - 4)^2
_FOUR_PI_SQ = 39.47841760435743          # 4 * pi^2
_QUARTIC_LOWER = 2.452255825287568       # pi^4 - 8*pi^2 - 16

_A3_LOWER = -0.3407384660589415    # -2 / (pi^2 - 4)
_A5_LOWER = 0.2137147100490134     # 2 * (3*pi^2 - 8) / (pi^2 - 4)^3
_A5_UPPER = 0.2024963370471237     # (pi^2 + 12) / 108
_B1_UPPER = -0.9674011002723396    # -(pi^2 - 6) / 4
_B2_LOWER = -0.04878607954005147   # -(pi^4 - 8*pi^2 - 16) / (16*pi)
_B2_UPPER = -0.12040715143368333   # (pi^4 - 12*pi^2 + 18) / (8*pi)

#: Recorded global maximum of :func:`envelope_max` (regression baseline,
#: located numerically near x = 1.9454258387858252).  The certified error
#: field of every kernel stays below this ceiling.
ENVELOPE_MAX_SUP = 0.004200082824874118


def _overflow_guard(c3: float) -> float:
    """Largest |x| safely squared inside sqrt(c2 + c3*x^2).

    Above this threshold the evaluators switch to a rewrite that never
    forms x**2.  Computed as sqrt(max_finite)/sqrt(c3)/2 so that the
    guard itself cannot overflow for c3 < 1.
    """
    return math.sqrt(sys.float_info.max) / math.sqrt(c3) / 2.0


_GUARD_SHARP = _overflow_guard(_C3)


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ShaferCoefficients:
    """Coefficient triple (c1, c2, c3) of the bound family.

    All three components must be strictly positive finite reals; the
    monotonicity and concavity guarantees depend on positivity.
    """

    c1: float
    c2: float
    c3: float

    def __post_init__(self) -> None:
        for name in ("c1", "c2", "c3"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0.0):
                raise ValueError(
                    f"{name} must be a strictly positive finite real, got {value!r}"
                )


class BoundKind(enum.Enum):
    """Named members of the bound family.

    CUSTOM is a tag for user-supplied triples; it carries no coefficients
    itself (pass a :class:`ShaferCoefficients` instance directly to the
    operations that accept one).
    """

    SHARP_LOWER = "sharp-lower"
    SHARP_UPPER = "sharp-upper"
    CLASSIC_SHAFER = "classic-shafer"
    CUSTOM = "custom"

    def coefficients(self) -> ShaferCoefficients:
        """Resolve the member to its coefficient triple."""
        if self is BoundKind.SHARP_LOWER:
            return ShaferCoefficients(_C1_LOWER, _C2_LOWER, _C3)
        if self is BoundKind.SHARP_UPPER:
            return ShaferCoefficients(_C1_UPPER, _C2_UPPER, _C3)
        if self is BoundKind.CLASSIC_SHAFER:
            # 3x / (1 + 2*sqrt(1 + x^2)) divided through by 3.
            return ShaferCoefficients(1.0 / 3.0, 4.0 / 9.0, 4.0 / 9.0)
        raise ValueError("BoundKind.CUSTOM carries no fixed coefficients")


class SeriesCoefficients(NamedTuple):
    """Tabulated series data of one family member (or of arctan itself).

    ``taylor`` holds the coefficients (a1, a3, a5) of x, x^3, x^5 around 0.
    ``asymptotic`` holds (b0, b1, b_tail) where b0 and b1 multiply 1 and
    1/x, and b_tail multiplies x**(-asymptotic_tail_power): the bounds have
    a nonzero 1/x^2 term (tail power 2), while arctan's 1/x^2 term vanishes
    and its tabulated tail is the 1/x^3 coefficient (tail power 3).
    """

    taylor: tuple[float, float, float]
    asymptotic: tuple[float, float, float]
    asymptotic_tail_power: int


@dataclass(frozen=True, slots=True)
class EvaluationSample:
    """All per-point quantities at one abscissa.

    For x >= 0 the invariants f_val <= g_val <= h_val and
    delta_f, delta_h >= 0 hold up to evaluation round-off.
    """

    x: float
    f_val: float
    g_val: float
    h_val: float
    delta_f: float
    delta_h: float
    r_f: float
    r_h: float
    env_max: float
    env_min: float


KindLike = Union[BoundKind, ShaferCoefficients]


def _resolve_coefficients(kind: KindLike) -> ShaferCoefficients:
    if isinstance(kind, ShaferCoefficients):
        return kind
    if isinstance(kind, BoundKind):
        return kind.coefficients()
    raise TypeError(f"expected BoundKind or ShaferCoefficients, got {type(kind).__name__}")


def _require_side(kind: str) -> str:
    if kind not in ("lower", "upper"):
        raise ValueError(f"kind must be 'lower' or 'upper', got {kind!r}")
    return kind


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def _eval_triple(c1: float, c2: float, c3: float, guard: float, x: float) -> float:
    """Evaluate x / (c1 + sqrt(c2 + c3*x^2)) for one unpacked triple.

    Works on |x| and restores the sign with copysign, which makes the odd
    symmetry bit-exact.  Above the overflow guard the expression is
    rewritten as 1 / (c1/|x| + sqrt((c2/|x|)/|x| + c3)) so no intermediate
    ever overflows; +-inf maps to the saturation value +-1/sqrt(c3).
    """
    if math.isnan(x):
        return x
    ax = abs(x)
    if ax > guard:
        if math.isinf(ax):
            return math.copysign(1.0 / math.sqrt(c3), x)
        return math.copysign(1.0 / (c1 / ax + math.sqrt((c2 / ax) / ax + c3)), x)
    return math.copysign(ax / (c1 + math.sqrt(c2 + c3 * ax * ax)), x)


def eval_shafer(c: ShaferCoefficients, x: float) -> float:
    """Evaluate the bound family at x for an arbitrary valid triple."""
    return _eval_triple(c.c1, c.c2, c.c3, _overflow_guard(c.c3), x)


def lower_bound(x: float) -> float:
    """Sharp algebraic lower bound: |lower_bound(x)| <= |arctan(x)|."""
    return _eval_triple(_C1_LOWER, _C2_LOWER, _C3, _GUARD_SHARP, x)


def upper_bound(x: float) -> float:
    """Sharp algebraic upper bound: |upper_bound(x)| >= |arctan(x)|."""
    return _eval_triple(_C1_UPPER, _C2_UPPER, _C3, _GUARD_SHARP, x)


def reference_arctan(x: float) -> float:
    """The platform inverse tangent (test suites use a software oracle)."""
    return math.atan(x)


# ---------------------------------------------------------------------------
# derivatives
# ---------------------------------------------------------------------------


def _stem(c2: float, c3: float, guard: float, ax: float) -> float:
    """sqrt(c2 + c3*ax^2) without intermediate overflow (ax = |x|)."""
    if ax > guard:
        return ax * math.sqrt(c3 + (c2 / ax) / ax)
    return math.sqrt(c2 + c3 * ax * ax)


def first_derivative(c: KindLike, x: float) -> float:
    """Derivative of the family: (c2 + c1*s) / (s*(c1 + s)^2), s = sqrt(c2 + c3*x^2).

    Strictly positive for all finite x (the family is strictly increasing);
    underflows gracefully to 0 for astronomically large |x|.
    """
    coeffs = _resolve_coefficients(c)
    if math.isnan(x):
        return x
    if math.isinf(x):
        return 0.0
    if x == 0.0:
        # At 0 the quotient collapses algebraically to 1/(c1 + sqrt(c2)),
        # which both sharp triples evaluate to exactly 1.
        return 1.0 / (coeffs.c1 + math.sqrt(coeffs.c2))
    ax = abs(x)
    s = _stem(coeffs.c2, coeffs.c3, _overflow_guard(coeffs.c3), ax)
    d = coeffs.c1 + s
    # Staged divisions keep d*d from overflowing before the quotient forms.
    return (coeffs.c2 / s + coeffs.c1) / d / d


def second_derivative(c: KindLike, x: float) -> float:
    """Second derivative of the family; its sign equals -sign(x).

    Closed form -c3*x*(3*c1*c2 + 2*c1*c3*x^2 + 3*c2*s) / (s^3 * (c1 + s)^3)
    with s = sqrt(c2 + c3*x^2), evaluated in a staged arrangement that
    avoids forming x^2 or s^3 directly so very large |x| underflows to 0
    instead of producing inf/inf.
    """
    coeffs = _resolve_coefficients(c)
    if math.isnan(x):
        return x
    if math.isinf(x):
        return math.copysign(0.0, -x)
    ax = abs(x)
    s = _stem(coeffs.c2, coeffs.c3, _overflow_guard(coeffs.c3), ax)
    d = coeffs.c1 + s
    m = coeffs.c3 * x / s
    n = 2.0 * coeffs.c1 + (coeffs.c1 * coeffs.c2 / s + 3.0 * coeffs.c2) / s
    return -(m * n) / d / d / d


# ---------------------------------------------------------------------------
# gaps against arctan and their critical points
# ---------------------------------------------------------------------------


def delta_f(x: float) -> float:
    """Signed gap arctan(x) - lower_bound(x); nonnegative for x >= 0."""
    return reference_arctan(x) - lower_bound(x)


def delta_h(x: float) -> float:
    """Signed gap upper_bound(x) - arctan(x); nonnegative for x >= 0."""
    return upper_bound(x) - reference_arctan(x)


def _discriminant_lower(nu: float) -> float:
    """-2*nu^4 + 36*nu^2 - 160, evaluated via the factored form 2*(nu^2-8)*(10-nu^2)."""
    t = nu * nu
    return 2.0 * (t - 8.0) * (10.0 - t)


def _discriminant_upper(nu: float) -> float:
    """-5*nu^4 + 108*nu^2 - 576, evaluated via the factored form (5*nu^2-48)*(12-nu^2)."""
    t = nu * nu
    return (5.0 * t - 48.0) * (12.0 - t)


def critical_points_delta(kind: str) -> tuple[float, float, float]:
    """The three real roots of d(gap)/dx, in increasing order.

    ``kind`` selects the gap: "LowerDiff" (alias "lower") for
    arctan - lower_bound, "UpperDiff" (alias "upper") for
    upper_bound - arctan.  Each gap's derivative vanishes exactly at
    0 and at a symmetric pair +-x*, with

        x*(lower) = (pi^2-4) * sqrt(-2*pi^4+36*pi^2-160) / (pi^4-8*pi^2-16)
        x*(upper) = sqrt(-5*pi^4+108*pi^2-576) / (pi*(10-pi^2))

    The quartic discriminants under the square roots are evaluated in
    factored form for accuracy.
    """
    kind = {"LowerDiff": "lower", "UpperDiff": "upper"}.get(kind, kind)
    _require_side(kind)
    if kind == "lower":
        x_star = _PI_SQ_MINUS_4 * math.sqrt(_discriminant_lower(_PI)) / _QUARTIC_LOWER
    else:
        x_star = math.sqrt(_discriminant_upper(_PI)) / (_PI * _TEN_MINUS_PI_SQ)
    return (-x_star, 0.0, x_star)


def discriminant_values() -> tuple[float, float]:
    """Both quartic discriminants evaluated at nu = pi; strictly positive.

    Positivity is exactly what makes the two nonzero critical points of
    the gaps real, so these two numbers certify that the gap curves have
    the documented one-bump shape on x > 0.
    """
    return (_discriminant_lower(_PI), _discriminant_upper(_PI))


def pi_squared_bounds() -> tuple[float, float]:
    """The rational enclosure (29/3, 10) of pi^2 used by the shape proofs."""
    return (29.0 / 3.0, 10.0)


# ---------------------------------------------------------------------------
# relative errors and arctan-free envelopes
# ---------------------------------------------------------------------------


def relative_error(kind: str, x: float) -> float:
    """Relative error of one bound against the platform arctan.

    For kind "lower" this is (arctan(x) - lower_bound(x)) / arctan(x); for
    "upper" it is (upper_bound(x) - arctan(x)) / arctan(x).  Even in x, with
    the removable singularity at x = 0 defined as 0, clamped to >= 0 (the
    exact value is positive away from 0; round-off may dip a hair below),
    and -> 0 as |x| -> inf.
    """
    _require_side(kind)
    if math.isnan(x):
        return x
    ax = abs(x)
    if ax < _TINY:
        return 0.0
    if math.isinf(ax):
        return 0.0
    g = math.atan(ax)
    if kind == "lower":
        r = (g - lower_bound(ax)) / g
    else:
        r = (upper_bound(ax) - g) / g
    return r if r > 0.0 else 0.0


def _envelope_pair(ax: float) -> tuple[float, float]:
    """Both envelopes at ax = |x| >= smallest normal, finite or inf."""
    a = math.sqrt(9.0 + _PI_SQ * ax * ax)
    b = math.sqrt(_PI_SQ_MINUS_4_SQ + _FOUR_PI_SQ * ax * ax)
    two_a_b = 2.0 * a + b
    # The raw numerator 10 - pi^2 - 2a + b cancels catastrophically at
    # small ax.  Using 4a^2 - b^2 = (10-pi^2)*(pi^2+2) exactly, it
    # rearranges to the stable product below (2a > b for all x).
    num = _TEN_MINUS_PI_SQ * (two_a_b - _PI_SQ_PLUS_2) / two_a_b
    e_max = num / (_PI_SQ_MINUS_6 + 2.0 * a)
    e_min = num / (_PI_SQ_MINUS_2 + two_a_b)
    return (e_max if e_max > 0.0 else 0.0, e_min if e_min > 0.0 else 0.0)


def envelope_max(x: float) -> float:
    """Arctan-free ceiling for max of the two relative errors.

    Closed form (10 - pi^2 - 2*sqrt(9+pi^2*x^2) + sqrt((pi^2-4)^2+4*pi^2*x^2))
    / (pi^2 - 6 + 2*sqrt(9+pi^2*x^2)); even, 0 at x = 0 by continuous
    extension, and decaying to 0 as |x| -> inf.  Its global maximum is
    recorded in :data:`ENVELOPE_MAX_SUP`.
    """
    if math.isnan(x):
        return x
    ax = abs(x)
    if ax < _TINY:
        return 0.0
    return _envelope_pair(ax)[0]


def envelope_min(x: float) -> float:
    """Arctan-free value pinched between the two relative errors.

    Same numerator as :func:`envelope_max` over the larger denominator
    pi^2 - 2 + 2*sqrt(9+pi^2*x^2) + sqrt((pi^2-4)^2+4*pi^2*x^2).  At every
    x it is >= min(r_f, r_h) and <= max(r_f, r_h), so together with
    :func:`envelope_max` it sandwiches the true errors without evaluating
    arctan.
    """
    if math.isnan(x):
        return x
    ax = abs(x)
    if ax < _TINY:
        return 0.0
    return _envelope_pair(ax)[1]


# ---------------------------------------------------------------------------
# tabulated series
# ---------------------------------------------------------------------------

_SERIES_TABLE = {
    "lower": SeriesCoefficients(
        taylor=(1.0, _A3_LOWER, _A5_LOWER),
        asymptotic=(_PI_HALF, -1.0, _B2_LOWER),
        asymptotic_tail_power=2,
    ),
    "upper": SeriesCoefficients(
        taylor=(1.0, -1.0 / 3.0, _A5_UPPER),
        asymptotic=(_PI_HALF, _B1_UPPER, _B2_UPPER),
        asymptotic_tail_power=2,
    ),
    "reference": SeriesCoefficients(
        taylor=(1.0, -1.0 / 3.0, 0.2),
        asymptotic=(_PI_HALF, -1.0, 1.0 / 3.0),
        asymptotic_tail_power=3,
    ),
}


def series_coefficients(kind: Union[BoundKind, str]) -> SeriesCoefficients:
    """Tabulated Taylor and asymptotic coefficients for one curve.

    Accepts BoundKind.SHARP_LOWER / SHARP_UPPER or the strings "lower",
    "upper", "reference" ("reference" meaning arctan itself).  The classic
    and custom kinds have no tabulated series and raise ValueError.
    """
    if kind is BoundKind.SHARP_LOWER:
        key = "lower"
    elif kind is BoundKind.SHARP_UPPER:
        key = "upper"
    elif isinstance(kind, BoundKind):
        raise ValueError(f"no tabulated series for {kind.value!r}")
    elif kind in _SERIES_TABLE:
        key = kind
    else:
        raise ValueError(f"kind must be 'lower', 'upper' or 'reference', got {kind!r}")
    return _SERIES_TABLE[key]


def _generic_taylor(c: ShaferCoefficients) -> tuple[float, float, float]:
    """Taylor coefficients (a1, a3, a5) of x/(c1+sqrt(c2+c3*x^2)) around 0.

    With D = c1 + sqrt(c2) and beta = c3/(2*sqrt(c2)):
    a1 = 1/D, a3 = -beta/D^2, a5 = beta^2*(1/(2*sqrt(c2)) + 1/D)/D^2.
    """
    root = math.sqrt(c.c2)
    d = c.c1 + root
    beta = c.c3 / (2.0 * root)
    a1 = 1.0 / d
    a3 = -beta / (d * d)
    a5 = beta * beta * (1.0 / (2.0 * root) + 1.0 / d) / (d * d)
    return (a1, a3, a5)


def _generic_asymptotic(c: ShaferCoefficients) -> tuple[float, float, float]:
    """Asymptotic coefficients (b0, b1, b2) of the family as x -> +inf.

    S(x) = b0 + b1/x + b2/x^2 + O(x^-3) with b0 = 1/sqrt(c3),
    b1 = -c1/c3, b2 = (c1^2 - c2/2)/(c3*sqrt(c3)).
    """
    root = math.sqrt(c.c3)
    b0 = 1.0 / root
    b1 = -c.c1 / c.c3
    b2 = (c.c1 * c.c1 - 0.5 * c.c2) / (c.c3 * root)
    return (b0, b1, b2)


# ---------------------------------------------------------------------------
# combined per-point record
# ---------------------------------------------------------------------------


def evaluate_sample(x: float) -> EvaluationSample:
    """Evaluate every per-point quantity at x in one record."""
    f_val = lower_bound(x)
    g_val = reference_arctan(x)
    h_val = upper_bound(x)
    return EvaluationSample(
        x=x,
        f_val=f_val,
        g_val=g_val,
        h_val=h_val,
        delta_f=g_val - f_val,
        delta_h=h_val - g_val,
        r_f=relative_error("lower", x),
        r_h=relative_error("upper", x),
        env_max=envelope_max(x),
        env_min=envelope_min(x),
    )
