"""Fast certified approximation kernels built on the sharp bounds.

Each kernel returns a :class:`CertifiedValue`: the approximation together
with a self-contained error certificate computed from the two bounds
alone, never from arctan.  The certificate is a hard ceiling: the true
relative error against a correctly rounded arctan stays below it (the
test suite measures this against a 50-digit oracle).
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .bounds import UNIT_ROUNDOFF, lower_bound, upper_bound

__all__ = ["CertifiedValue", "midpoint_arctan", "atan2_approx"]

_FOUR_U = 4.0 * UNIT_ROUNDOFF
_PI = math.pi
_PI_HALF = math.pi / 2.0

#: Below this angle magnitude the certificate switches from relative to
#: absolute form (a relative bound would divide by a vanishing angle).
_ABSOLUTE_MODE_CUTOFF = 1e-300

#: Absolute slack covering subnormal quantization of the reduced ratio.
_SUBNORMAL_SLACK = 1e-320


class CertifiedValue(NamedTuple):
    """An approximation plus its self-contained error ceiling.

    ``max_relative_error`` is relative to the true value, except for
    atan2 results with |value| < 1e-300 where it is an absolute bound
    (documented switch; a relative bound would blow up near the branch
    point at angle 0).
    """

    value: float
    max_relative_error: float


def midpoint_arctan(x: float) -> CertifiedValue:
    """Arctan approximation at the midpoint of the two sharp bounds.

    value = (lower_bound(x) + upper_bound(x)) / 2.  Since the truth lies
    between the bounds, the midpoint is off by at most half the bracket
    width, so (upper - lower) / (2 * lower) bounds the relative error for
    x != 0 (the smallest possible truth is the lower bound); four units
    of round-off are added to absorb the bounds' own evaluation noise.
    The certificate never exceeds the recorded global envelope maximum.
    +-inf maps to +-pi/2 with certificate 0; NaN propagates with a NaN
    certificate.
    """
    if math.isnan(x):
        return CertifiedValue(x, x)
    if math.isinf(x):
        return CertifiedValue(math.copysign(_PI_HALF, x), 0.0)
    if x == 0.0:
        return CertifiedValue(x, 0.0)
    ax = abs(x)
    f_val = lower_bound(ax)
    h_val = upper_bound(ax)
    value = math.copysign(0.5 * (f_val + h_val), x)
    gap = h_val - f_val
    if gap < 0.0:
        gap = 0.0
    return CertifiedValue(value, gap / (2.0 * f_val) + _FOUR_U)


def atan2_approx(y: float, x: float) -> CertifiedValue:
    """Quadrant-resolved angle of the point (x, y), certified.

    The finite nonzero path reduces to a single :func:`midpoint_arctan`
    call on the ratio min(|y|,|x|) / max(|y|,|x|), which always lies in
    [0, 1], then reassembles the quadrant with pi/2 and pi.  Axis and
    infinity inputs return the platform's exact conventional values
    (0, +-pi/2, +-pi, +-pi/4 multiples) with certificate 0; (0, 0) raises
    ValueError; NaN propagates.  The result is sign-symmetric in y away
    from the branch cut.

    Certificate accounting: the reduced-argument certificate is inflated
    by 1% (covering its normalization against the true reduced angle) and
    each pi-scale reassembly step adds an absolute pi-scale round-off
    allowance before the total is re-expressed relative to the full
    angle.  For |angle| < 1e-300 the error field stays absolute.
    """
    if math.isnan(y) or math.isnan(x):
        nan = math.nan
        return CertifiedValue(nan, nan)
    if y == 0.0 and x == 0.0:
        raise ValueError("atan2_approx is undefined at the origin (0, 0)")
    if y == 0.0 or x == 0.0 or math.isinf(y) or math.isinf(x):
        # Enumerated axis/infinity contract: the platform values are the
        # exact conventional constants for every one of these cases.
        return CertifiedValue(math.atan2(y, x), 0.0)

    ay = abs(y)
    ax = abs(x)
    slop = 0.0
    if ay <= ax:
        reduced = ay / ax
        mv, er = midpoint_arctan(reduced)
        base = mv
    else:
        reduced = ax / ay
        mv, er = midpoint_arctan(reduced)
        base = _PI_HALF - mv
        slop += _PI * UNIT_ROUNDOFF
    if x < 0.0:
        base = _PI - base
        slop += 2.0 * _PI * UNIT_ROUNDOFF
    angle = math.copysign(base, y)
    abs_err = er * mv * 1.01 + slop
    if abs(angle) < _ABSOLUTE_MODE_CUTOFF:
        return CertifiedValue(angle, abs_err + _SUBNORMAL_SLACK)
    return CertifiedValue(angle, abs_err / abs(angle) + _FOUR_U)
