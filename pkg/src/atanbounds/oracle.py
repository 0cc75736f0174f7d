"""Arbitrary-precision ground truth for certification.

The library's own :func:`atanbounds.bounds.reference_arctan` delegates to
the platform function; certification must not trust the thing it is
certifying, so every margin in this package is measured against mpmath
evaluated at :data:`ORACLE_DPS` decimal digits (>= 50 by default, far
beyond double precision).
"""

from __future__ import annotations

import mpmath

__all__ = ["ORACLE_DPS", "atan_oracle", "atan2_oracle"]

#: Decimal digits carried by the certification oracle.
ORACLE_DPS = 50


def atan_oracle(x: float, digits: int = ORACLE_DPS) -> mpmath.mpf:
    """arctan(x) to ``digits`` decimal digits (input converted exactly)."""
    with mpmath.workdps(digits):
        return mpmath.atan(mpmath.mpf(x))


def atan2_oracle(y: float, x: float, digits: int = ORACLE_DPS) -> mpmath.mpf:
    """atan2(y, x) to ``digits`` decimal digits (inputs converted exactly)."""
    with mpmath.workdps(digits):
        return mpmath.atan2(mpmath.mpf(y), mpmath.mpf(x))
