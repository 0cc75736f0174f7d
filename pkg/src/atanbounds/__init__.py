"""Certified two-sided algebraic bounds for the inverse tangent.

The package provides a pair of sharp closed-form bounds enclosing
arctan, fast certified approximation kernels built on them, closed-form
relative-error envelopes that never evaluate arctan, and a verification
layer that certifies every guarantee against an arbitrary-precision
oracle.  All public functions are pure and thread-safe.
"""

from .bounds import (
    ENVELOPE_MAX_SUP,
    UNIT_ROUNDOFF,
    BoundKind,
    EvaluationSample,
    SeriesCoefficients,
    ShaferCoefficients,
    critical_points_delta,
    delta_f,
    delta_h,
    discriminant_values,
    envelope_max,
    envelope_min,
    eval_shafer,
    evaluate_sample,
    first_derivative,
    lower_bound,
    pi_squared_bounds,
    reference_arctan,
    relative_error,
    second_derivative,
    series_coefficients,
    upper_bound,
)
from .certify import (
    CERTIFICATION_MARGIN,
    CertificationReport,
    GridKind,
    SeriesCheck,
    ShapeReport,
    SharpnessWitness,
    build_grid,
    certify_range,
    find_max_relative_error,
    probe_sharpness,
    verify_series,
    verify_shape_properties,
)
from .kernels import CertifiedValue, atan2_approx, midpoint_arctan
from .oracle import ORACLE_DPS, atan2_oracle, atan_oracle

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "UNIT_ROUNDOFF",
    "ENVELOPE_MAX_SUP",
    "CERTIFICATION_MARGIN",
    "ORACLE_DPS",
    "ShaferCoefficients",
    "BoundKind",
    "SeriesCoefficients",
    "EvaluationSample",
    "CertificationReport",
    "GridKind",
    "SharpnessWitness",
    "SeriesCheck",
    "ShapeReport",
    "CertifiedValue",
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
    "build_grid",
    "certify_range",
    "find_max_relative_error",
    "probe_sharpness",
    "verify_series",
    "verify_shape_properties",
    "midpoint_arctan",
    "atan2_approx",
    "atan_oracle",
    "atan2_oracle",
]
