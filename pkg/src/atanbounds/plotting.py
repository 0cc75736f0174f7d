"""Figure rendering for sweep output.

Matplotlib is imported lazily inside the render call so that library
users who never plot pay no import cost; the Agg backend keeps rendering
headless-safe.  Figures are written as self-contained vector files (the
format follows the output path's extension; the CLI uses SVG).
"""

from __future__ import annotations

from typing import Sequence

from .bounds import EvaluationSample

__all__ = ["render_sweep_figure"]


def render_sweep_figure(samples: Sequence[EvaluationSample], path: str) -> None:
    """Render the curve overlay and the error curves for one sweep.

    Top panel: lower bound, arctan, upper bound (visually near-coincident
    by design, hence distinct line styles).  Bottom panel: both relative
    errors and both arctan-free envelopes.  The x axis switches to log
    scale when all abscissas are positive and span at least two decades.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [s.x for s in samples]
    fig, (ax_curves, ax_errors) = plt.subplots(
        2, 1, sharex=True, figsize=(8.0, 8.0), constrained_layout=True
    )

    ax_curves.plot(xs, [s.f_val for s in samples], "-", label="lower bound", linewidth=1.0)
    ax_curves.plot(xs, [s.g_val for s in samples], "--", label="arctan", linewidth=1.0)
    ax_curves.plot(xs, [s.h_val for s in samples], ":", label="upper bound", linewidth=1.4)
    ax_curves.set_ylabel("radians")
    ax_curves.legend(loc="best")
    ax_curves.grid(True, alpha=0.3)

    ax_errors.plot(xs, [s.r_f for s in samples], "-", label="relative error, lower")
    ax_errors.plot(xs, [s.r_h for s in samples], "--", label="relative error, upper")
    ax_errors.plot(xs, [s.env_max for s in samples], "-.", label="envelope max")
    ax_errors.plot(xs, [s.env_min for s in samples], ":", label="envelope min")
    ax_errors.set_xlabel("x")
    ax_errors.set_ylabel("relative error")
    ax_errors.legend(loc="best")
    ax_errors.grid(True, alpha=0.3)

    positive = [v for v in xs if v > 0.0]
    if positive and len(positive) == len(xs) and max(positive) / min(positive) >= 100.0:
        ax_errors.set_xscale("log")

    fig.savefig(path)
    plt.close(fig)
