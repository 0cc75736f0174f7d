"""Command-line front end.

Subcommands: eval, sweep, certify, maxerr, series-check, bench.  Exit
codes form a stable CI contract: 0 on success/pass, 1 on a verification
failure (failed certification, sharpness witness found, series mismatch),
2 on usage errors (bad arguments, unwritable paths).

Negative positional values: plain integers and simple decimals such as
``-10`` parse directly; scientific notation such as ``-1e6`` must follow
the conventional ``--`` separator, e.g.::

    atanbounds certify -- -1e6 1e6 100000
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from typing import Optional, Sequence

from . import bounds, certify, kernels, sampling

__all__ = ["main"]


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------


def _cmd_eval(args: argparse.Namespace) -> int:
    sample = bounds.evaluate_sample(args.x)
    fields = [
        ("x", sample.x),
        ("f", sample.f_val),
        ("g", sample.g_val),
        ("h", sample.h_val),
        ("delta_f", sample.delta_f),
        ("delta_h", sample.delta_h),
        ("r_f", sample.r_f),
        ("r_h", sample.r_h),
        ("env_max", sample.env_max),
        ("env_min", sample.env_min),
    ]
    for name, value in fields:
        print(f"{name:<8} = {value!r}")
    return 0


_SWEEP_COLUMNS = ["x", "f", "g", "h", "r_f", "r_h", "env_max", "env_min"]


def _cmd_sweep(args: argparse.Namespace) -> int:
    grid = certify.build_grid(args.lo, args.hi, args.n, args.grid)
    samples = [bounds.evaluate_sample(float(value)) for value in grid]
    with open(args.out, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(_SWEEP_COLUMNS)
        for s in samples:
            writer.writerow([
                repr(s.x), repr(s.f_val), repr(s.g_val), repr(s.h_val),
                repr(s.r_f), repr(s.r_h), repr(s.env_max), repr(s.env_min),
            ])
    print(f"wrote {len(samples)} rows to {args.out}")
    if args.plot:
        from . import plotting

        stem = args.out[: -len(".csv")] if args.out.endswith(".csv") else args.out
        figure_path = stem + ".svg"
        plotting.render_sweep_figure(samples, figure_path)
        print(f"wrote figure to {figure_path}")
    return 0


def _parse_perturb(text: str) -> tuple[str, int, float]:
    """Parse WHICH:COMPONENT:EPS with the sign convention enforced.

    Lower-triple perturbations shrink a component, so EPS must be <= 0;
    upper-triple perturbations grow one, so EPS must be >= 0.
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(
            f"--perturb expects WHICH:COMPONENT:EPS (e.g. lower:1:-1e-3), got {text!r}"
        )
    which = parts[0].strip().lower()
    if which not in ("lower", "upper"):
        raise ValueError(f"--perturb WHICH must be 'lower' or 'upper', got {parts[0]!r}")
    component = int(parts[1])
    epsilon = float(parts[2])
    if which == "lower" and epsilon > 0.0:
        raise ValueError(
            "lower-triple perturbations shrink a component: EPS must be <= 0"
        )
    if which == "upper" and epsilon < 0.0:
        raise ValueError(
            "upper-triple perturbations grow a component: EPS must be >= 0"
        )
    return which, component, abs(epsilon)


def _cmd_certify(args: argparse.Namespace) -> int:
    if args.perturb is not None:
        which, component, epsilon = _parse_perturb(args.perturb)
        witness = certify.probe_sharpness(
            which, component, epsilon, oracle_digits=args.oracle_digits
        )
        if witness is None:
            print(
                f"no violation witness: {which} triple, component {component}, "
                f"epsilon {epsilon!r}"
            )
            return 0
        location = (
            f"x = {witness.x!r}" if witness.x is not None else "a series/limit coefficient"
        )
        print(f"violation witness ({witness.mode}) at {location}")
        print(f"  {witness.detail}")
        return 1
    report = certify.certify_range(
        args.lo, args.hi, args.n, grid=args.grid, oracle_digits=args.oracle_digits
    )
    print(report.to_text())
    if args.out is not None:
        with open(args.out, "w", newline="") as handle:
            handle.write(report.to_csv())
        print(f"wrote report CSV to {args.out}")
    return 0 if report.passed else 1


def _cmd_maxerr(args: argparse.Namespace) -> int:
    x_star, r_star = certify.find_max_relative_error(
        args.kind, scan_points=args.scan_points, oracle_digits=args.oracle_digits
    )
    print(f"kind     = {args.kind}")
    print(f"x_star   = {x_star!r}")
    print(f"r_star   = {r_star!r}")
    print(f"envelope_max(x_star) = {bounds.envelope_max(x_star)!r}")
    return 0


def _cmd_series_check(args: argparse.Namespace) -> int:
    kinds = [args.kind] if args.kind else ["lower", "upper", "reference"]
    worst = 0.0
    for kind in kinds:
        for row in certify.verify_series(kind):
            print(
                f"{kind:<10} {row.order:<3} expected {row.expected!r:<24} "
                f"measured {row.measured!r:<24} rel gap {row.relative_gap:.3e}"
            )
            worst = max(worst, row.relative_gap)
    print(f"worst relative gap = {worst:.3e}")
    return 0 if worst < 1e-4 else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise ValueError(f"bench needs n >= 1, got {args.n}")
    values = sampling.log_uniform_signed(args.n, args.seed)
    targets = [
        ("lower_bound", bounds.lower_bound, False),
        ("upper_bound", bounds.upper_bound, False),
        ("midpoint_arctan", kernels.midpoint_arctan, True),
        ("math.atan", math.atan, False),
    ]
    print(f"benchmark: n = {args.n}, seed = {args.seed}")
    print(f"{'function':<16} {'ns/call':>10}   checksum")
    for name, fn, is_kernel in targets:
        start = time.perf_counter()
        if is_kernel:
            outputs = [fn(v).value for v in values]
        else:
            outputs = [fn(v) for v in values]
        elapsed = time.perf_counter() - start
        per_call = elapsed / len(values) * 1e9
        print(f"{name:<16} {per_call:>10.1f}   {math.fsum(outputs)!r}")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atanbounds",
        description=(
            "Certified two-sided algebraic bounds for the inverse tangent: "
            "evaluation, range certification, max-error search, sweep/figure "
            "emission, and micro-benchmarks."
        ),
        epilog=(
            "negative values in scientific notation need the -- separator, "
            "e.g.: atanbounds certify -- -1e6 1e6 100000 "
            "(flags like --out must come before the --)"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="print every per-point quantity at x")
    p_eval.add_argument("x", type=float)
    p_eval.set_defaults(func=_cmd_eval)

    p_sweep = sub.add_parser("sweep", help="write per-point CSV rows over a grid")
    p_sweep.add_argument("lo", type=float)
    p_sweep.add_argument("hi", type=float)
    p_sweep.add_argument("n", type=int)
    p_sweep.add_argument("--out", required=True, help="CSV output path")
    p_sweep.add_argument(
        "--grid", choices=[kind.value for kind in certify.GridKind], default=None,
        help="grid strategy (default: log when lo > 0, else mixed)",
    )
    p_sweep.add_argument(
        "--plot", action="store_true",
        help="also render an SVG figure next to the CSV",
    )
    p_sweep.set_defaults(func=_cmd_sweep)

    p_certify = sub.add_parser(
        "certify", help="certify the two-sided ordering against the oracle"
    )
    p_certify.add_argument("lo", type=float)
    p_certify.add_argument("hi", type=float)
    p_certify.add_argument("n", type=int)
    p_certify.add_argument(
        "--grid", choices=[kind.value for kind in certify.GridKind], default=None,
        help="grid strategy (default: log when lo > 0, else mixed)",
    )
    p_certify.add_argument(
        "--oracle-digits", type=int, default=certify.ORACLE_DPS,
        help="decimal digits of the certification oracle (>= 50)",
    )
    p_certify.add_argument(
        "--out", default=None, help="also write the report as CSV to this path"
    )
    p_certify.add_argument(
        "--perturb", default=None, metavar="WHICH:COMPONENT:EPS",
        help=(
            "probe sharpness of one perturbed coefficient instead of "
            "certifying the range (e.g. lower:1:-1e-3); exits 1 when a "
            "violation witness is found"
        ),
    )
    p_certify.set_defaults(func=_cmd_certify)

    p_maxerr = sub.add_parser(
        "maxerr", help="locate the maximum relative error of one bound"
    )
    p_maxerr.add_argument("kind", choices=["lower", "upper"])
    p_maxerr.add_argument(
        "--scan-points", type=int, default=10_000,
        help="coarse scan density before refinement",
    )
    p_maxerr.add_argument(
        "--oracle-digits", type=int, default=certify.ORACLE_DPS,
        help="decimal digits of the certification oracle (>= 50)",
    )
    p_maxerr.set_defaults(func=_cmd_maxerr)

    p_series = sub.add_parser(
        "series-check", help="measure series coefficients and compare to the table"
    )
    p_series.add_argument(
        "kind", nargs="?", choices=["lower", "upper", "reference"], default=None
    )
    p_series.set_defaults(func=_cmd_series_check)

    p_bench = sub.add_parser("bench", help="micro-benchmark the evaluators")
    p_bench.add_argument("n", type=int)
    p_bench.add_argument("--seed", type=int, default=42)
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
