"""Command-line interface: plot, metrics, conflict, order, generate.

Results go to stdout (or the -o file), diagnostics to stderr.  Exit codes:
0 success, 1 domain errors (bad data, degenerate axes, dimension
mismatches), 2 usage errors.  Every subcommand is deterministic: identical
inputs produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .conflict import EXHAUSTIVE_LIMIT, OrderMode, order_axes, relationship_budget
from .core import NormalizationMode, SolutionSet, csv_text, load_csv, parse_csv
from .dominance import nondominated_filter
from .duality import detect_linear_dependence
from .errors import ParetoLensError
from .metrics import axis_reach, grid_coverage, spacing_pairwise, summarize
from .problems import generate_mldmp, generate_simplex_front, generate_sphere_front
from .render import PlotSpec, render, render_comparison

__all__ = ["run", "main", "build_parser"]

_ORDER_MODES = {
    "harmony": OrderMode.MAX_HARMONY,
    "conflict": OrderMode.MAX_CONFLICT,
    "clutter": OrderMode.MIN_CLUTTER,
}


class _UsageError(Exception):
    """Malformed flag value detected after argparse; exits with code 2."""


def _g(x: float) -> str:
    return f"{x:.17g}"


def _h(x: float) -> str:
    return f"{x:.6g}"


def _positive_float(text: str) -> float:
    v = float(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _divisions(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("must be >= 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pareto-lens",
        description="Analyze many-objective solution sets and render "
        "parallel-coordinates plots.",
    )
    parser.add_argument("--version", action="version", version=f"pareto-lens {__version__}")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled analyses")
    parser.add_argument("--quiet", action="store_true", help="suppress human-readable output")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("plot", help="render a solution set as an SVG parallel-coordinates plot")
    p.add_argument("set", help="CSV of solutions, or - for stdin")
    p.add_argument("-o", "--output", help="output SVG path (default: stdout)")
    p.add_argument(
        "--order",
        default=None,
        help="axis order: auto-harmony | auto-conflict | auto-clutter | "
        "comma-separated 1-based indices (e.g. 1,3,2); auto modes order "
        "the union when --compare is given",
    )
    p.add_argument(
        "--normalize",
        default="minmax",
        help="minmax | none (shared raw scale) | explicit lo1:hi1,lo2:hi2,...",
    )
    p.add_argument("--filter-dominated", action="store_true",
                   help="drop dominated solutions first")
    p.add_argument("--compare", help="second CSV rendered on the same axes")
    p.add_argument("--width", type=int, default=900)
    p.add_argument("--height", type=int, default=560)
    p.add_argument("--title", default=None)

    p = sub.add_parser("metrics", help="quality metrics for a solution set")
    p.add_argument("set", help="CSV of solutions, or - for stdin")
    p.add_argument("--ref", help="reference set CSV for the convergence metric")
    p.add_argument("--compare",
                   help="second set CSV for coverage and pairwise-uniformity comparison")
    p.add_argument("--divisions", type=_divisions, default=8,
                   help="grid divisions per axis (>= 2, default 8)")
    p.add_argument("--gap-threshold", type=_positive_float, default=0.1,
                   help="per-axis gap threshold as a fraction of the axis range")
    p.add_argument("--filter-dominated", action="store_true",
                   help="drop dominated solutions first")
    p.add_argument("-o", "--output", help="output path (default: stdout)")

    p = sub.add_parser("conflict",
                       help="linear-dependence reports for all objective pairs")
    p.add_argument("set", help="CSV of solutions, or - for stdin")
    p.add_argument("--fit-threshold", type=_positive_float, default=0.999,
                   help="minimum r-squared for a dependence verdict")
    p.add_argument("-o", "--output", help="output path (default: stdout)")

    p = sub.add_parser("order", help="pick an objective-axis order")
    p.add_argument("set", help="CSV of solutions, or - for stdin")
    p.add_argument("--mode", choices=sorted(_ORDER_MODES), required=True,
                   help="harmony: most harmonious adjacency; conflict: most "
                   "conflicting adjacency; clutter: fewest total crossings")
    p.add_argument("--exhaustive", action="store_true",
                   help=f"search all orders (m <= {EXHAUSTIVE_LIMIT}) instead of the heuristic")
    p.add_argument("-o", "--output", help="output path (default: stdout)")

    p = sub.add_parser("generate", help="generate diagnostic solution sets")
    p.add_argument("kind", choices=["mldmp", "simplex", "sphere"])
    p.add_argument("--m", type=int, required=True, help="objective count")
    p.add_argument("--n", type=int, required=True, help="number of solutions")
    p.add_argument("--seed", dest="gen_seed", type=int, default=None,
                   help="generator seed (default: global --seed)")
    p.add_argument("--decision-out", help="also write ML-DMP decision points to this CSV")
    p.add_argument("-o", "--output", help="output CSV path (default: stdout)")

    return parser


def _load(path: str, filter_dominated: bool = False) -> SolutionSet:
    if path == "-":
        s = parse_csv(sys.stdin.read())
    else:
        s = load_csv(path)
    return nondominated_filter(s) if filter_dominated else s


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _set_label(path: str) -> str:
    return "stdin" if path == "-" else Path(path).stem


def _parse_axis_order(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) - 1 for tok in text.split(","))
    except ValueError:
        raise _UsageError(f"--order expects auto-* or 1-based indices, got {text!r}") from None


def _parse_normalize(text: str) -> NormalizationMode:
    if text == "minmax":
        return NormalizationMode.per_axis_minmax()
    if text == "none":
        return NormalizationMode.none()
    try:
        bounds = []
        for tok in text.split(","):
            lo, sep, hi = tok.partition(":")
            if not sep:
                raise ValueError(tok)
            bounds.append((float(lo), float(hi)))
    except ValueError:
        raise _UsageError(f"--normalize expects minmax, none or lo:hi pairs, got {text!r}") from None
    return NormalizationMode.explicit(bounds)


def _cmd_plot(args: argparse.Namespace) -> int:
    s = _load(args.set, args.filter_dominated)
    other = _load(args.compare, args.filter_dominated) if args.compare else None

    axis_order = None
    if args.order is not None:
        if args.order.startswith("auto-"):
            mode = _ORDER_MODES.get(args.order.removeprefix("auto-"))
            if mode is None:
                raise _UsageError(f"unknown auto order {args.order!r}")
            target = s
            if other is not None:
                target = SolutionSet(
                    np.vstack([s.raw_values, other.raw_values]), s.objective_names
                )
            search = "exhaustive" if s.m <= EXHAUSTIVE_LIMIT else "heuristic"
            axis_order = order_axes(target, mode, search).permutation
        else:
            axis_order = _parse_axis_order(args.order)

    spec = PlotSpec(
        width=args.width,
        height=args.height,
        normalization=_parse_normalize(args.normalize),
        axis_order=axis_order,
        title=args.title,
    )
    if other is None:
        doc = render(s, spec)
    else:
        doc = render_comparison(
            s, other, spec, labels=(_set_label(args.set), _set_label(args.compare))
        )
    _emit(doc.text, args.output)
    return 0


def _cmd_metrics(args: argparse.Namespace) -> int:
    s = _load(args.set, args.filter_dominated)
    ref = _load(args.ref) if args.ref else None
    other = _load(args.compare, args.filter_dominated) if args.compare else None

    report = summarize(s, ref)
    reach = axis_reach(s, args.gap_threshold)
    lines = []
    if not args.quiet:
        lines.append(f"solution set: n={s.n} solutions, m={s.m} objectives")
        lines.append("")
        lines.append(f"{'metric':<16} value")
        if report.gd_plus is not None:
            lines.append(f"{'gd_plus':<16} {_h(report.gd_plus)}")
        lines.append(f"{'spacing':<16} {_h(report.spacing)}")
        lines.append(f"{'maximum_spread':<16} {_h(report.maximum_spread)}")
        lines.append("")
        lines.append(f"{'axis':<12} {'min':<12} {'max':<12} gaps")
        for r in reach:
            gaps = "; ".join(f"({_h(a)}, {_h(b)})" for a, b in r.gaps) or "-"
            lines.append(f"{r.objective:<12} {_h(r.minimum):<12} {_h(r.maximum):<12} {gaps}")
        lines.append("")

    lines.append(f"n={s.n}")
    lines.append(f"m={s.m}")
    if report.gd_plus is not None:
        lines.append(f"gd_plus={_g(report.gd_plus)}")
    lines.append(f"spacing={_g(report.spacing)}")
    lines.append(f"maximum_spread={_g(report.maximum_spread)}")
    for j, (lo, hi) in enumerate(report.per_axis_range, start=1):
        lines.append(f"axis{j}_min={_g(lo)}")
        lines.append(f"axis{j}_max={_g(hi)}")

    if other is not None:
        cov = grid_coverage(s, other, args.divisions, args.gap_threshold)
        sp1, sp2 = spacing_pairwise(s, other)
        lines.append(f"divisions={cov.divisions}")
        lines.append(f"coverage_fraction_1={_g(cov.covered_fraction_1)}")
        lines.append(f"coverage_fraction_2={_g(cov.covered_fraction_2)}")
        lines.append(f"spacing_pairwise_1={_g(sp1)}")
        lines.append(f"spacing_pairwise_2={_g(sp2)}")

    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_conflict(args: argparse.Namespace) -> int:
    s = _load(args.set)
    lines = []
    for i in range(s.m):
        for j in range(i + 1, s.m):
            rep = detect_linear_dependence(s, i, j, args.fit_threshold, seed=args.seed)
            lines.append(
                f"pair=({i + 1},{j + 1}) k={_g(rep.fitted.k)} b={_g(rep.fitted.b)} "
                f"r2={_g(rep.r_squared)} class={rep.slope_class.value} "
                f"verdict={rep.verdict.value}"
            )
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_order(args: argparse.Namespace) -> int:
    s = _load(args.set)
    search = "exhaustive" if args.exhaustive else "heuristic"
    result = order_axes(s, _ORDER_MODES[args.mode], search)
    shown, total = relationship_budget(s.m)
    lines = [
        ",".join(str(i + 1) for i in result.permutation),
        f"score={_g(result.score)}",
        f"showing {shown} of {total} pairwise relations",
    ]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    seed = args.gen_seed if args.gen_seed is not None else args.seed
    if args.kind == "mldmp":
        if args.m < 3:
            raise _UsageError("mldmp needs --m >= 3")
        gen = generate_mldmp(args.m, args.n, seed)
    elif args.kind == "simplex":
        gen = generate_simplex_front(args.m, args.n, seed)
    else:
        gen = generate_sphere_front(args.m, args.n, seed)
    if args.decision_out:
        if gen.decision_points is None:
            raise ParetoLensError(f"{args.kind} has no decision points to write")
        _emit(csv_text(SolutionSet(gen.decision_points, ["x", "y"])), args.decision_out)
    _emit(csv_text(gen.objectives), args.output)
    return 0


_DISPATCH = {
    "plot": _cmd_plot,
    "metrics": _cmd_metrics,
    "conflict": _cmd_conflict,
    "order": _cmd_order,
    "generate": _cmd_generate,
}


def run(argv: Sequence[str]) -> int:
    """Parse and execute one command line; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:  # argparse exits for --help/--version/usage errors
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except _UsageError as exc:
        print(f"pareto-lens: usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"pareto-lens: usage error: {exc}", file=sys.stderr)
        return 2
    except ParetoLensError as exc:
        print(f"pareto-lens: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"pareto-lens: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
