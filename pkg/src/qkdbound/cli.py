"""Command-line front end: sweeps, single evaluations, validation runs.

Exit codes: 0 success, 2 usage error, 3 unphysical statistics,
4 inconsistent statistics, 5 validation violation.
"""

import argparse
import json
import math
import sys

import numpy as np

from .errors import (
    DomainError,
    InconsistentStatisticsError,
    QkdBoundError,
    ScenarioInfeasibleError,
    StatisticsSchemaError,
    UnphysicalStatisticsError,
)
from .estimation import estimate_inner_products
from .keyrate import bb84_reference_rate, keyrate_bound
from .scenarios import (
    SCENARIO_DESCRIPTIONS,
    SCENARIO_NAMES,
    ObservedStatistics,
    ScenarioSpec,
    scenario_statistics,
)
from .validation import run_validation

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNPHYSICAL = 3
EXIT_INCONSISTENT = 4
EXIT_VIOLATION = 5

CSV_HEADER = "Q,alpha_sq,rate,bb84_rate,minimizing_re12,feasible"


def _fmt(x):
    """12 significant digits: diffable, yet free of float-printing noise."""
    return f"{float(x):.12g}"


def _sweep_rows(scenario, alphas_sq, q_values, include_bb84):
    rows = []
    for q in q_values:
        bb84 = _fmt(bb84_reference_rate(float(q))) if include_bb84 else ""
        for a2 in alphas_sq:
            spec = ScenarioSpec(name=scenario, Q=float(q), alpha=math.sqrt(a2))
            try:
                result = keyrate_bound(scenario_statistics(spec))
            except (UnphysicalStatisticsError, InconsistentStatisticsError,
                    ScenarioInfeasibleError):
                rows.append(f"{_fmt(q)},{_fmt(a2)},,{bb84},,0")
                continue
            rows.append(
                f"{_fmt(q)},{_fmt(a2)},{_fmt(result.rate)},{bb84},"
                f"{_fmt(result.minimizing_re12)},1")
    return rows


def cmd_sweep(args):
    alphas_sq = sorted(args.alpha_sq or [0.5])  # rows ordered by (Q, alpha_sq)
    q_values = np.linspace(args.q_min, args.q_max, args.steps)
    lines = [CSV_HEADER]
    lines.extend(_sweep_rows(args.scenario, alphas_sq, q_values, args.include_bb84))
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_evaluate(args):
    try:
        with open(args.stats) as fh:
            payload = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read {args.stats}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        print(f"error: {args.stats} is not valid JSON: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        stats = ObservedStatistics.from_dict(payload)
    except StatisticsSchemaError as exc:
        print(f"error: statistics schema: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: unphysical-statistics: {exc}", file=sys.stderr)
        return EXIT_UNPHYSICAL
    try:
        estimates = estimate_inner_products(stats)
        result = keyrate_bound(stats)
    except UnphysicalStatisticsError as exc:
        print(f"error: unphysical-statistics: {exc}", file=sys.stderr)
        return EXIT_UNPHYSICAL
    except InconsistentStatisticsError as exc:
        print(f"error: inconsistent-statistics: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except DomainError as exc:
        print(f"error: unphysical-statistics: {exc}", file=sys.stderr)
        return EXIT_UNPHYSICAL
    document = {
        "rate": result.rate,
        "Q": result.Q,
        "minimizing_re12": result.minimizing_re12,
        "re03_at_min": result.re03_at_min,
        "lambda_rho": result.lambda_rho,
        "lambda_sigma": result.lambda_sigma,
        "feasible_interval": list(result.feasible_interval),
        "inner_products": {
            "re01": estimates.re01,
            "re23": estimates.re23,
            "re02": estimates.re02,
            "re13": estimates.re13,
            "re03_intercept": estimates.re03_intercept,
            "re03_slope": estimates.re03_slope,
            "re12_interval": list(estimates.re12_interval),
        },
    }
    print(json.dumps(document, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_validate(args):
    alphas_sq = args.alpha_sq or [0.5]
    try:
        report = run_validation(
            trials=args.trials,
            q_range=(0.0, args.q_max),
            alphas=[math.sqrt(a2) for a2 in alphas_sq],
            dim=args.dim,
            seed=args.seed,
            dump_dir=args.dump_dir,
        )
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    print(f"trials: {report.trials}")
    print(f"ancilla dimension: {report.dim}")
    print(f"Q range: [{_fmt(report.q_range[0])}, {_fmt(report.q_range[1])}]")
    print("alpha_sq values: " + ", ".join(_fmt(a * a) for a in report.alpha_values))
    print(f"seed: {report.seed}")
    print(f"violations: {report.violations}")
    print(f"min slack: {_fmt(report.min_slack)}")
    print(f"max gap: {_fmt(report.max_gap)}")
    return EXIT_OK if report.violations == 0 else EXIT_VIOLATION


def cmd_scenario_list(_args):
    for name in SCENARIO_NAMES:
        print(f"{name}: {SCENARIO_DESCRIPTIONS[name]}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qkdbound",
        description="Key-rate lower bounds for a three-state prepare-and-measure "
                    "QKD protocol, from observed channel statistics.")
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="rate curves over a Q grid, written as CSV")
    sweep.add_argument("--scenario", required=True, choices=SCENARIO_NAMES)
    sweep.add_argument("--alpha-sq", dest="alpha_sq", type=float, action="append",
                       help="alpha^2 value; repeat for several series (default 0.5)")
    sweep.add_argument("--q-min", dest="q_min", type=float, default=0.0)
    sweep.add_argument("--q-max", dest="q_max", type=float, required=True)
    sweep.add_argument("--steps", type=int, required=True,
                       help="number of grid points, endpoints included")
    sweep.add_argument("--out", required=True, help="output CSV path")
    sweep.add_argument("--include-bb84", dest="include_bb84", action="store_true",
                       help="fill the bb84_rate column with 1 - 2h(Q)")

    evaluate = sub.add_parser("evaluate",
                              help="key rate for one statistics JSON file")
    evaluate.add_argument("--stats", required=True, help="path to statistics JSON")

    validate = sub.add_parser("validate",
                              help="certify the bound against random attacks")
    validate.add_argument("--trials", type=int, required=True)
    validate.add_argument("--q-max", dest="q_max", type=float, default=0.25)
    validate.add_argument("--dim", type=int, default=4)
    validate.add_argument("--seed", type=int, default=0)
    validate.add_argument("--alpha-sq", dest="alpha_sq", type=float, action="append",
                          help="alpha^2 value; repeatable (default 0.5)")
    validate.add_argument("--dump-dir", dest="dump_dir", default=None,
                          help="directory for JSON dumps of violating attacks")

    sub.add_parser("scenario-list", help="list the named noise scenarios")
    return parser


def _check_args(parser, args):
    if args.command == "sweep":
        for a2 in args.alpha_sq or [0.5]:
            if not 0.0 < a2 < 1.0:
                parser.error(f"--alpha-sq must lie in (0, 1), got {a2}")
        if args.steps < 2:
            parser.error("--steps must be >= 2")
        if args.q_min > args.q_max:
            parser.error("--q-min must not exceed --q-max")
        if args.q_min < 0.0 or args.q_max > 0.5:
            parser.error("Q grid must stay within [0, 0.5]")
    elif args.command == "validate":
        if args.trials < 1:
            parser.error("--trials must be >= 1")
        for a2 in args.alpha_sq or [0.5]:
            if not 0.0 < a2 < 1.0:
                parser.error(f"--alpha-sq must lie in (0, 1), got {a2}")
        if not 0.0 <= args.q_max <= 1.0:
            parser.error("--q-max must lie in [0, 1]")
        if not 2 <= args.dim <= 4:
            parser.error("--dim must be 2, 3, or 4")
        if args.seed < 0:
            parser.error("--seed must be non-negative")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_args(parser, args)
    handlers = {
        "sweep": cmd_sweep,
        "evaluate": cmd_evaluate,
        "validate": cmd_validate,
        "scenario-list": cmd_scenario_list,
    }
    try:
        return handlers[args.command](args)
    except QkdBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
