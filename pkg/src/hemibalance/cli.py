"""Command-line interface.

Subcommands: analyze a configuration file, construct named families,
simulate the balance probability, query exact closed forms, and run the
circle oracles.  Exit codes: 0 on success, 2 on usage errors or
malformed input, 3 when a geometric precondition fails (general
position or genericity).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .circle import (
    BudgetExceededError,
    NonGenericError,
    angles_of_configuration,
    exact_probability,
    flip_enumeration_count,
    is_balanced_circle,
    sweep_sequence,
)
from .configio import ConfigFileError, read_configuration, write_configuration
from .constructions import antipodal_config, vandermonde_config
from .hemisphere import (
    DEFAULT_TOL,
    GeneralPositionViolation,
    RetriesExhaustedError,
    best_open_hemisphere,
    closed_bound,
    is_equator_balanced,
    max_closed_hemisphere,
)
from .montecarlo import estimate

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GEOMETRY = 3


def _int_value(text: str) -> int:
    """Integer argument, also accepting scientific notation like 1e7."""
    try:
        return int(text)
    except ValueError:
        pass
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not value.is_integer():
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(value)


def _angle_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated angle list: {text!r}") from None


def _vector(values: np.ndarray) -> list[float]:
    return [float(v) for v in values]


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def cmd_analyze(args) -> int:
    config, _ = read_configuration(args.file)
    # configurations outside general position (e.g. antipodal pairs) still
    # get the full hemisphere report; the balance verdict becomes n/a and
    # the exit code signals the violation
    verdict = None
    position_error: Optional[GeneralPositionViolation] = None
    try:
        verdict = is_equator_balanced(config, tol=args.tol)
    except GeneralPositionViolation as exc:
        position_error = exc
    report = max_closed_hemisphere(config, tol=args.tol)
    rng = np.random.default_rng(args.seed)
    open_report = best_open_hemisphere(config, rng, tol=args.tol)
    bound = closed_bound(config.dim, config.n)

    violation = None
    if verdict is not None and verdict.violation is not None:
        subset, count = verdict.violation
        violation = {
            "subset": list(subset),
            "positive": count.positive,
            "negative": count.negative,
            "on_circle": count.on_circle,
        }
    general_position = None
    if position_error is not None:
        general_position = {
            "subset": list(position_error.subset),
            "points_on_circle": list(position_error.on_circle),
        }

    if args.json:
        _print_json(
            {
                "file": args.file,
                "dim": config.dim,
                "n": config.n,
                "closed_bound": bound,
                "max_count": report.max_count,
                "witness_subset": list(report.witness_subset),
                "witness_pole": _vector(report.witness_pole),
                "degenerate_subsets": report.degenerate_subsets,
                "balanced": None if verdict is None else verdict.balanced,
                "vacuous": config.n <= config.dim + 1,
                "violation": violation,
                "general_position_violation": general_position,
                "open_count": open_report.count,
                "open_pole": _vector(open_report.pole),
                "tol": args.tol,
                "seed": args.seed,
            }
        )
    else:
        print(f"file: {args.file}")
        print(f"dim: {config.dim}")
        print(f"points: {config.n}")
        print(f"closed_bound: {bound}")
        print(f"max_count: {report.max_count}")
        print(f"witness_subset: {list(report.witness_subset)}")
        print(f"witness_pole: {_vector(report.witness_pole)}")
        print(f"degenerate_subsets: {report.degenerate_subsets}")
        print("balanced: n/a" if verdict is None else f"balanced: {str(verdict.balanced).lower()}")
        print(f"vacuous: {str(config.n <= config.dim + 1).lower()}")
        if violation is not None:
            print(
                "violation: subset %s splits %d/%d"
                % (violation["subset"], violation["positive"], violation["negative"])
            )
        if position_error is not None:
            print(f"general position violation: {position_error}")
        print(f"open hemisphere count: {open_report.count}")
        print(f"open_pole: {_vector(open_report.pole)}")

    if position_error is not None:
        print(f"error: {position_error}", file=sys.stderr)
        return EXIT_GEOMETRY
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.kind == "vandermonde":
        exact = vandermonde_config(args.dim, args.points)
        config = exact.normalized
        meta = {
            "kind": "vandermonde",
            "label": config.label,
            "integers": [list(row) for row in exact.integer_points],
        }
    else:
        rng = np.random.default_rng(args.seed)
        config = antipodal_config(args.dim, args.points, rng)
        meta = {"kind": "antipodal", "label": config.label, "seed": args.seed}
    write_configuration(args.out, config, meta)
    print(f"wrote {args.out}: {config.n} points on S^{config.dim} ({args.kind})")
    return EXIT_OK


def cmd_simulate(args) -> int:
    result = estimate(
        args.dim, args.points, args.trials, seed=args.seed, workers=args.workers, tol=args.tol
    )
    if args.json:
        # elapsed time is excluded so identical runs give identical bytes
        _print_json(
            {
                "dim": result.dim,
                "n": result.n,
                "trials": result.trials,
                "successes": result.successes,
                "p_hat": result.p_hat,
                "sigma_p": result.sigma_p,
                "inv_p_hat": result.inv_p_hat,
                "precision_3sigma": result.precision_3sigma,
                "seed": result.seed,
            }
        )
        return EXIT_OK

    inv = "n/a" if result.inv_p_hat is None else "%.8g" % result.inv_p_hat
    prec = "n/a" if result.precision_3sigma is None else "%.3g" % result.precision_3sigma
    print("N\tn\ttrials\tsuccesses\tinv_p\tprecision\tseed\telapsed_seconds")
    print(
        "%d\t%d\t%d\t%d\t%s\t%s\t%d\t%.3f"
        % (
            result.dim,
            result.n,
            result.trials,
            result.successes,
            inv,
            prec,
            result.seed,
            result.elapsed_seconds,
        )
    )
    return EXIT_OK


def cmd_exact(args) -> int:
    value = exact_probability(args.dim, args.points)
    print("no closed form known" if value is None else str(value))
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.file is not None:
        config, _ = read_configuration(args.file)
        if config.dim != 1:
            raise ConfigFileError(f"oracle input must live on the circle, got dim {config.dim}")
        angles = [float(a) for a in angles_of_configuration(config.points)]
    else:
        angles = args.angles
    if not angles:
        raise ConfigFileError("no angles given")

    if args.mode == "sweep":
        sequence = sweep_sequence(angles)
        balanced = is_balanced_circle(angles)
        print(f"sequence: {sequence}")
        print(f"balanced: {str(balanced).lower()}")
    else:
        count = flip_enumeration_count(angles)
        ratio = Fraction(count, 2 ** len(angles))
        print(f"count: {count}, ratio: {ratio}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hemibalance",
        description="Hemispheres, equator balance, and balance probabilities for "
        "point configurations on the N-sphere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report hemisphere and balance results for a config file")
    p.add_argument("file", help="configuration file to analyze")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="side tolerance (default 1e-9)")
    p.add_argument("--seed", type=_int_value, default=0, help="seed for the open-pole draw")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="write a named configuration to a file")
    p.add_argument("--kind", required=True, choices=("vandermonde", "antipodal"))
    p.add_argument("--dim", required=True, type=_int_value, help="sphere dimension N")
    p.add_argument("--points", required=True, type=_int_value, help="number of points n")
    p.add_argument("--seed", type=_int_value, default=0, help="seed for random constructions")
    p.add_argument("--out", required=True, help="output file path")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("simulate", help="Monte Carlo estimate of the balance probability")
    p.add_argument("--dim", required=True, type=_int_value, help="sphere dimension N")
    p.add_argument("--points", required=True, type=_int_value, help="number of points n")
    p.add_argument("--trials", required=True, type=_int_value, help="trial count (e.g. 1e6)")
    p.add_argument("--seed", type=_int_value, default=0, help="stream seed")
    p.add_argument("--workers", type=_int_value, default=1, help="worker processes")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="side tolerance (default 1e-9)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("exact", help="closed-form balance probability if known")
    p.add_argument("--dim", required=True, type=_int_value, help="sphere dimension N")
    p.add_argument("--points", required=True, type=_int_value, help="number of points n")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("oracle", help="circle sweep and flip-enumeration oracles")
    p.add_argument("mode", choices=("sweep", "flip"))
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--file", help="dim-1 configuration file")
    source.add_argument("--angles", type=_angle_list, help="comma-separated angles in radians")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GeneralPositionViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except NonGenericError as exc:
        print(f"error: non-generic input: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except RetriesExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigFileError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
