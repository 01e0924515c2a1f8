"""Command-line front end.

Subcommands expose the library pieces on user-supplied inputs and drive the
experiment families:

    tikbary quadrature-dump --basis chebyshev1 --points 4
    tikbary fit --basis legendre --L 8 --N 16 --lambda 0 --fn f1
    tikbary interp --basis chebyshev1 --N 60 --lambda 0.1995 --fn f1
    tikbary sweep --basis chebyshev1 --L 100 --N 100 --fn f1 --seed 7
    tikbary run --config configs/fig1-desk.cfg
    tikbary run --experiment fig3 --scale paper --out results

Commands that take data accept --fn NAME or --data FILE, the file being CSV
rows of (x, f(x)) with or without a header; fit and interp require the x
values to be the Gauss nodes of the requested rule.  Flags given alongside
--config override the file's values.  Exit status is 0 on success, 2 on any
error, with a message on stderr.
"""

import argparse
import sys
from dataclasses import replace

import numpy as np

from ._version import __version__
from .barycentric import BarycentricData, interp_barycentric, weights_gauss
from .basis import BasisSpec
from .configfile import read_config
from .csvio import read_table, render_table
from .experiments import (
    EXPERIMENTS,
    ExperimentConfig,
    desk_config,
    paper_config,
    run,
)
from .metrics import default_lambda_grid
from .quadrature import gauss_rule
from .regularized_fit import fit as fit_op
from .signals import FUNCTIONS

__all__ = ["main", "build_parser"]


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _read_xy(path):
    """CSV rows of (x, y), tolerant of a missing header."""
    table = read_table(path)
    rows = table.rows
    try:
        float(table.columns[0])
        rows = [table.columns] + rows  # headerless file, first line is data
    except ValueError:
        pass
    if any(len(r) < 2 for r in rows) or not rows:
        raise ValueError(f"{path}: expected rows of x, f(x)")
    data = np.array([[float(r[0]), float(r[1])] for r in rows])
    order = np.argsort(data[:, 0])
    return data[order, 0], data[order, 1]


def _samples_for_rule(args, rule):
    if args.fn is not None:
        return np.asarray(FUNCTIONS[args.fn](rule.nodes), dtype=float)
    if args.data is None:
        raise ValueError("give --fn NAME or --data FILE")
    x, y = _read_xy(args.data)
    if x.size != len(rule):
        raise ValueError(
            f"{args.data}: {x.size} rows, but the rule has {len(rule)} nodes; "
            "generate matching abscissae with quadrature-dump")
    dev = float(np.max(np.abs(x - rule.nodes)))
    if dev > 1e-12:
        raise ValueError(
            f"{args.data}: abscissae deviate from the Gauss nodes by {dev:.3g}; "
            "samples must be taken at the rule's nodes")
    return y


def _cmd_quadrature_dump(args) -> int:
    rule = gauss_rule(BasisSpec.from_name(args.basis), args.points)
    rows = [[j, rule.nodes[j], rule.weights[j]] for j in range(len(rule))]
    meta = [("table", "quadrature"), ("version", __version__),
            ("basis", args.basis), ("points", args.points)]
    _write_or_print(render_table(("j", "node", "weight"), rows, meta), args.out)
    return 0


def _single_lambda(args) -> float:
    if not args.lam:
        return 0.0
    if len(args.lam) > 1:
        raise ValueError(
            "fit and interp take a single --lambda; use sweep for several")
    return args.lam[0]


def _cmd_fit(args) -> int:
    n = args.L if args.N is None else args.N
    rule = gauss_rule(BasisSpec.from_name(args.basis), n + 1)
    lam = _single_lambda(args)
    approx = fit_op(rule, args.L, lam, _samples_for_rule(args, rule))
    rows = [[l, approx.coefficients[l]] for l in range(args.L + 1)]
    meta = [("table", "coefficients"), ("version", __version__),
            ("basis", args.basis), ("L", args.L), ("N", n), ("lambda", lam)]
    _write_or_print(render_table(("l", "beta"), rows, meta), args.out)
    return 0


def _cmd_interp(args) -> int:
    rule = gauss_rule(BasisSpec.from_name(args.basis), args.N + 1)
    lam = _single_lambda(args)
    values = _samples_for_rule(args, rule)
    data = BarycentricData(rule.nodes, weights_gauss(rule), values, lam)
    grid = np.linspace(-1.0, 1.0, args.eval_points)
    p = interp_barycentric(data, grid)
    rows = np.column_stack([grid, p]).tolist()
    meta = [("table", "interpolant"), ("version", __version__),
            ("basis", args.basis), ("N", args.N), ("lambda", lam)]
    hints = ["x = x", "y = value"]
    _write_or_print(render_table(("x", "value"), rows, meta, hints), args.out)
    return 0


def _cmd_sweep(args) -> int:
    lambdas = tuple(args.lam) if args.lam else tuple(default_lambda_grid())
    noise_kind = None if args.no_noise else "additive-white-snr"
    config = ExperimentConfig(
        experiment="sweep", basis=args.basis, fn=args.fn, seed=args.seed,
        out_dir=args.out, l_values=(args.L,),
        n_values=(args.L if args.N is None else args.N,),
        lambdas=lambdas, noise_kind=noise_kind, snr_db=args.snr_db)
    for path in run(config):
        print(path)
    return 0


def _cmd_run(args) -> int:
    if args.config is not None:
        config = ExperimentConfig.from_mapping(read_config(args.config))
        if args.experiment is not None:
            config = replace(config, experiment=args.experiment)
    elif args.experiment is not None:
        factory = paper_config if args.scale == "paper" else desk_config
        config = factory(args.experiment)
    else:
        raise ValueError("give --config FILE or --experiment ID")
    overrides = {}
    if args.basis is not None:
        overrides["basis"] = args.basis
    if args.fn is not None:
        overrides["fn"] = args.fn
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.out is not None:
        overrides["out_dir"] = args.out
    if args.L is not None:
        overrides["l_values"] = (args.L,)
    if args.N is not None:
        overrides["n_values"] = (args.N,)
    if args.lam:
        overrides["lambdas"] = tuple(args.lam)
    if args.snr_db is not None:
        overrides["snr_db"] = args.snr_db
    if overrides:
        config = replace(config, **overrides)
    for path in run(config):
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tikbary",
        description="Regularized polynomial fitting and barycentric "
                    "interpolation in Gauss points")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_fn=True):
        p.add_argument("--basis", default="chebyshev1",
                       help="chebyshev1, legendre, or jacobi(a,b)")
        p.add_argument("--lambda", dest="lam", type=float, action="append",
                       help="shrinkage parameter (default 0)")
        p.add_argument("--out", default=None, help="output file (default stdout)")
        if with_fn:
            p.add_argument("--fn", choices=sorted(FUNCTIONS), default=None)
            p.add_argument("--data", default=None,
                           help="CSV of (x, f(x)) rows sampled at the nodes")

    p = sub.add_parser("quadrature-dump", help="print a Gauss rule as CSV")
    p.add_argument("--basis", default="chebyshev1")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_quadrature_dump)

    p = sub.add_parser("fit", help="fit and print the coefficients")
    add_common(p)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--N", type=int, default=None, help="rule degree (default L)")
    p.set_defaults(func=_cmd_fit)

    p = sub.add_parser("interp", help="evaluate the barycentric interpolant")
    add_common(p)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--eval-points", type=int, default=1001)
    p.set_defaults(func=_cmd_interp)

    p = sub.add_parser("sweep", help="sweep lambda at fixed L, N")
    p.add_argument("--basis", default="chebyshev1")
    p.add_argument("--fn", choices=sorted(FUNCTIONS), default="f1")
    p.add_argument("--lambda", dest="lam", type=float, action="append",
                   help="sweep values (repeatable; default the 21-point grid)")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--snr-db", type=float, default=5.0)
    p.add_argument("--no-noise", action="store_true")
    p.add_argument("--out", default="results", help="output directory")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("run", help="run an experiment family")
    p.add_argument("--config", default=None, help="config file path")
    p.add_argument("--experiment", choices=EXPERIMENTS, default=None)
    p.add_argument("--scale", choices=("desk", "paper"), default="desk")
    p.add_argument("--basis", default=None)
    p.add_argument("--fn", choices=sorted(FUNCTIONS), default=None)
    p.add_argument("--L", type=int, default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--lambda", dest="lam", type=float, action="append")
    p.add_argument("--snr-db", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="output directory")
    p.set_defaults(func=_cmd_run)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
