"""Command-line entry point: sweep, verify, fit, models.

Exit codes: 0 success, 1 verification failure, 2 config or usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from ..predictions import fit_plateau, fit_power_law
from . import emit
from .config import MODEL_CATALOG, ConfigError, allowed_estimators, load_config
from .runner import MonotonicityError, covering_sweep, fit_series
from .verify import run_verify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2

JOBS_ENV = "MIXSYM_JOBS"


def _default_jobs():
    raw = os.environ.get(JOBS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mixsym",
        description="Mixed-state symmetry diagnostics: sweeps, verification, fits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="run a covering sweep from a JSON config")
    p_sweep.add_argument("config", help="path to the experiment config")
    p_sweep.add_argument("--seed", type=int, default=None, help="override seeds.base")
    p_sweep.add_argument(
        "--jobs", type=int, default=None, help=f"worker processes (default ${JOBS_ENV} or 1)"
    )
    p_sweep.add_argument("--out", default=None, help="directory for csv/json/svg outputs")
    p_sweep.add_argument(
        "--stamp", action="store_true", help="include a timestamp in JSON output"
    )

    p_verify = sub.add_parser("verify", help="run an invariant suite")
    p_verify.add_argument(
        "suite", help="densemix | gaussfermi | isingdecohere | predictions | all"
    )
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--out", default=None, help="write the JSON report here")

    p_fit = sub.add_parser("fit", help="fit a stored series file")
    p_fit.add_argument("series", help="CSV or JSON series file")
    p_fit.add_argument("--window", required=True, help="fit window as a,b")
    p_fit.add_argument("--method", choices=["power_law", "plateau"], default="power_law")

    sub.add_parser("models", help="list model ids, parameters, and estimators")
    return parser


def _resolve_outputs(config, out_dir):
    """Paths to write, from --out (all three formats) or the config block."""
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        base = os.path.join(out_dir, config["name"])
        return {"csv": base + ".csv", "json": base + ".json", "svg": base + ".svg"}
    return dict(config.get("output", {}))


def _cmd_sweep(args):
    try:
        config = load_config(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.seed is not None:
        config["seeds"]["base"] = args.seed
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    try:
        series = covering_sweep(config, jobs=jobs)
    except MonotonicityError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL

    print(f"# {config['name']}: {len(series)} points")
    print("ell,value,stderr")
    for ell, val, err in zip(series.ell, series.values, series.errors):
        print(f"{ell!r},{val!r},{err!r}")

    if "fit" in config:
        try:
            fit = fit_series(series, config["fit"])
        except ValueError as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        print(
            f"# fit[{config['fit']['method']}] window={fit.window}: "
            f"exponent={fit.exponent:.6g} +- {fit.exponent_err:.2g}, "
            f"prefactor={fit.prefactor:.6g}, residual={fit.residual:.3g}"
        )

    outputs = _resolve_outputs(config, args.out)
    if "csv" in outputs:
        emit.write_csv(series, outputs["csv"])
    if "json" in outputs:
        emit.write_json(series, outputs["json"], stamp=args.stamp)
    if "svg" in outputs:
        emit.write_svg(series, outputs["svg"], title=config["name"])
    for kind, path in sorted(outputs.items()):
        print(f"# wrote {kind}: {path}")
    return EXIT_OK


def _cmd_verify(args):
    try:
        report = run_verify(args.suite, seed=args.seed)
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        line = f"{status} {check.name}: slack={check.slack:.3e} tol={check.tolerance:.0e}"
        if check.detail:
            line += f" ({check.detail})"
        print(line)
    print(f"# suite {report.suite}: {'all passed' if report.passed else 'FAILURES'}")
    if args.out:
        emit.write_json(report, args.out)
        print(f"# wrote report: {args.out}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_fit(args):
    try:
        lo, hi = (float(part) for part in args.window.split(","))
    except ValueError:
        print(f"config error: --window expects a,b, got {args.window!r}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if args.series.endswith(".json"):
            series = emit.read_series_json(args.series)
        else:
            series = emit.read_csv(args.series)
    except (OSError, ValueError, KeyError) as exc:
        print(f"config error: cannot load series {args.series}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        if args.method == "power_law":
            fit = fit_power_law(series, (lo, hi))
        else:
            fit = fit_plateau(series, (lo, hi))
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    print(f"method: {fit.method}")
    print(f"window: [{fit.window[0]:g}, {fit.window[1]:g}]")
    print(f"exponent: {fit.exponent!r} +- {fit.exponent_err!r}")
    print(f"prefactor: {fit.prefactor!r}")
    print(f"residual: {fit.residual!r}")
    return EXIT_OK


def _cmd_models(_args):
    for mid in sorted(MODEL_CATALOG):
        cls, regions, params, doc = MODEL_CATALOG[mid]
        print(f"{mid} ({cls})")
        print(f"  {doc}")
        print(f"  params: {', '.join(params)}")
        print(f"  regions: {', '.join(regions)}")
        print(f"  estimators: {', '.join(allowed_estimators(mid))}")
    return EXIT_OK


_COMMANDS = {
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "fit": _cmd_fit,
    "models": _cmd_models,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
