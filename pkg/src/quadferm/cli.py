"""Batch command-line front end.

Four commands, one CSV file per run:

    quadferm evolve --config job.ini [--out path]
    quadferm steady --config job.ini [--out path]
    quadferm skin   --config job.ini [--out path]
    quadferm verify [--config job.ini] [--n N] [--seed S] [--tol T] [--out path]

Output starts with `# key=value` provenance lines followed by a header row
and data rows; every numeric cell uses 17 significant digits so doubles
round-trip exactly and repeated runs are byte-identical.

Exit codes: 0 success, 1 validation error, 2 physics/convergence error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

import numpy as np

from .config import JobConfig, load_config
from .errors import PhysicsError, ValidationError
from .gaussian import (GaussianState, entropy, evolve_state,
                       stationary_correlation)
from .skin import (build_bath, featureless_choice, liouvillian_params,
                   localization_slope, steady_profile)
from .verify import check_names, run_suite

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PHYSICS = 2
EXIT_VERIFY_FAILED = 3


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _render(comments: list[tuple[str, object]], header: list[str],
            rows: list[list]) -> str:
    buf = io.StringIO()
    for key, value in comments:
        buf.write(f"# {key}={value}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([cell if isinstance(cell, str) else _fmt(cell)
                         for cell in row])
    return buf.getvalue()


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _matrix_columns(prefix: str, n: int) -> list[str]:
    names = []
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            names.append(f"{prefix}{j}{k}_re")
            names.append(f"{prefix}{j}{k}_im")
    return names


def _matrix_cells(mat: np.ndarray) -> list[float]:
    cells = []
    for val in mat.reshape(-1):
        cells.append(val.real)
        cells.append(val.imag)
    return cells


def _require_params(cfg: JobConfig):
    if cfg.params is not None:
        return cfg.params
    if cfg.hatano_nelson is not None:
        return liouvillian_params(cfg.hatano_nelson)
    raise ValidationError("config does not define a model")


def _cmd_evolve(cfg: JobConfig, out: str | None) -> int:
    params = _require_params(cfg)
    if not cfg.times:
        raise ValidationError("[times] values are required for evolve")
    state = cfg.initial or GaussianState.vacuum(params.n)
    if state.n != params.n:
        raise ValidationError(
            f"initial state is {state.n}-mode but model is {params.n}-mode"
        )
    n = params.n
    header = ["t"] + _matrix_columns("r", n) \
        + [f"occ{j}" for j in range(1, n + 1)] + ["entropy"]
    rows = []
    for t in cfg.times:
        evolved = evolve_state(params, state, t)
        rows.append([t] + _matrix_cells(evolved.r)
                    + list(evolved.occupations()) + [entropy(evolved)])
    comments = [("command", "evolve"), ("n", n),
                ("gksl", str(params.gksl).lower())]
    _emit(_render(comments, header, rows), out)
    return EXIT_OK


def _cmd_steady(cfg: JobConfig, out: str | None) -> int:
    params = _require_params(cfg)
    r_inf = stationary_correlation(params)
    state = GaussianState(r_inf)
    n = params.n
    header = _matrix_columns("minf", n) \
        + [f"occ{j}" for j in range(1, n + 1)] + ["entropy"]
    rows = [_matrix_cells(state.r) + list(state.occupations()) + [entropy(state)]]
    comments = [("command", "steady"), ("n", n),
                ("gksl", str(params.gksl).lower())]
    _emit(_render(comments, header, rows), out)
    return EXIT_OK


def _cmd_skin(cfg: JobConfig, out: str | None) -> int:
    p = cfg.hatano_nelson
    if p is None:
        raise ValidationError("skin requires a hatano-nelson model section")
    build_bath(p)
    profile = steady_profile(p)
    flat = featureless_choice(p, cfg.delta)
    flat_profile = flat.diagonal().real
    slope, _ = localization_slope(profile)
    comments = [
        ("command", "skin"),
        ("n", p.n),
        ("kappa", _fmt(p.kappa)),
        ("x", _fmt(p.x)),
        ("delta", _fmt(cfg.delta)),
        ("log_slope", _fmt(slope)),
        ("log_slope_target", _fmt(-2 * np.log(p.kappa))),
    ]
    header = ["site", "occupation", "featureless_occupation"]
    rows = [[str(j + 1), profile[j], flat_profile[j]] for j in range(p.n)]
    _emit(_render(comments, header, rows), out)
    return EXIT_OK


def _cmd_verify(cfg: JobConfig, out: str | None, n: int, seed: int,
                draws: int, tol: float | None) -> int:
    overrides = dict(cfg.tolerances)
    if tol is not None:
        overrides = {name: tol for name in check_names()}
    results = run_suite(n=n, seed=seed, draws=draws, tol_overrides=overrides)
    comments = [
        ("command", "verify"),
        ("n", n),
        ("seed", seed),
        ("draws", draws),
        ("generator", "numpy.random.default_rng(PCG64), streams (seed, check_index)"),
    ]
    header = ["name", "identity", "value", "tolerance", "comparison", "status"]
    rows = []
    for res in results:
        rows.append([res.name, res.identity, res.value, res.tolerance,
                     res.comparison, "pass" if res.passed else "fail"])
    _emit(_render(comments, header, rows), out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadferm",
        description="Open quadratic fermion systems: evolution, steady "
                    "states, skin-effect baths, and the dense identity suite.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, desc in (
        ("evolve", "evolve a Gaussian state over the requested times"),
        ("steady", "compute the unique steady state of a damped model"),
        ("skin", "build the localized bath and its occupation profile"),
    ):
        cmd = sub.add_parser(name, help=desc)
        cmd.add_argument("--config", required=True, help="job file (INI)")
        cmd.add_argument("--out", default=None, help="output CSV path")
    ver = sub.add_parser("verify", help="run the dense identity suite")
    ver.add_argument("--config", default=None, help="job file (INI)")
    ver.add_argument("--out", default=None, help="output CSV path")
    ver.add_argument("--n", type=int, default=None, help="mode count (<= 5)")
    ver.add_argument("--seed", type=int, default=None, help="RNG seed")
    ver.add_argument("--draws", type=int, default=None,
                     help="random instances per identity")
    ver.add_argument("--tol", type=float, default=None,
                     help="override every tolerance with this value")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config) if args.config else JobConfig()
        if cfg.command is not None and cfg.command != args.command:
            raise ValidationError(
                f"config requests command {cfg.command!r} but "
                f"{args.command!r} was invoked"
            )
        out = args.out if args.out is not None else cfg.output
        if args.command == "evolve":
            return _cmd_evolve(cfg, out)
        if args.command == "steady":
            return _cmd_steady(cfg, out)
        if args.command == "skin":
            return _cmd_skin(cfg, out)
        n = args.n if args.n is not None else (cfg.n or 2)
        if not 1 <= n <= 5:
            raise ValidationError(f"verify supports 1 <= n <= 5, got {n}")
        seed = args.seed if args.seed is not None else cfg.seed
        draws = args.draws if args.draws is not None else cfg.draws
        return _cmd_verify(cfg, out, n=n, seed=seed, draws=draws, tol=args.tol)
    except ValidationError as exc:
        print(f"quadferm: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except PhysicsError as exc:
        print(f"quadferm: physics error: {exc}", file=sys.stderr)
        return EXIT_PHYSICS


if __name__ == "__main__":
    sys.exit(main())
