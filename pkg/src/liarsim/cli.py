"""Command-line front door: compile, verify, simulate, export, serve.

Exit codes: 0 success, 1 expected failure (bad input, failed verification),
2 internal error.  Diagnostics go to standard error; machine-readable
output (summary JSON, fixture JSON, CSV) goes to standard output or the
``--out`` path.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .compiler import compile_system, model_summary
from .dsl import ParseError, TopologyError, parse_system
from .linalg import TOL, CapacityError, LinalgError
from .measurement import (
    RNG_ALGORITHM,
    ImpossibleHypothesisError,
    ScheduleError,
    born_weights,
    probability_series,
    run_schedule,
    write_series_csv,
)
from .models import subspace_block, verify_reference_matrices

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INTERNAL = 2


class CliError(Exception):
    """Expected failure: report on stderr and exit 1."""


@dataclass
class CliConfig:
    data_dir: Path = Path("./data")
    port: int = 8450
    host: str = "127.0.0.1"
    seed: int = 0
    tolerance: float = TOL.fixture
    t0: float = 0.0
    t1: float = 2.0 * np.pi
    steps: int = 128
    verbose: bool = False


def _config(args: argparse.Namespace) -> CliConfig:
    cfg = CliConfig()
    for name in vars(cfg):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(cfg, name, getattr(args, name))
    cfg.data_dir = Path(cfg.data_dir)
    if cfg.verbose:
        print(f"config: {cfg}", file=sys.stderr)
    return cfg


def _load_system(path: str):
    try:
        source = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read system file: {exc}")
    try:
        system = parse_system(source, name=Path(path).stem)
        return compile_system(system)
    except (ParseError, TopologyError, CapacityError) as exc:
        raise CliError(f"{path}: {exc}")


def _load_schedule(path: str) -> list:
    try:
        events = json.loads(Path(path).read_text())
    except OSError as exc:
        raise CliError(f"cannot read schedule file: {exc}")
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON ({exc})")
    if not isinstance(events, list):
        raise CliError(f"{path}: schedule must be a JSON array of events")
    return events


def cmd_compile(args: argparse.Namespace) -> int:
    model = _load_system(args.system)
    print(json.dumps(model_summary(model), indent=2))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    report = verify_reference_matrices(tolerance=cfg.tolerance)
    print(report.to_json() if args.json else report.to_text())
    if not report.ok:
        print("verification failed: unexpected deviation from published matrices", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    cfg = _config(args)
    model = _load_system(args.system)
    schedule = _load_schedule(args.schedule)
    try:
        trajectory = run_schedule(model, schedule, cfg.seed)
    except (ScheduleError, ImpossibleHypothesisError) as exc:
        raise CliError(f"schedule failed: {exc}")

    final = trajectory.final_state
    summary = {
        "system": model.name,
        "seed": trajectory.rng_seed,
        "rng_algorithm": RNG_ALGORITHM,
        "sim_time": trajectory.sim_time,
        "events": [e.to_dict() for e in trajectory.events],
        "final_probabilities": [
            dict(sentence=k, **{f"p_{o}": w for o, w in born_weights(final, model, k).items()})
            for k in range(1, model.n_sentences + 1)
        ],
    }
    print(json.dumps(summary, indent=2))

    if args.out:
        series = [
            probability_series(final, model, k, cfg.t0, cfg.t1, cfg.steps)
            for k in range(1, model.n_sentences + 1)
        ]
        with open(args.out, "w", newline="") as fh:
            write_series_csv(series, fh)
        if cfg.verbose:
            print(f"wrote series CSV to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    model = _load_system(args.system)

    def complex_grid(mat):
        return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(mat)]

    artifacts = {
        "summary": model_summary(model),
        "basis_labels": list(model.basis_labels),
        "psi0": None
        if model.psi0 is None
        else [[float(z.real), float(z.imag)] for z in model.psi0.amplitudes],
        "cycle_states": list(model.cycle_states),
        "subspace_basis": list(model.subspace_basis),
        "u_step_subspace": complex_grid(subspace_block(model.u_step, model.subspace_basis))
        if model.subspace_basis
        else None,
        "hamiltonian_subspace": complex_grid(
            subspace_block(model.hamiltonian, model.subspace_basis)
        )
        if model.subspace_basis
        else None,
    }
    text = json.dumps(artifacts, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    cfg = _config(args)
    static_dir = args.ui_dir
    if static_dir is not None and not Path(static_dir).is_dir():
        raise CliError(f"--ui-dir {static_dir} is not a directory")
    app = create_app(cfg.data_dir, static_dir=static_dir)
    uvicorn.run(app, host=cfg.host, port=cfg.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liarsim")
    parser.add_argument("--verbose", action="store_true", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p_compile = sub.add_parser("compile", help="compile a system file, print summary JSON")
    p_compile.add_argument("system")
    p_compile.set_defaults(func=cmd_compile)

    p_verify = sub.add_parser("verify", help="compare derived matrices with the published ones")
    p_verify.add_argument("--tolerance", type=float, default=None)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_sim = sub.add_parser("simulate", help="run a schedule, print trajectory, write series CSV")
    p_sim.add_argument("system")
    p_sim.add_argument("schedule")
    p_sim.add_argument("--out", help="series CSV path")
    p_sim.add_argument("--seed", type=int, default=None)
    p_sim.add_argument("--from", dest="t0", type=float, default=None)
    p_sim.add_argument("--to", dest="t1", type=float, default=None)
    p_sim.add_argument("--steps", type=int, default=None)
    p_sim.set_defaults(func=cmd_simulate)

    p_export = sub.add_parser("export", help="export compiled model artifacts as JSON")
    p_export.add_argument("system")
    p_export.add_argument("--out")
    p_export.set_defaults(func=cmd_export)

    p_serve = sub.add_parser("serve", help="run the HTTP session service")
    p_serve.add_argument("--data-dir", dest="data_dir", default=None)
    p_serve.add_argument("--port", type=int, default=None)
    p_serve.add_argument("--host", default=None)
    p_serve.add_argument("--ui-dir", dest="ui_dir", default=None)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (LinalgError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
