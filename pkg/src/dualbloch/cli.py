"""Command-line surface: equivalence checks, halting demos, self-reference
sweeps, and trajectory traces as plot-ready CSV or JSON-Lines.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success or
property holds, 1 property violated or I/O failure, 2 usage error.
Angles are radians unless --degrees is given.  Randomized commands take an
explicit --seed; there is no wall-clock default.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .bloch import (
    expectation,
    haar_random_unitary,
    normalized,
    random_unit_vector,
    rotate_observable,
    rotate_state,
)
from .halting import HaltingMachine, run, self_reference
from .pictures import (
    BadRangeError,
    EvolutionSpec,
    Picture,
    TooFewStepsError,
    trajectory,
)

EQUIV_THRESHOLD = 1e-12

PICTURE_NAMES = {p.value: p for p in Picture}

Z_AXIS = (0.0, 0.0, 1.0)


def _fmt(x: float) -> str:
    # 17 significant digits round-trip any double losslessly.
    return format(float(x), ".17g")


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _unit_or_none(raw, name: str):
    try:
        return normalized(raw)
    except ValueError as exc:
        print(f"error: --{name}: {exc}", file=sys.stderr)
        return None


def cmd_equiv_check(args) -> int:
    if args.trials < 1:
        return _usage_error(f"--trials must be >= 1, got {args.trials}")
    rng = np.random.default_rng(args.seed)
    max_dev = 0.0
    for _ in range(args.trials):
        u = haar_random_unitary(rng)
        e = random_unit_vector(rng)
        v = random_unit_vector(rng)
        dev = abs(expectation(e, rotate_state(u, v)) - expectation(rotate_observable(u, e), v))
        max_dev = max(max_dev, dev)
    ok = max_dev < EQUIV_THRESHOLD
    verdict = "PASS" if ok else "FAIL"
    print(
        f"max deviation {max_dev:.3e} over {args.trials} trials "
        f"(seed {args.seed}, rng PCG64): {verdict} (threshold {EQUIV_THRESHOLD:g})"
    )
    return 0 if ok else 1


def cmd_halting_demo(args) -> int:
    delta = math.radians(args.delta) if args.degrees else args.delta
    axis = _unit_or_none(args.axis, "axis")
    system = _unit_or_none(args.system, "system")
    if axis is None or system is None:
        return 2
    picture = PICTURE_NAMES[args.picture]
    if picture is Picture.HEISENBERG_REVERSED:
        return _usage_error("the halting machine runs in schrodinger or heisenberg only")
    machine = HaltingMachine(axis=axis, angle=delta, system=system)
    report = run(machine, picture)
    print(
        json.dumps(
            {
                "picture": report.picture.value,
                "system_out": [float(x) for x in report.system_out],
                "halt_out": [float(x) for x in report.halt_out],
                "system_basis_out": [float(x) for x in report.system_basis_out],
                "halt_basis_out": [float(x) for x in report.halt_basis_out],
                "system_expectation": report.system_expectation,
                "halt_expectation": report.halt_expectation,
            }
        )
    )
    return 0


def _sweep_cell(theta: float, delta: float, tol: float) -> tuple[float, float, float, bool]:
    basis = (math.sin(theta), 0.0, math.cos(theta))
    gap = self_reference(Z_AXIS, delta, basis).discrepancy_angle
    return theta, delta, gap, gap < tol


def cmd_self_ref_sweep(args) -> int:
    if args.theta_steps < 2 or args.delta_steps < 2:
        return _usage_error("--theta-steps and --delta-steps must be >= 2")
    if args.tol <= 0.0:
        return _usage_error(f"--tol must be positive, got {args.tol}")
    theta_lo, theta_hi = args.theta_range
    delta_lo, delta_hi = args.delta_range
    if args.degrees:
        theta_lo, theta_hi = math.radians(theta_lo), math.radians(theta_hi)
        delta_lo, delta_hi = math.radians(delta_lo), math.radians(delta_hi)
    if not (theta_lo < theta_hi and delta_lo < delta_hi):
        return _usage_error("ranges must be ordered min < max")
    if args.workers < 1:
        return _usage_error(f"--workers must be >= 1, got {args.workers}")

    thetas = [float(t) for t in np.linspace(theta_lo, theta_hi, args.theta_steps)]
    deltas = [float(d) for d in np.linspace(delta_lo, delta_hi, args.delta_steps)]
    cells = [(th, d) for th in thetas for d in deltas]  # row-major (theta outer)

    if args.workers == 1:
        rows = [_sweep_cell(th, d, args.tol) for th, d in cells]
    else:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            # executor.map preserves input order, so emission stays in grid order.
            rows = list(pool.map(lambda cell: _sweep_cell(*cell, args.tol), cells))

    try:
        out = open(args.output, "w") if args.output != "-" else sys.stdout
    except OSError as exc:
        print(f"error: cannot open {args.output}: {exc}", file=sys.stderr)
        return 1
    try:
        if args.format == "csv":
            out.write("theta,delta,discrepancy_angle,fixed_point\n")
            for theta, delta, gap, fixed in rows:
                flag = "true" if fixed else "false"
                out.write(f"{_fmt(theta)},{_fmt(delta)},{_fmt(gap)},{flag}\n")
        else:
            for theta, delta, gap, fixed in rows:
                flag = "true" if fixed else "false"
                out.write(
                    f'{{"theta": {_fmt(theta)}, "delta": {_fmt(delta)}, '
                    f'"discrepancy_angle": {_fmt(gap)}, "fixed_point": {flag}}}\n'
                )
    except OSError as exc:
        print(f"error: writing {args.output}: {exc}", file=sys.stderr)
        return 1
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_trajectory(args) -> int:
    rate = math.radians(args.rate) if args.degrees else args.rate
    axis = _unit_or_none(args.axis, "axis")
    vector = _unit_or_none(args.input, "input")
    if axis is None or vector is None:
        return 2
    spec = EvolutionSpec(axis=axis, rate=rate, picture=PICTURE_NAMES[args.picture])
    try:
        samples = trajectory(spec, vector, args.t_start, args.t_end, args.steps)
    except (BadRangeError, TooFewStepsError) as exc:
        return _usage_error(str(exc))
    if args.format == "csv":
        print("time_label,vx,vy,vz")
        for s in samples:
            vx, vy, vz = s.vector
            print(f"{_fmt(s.time_label)},{_fmt(vx)},{_fmt(vy)},{_fmt(vz)}")
    else:
        for s in samples:
            vx, vy, vz = s.vector
            print(
                f'{{"time_label": {_fmt(s.time_label)}, "vx": {_fmt(vx)}, '
                f'"vy": {_fmt(vy)}, "vz": {_fmt(vz)}}}'
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualbloch",
        description="Single-qubit Bloch-vector dynamics in both dynamical pictures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "equiv-check",
        help="verify expectation values agree across pictures on Haar-random inputs",
    )
    p.add_argument("--trials", type=int, required=True, help="number of random trials (>= 1)")
    p.add_argument("--seed", type=int, required=True, help="RNG seed (PCG64)")
    p.set_defaults(func=cmd_equiv_check)

    p = sub.add_parser("halting-demo", help="run the halting machine once, JSON report on stdout")
    p.add_argument("--axis", type=float, nargs=3, required=True, metavar=("X", "Y", "Z"))
    p.add_argument("--delta", type=float, required=True, help="rotation angle")
    p.add_argument("--system", type=float, nargs=3, required=True, metavar=("X", "Y", "Z"))
    p.add_argument(
        "--picture",
        choices=sorted(PICTURE_NAMES),
        required=True,
        help="dynamical picture (heisenberg-reversed is rejected here)",
    )
    p.add_argument("--degrees", action="store_true", help="interpret --delta in degrees")
    p.set_defaults(func=cmd_halting_demo)

    p = sub.add_parser(
        "self-ref-sweep",
        help="tabulate the two-picture disagreement over a (theta, delta) grid",
    )
    p.add_argument("--theta-steps", type=int, required=True, help="grid points in theta (>= 2)")
    p.add_argument("--delta-steps", type=int, required=True, help="grid points in delta (>= 2)")
    p.add_argument(
        "--theta-range",
        type=float,
        nargs=2,
        default=(0.0, math.pi),
        metavar=("MIN", "MAX"),
        help="polar angle of the basis vector from the z axis (default 0 pi)",
    )
    p.add_argument(
        "--delta-range",
        type=float,
        nargs=2,
        default=(0.0, 2.0 * math.pi),
        metavar=("MIN", "MAX"),
        help="rotation angle range (default 0 2*pi)",
    )
    p.add_argument("--tol", type=float, default=1e-9, help="fixed-point tolerance in radians")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--output", default="-", help="output path, '-' for stdout")
    p.add_argument("--workers", type=int, default=1, help="parallel workers (output order fixed)")
    p.add_argument("--degrees", action="store_true", help="interpret ranges in degrees")
    p.set_defaults(func=cmd_self_ref_sweep)

    p = sub.add_parser("trajectory", help="sample one evolution on a uniform time grid")
    p.add_argument("--picture", choices=sorted(PICTURE_NAMES), required=True)
    p.add_argument("--axis", type=float, nargs=3, required=True, metavar=("X", "Y", "Z"))
    p.add_argument("--rate", type=float, default=1.0, help="angle per unit time (default 1)")
    p.add_argument("--input", type=float, nargs=3, required=True, metavar=("X", "Y", "Z"))
    p.add_argument("--t-start", type=float, required=True)
    p.add_argument("--t-end", type=float, required=True)
    p.add_argument("--steps", type=int, required=True, help="grid points incl. endpoints (>= 2)")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--degrees", action="store_true", help="interpret --rate in degrees per unit time")
    p.set_defaults(func=cmd_trajectory)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
