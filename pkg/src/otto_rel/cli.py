"""Command-line interface: evaluate, optimize, sweep, phase-map, figure.

Output is plain CSV or JSON with byte-stable formatting: floats are
rendered with repr (shortest round-trip), rows follow the axis order,
and CSV files begin with the comment line `# otto-rel schema v1`.

Exit status: 0 on success, 2 on input/domain-validation errors, 3 when
the request is well-formed but the physics says no (no engine window,
no interior optimum).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Optional, Sequence

from .core import (
    SUDDEN_COMPRESSION,
    SUDDEN_EXPANSION,
    CycleParams,
    Scenario,
    corner_energies,
    heats_and_work,
)
from .high_temperature import ReducedParams, performance
from .optima import (
    NoEngineWindowError,
    NoInteriorOptimumError,
    Objective,
    OptimizationTarget,
    eta_max_sc,
    eta_max_se,
    eta_omega_sc,
    eta_omega_se,
    optimize,
)
from .oracle import OracleFailure
from .phase_diagram import classify_signs, mode_fractions, rasterize

SCHEMA_LINE = "# otto-rel schema v1"

_SCENARIOS = {"sc": SUDDEN_COMPRESSION, "se": SUDDEN_EXPANSION}


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    lines = [SCHEMA_LINE, ",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _check_domain(args, *, z: bool = False) -> None:
    """Validate numeric flags before any dispatch, naming the domain."""
    if not 0.0 < args.tau < 1.0:
        raise ValueError(f"tau must lie in (0,1), got {args.tau}")
    if not 0.0 < args.v < 1.0:
        raise ValueError(f"v must lie in (0,1), got {args.v}")
    if not args.beta_h > 0.0:
        raise ValueError(f"beta-h must be positive, got {args.beta_h}")
    if z and not 0.0 < args.z <= 1.0:
        raise ValueError(f"z must lie in (0,1], got {args.z}")


def _scenario_cap(scenario: Scenario, tau: float, v: float) -> float:
    if scenario == SUDDEN_COMPRESSION:
        return eta_max_sc(1.0 - tau, v)
    return eta_max_se(1.0 - tau, v)


def _record(args, z: float, cap: float) -> dict:
    """One evaluation rendered as the fixed-order output mapping."""
    scenario = _SCENARIOS[args.scenario]
    if args.exact:
        params = CycleParams(
            v=args.v,
            beta_c=args.beta_h / args.tau,
            beta_h=args.beta_h,
            omega_c=z * args.omega_h,
            omega_h=args.omega_h,
        )
        rec = heats_and_work(params, scenario)
    else:
        rec = performance(
            ReducedParams(z=z, tau=args.tau, v=args.v, beta_h=args.beta_h), scenario
        )
    omega = 2.0 * rec.w_ext - cap * rec.q_h
    mode = classify_signs(rec.w_ext, rec.q_h, rec.q_c)
    return {
        "z": z,
        "tau": args.tau,
        "v": args.v,
        "beta_h": args.beta_h,
        "scenario": args.scenario,
        "q_h": rec.q_h,
        "q_c": rec.q_c,
        "w_ext": rec.w_ext,
        "eta": rec.eta,
        "omega": omega,
        "mode": mode.value,
    }


def _render_mapping(mapping: dict, fmt: str, output: Optional[str]) -> None:
    if fmt == "json":
        _emit(json.dumps(mapping) + "\n", output)
    else:
        _emit(_csv(list(mapping), [list(mapping.values())]), output)


def _cmd_evaluate(args) -> int:
    _check_domain(args, z=True)
    if args.exact and not args.omega_h > 0.0:
        raise ValueError(f"omega-h must be positive, got {args.omega_h}")
    cap = _scenario_cap(_SCENARIOS[args.scenario], args.tau, args.v)
    _render_mapping(_record(args, args.z, cap), args.format, args.output)
    return 0


def _cmd_optimize(args) -> int:
    _check_domain(args)
    target = OptimizationTarget(
        objective=Objective(args.objective), scenario=_SCENARIOS[args.scenario]
    )
    report = optimize(target, args.tau, args.v, beta_h=args.beta_h)
    mapping = {
        "objective": args.objective,
        "scenario": args.scenario,
        "tau": args.tau,
        "v": args.v,
        "beta_h": args.beta_h,
        "z_star": report.z_star,
        "value": report.value_at_opt,
        "eta": report.eta_at_opt,
        "source": report.source.value,
    }
    _render_mapping(mapping, args.format, args.output)
    return 0


_EVAL_HEADER = (
    "z",
    "tau",
    "v",
    "beta_h",
    "scenario",
    "q_h",
    "q_c",
    "w_ext",
    "eta",
    "omega",
    "mode",
)


def _cmd_sweep(args) -> int:
    _check_domain(args)
    if args.points < 1 or args.points > 10_000:
        raise ValueError(f"points must lie in [1, 10000], got {args.points}")
    if args.z_max < args.z_min:
        raise ValueError(
            f"z-max {args.z_max} must not be below z-min {args.z_min}"
        )
    if args.z_max == args.z_min or args.points == 1:
        grid = [args.z_min]
    else:
        step = (args.z_max - args.z_min) / (args.points - 1)
        grid = [args.z_min + step * i for i in range(args.points)]
    cap = _scenario_cap(_SCENARIOS[args.scenario], args.tau, args.v)
    rows = [[_record(args, z, cap)[key] for key in _EVAL_HEADER] for z in grid]
    _emit(_csv(_EVAL_HEADER, rows), args.output)
    return 0


def _cmd_phase_map(args) -> int:
    if not 0.0 < args.v < 1.0:
        raise ValueError(f"v must lie in (0,1), got {args.v}")
    if args.resolution < 2 or args.resolution > 10_000:
        raise ValueError(
            f"resolution must lie in [2, 10000], got {args.resolution}"
        )
    scenario = _SCENARIOS[args.scenario]
    phase_map = rasterize(scenario, args.v, args.resolution)
    rows = []
    for i, z in enumerate(phase_map.z_axis):
        for j, tau in enumerate(phase_map.tau_axis):
            rows.append([z, tau, args.v, args.scenario, phase_map.cells[i][j].value])
    _emit(_csv(("z", "tau", "v", "scenario", "mode"), rows), args.output)
    summary = {
        "mode_fractions": mode_fractions(phase_map),
        "v": args.v,
        "scenario": args.scenario,
    }
    sys.stdout.write(json.dumps(summary) + "\n")
    return 0


def _parse_v_list(raw: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in raw.split(","))
    except ValueError as exc:
        raise ValueError(f"could not parse v-list {raw!r}") from exc
    if not values:
        raise ValueError("v-list must not be empty")
    for v in values:
        if not 0.0 < v < 1.0:
            raise ValueError(f"v must lie in (0, 1), got {v}")
    return values


def _eta_c_axis(points: int) -> list[float]:
    lo, hi = 0.01, 0.99
    if points == 1:
        return [lo]
    step = (hi - lo) / (points - 1)
    return [lo + step * i for i in range(points)]


def _figure_2(v_list, points: int) -> str:
    rows = []
    for token in ("sc", "se"):
        fn = eta_omega_sc if token == "sc" else eta_omega_se
        for v in v_list:
            for eta_c in _eta_c_axis(points):
                rows.append([eta_c, v, token, fn(eta_c, v)])
    return _csv(("eta_c", "v", "scenario", "eta_omega"), rows)


def _z_axis(points: int) -> list[float]:
    return [(i + 1) / points for i in range(points)]


def _figure_3(v_list, tau: float, points: int) -> str:
    rows = []
    for token in ("sc", "se"):
        scenario = _SCENARIOS[token]
        for v in v_list:
            for z in _z_axis(points):
                rec = performance(ReducedParams(z=z, tau=tau, v=v), scenario)
                rows.append([z, v, token, rec.w_ext])
    return _csv(("z", "v", "scenario", "work"), rows)


def _figure_4(v_list, tau: float, points: int) -> str:
    rows = []
    for token in ("sc", "se"):
        scenario = _SCENARIOS[token]
        for v in v_list:
            for z in _z_axis(points):
                rec = performance(ReducedParams(z=z, tau=tau, v=v), scenario)
                rows.append([z, v, token, rec.eta, rec.w_ext])
    return _csv(("z", "v", "scenario", "eta", "work"), rows)


def _figure_phase(token: str, v_list, resolution: int) -> str:
    scenario = _SCENARIOS[token]
    rows = []
    for v in v_list:
        phase_map = rasterize(scenario, v, resolution)
        for i, z in enumerate(phase_map.z_axis):
            for j, tau in enumerate(phase_map.tau_axis):
                rows.append([z, tau, v, token, phase_map.cells[i][j].value])
    return _csv(("z", "tau", "v", "scenario", "mode"), rows)


def _cmd_figure(args) -> int:
    v_list = _parse_v_list(args.v_list)
    if args.id == 2:
        points = args.points if args.points is not None else 100
        text = _figure_2(v_list, points)
    elif args.id == 3:
        points = args.points if args.points is not None else 200
        tau = args.tau if args.tau is not None else 0.5
        text = _figure_3(v_list, tau, points)
    elif args.id == 4:
        points = args.points if args.points is not None else 200
        tau = args.tau if args.tau is not None else 0.4
        text = _figure_4(v_list, tau, points)
    elif args.id in (5, 6):
        token = "sc" if args.id == 5 else "se"
        text = _figure_phase(token, v_list, args.resolution)
    else:  # argparse choices make this unreachable
        raise ValueError(f"unknown figure id {args.id}")
    _emit(text, args.output)
    return 0


def _add_common(parser, *, tau=True, v=True, beta_h=True) -> None:
    if tau:
        parser.add_argument("--tau", type=float, required=True, help="beta_h/beta_c in (0,1)")
    if v:
        parser.add_argument("--v", type=float, required=True, help="oscillator velocity in (0,1)")
    if beta_h:
        parser.add_argument("--beta-h", type=float, default=1.0, help="hot inverse temperature (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="otto-rel",
        description="Asymmetric relativistic quantum Otto cycle calculator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("evaluate", help="heats, work, efficiency at one point")
    p_eval.add_argument("--scenario", choices=("sc", "se"), required=True)
    p_eval.add_argument("--z", type=float, required=True, help="frequency ratio in (0,1]")
    _add_common(p_eval)
    p_eval.add_argument(
        "--exact",
        action="store_true",
        help="use the exact cycle energetics instead of the high-temperature forms",
    )
    p_eval.add_argument(
        "--omega-h",
        type=float,
        default=1.0,
        help="hot-side frequency for --exact (default 1); beta_c is beta_h/tau",
    )
    p_eval.add_argument("--format", choices=("json", "csv"), default="json")
    p_eval.add_argument("--output", default=None, help="file path (default stdout)")
    p_eval.set_defaults(handler=_cmd_evaluate)

    p_opt = sub.add_parser("optimize", help="optimal ratio for one objective")
    p_opt.add_argument("--objective", choices=("eta", "work", "omega"), required=True)
    p_opt.add_argument("--scenario", choices=("sc", "se"), required=True)
    _add_common(p_opt)
    p_opt.add_argument("--format", choices=("json", "csv"), default="json")
    p_opt.add_argument("--output", default=None, help="file path (default stdout)")
    p_opt.set_defaults(handler=_cmd_optimize)

    p_sweep = sub.add_parser("sweep", help="evaluate along a z range")
    p_sweep.add_argument("--scenario", choices=("sc", "se"), required=True)
    _add_common(p_sweep)
    p_sweep.add_argument("--z-min", type=float, required=True)
    p_sweep.add_argument("--z-max", type=float, required=True)
    p_sweep.add_argument("--points", type=int, default=101)
    p_sweep.add_argument("--output", default=None, help="file path (default stdout)")
    p_sweep.set_defaults(handler=_cmd_sweep, exact=False)

    p_phase = sub.add_parser("phase-map", help="mode raster plus JSON mode fractions")
    p_phase.add_argument("--scenario", choices=("sc", "se"), required=True)
    p_phase.add_argument("--v", type=float, required=True)
    p_phase.add_argument("--resolution", type=int, default=200)
    p_phase.add_argument(
        "--output",
        required=True,
        help="CSV path for the raster; the JSON summary goes to stdout",
    )
    p_phase.set_defaults(handler=_cmd_phase_map)

    p_fig = sub.add_parser("figure", help="long-format CSV data for figures 2-6")
    p_fig.add_argument("--id", type=int, choices=(2, 3, 4, 5, 6), required=True)
    p_fig.add_argument(
        "--v-list",
        default="0.35,0.75,0.95",
        help="comma-separated velocities (default 0.35,0.75,0.95)",
    )
    p_fig.add_argument("--tau", type=float, default=None, help="figures 3 and 4 only")
    p_fig.add_argument("--points", type=int, default=None, help="axis resolution, figures 2-4")
    p_fig.add_argument("--resolution", type=int, default=200, help="grid size, figures 5-6")
    p_fig.add_argument("--output", default=None, help="file path (default stdout)")
    p_fig.set_defaults(handler=_cmd_figure)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (NoEngineWindowError, NoInteriorOptimumError, OracleFailure) as exc:
        print(f"otto-rel: error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"otto-rel: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
