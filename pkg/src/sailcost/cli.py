"""Command-line front end.

Subcommands: solve, optimize, max-speed, sweep, energy, roadmap,
validate.  Exit codes: 0 success, 1 validation/infeasibility, 2 usage,
3 internal/numeric.  Errors go to stderr as ``error_code: message``.
Output is deterministic byte-for-byte unless --metadata is given.
"""

import argparse
import json
import os
import sys
from dataclasses import replace

from .checks import run_all
from .costs import cost_components, closed_form_optimum
from .energy import energy_per_shot, energy_used_lifetime, storage_cost
from .errors import SailcostError, ValidationError
from .kinematics import (
    kinematics_non_optimized,
    kinematics_optimized,
    strength_limited_geometry,
)
from .optimize import maximize_speed_fixed_cost
from .roadmap import plan_stages
from .scenario import (
    SweepSpec,
    apply_overrides,
    build_scenario,
    parse_entries,
    scenario_with,
    write_results,
)
from .units import parse_quantity

OUTPUT_DIR_ENV = "SAILCOST_OUTPUT_DIR"


def _load(args):
    with open(args.scenario, encoding="utf-8") as fh:
        entries = parse_entries(fh.read())
    return build_scenario(apply_overrides(entries, args.set or []))


def _destination(args):
    if args.output is None or args.output == "-":
        return sys.stdout
    path = args.output
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not os.path.isabs(path):
        path = os.path.join(base, path)
    return path


def _emit(records, fmt, args):
    if args.metadata:
        from datetime import datetime, timezone

        records = records + [{"generated_at": datetime.now(timezone.utc).isoformat()}]
    write_results(records, fmt, _destination(args))


def _breakdown_doc(breakdown):
    f1, f2, f3, f4 = breakdown.fractions
    return {
        "C1": breakdown.laser, "C2": breakdown.optics,
        "C3": breakdown.energy, "C4": breakdown.storage,
        "C_T": breakdown.total,
        "f1": f1, "f2": f2, "f3": f3, "f4": f4,
    }


def _result_doc(scenario, aperture, power, breakdown, kin, shot):
    return {
        "scenario": scenario.name,
        "mode": scenario.mode,
        "optimum": {"d_m": aperture, "P0_W": power},
        "costs": _breakdown_doc(breakdown),
        "kinematics": {
            "v0": kin.speed,
            "beta0": kin.beta,
            "t0_s": kin.accel_time,
            "L0_m": kin.accel_distance,
            "v_inf": kin.coast_speed,
        },
        "energy": {
            "E_gamma_J": shot.beam_energy,
            "E_storage_J": shot.storage_energy,
        },
    }


def _solve_kinematics(scenario):
    sail, array, payload = scenario.sail, scenario.array, scenario.payload
    if array.power is None or array.aperture is None:
        raise ValidationError("solve requires array.P0 and array.d in the scenario")
    if scenario.mode == "optimized":
        if sail.diameter is not None:
            raise ValidationError("optimized mode derives sail.D; remove it")
        return sail, kinematics_optimized(array, sail, payload)
    if scenario.mode == "strength-limited":
        diameter, thickness = strength_limited_geometry(array.power, sail, payload)
        sized = replace(sail, diameter=diameter, thickness=thickness)
        return sized, kinematics_non_optimized(array, sized, payload)
    if sail.diameter is None:
        raise ValidationError("non-optimized mode requires sail.D")
    return sail, kinematics_non_optimized(array, sail, payload)


def _cmd_solve(args):
    scenario = _load(args)
    sail, kin = _solve_kinematics(scenario)
    array = scenario.array
    breakdown = cost_components(
        array.power, kin.accel_time, array.aperture, scenario.metrics,
        array.beam_fraction, array.shape_factor,
    )
    shot = energy_per_shot(
        kin.beta, kin.total_mass, sail.coupling, scenario.metrics.storage_efficiency
    )
    _emit(
        [_result_doc(scenario, array.aperture, array.power, breakdown, kin, shot)],
        "json", args,
    )
    return 0


def _require_beta_target(scenario, command):
    if scenario.beta_target is None:
        raise ValidationError(f"{command} requires a target.beta0 scenario")
    return scenario.beta_target


def _optimize_design(scenario, beta):
    if scenario.mode != "optimized":
        raise ValidationError("cost optimization is defined in optimized mode")
    array = scenario.array
    return closed_form_optimum(
        beta, scenario.payload, scenario.sail, array.wavelength,
        array.diffraction_factor, array.shape_factor, array.beam_fraction,
        scenario.metrics,
    )


def _design_doc(scenario, design):
    array = scenario.array
    sized = replace(array, aperture=design.aperture, power=design.power)
    kin = kinematics_optimized(sized, scenario.sail, scenario.payload)
    shot = energy_per_shot(
        kin.beta, kin.total_mass, scenario.sail.coupling,
        scenario.metrics.storage_efficiency,
    )
    return _result_doc(
        scenario, design.aperture, design.power, design.breakdown, kin, shot
    )


def _cmd_optimize(args):
    scenario = _load(args)
    beta = _require_beta_target(scenario, "optimize")
    design = _optimize_design(scenario, beta)
    _emit([_design_doc(scenario, design)], "json", args)
    return 0


def _cmd_max_speed(args):
    scenario = _load(args)
    if scenario.budget_target is None:
        raise ValidationError("max-speed requires a target.budget scenario")
    array = scenario.array
    result = maximize_speed_fixed_cost(
        scenario.budget_target, scenario.payload, scenario.sail,
        array.wavelength, array.diffraction_factor, array.shape_factor,
        array.beam_fraction, scenario.metrics,
    )
    sized = replace(array, aperture=result.aperture, power=result.power)
    kin = kinematics_optimized(sized, scenario.sail, scenario.payload)
    shot = energy_per_shot(
        kin.beta, kin.total_mass, scenario.sail.coupling,
        scenario.metrics.storage_efficiency,
    )
    _emit(
        [_result_doc(scenario, result.aperture, result.power, result.breakdown, kin, shot)],
        "json", args,
    )
    return 0


def _cmd_energy(args):
    scenario = _load(args)
    beta = _require_beta_target(scenario, "energy")
    total_mass = 2 * scenario.payload.mass  # optimized regime
    shot = energy_per_shot(
        beta, total_mass, scenario.sail.coupling, scenario.metrics.storage_efficiency
    )
    doc = {
        "scenario": scenario.name,
        "beta0": beta,
        "E_gamma_J": shot.beam_energy,
        "E_storage_J": shot.storage_energy,
        "kinetic_energy_J": shot.kinetic_energy,
        "launch_efficiency": shot.launch_efficiency,
        "storage_cost_usd": storage_cost(shot, scenario.metrics.storage_usd_per_joule),
    }
    if args.lifetime_hours is not None:
        if scenario.array.power is None:
            raise ValidationError("lifetime energy cost requires array.P0")
        total, per_watt = energy_used_lifetime(
            scenario.array.power / scenario.array.beam_fraction,
            args.lifetime_hours,
            scenario.metrics.energy_usd_per_joule,
            args.wall_plug,
        )
        doc["lifetime_energy_usd"] = total
        doc["lifetime_usd_per_optical_watt"] = per_watt
    _emit([doc], "json", args)
    return 0


_SWEEP_ROW_KEYS = ("d_m", "P0_W", "C1", "C2", "C3", "C4", "C_T", "F_ap")


def _sweep_row(scenario, aperture, power, breakdown):
    flux = power / (scenario.array.shape_factor * aperture**2)
    return dict(zip(
        _SWEEP_ROW_KEYS,
        (aperture, power, breakdown.laser, breakdown.optics, breakdown.energy,
         breakdown.storage, breakdown.total, flux),
    ))


def _cmd_sweep(args):
    scenario = _load(args)
    axis = args.axis
    dimension = None
    from .scenario import _SCHEMA  # sweep endpoints share the field schema

    if axis not in _SCHEMA:
        raise ValidationError(f"unknown sweep axis {axis!r}")
    kind = _SCHEMA[axis][0]
    if kind == "number":
        start, stop = float(args.start), float(args.stop)
    else:
        start = parse_quantity(args.start, kind, field=f"sweep.from ({axis})")
        stop = parse_quantity(args.stop, kind, field=f"sweep.to ({axis})")
    sweep = SweepSpec(
        axis=axis, start=start, stop=stop, points=args.points,
        scale="log" if args.log else "linear",
    )
    rows = []
    for value in sweep.grid():
        point = scenario_with(scenario, axis, value)
        if point.beta_target is not None:
            if axis == "array.d":
                row = _fixed_aperture_row(point, value)
            else:
                design = _optimize_design(point, point.beta_target)
                row = _sweep_row(point, design.aperture, design.power, design.breakdown)
        else:
            array = point.array
            result = maximize_speed_fixed_cost(
                point.budget_target, point.payload, point.sail,
                array.wavelength, array.diffraction_factor, array.shape_factor,
                array.beam_fraction, point.metrics,
            )
            row = _sweep_row(point, result.aperture, result.power, result.breakdown)
        if axis != "array.d":
            row = {axis: value, **row}
        rows.append(row)
    _emit(rows, "csv", args)
    return 0


def _fixed_aperture_row(scenario, aperture):
    from .kinematics import required_power

    array = replace(scenario.array, aperture=aperture)
    power = required_power(
        scenario.beta_target, array, scenario.sail, scenario.payload
    )
    kin = kinematics_optimized(
        replace(array, power=power), scenario.sail, scenario.payload
    )
    breakdown = cost_components(
        power, kin.accel_time, aperture, scenario.metrics,
        array.beam_fraction, array.shape_factor,
    )
    return _sweep_row(scenario, aperture, power, breakdown)


def _cmd_roadmap(args):
    scenario = _load(args)
    if scenario.budget_target is None:
        raise ValidationError("roadmap requires a target.budget scenario")
    if scenario.curve is None:
        raise ValidationError("roadmap requires a [techcurve] block")
    designations = [float(x) for x in args.stages.split(",")]
    plan = plan_stages(
        designations, scenario.budget_target, scenario.curve,
        scenario.payload, scenario.sail, scenario.array.wavelength,
        scenario.metrics, scenario.array.beam_fraction,
    )
    rows = [
        {
            "designation": stage.designation,
            "beta0": stage.beta,
            "entry_month": stage.entry_month,
            "a1_usd_per_W": stage.metrics.laser_usd_per_watt,
            "d_m": stage.design.aperture,
            "P0_W": stage.design.power,
            "C_T": stage.design.breakdown.total,
        }
        for stage in plan.stages
    ]
    _emit(rows, "csv", args)
    return 0


def _cmd_validate(args):
    results = run_all()
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name}: {result.detail}")
    return 0 if all(r.passed for r in results) else 1


def _add_common(parser, scenario_required=True):
    if scenario_required:
        parser.add_argument("scenario", help="scenario file path")
        parser.add_argument(
            "--set", action="append", metavar="FIELD=VALUE",
            help="override a scenario field (e.g. 'metrics.a1=0.1 usd/W')",
        )
    parser.add_argument("-o", "--output", help="output path (default stdout)")
    parser.add_argument(
        "--metadata", action="store_true",
        help="append a generation-time record (off by default for determinism)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sailcost",
        description="Techno-economic calculator for beam-driven light-sail systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, doc in (
        ("solve", _cmd_solve, "kinematics and costs at an explicit design point"),
        ("optimize", _cmd_optimize, "minimum-cost design for the target speed"),
        ("max-speed", _cmd_max_speed, "fastest design at a fixed budget"),
        ("energy", _cmd_energy, "per-shot energy and energy-side costs"),
    ):
        p = sub.add_parser(name, help=doc)
        _add_common(p)
        p.set_defaults(func=func)
        if name == "energy":
            p.add_argument("--lifetime-hours", type=float, help="laser lifetime for grid-energy cost")
            p.add_argument("--wall-plug", type=float, default=0.5, help="wall-plug efficiency")

    p = sub.add_parser("sweep", help="sweep one field, emit a CSV table")
    _add_common(p)
    p.add_argument("--axis", required=True, help="field path, e.g. array.d or metrics.a1")
    p.add_argument("--from", dest="start", required=True, help="start value (with unit)")
    p.add_argument("--to", dest="stop", required=True, help="end value (with unit)")
    p.add_argument("--points", type=int, required=True)
    scale = p.add_mutually_exclusive_group()
    scale.add_argument("--log", action="store_true")
    scale.add_argument("--linear", action="store_true")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("roadmap", help="staged entry dates under a budget")
    _add_common(p)
    p.add_argument(
        "--stages", required=True,
        help="comma-separated stage designations in percent of c, e.g. 0.1,1,20",
    )
    p.set_defaults(func=_cmd_roadmap)

    p = sub.add_parser("validate", help="run the built-in golden checks")
    _add_common(p, scenario_required=False)
    p.set_defaults(func=_cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SailcostError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"io_error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal_error: {exc!r}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
