"""Command line entry point: ``su3hom {simulate,matrix,verify}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import matfun
from .landscape import (
    PRESET_POINTS,
    PRESET_SPAN,
    PRESETS,
    ScenarioError,
    find_dips,
    load_scenario,
    preset,
    sweep,
    write_outputs,
)
from .symmetry import isotypic_traces, ordering_block
from .unitary import OmegaSU3, build_su3, unitarity_defect
from .verify import SUITES, run_suite


def _cplx(z: complex) -> str:
    return f"{z.real:.12g} {z.imag:+.12g}j"


def cmd_simulate(args) -> int:
    if args.scenario:
        scenario = load_scenario(args.scenario)
        if args.engine:
            from dataclasses import replace

            scenario = replace(scenario, engine=args.engine)
    else:
        scenario = preset(
            args.preset,
            points=args.points,
            span=args.span,
            engine=args.engine or "analytic",
        )
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = args.name or scenario.name
    landscape = sweep(scenario, jobs=args.jobs)
    csv_path, meta_path = out / f"{stem}.csv", out / f"{stem}.json"
    heatmap = None if args.no_heatmap else out / f"{stem}.pgm"
    dips = find_dips(landscape)[: args.dips] if scenario.engine == "analytic" else None
    write_outputs(landscape, csv_path, meta_path, heatmap, dips=dips)
    lo, hi = landscape.extrema["min"], landscape.extrema["max"]
    print(f"{scenario.name}: {landscape.rates.shape[0]}x{landscape.rates.shape[1]} grid, engine={scenario.engine}")
    print(f"  min rate {lo['rate']:.6g} at (tau1, tau2) = ({lo['tau1']:.6g}, {lo['tau2']:.6g})")
    print(f"  max rate {hi['rate']:.6g} at (tau1, tau2) = ({hi['tau1']:.6g}, {hi['tau2']:.6g})")
    print(f"  origin rate {landscape.rate_at(0.0, 0.0):.6g}")
    for d in dips or ():
        print(f"  dip at ({d.tau1:.6g}, {d.tau2:.6g}): rate {d.rate:.3g} ({d.relative:.3g} of max)")
    for path in (csv_path, meta_path, heatmap):
        if path is not None:
            print(f"  wrote {path}")
    return 0


def cmd_matrix(args) -> int:
    omega = OmegaSU3.from_string(args.omega)
    r = build_su3(omega)
    f = matfun.matrix_functions(r)
    np.set_printoptions(precision=6, suppress=True)
    print("R(Omega) =")
    print(r)
    print(f"unitarity defect max|R^dag R - I| = {unitarity_defect(r):.3g}")
    print(f"per = {_cplx(f.per)}")
    print(f"imm = {_cplx(f.imm)}")
    print(f"det = {_cplx(f.det)}")
    if args.traces:
        t = isotypic_traces(ordering_block(r))
        for label, trace, ref in zip(
            ("sym", "mixed", "anti"), t, (f.per, 2 * f.imm, f.det)
        ):
            print(f"trace[{label}] = {_cplx(trace)}   matfun: {_cplx(ref)}")
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        print(f"suite {name} (seed {args.seed})")
        for check in run_suite(name, seed=args.seed, count=args.count):
            print("  " + check.line())
            failed += not check.passed
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su3hom",
        description="Photon coincidence landscapes for two- and three-channel interferometers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="sweep a built-in preset (fig1a-fig1d) or a scenario file")
    src = sim.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=PRESETS)
    src.add_argument("--scenario", help="JSON scenario file")
    sim.add_argument("--engine", choices=("analytic", "quadrature"))
    sim.add_argument("--jobs", type=int, default=1)
    sim.add_argument("--points", type=int, default=PRESET_POINTS, help="grid points per axis (presets)")
    sim.add_argument("--span", type=float, default=PRESET_SPAN, help="axis half-width in units of 1/min(width) (presets)")
    sim.add_argument("--out-dir", default="results")
    sim.add_argument("--name", help="output file stem (default: scenario name)")
    sim.add_argument("--no-heatmap", action="store_true")
    sim.add_argument("--dips", type=int, default=5, help="number of refined dips to report")
    sim.set_defaults(func=cmd_simulate)

    mat = sub.add_parser("matrix", help="per / imm / det of R(Omega)")
    mat.add_argument(
        "--omega",
        required=True,
        help="a1,b1,a2,b2,a3,b3,g1,g2 in radians; 'pi' is allowed, e.g. 0,pi/2,0,pi/2,0,pi/2,0,0",
    )
    mat.add_argument("--traces", action="store_true", help="also print isotypic traces")
    mat.set_defaults(func=cmd_matrix)

    ver = sub.add_parser("verify", help="run randomized self-check suites")
    ver.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--count", type=int, help="number of random draws")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ScenarioError, ValueError, OSError) as exc:
        print(f"su3hom: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
