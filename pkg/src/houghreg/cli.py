"""Command-line front end.

Subcommands: ``analyze`` (regularity report, exit code encodes the
verdict), ``gb`` (generic fiber basis, coefficient list, denominator),
``transform`` (transform ideal of one source point), ``detect``
(accumulator voting on data points).  Exit codes: 0 sigma-regular,
2 generically regular, 3 not decided, 1 any error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .detector import (
    accumulate_votes,
    accumulator,
    denominator_flags,
    detect_peak,
    perturb_points,
    sample_fiber_points,
)
from .errors import HoughregError
from .family import (
    EXIT_CODES,
    FamilySpec,
    check_sigma_regularity,
    family,
    generic_fiber_basis,
    hough_transform_point,
    render_report,
    report_to_dict,
)
from .familyfile import load_points_csv, parse_family_file
from .orders import ORDER_NAMES
from .poly import QQ, Ring


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # usage problems follow the error contract: exit 1
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="houghreg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="family file")
        p.add_argument("--order", choices=("degrevlex", "deglex"),
                       help="override the file's term order")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("analyze", help="decide Hough regularity")
    common(p)
    p.add_argument("--no-inverter", action="store_true",
                   help="drop the generator inverting the denominators")

    p = sub.add_parser("gb", help="print the generic fiber basis")
    common(p)

    p = sub.add_parser("transform", help="transform ideal of a source point")
    common(p)
    p.add_argument("--point", required=True,
                   help="comma-separated source coordinates, e.g. 0,1")

    p = sub.add_parser("detect", help="accumulator voting on data points")
    common(p)
    p.add_argument("--points", help="CSV file of data points")
    p.add_argument("--noise", help="perturb every coordinate by at most this amount")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    return parser


def _load_family(args) -> tuple:
    with open(args.file) as handle:
        ff = parse_family_file(handle.read())
    spec = ff.spec
    if args.order and ORDER_NAMES[args.order] != spec.order:
        order = ORDER_NAMES[args.order]
        ambient = Ring(spec.parameters + spec.variables, QQ, order)
        gens = [g.transport(ambient) for g in spec.generators]
        spec = family(spec.parameters, spec.variables, gens, order)
    return spec, ff.detector


def _cmd_analyze(args) -> int:
    spec, _ = _load_family(args)
    report = check_sigma_regularity(spec, "never" if args.no_inverter else "auto")
    if args.json:
        print(json.dumps(report_to_dict(report), indent=2))
    else:
        print(render_report(report))
    return EXIT_CODES[report.verdict]


def _cmd_gb(args) -> int:
    spec, _ = _load_family(args)
    gfb = generic_fiber_basis(spec)
    if args.json:
        print(
            json.dumps(
                {
                    "basis": [str(g) for g in gfb.basis.elements],
                    "ncc": [str(c) for c in gfb.ncc],
                    "denominator": str(gfb.denominator),
                },
                indent=2,
            )
        )
        return 0
    print("generic fiber reduced basis:")
    for g in gfb.basis.elements:
        print(f"  {g}")
    print("non-constant coefficients: [" + ", ".join(str(c) for c in gfb.ncc) + "]")
    print(f"sigma-denominator: {gfb.denominator}")
    return 0


def _cmd_transform(args) -> int:
    spec, _ = _load_family(args)
    coords = tuple(Fraction(part.strip()) for part in args.point.split(","))
    transform = hough_transform_point(spec, coords)
    gens = [str(g) for g in transform.generators]
    if args.json:
        print(json.dumps({"point": [str(c) for c in coords], "generators": gens}, indent=2))
        return 0
    if not gens:
        print("transform ideal: (0)")
    else:
        print("transform ideal generators:")
        for g in gens:
            print(f"  {g}")
    return 0


def _cmd_detect(args) -> int:
    spec, det = _load_family(args)
    if det is None or det.box is None or det.resolution is None:
        raise HoughregError(
            "the family file has no detector configuration ('detect box'/'detect res')"
        )
    rng = random.Random(args.seed)
    points = list(det.points)
    if det.sample is not None:
        alpha, count = det.sample
        points.extend(sample_fiber_points(spec, alpha, count, rng))
    if args.points:
        points.extend(load_points_csv(args.points))
    if not points:
        raise HoughregError("no data points (add 'point' lines, 'detect sample', or --points)")
    if args.noise:
        points = perturb_points(points, Fraction(args.noise), rng)
    acc = accumulator(det.box, det.resolution)
    acc = accumulate_votes(spec, points, acc)
    peak = detect_peak(acc)
    gfb = generic_fiber_basis(spec)
    mask, crossed = denominator_flags(gfb.denominator, acc)
    flat = 0
    for i in peak.index:
        flat = flat * acc.resolution + i
    peak_flagged = mask[flat]
    if args.json:
        print(
            json.dumps(
                {
                    "points": len(points),
                    "peak": {
                        "index": list(peak.index),
                        "center": [str(c) for c in peak.center],
                        "count": peak.count,
                    },
                    "denominator": str(gfb.denominator),
                    "denominator_cells": crossed,
                    "peak_on_denominator_locus": peak_flagged,
                },
                indent=2,
            )
        )
        return 0
    print(f"points: {len(points)}")
    print(f"peak cell index: {peak.index}")
    print("peak cell center: (" + ", ".join(str(c) for c in peak.center) + ")")
    print(f"peak count: {peak.count}")
    print(f"sigma-denominator: {gfb.denominator}")
    print(f"cells crossed by the denominator locus: {crossed}")
    print(f"peak cell on the denominator locus: {str(peak_flagged).lower()}")
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "gb": _cmd_gb,
    "transform": _cmd_transform,
    "detect": _cmd_detect,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (HoughregError, OSError, ValueError, ZeroDivisionError) as exc:
        print(f"houghreg: error: {exc}", file=sys.stderr)
        return 1


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
