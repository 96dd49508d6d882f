"""Line-oriented family files.

    # comments run to end of line; blank lines are ignored
    param a1 a2 a3 a4          # parameter names (one or more lines)
    var x y z                  # variable names
    order degrevlex            # or deglex; default degrevlex
    gen x - a1*y - a2*z        # one generator per line
    gen x - a3*y - a4*z

    # optional detector block
    detect box -4 4 -4 4       # lo hi per parameter
    detect res 64              # cells per axis
    detect sample 2 1 50       # fiber parameters, then point count
    point 1/2 2                # inline data points (decimals parsed exactly)

Numbers are integers, p/q rationals, or decimal strings; all are exact.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .exprs import parse_expression, parse_scalar
from .family import FamilySpec, family
from .orders import ORDER_NAMES, TermOrder
from .poly import QQ, Ring

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")


@dataclass(frozen=True)
class DetectorConfig:
    box: tuple | None
    resolution: int | None
    points: tuple
    sample: tuple | None  # (fiber parameter point, count)


@dataclass(frozen=True)
class FamilyFile:
    spec: FamilySpec
    detector: DetectorConfig | None


def _words(line: str):
    """(word, column) pairs of a line, 1-based columns."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def parse_family_file(text: str) -> FamilyFile:
    params: list[str] = []
    varnames: list[str] = []
    order_name = None
    gen_lines = []  # (line number, column offset, expression text)
    points = []  # (line number, coordinates)
    box = None
    resolution = None
    sample = None
    last_line = 1

    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        code = raw.split("#", 1)[0]
        words = _words(code)
        if not words:
            continue
        head, head_col = words[0]
        rest = words[1:]
        if head in ("param", "var"):
            if not rest:
                raise ParseError(f"'{head}' needs at least one name", lineno, head_col)
            store = params if head == "param" else varnames
            for name, col in rest:
                if not _NAME.match(name):
                    raise ParseError(f"invalid name {name!r}", lineno, col)
                if name in params or name in varnames:
                    raise ParseError(f"duplicate name {name!r}", lineno, col)
                store.append(name)
        elif head == "order":
            if len(rest) != 1:
                raise ParseError("'order' takes exactly one word", lineno, head_col)
            name, col = rest[0]
            if name not in ("degrevlex", "deglex"):
                raise ParseError(
                    f"unknown order {name!r} (degrevlex or deglex)", lineno, col
                )
            order_name = name
        elif head == "gen":
            expr = code[head_col + len("gen") - 1 :]
            if not expr.strip():
                raise ParseError("'gen' needs an expression", lineno, head_col)
            gen_lines.append((lineno, head_col + len("gen") - 1, expr))
        elif head == "point":
            coords = tuple(parse_scalar(w, lineno, c) for w, c in rest)
            if not coords:
                raise ParseError("'point' needs coordinates", lineno, head_col)
            points.append((lineno, coords))
        elif head == "detect":
            if not rest:
                raise ParseError("'detect' needs a subdirective", lineno, head_col)
            sub, sub_col = rest[0]
            args = rest[1:]
            if sub == "box":
                vals = [parse_scalar(w, lineno, c) for w, c in args]
                if not vals or len(vals) % 2:
                    raise ParseError("'detect box' needs lo/hi pairs", lineno, sub_col)
                box = tuple(
                    (vals[2 * i], vals[2 * i + 1]) for i in range(len(vals) // 2)
                )
            elif sub == "res":
                if len(args) != 1 or not args[0][0].isdigit():
                    raise ParseError("'detect res' needs a cell count", lineno, sub_col)
                resolution = int(args[0][0])
            elif sub == "sample":
                if len(args) < 2:
                    raise ParseError(
                        "'detect sample' needs fiber parameters and a count",
                        lineno,
                        sub_col,
                    )
                *coord_words, (count_word, count_col) = args
                if not count_word.isdigit():
                    raise ParseError("sample count must be an integer", lineno, count_col)
                alpha = tuple(parse_scalar(w, lineno, c) for w, c in coord_words)
                sample = (alpha, int(count_word))
            else:
                raise ParseError(f"unknown detect subdirective {sub!r}", lineno, sub_col)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno, head_col)

    if not params:
        raise ParseError("missing 'param' declaration", last_line, 1)
    if not varnames:
        raise ParseError("missing 'var' declaration", last_line, 1)
    if not gen_lines:
        raise ParseError("no generators ('gen' lines)", last_line, 1)

    order = ORDER_NAMES[order_name or "degrevlex"]
    ambient = Ring(tuple(params) + tuple(varnames), QQ, order)
    gens = []
    for lineno, col_offset, expr in gen_lines:
        gens.append(parse_expression(expr, ambient, lineno, col_offset))
    try:
        spec = family(params, varnames, gens, order)
    except ValueError as exc:
        raise ParseError(str(exc), last_line, 1) from None

    for lineno, coords in points:
        if len(coords) != len(varnames):
            raise ParseError(
                f"point has {len(coords)} coordinates, family has {len(varnames)} variables",
                lineno,
                1,
            )
    if sample is not None and len(sample[0]) != len(params):
        raise ParseError(
            f"sample point has {len(sample[0])} coordinates, family has "
            f"{len(params)} parameters",
            last_line,
            1,
        )
    if box is not None and len(box) != len(params):
        raise ParseError(
            f"box has {len(box)} axes, family has {len(params)} parameters",
            last_line,
            1,
        )

    detector = None
    if box is not None or resolution is not None or points or sample is not None:
        detector = DetectorConfig(
            box=box,
            resolution=resolution,
            points=tuple(c for _, c in points),
            sample=sample,
        )
    return FamilyFile(spec=spec, detector=detector)


def _scalar_text(value: Fraction) -> str:
    return str(value)


def render_family_file(ff: FamilyFile) -> str:
    """Canonical text for a family file; reparses to an equal FamilyFile."""
    spec = ff.spec
    lines = [
        "param " + " ".join(spec.parameters),
        "var " + " ".join(spec.variables),
        f"order {spec.order.kind}",
    ]
    lines.extend(f"gen {g}" for g in spec.generators)
    det = ff.detector
    if det is not None:
        if det.box is not None:
            flat = " ".join(f"{_scalar_text(lo)} {_scalar_text(hi)}" for lo, hi in det.box)
            lines.append(f"detect box {flat}")
        if det.resolution is not None:
            lines.append(f"detect res {det.resolution}")
        if det.sample is not None:
            alpha, count = det.sample
            lines.append(
                "detect sample " + " ".join(_scalar_text(a) for a in alpha) + f" {count}"
            )
        lines.extend(
            "point " + " ".join(_scalar_text(c) for c in coords) for coords in det.points
        )
    return "\n".join(lines) + "\n"


def load_points_csv(path) -> list:
    """Rows of exact rational coordinates from a CSV file."""
    points = []
    with open(path, newline="") as handle:
        for lineno, row in enumerate(csv.reader(handle), 1):
            cells = [cell.strip() for cell in row if cell.strip()]
            if not cells:
                continue
            points.append(
                tuple(parse_scalar(cell, lineno, i + 1) for i, cell in enumerate(cells))
            )
    return points
