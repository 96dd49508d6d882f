"""Accumulator-grid voting over the parameter space.

Each data point votes for the grid cells its transform crosses.  The
cell-incidence rule is: a cell is crossed by {g = 0} when the signs of g
at the cell's corners are not all strictly equal, or when g vanishes
exactly at the cell center.  Signs are computed in exact integer
arithmetic (denominators of the rational lattice are cleared once per
axis), so there are no false negatives from rounding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DetectorConfigError, DimensionError, NoVotesError
from .family import FamilySpec, fiber_ideal, hough_transform_point
from .poly import Poly, QQ


@dataclass(frozen=True)
class Accumulator:
    """Dense vote grid over a closed rational box, ``resolution`` cells per
    axis, counts stored row-major."""

    box: tuple
    resolution: int
    counts: tuple

    @property
    def dim(self) -> int:
        return len(self.box)

    @property
    def total_votes(self) -> int:
        return sum(self.counts)

    def cell_width(self, axis: int) -> Fraction:
        lo, hi = self.box[axis]
        return (hi - lo) / self.resolution

    def cell_center(self, index) -> tuple:
        return tuple(
            lo + (2 * i + 1) * (hi - lo) / (2 * self.resolution)
            for (lo, hi), i in zip(self.box, index)
        )

    def cell_of(self, point):
        """Multi-index of the cell containing a point of the open box."""
        idx = []
        for (lo, hi), c in zip(self.box, point):
            i = int((c - lo) * self.resolution / (hi - lo))
            idx.append(min(max(i, 0), self.resolution - 1))
        return tuple(idx)


def accumulator(box, resolution: int) -> Accumulator:
    cleaned = []
    for lo, hi in box:
        lo, hi = QQ.coerce(lo), QQ.coerce(hi)
        if lo >= hi:
            raise DetectorConfigError(f"empty box axis [{lo}, {hi}]")
        cleaned.append((lo, hi))
    if not cleaned:
        raise DetectorConfigError("the box needs at least one axis")
    if resolution < 1:
        raise DetectorConfigError("resolution must be a positive cell count")
    return Accumulator(tuple(cleaned), resolution, (0,) * resolution ** len(cleaned))


def _axis_lattice(lo: Fraction, hi: Fraction, steps: int):
    """Integer numerators and the common positive denominator of the
    values lo + j*(hi-lo)/steps for j = 0..steps."""
    den = lo.denominator * hi.denominator // gcd(lo.denominator, hi.denominator)
    den *= steps
    nums = []
    for j in range(steps + 1):
        v = (lo * (steps - j) + hi * j) / steps
        nums.append(v.numerator * (den // v.denominator))
    return nums, den


def _integer_terms(g: Poly):
    """Clear coefficient denominators: positive multiple of g with int
    coefficients, as (exponent, int) pairs."""
    scale = 1
    for _, c in g.terms:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    return [(e, int(c * scale)) for e, c in g.terms]


def _values_on_lattice(g: Poly, axis_nums, axis_dens):
    """Integer values (fixed positive rescale of g) on the product lattice,
    flat row-major list."""
    m = len(axis_nums)
    terms = _integer_terms(g)
    degs = [max((e[i] for e, _ in terms), default=0) for i in range(m)]
    tables = []
    for i in range(m):
        d = axis_dens[i]
        table = []
        for n in axis_nums[i]:
            table.append([n**k * d ** (degs[i] - k) for k in range(degs[i] + 1)])
        tables.append(table)
    values = []
    for idx in itertools.product(*(range(len(nums)) for nums in axis_nums)):
        s = 0
        for e, c in terms:
            prod = c
            for i in range(m):
                prod *= tables[i][idx[i]][e[i]]
            s += prod
        values.append(s)
    return values


def incidence_mask(g: Poly, box, resolution: int):
    """Flat row-major booleans marking the cells {g = 0} crosses."""
    m = len(box)
    corner_nums, corner_dens = [], []
    center_nums, center_dens = [], []
    for lo, hi in box:
        nums, den = _axis_lattice(lo, hi, resolution)
        corner_nums.append(nums)
        corner_dens.append(den)
        nums2, den2 = _axis_lattice(lo, hi, 2 * resolution)
        center_nums.append([nums2[2 * j + 1] for j in range(resolution)])
        center_dens.append(den2)
    corner_vals = _values_on_lattice(g, corner_nums, corner_dens)
    center_vals = _values_on_lattice(g, center_nums, center_dens)

    corner_strides = [0] * m
    acc = 1
    for i in range(m - 1, -1, -1):
        corner_strides[i] = acc
        acc *= resolution + 1
    offsets = []
    for bits in itertools.product((0, 1), repeat=m):
        offsets.append(sum(b * corner_strides[i] for i, b in enumerate(bits)))

    mask = []
    flat_center = 0
    for cell in itertools.product(*(range(resolution),) * m):
        base = sum(cell[i] * corner_strides[i] for i in range(m))
        pos = neg = False
        for off in offsets:
            v = corner_vals[base + off]
            if v > 0:
                pos = True
            elif v < 0:
                neg = True
            else:
                pos = neg = True  # exact zero at a corner counts as a crossing
            if pos and neg:
                break
        hit = (pos and neg) or center_vals[flat_center] == 0
        mask.append(hit)
        flat_center += 1
    return mask


def accumulate_votes(fam: FamilySpec, points, acc: Accumulator) -> Accumulator:
    """Add one vote per point to every cell the point's transform crosses.

    A point with zero transform ideal (every parameter fits) votes for all
    cells.  Returns a new accumulator; counts only ever grow.
    """
    if len(fam.parameters) != acc.dim:
        raise DimensionError(
            f"family has {len(fam.parameters)} parameters, box has {acc.dim} axes"
        )
    counts = list(acc.counts)
    for p in points:
        gens = hough_transform_point(fam, p).generators
        if not gens:
            for i in range(len(counts)):
                counts[i] += 1
            continue
        voted = None
        for g in gens:
            mask = incidence_mask(g, acc.box, acc.resolution)
            if voted is None:
                voted = mask
            else:
                voted = [a or b for a, b in zip(voted, mask)]
        for i, hit in enumerate(voted):
            if hit:
                counts[i] += 1
    return Accumulator(acc.box, acc.resolution, tuple(counts))


@dataclass(frozen=True)
class Peak:
    index: tuple
    center: tuple
    count: int


def detect_peak(acc: Accumulator) -> Peak:
    """Cell with the maximal count; ties go to the lexicographically first
    cell index (row-major scan order)."""
    if acc.total_votes == 0:
        raise NoVotesError("the accumulator holds no votes")
    best_flat = max(range(len(acc.counts)), key=lambda i: (acc.counts[i], -i))
    index = []
    rem = best_flat
    for _ in range(acc.dim):
        rem, i = divmod(rem, acc.resolution)
        index.append(i)
    index.reverse()
    index = tuple(index)
    return Peak(index, acc.cell_center(index), acc.counts[best_flat])


def denominator_flags(denominator: Poly, acc: Accumulator):
    """Cells crossed by the zero locus of the σ-denominator.

    Returns (flat mask, crossed cell count).  Votes in such cells are kept;
    the flag only marks that specialization is not free there.
    """
    if denominator.is_constant:
        mask = [False] * len(acc.counts)
        return mask, 0
    mask = incidence_mask(denominator, acc.box, acc.resolution)
    return mask, sum(mask)


def sample_fiber_points(fam: FamilySpec, alpha, count: int, rng, spread=3, grain=16):
    """Exact rational points on the fiber over ``alpha``.

    Works for fibers with a generator linear in some variable: the other
    coordinates are drawn uniformly from [-spread, spread] (denominator
    ``grain``) and the linear one is solved for.  Points are accepted only
    if every generator vanishes.
    """
    fib = fiber_ideal(fam, alpha)
    if not fib.generators:
        raise DetectorConfigError("the fiber ideal is zero; nothing to sample")
    target = None
    for g in fib.generators:
        for vi in range(g.ring.nvars):
            if g.degree_in(vi) == 1:
                target = (g, vi)
                break
        if target:
            break
    if target is None:
        raise DetectorConfigError(
            "sampling needs a fiber generator linear in some variable"
        )
    g, vi = target
    lin = [(e, c) for e, c in g.terms if e[vi] == 1]
    rest = [(e, c) for e, c in g.terms if e[vi] == 0]
    ringd = g.ring
    a_poly = ringd.from_terms(((*e[:vi], 0, *e[vi + 1 :]), c) for e, c in lin)
    b_poly = ringd.from_terms(rest)
    points = []
    seen = set()
    for _ in range(200 * count):
        if len(points) >= count:
            break
        coords = [
            Fraction(rng.randint(-spread * grain, spread * grain), grain)
            for _ in range(ringd.nvars)
        ]
        coords[vi] = Fraction(0)
        a_val = a_poly.evaluate(coords)
        if not a_val:
            continue
        coords[vi] = -b_poly.evaluate(coords) / a_val
        point = tuple(coords)
        if point in seen:
            continue
        if all(not h.evaluate(point) for h in fib.generators):
            seen.add(point)
            points.append(point)
    if len(points) < count:
        raise DetectorConfigError(
            f"could only sample {len(points)} of {count} fiber points"
        )
    return points


def perturb_points(points, magnitude, rng, grain: int = 10**6):
    """Perturb every coordinate by an exact rational of absolute value at
    most ``magnitude``."""
    magnitude = QQ.coerce(magnitude)
    return [
        tuple(c + magnitude * Fraction(rng.randint(-grain, grain), grain) for c in p)
        for p in points
    ]
