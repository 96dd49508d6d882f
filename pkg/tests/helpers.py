"""Shared builders for the test suite: golden families, random polynomials,
and small oracles."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from houghreg import (
    FamilySpec,
    Ideal,
    Ring,
    QQ,
    DEGREVLEX,
    ideal,
    ideal_equal,
    parse_family_file,
    quotient_by_ideal,
)

FAMILY_DIR = Path(__file__).resolve().parent.parent / "families"

GOLDEN_NAMES = (
    "space_line",
    "canonical_space_line",
    "first_conic",
    "second_conic",
    "quartic_curve",
    "viviani",
    "monomial_curve",
)


def load_family(name: str) -> FamilySpec:
    text = (FAMILY_DIR / f"{name}.family").read_text()
    return parse_family_file(text).spec


def family_path(name: str) -> str:
    return str(FAMILY_DIR / f"{name}.family")


def random_poly(rng: random.Random, ringd: Ring, max_terms=4, max_deg=3, coeff=5):
    """Random small polynomial with integer coefficients; may be zero."""
    items = []
    for _ in range(rng.randint(1, max_terms)):
        exp = [0] * ringd.nvars
        budget = rng.randint(0, max_deg)
        for _ in range(budget):
            exp[rng.randrange(ringd.nvars)] += 1
        c = rng.randint(-coeff, coeff)
        items.append((tuple(exp), Fraction(c)))
    return ringd.from_terms(items)


def random_nonzero_poly(rng, ringd, **kw):
    while True:
        p = random_poly(rng, ringd, **kw)
        if p:
            return p


def random_ideal(rng: random.Random, ringd: Ring, max_gens=3) -> Ideal:
    gens = [random_nonzero_poly(rng, ringd) for _ in range(rng.randint(2, max_gens))]
    return ideal(ringd, gens)


def saturation_by_quotients(I: Ideal, J: Ideal) -> Ideal:
    """Independent saturation oracle: iterate the colon ideal I : J : J : ...
    until it stabilizes."""
    current = I
    for _ in range(50):
        step = quotient_by_ideal(current, J)
        if ideal_equal(step, current):
            return current
        current = step
    raise AssertionError("quotient iteration did not stabilize")


def brute_force_eval(poly, values):
    """Term-by-term evaluation oracle with plain Fraction arithmetic."""
    total = Fraction(0)
    for exp, c in poly.terms:
        v = Fraction(c)
        for val, e in zip(values, exp):
            for _ in range(e):
                v *= val
        total += v
    return total
