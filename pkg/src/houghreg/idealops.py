"""Elimination, saturation, intersection, and radical membership.

Auxiliary indeterminates for the saturation/intersection constructions are
prepended as a lexicographically greatest block (block elimination order),
so a single reduced basis computation both saturates and eliminates.
Radical membership never needs elimination, so its auxiliary variable is
appended under plain DegRevLex, which is considerably faster; 1 being in
the ideal does not depend on the ordering.
"""

from __future__ import annotations

from .errors import BindingError, RingMismatchError
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    groebner,
    ideal,
    is_member,
    normal_form,
    reduce_basis,
)
from .orders import DEGREVLEX, block_elim
from .poly import Poly, Ring, exact_div


def _fresh_name(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "_"
    return name


def _check_same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")


def eliminate(I: Ideal, kill) -> Ideal:
    """Generators of I ∩ K[remaining indeterminates].

    Computes a reduced basis under the block elimination order with the
    killed indeterminates in front and keeps the elements free of them.
    """
    kill_set = set(kill)
    unknown = kill_set.difference(I.ring.names)
    if unknown:
        raise BindingError(f"cannot eliminate unknown indeterminates {sorted(unknown)}")
    killed = tuple(n for n in I.ring.names if n in kill_set)
    rest = tuple(n for n in I.ring.names if n not in kill_set)
    target_order = I.ring.order if I.ring.order.kind != "blockelim" else DEGREVLEX
    target = Ring(rest, I.ring.field, target_order)
    if not killed:
        return ideal(target, [g.transport(target) for g in I.generators])
    work_ring = Ring(killed + rest, I.ring.field, block_elim(len(killed)))
    work = ideal(work_ring, [g.transport(work_ring) for g in I.generators])
    gb = reduce_basis(buchberger(work))
    k = len(killed)
    kept = [g for g in gb.elements if not any(g.leading_exp[:k])]
    return ideal(target, [g.transport(target) for g in kept])


def in_radical(f: Poly, I: Ideal) -> bool:
    """f ∈ √I, decided by 1 ∈ I + (1 - w·f) in an extended ring."""
    if f.ring != I.ring:
        raise RingMismatchError("polynomial and ideal live in different rings")
    if f.is_zero:
        return True
    ringd = I.ring
    w = _fresh_name("w", ringd.names)
    ext = Ring(ringd.names + (w,), ringd.field, DEGREVLEX)
    gens = [g.transport(ext) for g in I.generators]
    gens.append(ext.one - ext.var(w) * f.transport(ext))
    gb = buchberger(ideal(ext, gens))
    return len(gb.elements) == 1 and gb.elements[0].is_constant


def ideal_in_radical(J: Ideal, I: Ideal) -> bool:
    """J ⊆ √I, generator by generator."""
    _check_same_ring(I, J)
    return all(in_radical(g, I) for g in J.generators)


def _eliminate_front_block(work_ring: Ring, gens, original: Ring) -> Ideal:
    """Reduced basis in ``work_ring`` (one leading auxiliary variable),
    restricted to the original ring."""
    gb = reduce_basis(buchberger(ideal(work_ring, gens)))
    kept = [g for g in gb.elements if g.leading_exp[0] == 0]
    return ideal(original, [g.transport(original) for g in kept])


def saturate_by_poly(I: Ideal, g: Poly) -> Ideal:
    """I : g^∞ via (I + (1 - w·g)) ∩ original ring."""
    if not isinstance(g, Poly) or g.is_zero:
        raise ValueError("saturation by the zero polynomial")
    if g.ring != I.ring:
        raise RingMismatchError("polynomial and ideal live in different rings")
    ringd = I.ring
    w = _fresh_name("w", ringd.names)
    ext = Ring((w,) + ringd.names, ringd.field, block_elim(1))
    gens = [h.transport(ext) for h in I.generators]
    gens.append(ext.one - ext.var(w) * g.transport(ext))
    return _eliminate_front_block(ext, gens, ringd)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """Generators of I ∩ J via w·I + (1-w)·J and elimination of w."""
    _check_same_ring(I, J)
    if not I.generators or not J.generators:
        return ideal(I.ring, ())
    ringd = I.ring
    w = _fresh_name("w", ringd.names)
    ext = Ring((w,) + ringd.names, ringd.field, block_elim(1))
    wvar = ext.var(w)
    one_minus_w = ext.one - wvar
    gens = [wvar * f.transport(ext) for f in I.generators]
    gens.extend(one_minus_w * g.transport(ext) for g in J.generators)
    return _eliminate_front_block(ext, gens, ringd)


def saturate_by_ideal(I: Ideal, J: Ideal) -> Ideal:
    """I : J^∞ as the intersection of the single-generator saturations.

    A generator already inside I contributes the unit ideal and is skipped.
    The result is returned as its reduced basis, so golden outputs are
    deterministic.
    """
    _check_same_ring(I, J)
    if not J.generators:
        raise ValueError("saturation by the zero ideal")
    gb_I = groebner(I)
    result = None
    for g in J.generators:
        if is_member(g, gb_I):
            continue  # I : g^∞ = (1)
        part = saturate_by_poly(I, g)
        result = part if result is None else intersect(result, part)
    if result is None:
        return ideal(I.ring, (I.ring.one,))
    return ideal(I.ring, groebner(result).elements)


def quotient_by_poly(I: Ideal, g: Poly) -> Ideal:
    """The colon ideal I : g = (1/g)·(I ∩ (g))."""
    if g.is_zero:
        raise ValueError("quotient by the zero polynomial")
    inter = intersect(I, ideal(I.ring, (g,)))
    return ideal(I.ring, [exact_div(h, g) for h in inter.generators])


def quotient_by_ideal(I: Ideal, J: Ideal) -> Ideal:
    """The colon ideal I : J (intersection over generators)."""
    _check_same_ring(I, J)
    if not J.generators:
        return ideal(I.ring, (I.ring.one,))
    result = None
    for g in J.generators:
        part = quotient_by_poly(I, g)
        result = part if result is None else intersect(result, part)
    return ideal(I.ring, groebner(result).elements)


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """J ⊆ I, by reducing J's generators against a basis of I."""
    _check_same_ring(I, J)
    gb = groebner(I)
    return all(normal_form(g, gb.elements).is_zero for g in J.generators)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """Equality as ideals: mutual membership of generators."""
    return ideal_contains(I, J) and ideal_contains(J, I)


def is_unit_ideal(I: Ideal) -> bool:
    gb = groebner(I)
    return len(gb.elements) == 1 and gb.elements[0].is_constant
