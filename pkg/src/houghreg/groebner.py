"""Buchberger's algorithm, normal forms, and reduced Gröbner bases.

Works over any coefficient field the polynomial layer supports (QQ and
QQ(a)).  Pair selection follows the normal strategy (minimal lcm degree
first, ties broken lexicographically on the pair indices) with the
coprime and chain criteria, so runs are deterministic and golden tests
are stable.  An alternative FIFO selection order is available to exercise
the uniqueness of the reduced basis across selection strategies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, RingMismatchError, SpecializationError
from .poly import Poly, QQ, Ring, _merge_desc_sub
from .ratfun import RatFun, lcm_denominators


@dataclass(frozen=True)
class Ideal:
    """An ideal presented by generators; zero generators are dropped."""

    ring: Ring
    generators: tuple


def ideal(ringd: Ring, generators) -> Ideal:
    gens = []
    for g in generators:
        if not isinstance(g, Poly):
            g = ringd.const(g)
        if g.ring != ringd:
            raise RingMismatchError("generator lives in a different ring")
        if g:
            gens.append(g)
    return Ideal(ringd, tuple(gens))


@dataclass(frozen=True)
class GroebnerBasis:
    """Basis elements sorted with increasing leading terms.

    When ``reduced`` is set the basis is the unique reduced Gröbner basis:
    monic elements, no term of any element divisible by another element's
    leading term."""

    ring: Ring
    elements: tuple
    reduced: bool


def _divides(small, big) -> bool:
    for x, y in zip(small, big):
        if x > y:
            return False
    return True


def normal_form(f: Poly, basis) -> Poly:
    """Remainder of f on division by a list of polynomials.

    No term of the result is divisible by any leading term of the basis,
    and f - result lies in the ideal the basis generates.  An empty basis
    returns f unchanged.
    """
    reducers = [(g.leading_exp, g.ring.field.inv(g.leading_coeff), g) for g in basis if g]
    if not reducers or f.is_zero:
        return f
    for _, _, g in reducers:
        if g.ring != f.ring:
            raise RingMismatchError("normal form across different rings")
    key = f.ring.order.key
    work = list(reversed(f.terms))  # ascending; pop() yields the current max
    out = []
    while work:
        exp, c = work.pop()
        hit = None
        for lt, inv_lc, g in reducers:
            if _divides(lt, exp):
                hit = (lt, inv_lc, g)
                break
        if hit is None:
            out.append((exp, c))
            continue
        lt, inv_lc, g = hit
        factor = c * inv_lc
        shift = tuple(x - y for x, y in zip(exp, lt))
        sub = [
            (tuple(x + y for x, y in zip(e, shift)), ci * factor) for e, ci in g.terms[1:]
        ]
        work = _merge_desc_sub(work, sub, key)
    return Poly(f.ring, tuple(out))


def s_polynomial(f: Poly, g: Poly) -> Poly:
    ef, cf = f.leading_term()
    eg, cg = g.leading_term()
    lcm = tuple(max(x, y) for x, y in zip(ef, eg))
    field = f.ring.field
    a = f.mul_term(tuple(x - y for x, y in zip(lcm, ef)), field.inv(cf))
    b = g.mul_term(tuple(x - y for x, y in zip(lcm, eg)), field.inv(cg))
    return a - b


def buchberger(I: Ideal, strategy: str = "normal") -> GroebnerBasis:
    """A Gröbner basis of I (minimal: leading terms pairwise non-dividing).

    ``strategy`` selects the next S-pair: "normal" picks minimal lcm degree
    with (i, j) tie-break, "fifo" processes pairs in creation order.  The
    reduced basis obtained downstream is the same either way.
    """
    if strategy not in ("normal", "fifo"):
        raise ValueError(f"unknown selection strategy {strategy!r}")
    ringd = I.ring
    G = []
    for g in I.generators:
        if g:
            gn = g.normalized()
            if gn.is_constant:
                return GroebnerBasis(ringd, (ringd.one,), reduced=True)
            G.append(gn)
    if not G:
        return GroebnerBasis(ringd, (), reduced=True)

    pending = {}

    def enqueue(t: int):
        et = G[t].leading_exp
        for i in range(t):
            L = tuple(max(x, y) for x, y in zip(G[i].leading_exp, et))
            pending[(i, t)] = (sum(L), L)

    for t in range(len(G)):
        enqueue(t)

    if strategy == "normal":
        select = lambda: min(pending, key=lambda p: (pending[p][0], p[0], p[1]))
    else:
        select = lambda: min(pending, key=lambda p: (p[1], p[0]))

    while pending:
        i, j = select()
        _, L = pending.pop((i, j))
        ei, ej = G[i].leading_exp, G[j].leading_exp
        if all(x == 0 or y == 0 for x, y in zip(ei, ej)):
            continue  # coprime leading terms: S-pair reduces to zero
        chained = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            if _divides(G[k].leading_exp, L):
                p1 = (i, k) if i < k else (k, i)
                p2 = (j, k) if j < k else (k, j)
                if p1 not in pending and p2 not in pending:
                    chained = True
                    break
        if chained:
            continue
        r = normal_form(s_polynomial(G[i], G[j]), G)
        if r.is_zero:
            continue
        r = r.normalized()
        if r.is_constant:
            return GroebnerBasis(ringd, (ringd.one,), reduced=True)
        G.append(r)
        enqueue(len(G) - 1)

    key = ringd.order.key
    minimal = _minimalize(G, key)
    return GroebnerBasis(ringd, tuple(minimal), reduced=False)


def _minimalize(elements, key):
    """Drop elements whose leading term another element's leading term
    divides; result sorted with increasing leading terms."""
    ordered = sorted(elements, key=lambda g: key(g.leading_exp))
    kept = []
    for g in ordered:
        lt = g.leading_exp
        if not any(_divides(h.leading_exp, lt) for h in kept):
            kept.append(g)
    return kept


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The reduced Gröbner basis (unique for the ideal and ordering)."""
    if gb.reduced:
        return gb
    key = gb.ring.order.key
    elems = _minimalize(list(gb.elements), key)
    for i in range(len(elems)):
        others = [elems[k] for k in range(len(elems)) if k != i]
        elems[i] = normal_form(elems[i], others).monic()
    elems.sort(key=lambda g: key(g.leading_exp))
    return GroebnerBasis(gb.ring, tuple(elems), reduced=True)


def groebner(I: Ideal, strategy: str = "normal") -> GroebnerBasis:
    """Reduced Gröbner basis of I."""
    return reduce_basis(buchberger(I, strategy))


def is_member(f: Poly, target) -> bool:
    """Ideal membership via normal form against a reduced basis.

    ``target`` may be an Ideal or an already-computed GroebnerBasis.
    """
    if isinstance(target, GroebnerBasis):
        gb = target if target.reduced else reduce_basis(target)
    else:
        gb = groebner(target)
    return normal_form(f, gb.elements).is_zero


def basis_denominator(gb: GroebnerBasis) -> Poly:
    """lcm of all coefficient denominators across the basis (1 if none)."""
    coeffs = [c for g in gb.elements for c in g.coefficients()]
    if not coeffs:
        field = gb.ring.field
        return field.param_ring.one
    return lcm_denominators(coeffs)


def specialize_basis(gb: GroebnerBasis, alpha) -> list:
    """Evaluate a QQ(a)-basis at a parameter point with nonzero denominator.

    For points off the denominator locus the reduced generic basis
    evaluates to the reduced basis of the specialized ideal, so the output
    is returned as-is (same monomials, evaluated coefficients).
    """
    field = gb.ring.field
    if not hasattr(field, "param_ring"):
        return list(gb.elements)  # no parameters: nothing to evaluate
    params: Ring = field.param_ring
    if len(alpha) != params.nvars:
        raise DimensionError(f"expected {params.nvars} coordinates, got {len(alpha)}")
    point = [QQ.coerce(v) for v in alpha]
    d = basis_denominator(gb)
    if not d.evaluate(point):
        raise SpecializationError(
            f"denominator {d} vanishes at {tuple(point)}; the point lies outside "
            "the free locus"
        )
    target = Ring(gb.ring.names, QQ, gb.ring.order)
    out = []
    for g in gb.elements:
        out.append(target.from_terms((e, c.evaluate(point)) for e, c in g.terms))
    return out
