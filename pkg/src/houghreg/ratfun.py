"""The fraction field of a rational polynomial ring.

``RatFun`` values are kept in a canonical form: numerator and denominator
coprime (polynomial gcd removed), denominator primitive with integer
coefficients and positive leading coefficient, and a constant denominator
absorbed into the numerator (so den = 1 whenever possible).  With that
convention equality is structural.

The polynomial gcd is computed by the classical recursion on the main
variable: split off the content (gcd of the coefficients with respect to
that variable, computed recursively) and run a pseudo-remainder sequence
on the primitive parts, keeping each remainder primitive.  Degrees in this
package are desk-scale, so no modular machinery is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, Ring, exact_div


# -- multivariate gcd ----------------------------------------------------


def _coeff_in_var(f: Poly, vi: int, k: int) -> Poly:
    """Coefficient of v^k when f is read as univariate in variable vi."""
    items = []
    for exp, c in f.terms:
        if exp[vi] == k:
            e = list(exp)
            e[vi] = 0
            items.append((tuple(e), c))
    return f.ring.from_terms(items)


def _content_in_var(f: Poly, vi: int) -> Poly:
    parts = {}
    for exp, c in f.terms:
        e = list(exp)
        deg = e[vi]
        e[vi] = 0
        parts.setdefault(deg, []).append((tuple(e), c))
    content = f.ring.zero
    for items in parts.values():
        content = poly_gcd(content, f.ring.from_terms(items))
        if content.is_constant and content:
            return f.ring.one
    return content


def _primitive_in_var(f: Poly, vi: int):
    """(content, primitive part) of f as a univariate in variable vi.

    Both are canonical up to a rational scalar, which is all the gcd
    recursion needs."""
    cont = _content_in_var(f, vi)
    if cont.is_constant:
        return f.ring.one, f.normalized()
    return cont, exact_div(f, cont)


def _pseudo_rem(f: Poly, g: Poly, vi: int) -> Poly:
    """Pseudo-remainder of f by g in variable vi (deg_v f >= deg_v g)."""
    dg = g.degree_in(vi)
    lcg = _coeff_in_var(g, vi, dg)
    r = f
    while r and r.degree_in(vi) >= dg:
        dr = r.degree_in(vi)
        lcr = _coeff_in_var(r, vi, dr)
        shift = [0] * r.ring.nvars
        shift[vi] = dr - dg
        r = r * lcg - g.mul_term(tuple(shift), 1) * lcr
    return r


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Gcd over the rationals, normalized primitive with positive leading
    coefficient; gcd(0, 0) = 0."""
    if f.is_zero:
        return g.normalized()
    if g.is_zero:
        return f.normalized()
    if f.is_constant or g.is_constant:
        return f.ring.one
    vi = next(
        i for i in range(f.ring.nvars) if f.degree_in(i) > 0 or g.degree_in(i) > 0
    )
    if f.degree_in(vi) == 0:
        return poly_gcd(f, _content_in_var(g, vi))
    if g.degree_in(vi) == 0:
        return poly_gcd(_content_in_var(f, vi), g)
    cf, pf = _primitive_in_var(f, vi)
    cg, pg = _primitive_in_var(g, vi)
    c = poly_gcd(cf, cg)
    a, b = (pf, pg) if f.degree_in(vi) >= g.degree_in(vi) else (pg, pf)
    while b:
        r = _pseudo_rem(a, b, vi)
        if r.is_zero:
            a, b = b, r
        else:
            a, b = b, _primitive_in_var(r, vi)[1]
    if a.degree_in(vi) == 0:
        a = a.ring.one
    return (c * a).normalized()


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero or g.is_zero:
        raise ZeroDivisionError("lcm with a zero polynomial")
    return exact_div(f * g, poly_gcd(f, g)).normalized()


# -- rational functions ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class RatFun:
    num: Poly
    den: Poly

    # construction goes through ratfun()/_make so values are canonical

    @property
    def ring(self) -> Ring:
        return self.num.ring

    def __bool__(self) -> bool:
        return bool(self.num)

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other if other.ring == self.ring else None
        if isinstance(other, Poly):
            # polynomials over other rings fall through to Poly's operators
            return ratfun(other) if other.ring == self.ring else None
        if isinstance(other, (int, Fraction)):
            return ratfun(self.ring.const(other))
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ratfun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ratfun(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # cross-cancel before multiplying to keep the gcd calls small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = self.num if g1.is_constant else exact_div(self.num, g1)
        d2 = o.den if g1.is_constant else exact_div(o.den, g1)
        n2 = o.num if g2.is_constant else exact_div(o.num, g2)
        d1 = self.den if g2.is_constant else exact_div(self.den, g2)
        return ratfun(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inv(self) -> RatFun:
        if not self.num:
            raise ZeroDivisionError("inverting the zero rational function")
        return ratfun(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return _make_checked(self.num**n, self.den**n) if n != 1 else self

    def evaluate(self, values) -> Fraction:
        """Value at a rational point; raises ZeroDivisionError on the
        denominator's zero locus."""
        d = self.den.evaluate(values)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.evaluate(values) / d

    def render_parts(self):
        """(negative, text of absolute value, abs value is 1) — hook used
        by the polynomial renderer."""
        num = self.num
        negative = bool(num) and num.leading_coeff < 0
        if negative:
            num = -num
        if self.den.is_constant:
            if num.is_constant:
                c = num.constant_value()
                return negative, str(c), c == 1
            text = str(num) if len(num.terms) == 1 else f"({num})"
            return negative, text, False
        num_text = str(num) if len(num.terms) == 1 else f"({num})"
        den = self.den
        den_plain = len(den.terms) == 1 and den.leading_coeff == 1
        den_text = str(den) if den_plain else f"({den})"
        return negative, f"{num_text}/{den_text}", False

    def __str__(self) -> str:
        negative, body, _ = self.render_parts()
        return f"-{body}" if negative else body

    def __repr__(self) -> str:
        return f"RatFun({self})"


def _make_checked(num: Poly, den: Poly) -> RatFun:
    if num.ring != den.ring:
        raise ValueError("numerator and denominator live in different rings")
    return ratfun(num, den)


def ratfun(num: Poly, den: Poly | None = None) -> RatFun:
    """Canonical rational function num/den.

    Removes the polynomial gcd, scales the denominator primitive with a
    positive leading coefficient, and absorbs constant denominators.
    """
    if den is None:
        den = num.ring.one
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    if num.is_zero:
        return RatFun(num.ring.zero, num.ring.one)
    g = poly_gcd(num, den)
    if not g.is_constant or g != num.ring.one:
        num = exact_div(num, g)
        den = exact_div(den, g)
    scale = den.ring.field.canonical_multiplier(den.terms)
    den = den.scale(scale)
    num = num.scale(scale)
    if den.is_constant:
        # den is primitive and positive, i.e. exactly 1 here
        return RatFun(num, num.ring.one)
    return RatFun(num, den)


@dataclass(frozen=True)
class FractionField:
    """Coefficient field QQ(a1, ..., am) over a parameter ring."""

    param_ring: Ring

    def coerce(self, value) -> RatFun:
        if isinstance(value, RatFun):
            if value.ring != self.param_ring:
                raise ValueError("rational function over a different parameter ring")
            return value
        if isinstance(value, Poly):
            if value.ring != self.param_ring:
                raise ValueError("polynomial over a different parameter ring")
            return ratfun(value)
        if isinstance(value, (int, Fraction)):
            return ratfun(self.param_ring.const(value))
        raise TypeError(f"cannot coerce {value!r} into {self}")

    @property
    def zero(self) -> RatFun:
        return RatFun(self.param_ring.zero, self.param_ring.one)

    @property
    def one(self) -> RatFun:
        return RatFun(self.param_ring.one, self.param_ring.one)

    def inv(self, c: RatFun) -> RatFun:
        return c.inv()

    def canonical_multiplier(self, terms):
        """Monic normalization: reduced-basis elements over QQ(a) are scaled
        so the leading coefficient is 1."""
        return terms[0][1].inv()


def lcm_denominators(values) -> Poly:
    """Least common multiple of the denominators of a non-empty list of
    rational functions, canonicalized (primitive, positive leading
    coefficient); 1 when no denominators occur."""
    values = list(values)
    if not values:
        raise ValueError("lcm_denominators needs a non-empty list")
    result = values[0].ring.one
    for rf in values:
        if rf.den.is_constant:
            continue
        result = poly_lcm(result, rf.den)
    return result
