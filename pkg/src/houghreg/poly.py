"""Exact multivariate polynomials over a pluggable coefficient field.

A polynomial is a frozen value: a ring descriptor plus a tuple of
``(exponent_tuple, coefficient)`` terms kept sorted strictly decreasing
under the ring's term ordering, with no zero coefficients stored.  The
zero polynomial has an empty term tuple.  Keeping terms sorted makes
leading-term access O(1) and equality structural, which is what the
reduced-Gröbner-basis uniqueness tests rely on.

Coefficients are ``fractions.Fraction`` for the rational field and
``ratfun.RatFun`` for rational-function fields; both support the usual
arithmetic operators, so the polynomial code never dispatches on the
field for plain arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd

from .errors import BindingError, LeadingTermError, RingMismatchError
from .orders import DEGREVLEX, TermOrder


@dataclass(frozen=True)
class RationalField:
    """The field of rationals; elements are ``fractions.Fraction``."""

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into QQ")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def inv(self, c):
        return 1 / c

    def canonical_multiplier(self, terms):
        """Scale factor making a QQ-polynomial primitive with positive
        leading coefficient (integer coefficients, content 1)."""
        num = 0
        den = 1
        for _, c in terms:
            num = _int_gcd(num, c.numerator)
            den = den * c.denominator // _int_gcd(den, c.denominator)
        content = Fraction(num, den)
        if terms[0][1] < 0:
            content = -content
        return 1 / content


QQ = RationalField()


@dataclass(frozen=True)
class Ring:
    """Ring descriptor: indeterminate names, coefficient field, ordering."""

    names: tuple[str, ...]
    field: object
    order: TermOrder

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate indeterminate names in {self.names}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise BindingError(f"{name!r} is not an indeterminate of {self.names}") from None

    def monomial(self, exp, coeff=1) -> Poly:
        c = self.field.coerce(coeff)
        if not c:
            return Poly(self, ())
        if len(exp) != self.nvars:
            raise BindingError(f"exponent length {len(exp)} != {self.nvars}")
        return Poly(self, ((tuple(exp), c),))

    def var(self, name: str) -> Poly:
        exp = [0] * self.nvars
        exp[self.index(name)] = 1
        return self.monomial(exp)

    def const(self, value) -> Poly:
        return self.monomial((0,) * self.nvars, value)

    @property
    def zero(self) -> Poly:
        return Poly(self, ())

    @property
    def one(self) -> Poly:
        return self.const(1)

    def from_terms(self, items) -> Poly:
        """Build a polynomial from (exponent, coefficient) pairs, merging
        duplicates and restoring the sorted-term invariant."""
        acc = {}
        for exp, c in items:
            exp = tuple(exp)
            c = self.field.coerce(c)
            prev = acc.get(exp)
            c = c if prev is None else prev + c
            if c:
                acc[exp] = c
            elif prev is not None:
                del acc[exp]
        key = self.order.key
        terms = sorted(acc.items(), key=lambda t: key(t[0]), reverse=True)
        return Poly(self, tuple(terms))


def ring(names, field=QQ, order=DEGREVLEX) -> Ring:
    return Ring(tuple(names), field, order)


@dataclass(frozen=True)
class Poly:
    ring: Ring
    terms: tuple

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def leading_term(self):
        """Maximal (exponent, coefficient) under the ring's ordering."""
        if not self.terms:
            raise LeadingTermError("the zero polynomial has no leading term")
        return self.terms[0]

    @property
    def leading_exp(self):
        return self.leading_term()[0]

    @property
    def leading_coeff(self):
        return self.leading_term()[1]

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def degree_in(self, index: int) -> int:
        if not self.terms:
            return -1
        return max(e[index] for e, _ in self.terms)

    def coefficients(self):
        """Coefficients in decreasing term order (leading first)."""
        return [c for _, c in self.terms]

    def constant_value(self):
        """The coefficient of 1 (the field zero if absent)."""
        zero_exp = (0,) * self.ring.nvars
        for e, c in self.terms:
            if e == zero_exp:
                return c
        return self.ring.field.zero

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def _check_ring(self, other: Poly):
        if self.ring != other.ring:
            raise RingMismatchError(f"rings differ: {self.ring.names} vs {other.ring.names}")

    # -- arithmetic ---------------------------------------------------

    def _merged(self, other: Poly, negate: bool) -> Poly:
        key = self.ring.order.key
        a, b = self.terms, other.terms
        out = []
        i = j = 0
        na, nb = len(a), len(b)
        while i < na and j < nb:
            ea, ca = a[i]
            eb, cb = b[j]
            if ea == eb:
                c = ca - cb if negate else ca + cb
                if c:
                    out.append((ea, c))
                i += 1
                j += 1
            elif key(ea) > key(eb):
                out.append(a[i])
                i += 1
            else:
                out.append((eb, -cb) if negate else b[j])
                j += 1
        out.extend(a[i:])
        if negate:
            out.extend((e, -c) for e, c in b[j:])
        else:
            out.extend(b[j:])
        return Poly(self.ring, tuple(out))

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = self.ring.const(other)
        self._check_ring(other)
        return self._merged(other, negate=False)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = self.ring.const(other)
        self._check_ring(other)
        return self._merged(other, negate=True)

    def __rsub__(self, other):
        return self.ring.const(other) - self

    def __neg__(self):
        return Poly(self.ring, tuple((e, -c) for e, c in self.terms))

    def scale(self, c) -> Poly:
        c = self.ring.field.coerce(c)
        if not c:
            return self.ring.zero
        return Poly(self.ring, tuple((e, c * ci) for e, ci in self.terms))

    def mul_term(self, exp, coeff) -> Poly:
        """Multiply by a single term; term order is multiplicative, so the
        sorted invariant is preserved without re-sorting."""
        c = self.ring.field.coerce(coeff)
        if not c:
            return self.ring.zero
        exp = tuple(exp)
        return Poly(
            self.ring,
            tuple((tuple(x + y for x, y in zip(e, exp)), c * ci) for e, ci in self.terms),
        )

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check_ring(other)
        if not self.terms or not other.terms:
            return self.ring.zero
        if len(other.terms) == 1:
            e, c = other.terms[0]
            return self.mul_term(e, c)
        if len(self.terms) == 1:
            e, c = self.terms[0]
            return other.mul_term(e, c)
        acc = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                e = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                prev = acc.get(e)
                c = c if prev is None else prev + c
                if c:
                    acc[e] = c
                elif prev is not None:
                    del acc[e]
        key = self.ring.order.key
        return Poly(self.ring, tuple(sorted(acc.items(), key=lambda t: key(t[0]), reverse=True)))

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    # -- normal forms of the value -----------------------------------

    def monic(self) -> Poly:
        """Scale so the leading coefficient is 1 in the coefficient field."""
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coeff))

    def normalized(self) -> Poly:
        """Canonical scalar multiple: primitive with positive leading
        coefficient over QQ, monic over a fraction field."""
        if not self.terms:
            return self
        return self.scale(self.ring.field.canonical_multiplier(self.terms))

    # -- substitution and evaluation ----------------------------------

    def substitute(self, bindings: dict, target: Ring | None = None) -> Poly:
        """Substitute polynomials or constants for indeterminates.

        Unbound indeterminates are carried over (they must exist in the
        target ring); the result is re-normalized in the target ring.
        """
        target = target or self.ring
        images = {}
        for name, img in bindings.items():
            idx = self.ring.index(name)  # raises BindingError for unknown names
            if isinstance(img, Poly):
                if img.ring != target:
                    raise RingMismatchError("substitution image lives in a different ring")
                images[idx] = img
            else:
                images[idx] = target.const(img)
        unbound = {}
        for idx, name in enumerate(self.ring.names):
            if idx not in images:
                unbound[idx] = name
        result = target.zero
        for exp, c in self.terms:
            term = target.const(c)
            for idx, e in enumerate(exp):
                if not e:
                    continue
                if idx in images:
                    term = term * images[idx] ** e
                else:
                    term = term * target.var(unbound[idx]) ** e
            result = result + term
        return result

    def evaluate(self, values):
        """Evaluate at a full point (sequence aligned with ring.names)."""
        if len(values) != self.ring.nvars:
            raise BindingError(f"expected {self.ring.nvars} values, got {len(values)}")
        total = self.ring.field.zero
        for exp, c in self.terms:
            v = c
            for val, e in zip(values, exp):
                if e:
                    v = v * val**e
            total = total + v
        return total

    def transport(self, target: Ring, rename: dict | None = None) -> Poly:
        """Rebuild this polynomial in ``target`` by matching names.

        Indeterminates actually used must exist in the target (after the
        optional renaming); unused ones may be dropped.
        """
        rename = rename or {}
        pos = []
        for name in self.ring.names:
            name = rename.get(name, name)
            pos.append(target.names.index(name) if name in target.names else None)
        items = []
        for exp, c in self.terms:
            new_exp = [0] * target.nvars
            for idx, e in enumerate(exp):
                if not e:
                    continue
                if pos[idx] is None:
                    raise BindingError(
                        f"{self.ring.names[idx]!r} is used but absent from target ring"
                    )
                new_exp[pos[idx]] = e
            items.append((tuple(new_exp), c))
        return target.from_terms(items)

    # -- rendering -----------------------------------------------------

    def _monomial_str(self, exp) -> str:
        parts = []
        for name, e in zip(self.ring.names, exp):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for i, (exp, c) in enumerate(self.terms):
            negative, body, is_one = _coeff_render(c)
            mono = self._monomial_str(exp)
            if mono:
                text = mono if is_one else f"{body}*{mono}"
            else:
                text = body
            if i == 0:
                chunks.append(f"-{text}" if negative else text)
            else:
                chunks.append(f" - {text}" if negative else f" + {text}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _coeff_render(c):
    """(negative, rendered absolute value, abs value is one) for a coefficient."""
    if isinstance(c, Fraction):
        negative = c < 0
        a = -c if negative else c
        return negative, str(a), a == 1
    return c.render_parts()  # RatFun and friends


def compare_terms(u, v, order: TermOrder) -> int:
    """Three-way comparison of exponent vectors under ``order``."""
    return order.compare(tuple(u), tuple(v))


def poly_divmod(f: Poly, g: Poly):
    """Division with remainder by a single divisor over a field.

    Returns (q, r) with f = q*g + r and no term of r divisible by LT(g).
    """
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    f._check_ring(g)
    ringd = f.ring
    key = ringd.order.key
    lt_exp, lt_coeff = g.leading_term()
    inv_lc = ringd.field.inv(lt_coeff)
    q_terms = []
    r_terms = []
    work = list(reversed(f.terms))  # ascending; pop() yields the current max
    while work:
        exp, c = work.pop()
        if all(x >= y for x, y in zip(exp, lt_exp)):
            shift = tuple(x - y for x, y in zip(exp, lt_exp))
            factor = c * inv_lc
            q_terms.append((shift, factor))
            # work -= factor * x^shift * g (leading terms cancel exactly)
            sub = [
                (tuple(x + y for x, y in zip(e, shift)), ci * factor)
                for e, ci in g.terms[1:]
            ]
            work = _merge_desc_sub(work, sub, key)
        else:
            r_terms.append((exp, c))
    q = Poly(ringd, tuple(q_terms)) if q_terms else ringd.zero
    r = Poly(ringd, tuple(r_terms)) if r_terms else ringd.zero
    return q, r


def _merge_desc_sub(work_asc, sub_desc, key):
    """work - sub, where work is ascending and sub is descending; returns
    a new ascending list."""
    out = []
    i = len(sub_desc) - 1  # ascending traversal of sub
    j = 0
    n = len(work_asc)
    while j < n and i >= 0:
        ew, cw = work_asc[j]
        es, cs = sub_desc[i]
        if ew == es:
            c = cw - cs
            if c:
                out.append((ew, c))
            j += 1
            i -= 1
        elif key(ew) < key(es):
            out.append(work_asc[j])
            j += 1
        else:
            out.append((es, -cs))
            i -= 1
    out.extend(work_asc[j:])
    while i >= 0:
        es, cs = sub_desc[i]
        out.append((es, -cs))
        i -= 1
    return out


def exact_div(f: Poly, g: Poly) -> Poly:
    """f / g when g divides f exactly; raises ArithmeticError otherwise."""
    q, r = poly_divmod(f, g)
    if not r.is_zero:
        raise ArithmeticError("inexact polynomial division")
    return q
