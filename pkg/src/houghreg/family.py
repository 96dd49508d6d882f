"""Parametrized families of affine schemes and the regularity analysis.

A family F(a, x) lives in the combined ring QQ[a, x] (parameters first).
The generic fiber is obtained by moving the coefficients into QQ(a); its
reduced basis, listed with increasing leading terms, yields the list of
non-constant coefficients and the denominator whose non-vanishing locus
carries the free restriction of the family.  Doubling the parameters
produces the ideal whose zero set is the pairs of parameters with equal
fibers; the regularity verdicts are radical-containment and saturation
questions against the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DegenerateFamilyError, DimensionError
from .groebner import GroebnerBasis, Ideal, groebner, ideal
from .idealops import eliminate, ideal_in_radical, saturate_by_ideal
from .orders import DEGREVLEX, TermOrder
from .poly import Poly, QQ, Ring
from .ratfun import FractionField, RatFun, lcm_denominators


@dataclass(frozen=True)
class FamilySpec:
    """The family F(a, x): parameter names, variable names, generators in
    QQ[a, x], and a degree-compatible ordering on the variables."""

    parameters: tuple[str, ...]
    variables: tuple[str, ...]
    generators: tuple
    order: TermOrder = DEGREVLEX

    def __post_init__(self):
        if not self.parameters or not self.variables:
            raise ValueError("a family needs at least one parameter and one variable")
        overlap = set(self.parameters) & set(self.variables)
        if overlap:
            raise ValueError(f"parameter/variable names overlap: {sorted(overlap)}")
        if not self.order.degree_compatible:
            raise ValueError("the family ordering must be degree-compatible "
                             "(deglex or degrevlex)")
        if not self.generators or all(g.is_zero for g in self.generators):
            raise ValueError("a family needs a non-zero generator")
        ambient = self.ambient_ring
        for g in self.generators:
            if not isinstance(g, Poly) or g.ring != ambient:
                raise ValueError("generators must live in the family's ambient ring")

    @property
    def ambient_ring(self) -> Ring:
        return Ring(self.parameters + self.variables, QQ, self.order)

    @property
    def parameter_ring(self) -> Ring:
        return Ring(self.parameters, QQ, DEGREVLEX)

    @property
    def variable_ring(self) -> Ring:
        return Ring(self.variables, QQ, self.order)

    @property
    def generic_ring(self) -> Ring:
        return Ring(self.variables, FractionField(self.parameter_ring), self.order)

    def uses_parameters(self) -> bool:
        m = len(self.parameters)
        return any(
            any(exp[:m].count(0) < m for exp, _ in g.terms) for g in self.generators
        )


def family(parameters, variables, generators, order: TermOrder = DEGREVLEX) -> FamilySpec:
    return FamilySpec(tuple(parameters), tuple(variables), tuple(generators), order)


# -- generic fiber ---------------------------------------------------------


def _to_generic(fam: FamilySpec, g: Poly, gring: Ring) -> Poly:
    m = len(fam.parameters)
    params = fam.parameter_ring
    grouped = {}
    for exp, c in g.terms:
        grouped.setdefault(exp[m:], []).append((exp[:m], c))
    field = gring.field
    return gring.from_terms(
        (x_exp, field.coerce(params.from_terms(parts))) for x_exp, parts in grouped.items()
    )


@dataclass(frozen=True)
class GenericFiberBasis:
    """Reduced basis of the generic fiber with its coefficient data.

    ``ncc`` lists the non-constant coefficients in the order induced by
    the basis (increasing leading terms, coefficients of each element in
    decreasing term order); ``denominator`` is their denominators' lcm.
    """

    family: FamilySpec
    basis: GroebnerBasis
    ncc: tuple
    denominator: Poly


def generic_ideal(fam: FamilySpec) -> Ideal:
    """The family's ideal with coefficients extended to QQ(a)."""
    gring = fam.generic_ring
    return ideal(gring, [_to_generic(fam, g, gring) for g in fam.generators])


def generic_fiber_basis(fam: FamilySpec) -> GenericFiberBasis:
    basis = groebner(generic_ideal(fam))
    if len(basis.elements) == 1 and basis.elements[0].is_constant:
        raise DegenerateFamilyError("the generic fiber ideal is the unit ideal")
    ncc = tuple(
        c for el in basis.elements for c in el.coefficients() if not c.is_constant
    )
    den = lcm_denominators(ncc) if ncc else fam.parameter_ring.one
    return GenericFiberBasis(fam, basis, ncc, den)


# -- doubling --------------------------------------------------------------


def _fresh(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "_"
    return name


@dataclass(frozen=True)
class DoublingData:
    """Doubled parameter ring QQ[a, e, t] with the ideal of doubling
    coefficients and the diagonal ideal."""

    fiber: GenericFiberBasis
    ring: Ring
    dual_names: tuple[str, ...]
    t_name: str
    idc: Ideal
    idelta: Ideal
    inverter_included: bool


def doubling_data(gfb: GenericFiberBasis, inverter: str = "auto") -> DoublingData:
    """Build I(DC) and the diagonal ideal from the generic fiber data.

    ``inverter`` controls the generator making d(a)d(e) invertible:
    "always" adds it, "never" drops it, and "auto" adds it except on the
    hypersurface fast path (principal ideal with denominator 1), where
    nothing needs inverting.
    """
    if inverter not in ("auto", "always", "never"):
        raise ValueError(f"unknown inverter policy {inverter!r}")
    fam = gfb.family
    params = fam.parameters
    taken = set(params)
    duals = []
    for i in range(len(params)):
        name = _fresh(f"e{i + 1}", taken)
        taken.add(name)
        duals.append(name)
    t_name = _fresh("t", taken)
    dring = Ring(params + tuple(duals) + (t_name,), QQ, DEGREVLEX)
    e_map = dict(zip(params, duals))

    idc_gens = []
    for rf in gfb.ncc:
        p_a = rf.num.transport(dring)
        p_e = rf.num.transport(dring, rename=e_map)
        d_a = rf.den.transport(dring)
        d_e = rf.den.transport(dring, rename=e_map)
        g = p_a * d_e - p_e * d_a
        if g:
            idc_gens.append(g.normalized())

    hypersurface = len(gfb.basis.elements) == 1 and gfb.denominator.is_constant
    include = inverter == "always" or (inverter == "auto" and not hypersurface)
    if include:
        d_a = gfb.denominator.transport(dring)
        d_e = gfb.denominator.transport(dring, rename=e_map)
        idc_gens.append((d_a * d_e * dring.var(t_name) - 1).normalized())

    diag = [dring.var(p) - dring.var(e) for p, e in zip(params, duals)]
    return DoublingData(
        fiber=gfb,
        ring=dring,
        dual_names=tuple(duals),
        t_name=t_name,
        idc=ideal(dring, idc_gens),
        idelta=ideal(dring, diag),
        inverter_included=include,
    )


# -- verdicts and reports --------------------------------------------------


class Verdict(Enum):
    SIGMA_REGULAR = "sigma-regular"
    GENERICALLY_REGULAR = "generically-regular"
    NOT_DECIDED = "not-decided"


EXIT_CODES = {
    Verdict.SIGMA_REGULAR: 0,
    Verdict.GENERICALLY_REGULAR: 2,
    Verdict.NOT_DECIDED: 3,
}


@dataclass(frozen=True)
class RegularityReport:
    family: FamilySpec
    verdict: Verdict
    fiber: GenericFiberBasis
    doubling: DoublingData
    radical_test: bool | None
    saturation: Ideal | None
    elimination: Ideal | None
    witness: Poly | None
    open_set: str | None
    notes: tuple = ()

    @property
    def denominator(self) -> Poly:
        return self.fiber.denominator

    @property
    def ncc(self) -> tuple:
        return self.fiber.ncc


def _factor_text(p: Poly) -> str:
    return str(p) if len(p.terms) == 1 else f"({p})"


def open_set_text(m: int, factors) -> str:
    """Render A^m minus the vanishing locus of the given factors (constants
    are dropped; no factors means the whole parameter space)."""
    real = [f for f in factors if f is not None and not f.is_constant]
    if not real:
        return f"A^{m}"
    product = "*".join(_factor_text(f) for f in real)
    return f"A^{m} \\ {{{product} = 0}}"


def check_sigma_regularity(fam: FamilySpec, inverter: str = "auto") -> RegularityReport:
    """Decide Hough regularity of the family.

    Runs the radical-containment criterion on the doubling ideal; on
    failure falls through to the generic (saturation + elimination) check.
    """
    gfb = generic_fiber_basis(fam)
    m = len(fam.parameters)
    if not fam.uses_parameters():
        dd = doubling_data(gfb, "never")
        return RegularityReport(
            family=fam,
            verdict=Verdict.SIGMA_REGULAR,
            fiber=gfb,
            doubling=dd,
            radical_test=None,
            saturation=None,
            elimination=None,
            witness=None,
            open_set=open_set_text(m, []),
            notes=("no parameter dependence: every fiber is the same scheme, "
                   "the criterion holds vacuously",),
        )
    dd = doubling_data(gfb, inverter)
    if ideal_in_radical(dd.idelta, dd.idc):
        return RegularityReport(
            family=fam,
            verdict=Verdict.SIGMA_REGULAR,
            fiber=gfb,
            doubling=dd,
            radical_test=True,
            saturation=None,
            elimination=None,
            witness=None,
            open_set=open_set_text(m, [gfb.denominator]),
        )
    return generic_regularity(fam, dd)


def generic_regularity(fam: FamilySpec, dd: DoublingData) -> RegularityReport:
    """The fallback check once the radical test failed: saturate I(DC) by
    the diagonal and intersect with the parameter ring.  A nonzero element
    there witnesses regularity away from its zero locus."""
    gfb = dd.fiber
    m = len(fam.parameters)
    sat = saturate_by_ideal(dd.idc, dd.idelta)
    elim = eliminate(sat, dd.dual_names + (dd.t_name,))
    if elim.generators:
        key = elim.ring.order.key
        witness = min(
            elim.generators, key=lambda g: (g.total_degree(), key(g.leading_exp))
        )
        return RegularityReport(
            family=fam,
            verdict=Verdict.GENERICALLY_REGULAR,
            fiber=gfb,
            doubling=dd,
            radical_test=False,
            saturation=sat,
            elimination=elim,
            witness=witness,
            open_set=open_set_text(m, [gfb.denominator, witness]),
        )
    return RegularityReport(
        family=fam,
        verdict=Verdict.NOT_DECIDED,
        fiber=gfb,
        doubling=dd,
        radical_test=False,
        saturation=sat,
        elimination=elim,
        witness=None,
        open_set=None,
        notes=("the saturation meets the parameter ring in (0); "
               "no witness for generic regularity was found",),
    )


# -- point transforms ------------------------------------------------------


def hough_transform_point(fam: FamilySpec, point) -> Ideal:
    """The transform of a source point: substitute x := p into every
    generator, giving an ideal in QQ[a]."""
    if len(point) != len(fam.variables):
        raise DimensionError(
            f"expected {len(fam.variables)} coordinates, got {len(point)}"
        )
    target = fam.parameter_ring
    binds = {name: QQ.coerce(v) for name, v in zip(fam.variables, point)}
    gens = [g.substitute(binds, target=target).normalized() for g in fam.generators]
    return ideal(target, gens)


def fiber_ideal(fam: FamilySpec, alpha) -> Ideal:
    """The fiber over a parameter point: substitute a := alpha, giving an
    ideal in QQ[x]."""
    if len(alpha) != len(fam.parameters):
        raise DimensionError(
            f"expected {len(fam.parameters)} coordinates, got {len(alpha)}"
        )
    target = fam.variable_ring
    binds = {name: QQ.coerce(v) for name, v in zip(fam.parameters, alpha)}
    gens = [g.substitute(binds, target=target).normalized() for g in fam.generators]
    return ideal(target, gens)


# -- report rendering ------------------------------------------------------


def report_to_dict(rep: RegularityReport) -> dict:
    return {
        "verdict": rep.verdict.value,
        "denominator": str(rep.denominator),
        "ncc": [str(c) for c in rep.ncc],
        "idc_generators": [str(g) for g in rep.doubling.idc.generators],
        "saturation_generators": (
            [str(g) for g in rep.saturation.generators]
            if rep.saturation is not None
            else None
        ),
        "witness": str(rep.witness) if rep.witness is not None else None,
        "open_set": rep.open_set,
        "radical_test": rep.radical_test,
        "elimination_generators": (
            [str(g) for g in rep.elimination.generators]
            if rep.elimination is not None
            else None
        ),
        "notes": list(rep.notes),
    }


def render_report(rep: RegularityReport) -> str:
    fam = rep.family
    lines = []
    lines.append(
        f"family: parameters ({', '.join(fam.parameters)}), "
        f"variables ({', '.join(fam.variables)}), order {fam.order.kind}"
    )
    lines.append("generic fiber reduced basis:")
    for g in rep.fiber.basis.elements:
        lines.append(f"  {g}")
    ncc = ", ".join(str(c) for c in rep.ncc)
    lines.append(f"non-constant coefficients: [{ncc}]")
    lines.append(f"sigma-denominator: {rep.denominator}")
    lines.append("doubling ideal generators:")
    for g in rep.doubling.idc.generators:
        lines.append(f"  {g}")
    if not rep.doubling.inverter_included:
        lines.append("  (no inverter generator needed)")
    if rep.radical_test is not None:
        lines.append(f"diagonal contained in radical: {str(rep.radical_test).lower()}")
    if rep.saturation is not None:
        lines.append("saturation of the doubling ideal by the diagonal:")
        for g in rep.saturation.generators:
            lines.append(f"  {g}")
    if rep.elimination is not None:
        gens = ", ".join(str(g) for g in rep.elimination.generators) or "0"
        lines.append(f"saturation meets the parameter ring in: ({gens})")
    if rep.witness is not None:
        lines.append(f"witness: {rep.witness}")
    if rep.open_set is not None:
        lines.append(f"regular on: {rep.open_set}")
    for note in rep.notes:
        lines.append(f"note: {note}")
    lines.append(f"verdict: {rep.verdict.value}")
    return "\n".join(lines)
