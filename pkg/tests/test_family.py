import random
from fractions import Fraction

import pytest

from helpers import GOLDEN_NAMES, load_family

from houghreg import (
    Verdict,
    check_sigma_regularity,
    doubling_data,
    family,
    fiber_ideal,
    generic_fiber_basis,
    generic_regularity,
    hough_transform_point,
    ideal,
    ideal_equal,
    is_member,
    ratfun,
    ring,
)
from houghreg.errors import DegenerateFamilyError, DimensionError
from houghreg.poly import QQ, Ring
from houghreg.orders import DEGREVLEX


def _ambient(params, varnames):
    R = Ring(tuple(params) + tuple(varnames), QQ, DEGREVLEX)
    return R, {n: R.var(n) for n in R.names}


# -- generic fiber ----------------------------------------------------------


def test_generic_fiber_space_line(golden_families):
    gfb = generic_fiber_basis(golden_families["space_line"])
    assert [str(c) for c in gfb.ncc] == [
        "(a2 - a4)/(a1 - a3)",
        "(a2*a3 - a1*a4)/(a1 - a3)",
    ]
    assert str(gfb.denominator) == "a1 - a3"


def test_generic_fiber_canonical_line(golden_families):
    gfb = generic_fiber_basis(golden_families["canonical_space_line"])
    assert sorted(str(c) for c in gfb.ncc) == ["-a1", "-a2", "-a3", "-a4"]
    assert all(c.den == c.ring.one for c in gfb.ncc)
    assert gfb.denominator == gfb.denominator.ring.one


def test_generic_fiber_first_conic(golden_families):
    gfb = generic_fiber_basis(golden_families["first_conic"])
    assert [str(c) for c in gfb.ncc] == ["-a^2", "-a^3"]
    assert gfb.denominator == gfb.denominator.ring.one


def test_degenerate_family():
    R, v = _ambient(["a"], ["x"])
    fam = family(["a"], ["x"], [v["x"], v["x"] - 1])
    with pytest.raises(DegenerateFamilyError):
        generic_fiber_basis(fam)


# -- doubling ---------------------------------------------------------------


def test_doubling_first_conic(golden_families):
    dd = doubling_data(generic_fiber_basis(golden_families["first_conic"]))
    assert not dd.inverter_included
    D = dd.ring
    a, e = D.var("a"), D.var(dd.dual_names[0])
    assert list(dd.idc.generators) == [a**2 - e**2, a**3 - e**3]
    assert list(dd.idelta.generators) == [a - e]


def test_doubling_space_line(golden_families):
    dd = doubling_data(generic_fiber_basis(golden_families["space_line"]))
    assert dd.inverter_included
    D = dd.ring
    a1, a2, a3, a4 = (D.var(n) for n in ("a1", "a2", "a3", "a4"))
    e1, e2, e3, e4 = (D.var(n) for n in dd.dual_names)
    t = D.var(dd.t_name)
    expected = [
        ((a2 - a4) * (e1 - e3) - (e2 - e4) * (a1 - a3)).normalized(),
        ((a2 * a3 - a1 * a4) * (e1 - e3) - (e2 * e3 - e1 * e4) * (a1 - a3)).normalized(),
        ((a1 - a3) * (e1 - e3) * t - 1).normalized(),
    ]
    assert list(dd.idc.generators) == expected


def test_doubling_diagonal_by_definition(golden_families):
    for name in ("viviani", "quartic_curve"):
        dd = doubling_data(generic_fiber_basis(golden_families[name]))
        D = dd.ring
        expected = [
            D.var(p) - D.var(e)
            for p, e in zip(golden_families[name].parameters, dd.dual_names)
        ]
        assert list(dd.idelta.generators) == expected


# -- verdicts ---------------------------------------------------------------


def test_canonical_line_regular(golden_reports):
    rep = golden_reports["canonical_space_line"]
    assert rep.verdict is Verdict.SIGMA_REGULAR
    assert rep.denominator == rep.denominator.ring.one
    assert rep.open_set == "A^4"


def test_first_conic_regular(golden_reports):
    rep = golden_reports["first_conic"]
    assert rep.verdict is Verdict.SIGMA_REGULAR
    assert rep.radical_test is True


def test_quartic_regular_and_inverter_matters(golden_families, golden_reports):
    rep = golden_reports["quartic_curve"]
    assert rep.verdict is Verdict.SIGMA_REGULAR
    stripped = check_sigma_regularity(golden_families["quartic_curve"], inverter="never")
    assert stripped.radical_test is False


def test_second_conic_not_decided(golden_reports):
    rep = golden_reports["second_conic"]
    assert rep.verdict is Verdict.NOT_DECIDED
    assert rep.radical_test is False
    assert rep.elimination is not None and not rep.elimination.generators


def test_viviani_generically_regular(golden_reports):
    rep = golden_reports["viviani"]
    assert rep.verdict is Verdict.GENERICALLY_REGULAR
    assert str(rep.witness) == "a2"
    assert rep.open_set == "A^2 \\ {a2 = 0}"
    D = rep.doubling.ring
    expected = ideal(
        D,
        [D.var("a2"), D.var("e2"), D.var("e1") + D.var("a1"), D.var("t") - 1],
    )
    assert ideal_equal(rep.saturation, expected)
    assert [str(g) for g in rep.elimination.generators] == ["a2"]


def test_monomial_not_decided(golden_reports):
    rep = golden_reports["monomial_curve"]
    assert rep.verdict is Verdict.NOT_DECIDED
    assert rep.radical_test is False
    assert str(rep.denominator) == "a1*a2"
    D = rep.doubling.ring
    a1, a2 = D.var("a1"), D.var("a2")
    e1, e2 = (D.var(n) for n in rep.doubling.dual_names)
    assert is_member(a1**5 - e1**5, rep.saturation)
    assert is_member(a2**5 - e2**5, rep.saturation)


def test_generic_regularity_runs_after_radical_failure(golden_families):
    fam = golden_families["viviani"]
    dd = doubling_data(generic_fiber_basis(fam))
    rep = generic_regularity(fam, dd)
    assert rep.verdict is Verdict.GENERICALLY_REGULAR
    assert str(rep.witness) == "a2"


def test_no_parameter_dependence_is_vacuously_regular():
    R, v = _ambient(["a"], ["x", "y"])
    fam = family(["a"], ["x", "y"], [v["x"] ** 2 + v["y"] ** 2 - 1])
    rep = check_sigma_regularity(fam)
    assert rep.verdict is Verdict.SIGMA_REGULAR
    assert rep.radical_test is None
    assert any("no parameter dependence" in note for note in rep.notes)


def test_inverter_policy_never_changes_verdicts(golden_families, golden_reports):
    for name, fam in golden_families.items():
        always = check_sigma_regularity(fam, inverter="always")
        assert always.verdict is golden_reports[name].verdict, name


# -- point transforms -------------------------------------------------------


def test_transform_quartic_point():
    R, v = _ambient(["a", "b"], ["x", "y"])
    fam = family(
        ["a", "b"], ["x", "y"],
        [v["y"] * (v["x"] - v["a"] * v["y"]) ** 2 - v["b"] * (v["x"] ** 4 + v["y"] ** 4)],
    )
    gamma = hough_transform_point(fam, (0, 1))
    P = gamma.ring
    assert list(gamma.generators) == [P.var("a") ** 2 - P.var("b")]


def test_transform_real_conic_origin():
    R, v = _ambient(["a", "b"], ["x", "y"])
    fam = family(["a", "b"], ["x", "y"], [v["x"] ** 2 + v["a"] * v["y"] ** 2 - v["b"]])
    gamma = hough_transform_point(fam, (0, 0))
    P = gamma.ring
    assert list(gamma.generators) == [P.var("b")]


def test_transform_line_point():
    R, v = _ambient(["a"], ["x"])
    fam = family(["a"], ["x"], [v["x"] - v["a"]])
    gamma = hough_transform_point(fam, (0,))
    P = gamma.ring
    assert list(gamma.generators) == [P.var("a")]
    with pytest.raises(DimensionError):
        hough_transform_point(fam, (0, 1))


def test_fiber_viviani(golden_families):
    fib = fiber_ideal(golden_families["viviani"], (1, 1))
    T = fib.ring
    x, y, z = (T.var(n) for n in T.names)
    assert ideal_equal(fib, ideal(T, [(z - 1) ** 2 + y**2 - 1, x**2 + y**2 + z**2 - 4]))


def test_fiber_real_conic():
    R, v = _ambient(["a", "b"], ["x", "y"])
    fam = family(["a", "b"], ["x", "y"], [v["x"] ** 2 + v["a"] * v["y"] ** 2 - v["b"]])
    fib = fiber_ideal(fam, (-1, 0))
    T = fib.ring
    assert list(fib.generators) == [T.var("x") ** 2 - T.var("y") ** 2]


def test_fiber_degenerate_point():
    R, v = _ambient(["a"], ["x"])
    fam = family(["a"], ["x"], [v["a"] * v["x"] ** 2 + v["x"]])
    fib = fiber_ideal(fam, (0,))
    T = fib.ring
    assert list(fib.generators) == [T.var("x")]


# -- structural properties --------------------------------------------------


def test_membership_duality_canonical_line(golden_families):
    # points on the fiber transform to ideals vanishing at the parameters
    fam = golden_families["canonical_space_line"]
    rng = random.Random(61)
    for _ in range(10):
        alpha = tuple(Fraction(rng.randint(-8, 8), rng.randint(1, 3)) for _ in range(4))
        t = Fraction(rng.randint(-8, 8), rng.randint(1, 3))
        p = (alpha[0] * t + alpha[1], alpha[2] * t + alpha[3], t)
        for g in fam.generators:
            assert g.evaluate(alpha + p) == 0
        gamma = hough_transform_point(fam, p)
        for g in gamma.generators:
            assert g.evaluate(alpha) == 0


def test_membership_duality_first_conic(golden_families):
    fam = golden_families["first_conic"]
    rng = random.Random(67)
    for _ in range(10):
        alpha = Fraction(rng.randint(1, 9), rng.randint(1, 3))
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
        y = (x**2 - alpha**3) / alpha**2
        gamma = hough_transform_point(fam, (x, y))
        for g in gamma.generators:
            assert g.evaluate((alpha,)) == 0


def test_doubling_swap_symmetry(golden_families):
    # renaming a <-> e maps I(DC) to itself
    for name in ("viviani", "space_line", "first_conic"):
        dd = doubling_data(generic_fiber_basis(golden_families[name]))
        swap = {}
        for p, e in zip(golden_families[name].parameters, dd.dual_names):
            swap[p] = e
            swap[e] = p
        renamed = ideal(
            dd.ring, [g.transport(dd.ring, rename=swap) for g in dd.idc.generators]
        )
        assert ideal_equal(renamed, dd.idc), name


def test_witness_swap_lies_in_saturation(golden_reports):
    rep = golden_reports["viviani"]
    dd = rep.doubling
    swap = dict(zip(rep.family.parameters, dd.dual_names))
    h_e = rep.witness.transport(dd.ring, rename=swap)
    assert is_member(h_e, rep.saturation)


def test_hypersurface_fast_path_agrees_with_general(golden_families):
    for name in ("first_conic", "second_conic"):
        fam = golden_families[name]
        auto = check_sigma_regularity(fam, inverter="auto")
        general = check_sigma_regularity(fam, inverter="always")
        assert auto.verdict is general.verdict
        assert not auto.doubling.inverter_included
        assert general.doubling.inverter_included
