import random

import pytest

from houghreg import DEGLEX, DEGREVLEX, LEX, block_elim, compare_terms
from houghreg.errors import DimensionError


def test_degrevlex_degree_tie():
    # x^2 vs x*y on (x, y, z): same degree, revlex on the last nonzero
    assert compare_terms((2, 0, 0), (1, 1, 0), DEGREVLEX) == 1


def test_reflexivity():
    for order in (LEX, DEGLEX, DEGREVLEX, block_elim(1)):
        assert compare_terms((1, 2, 3), (1, 2, 3), order) == 0


def test_deglex_degree_dominates():
    # x1*x2 before x1^3 in the increasing listing: degree 2 < degree 3
    assert compare_terms((1, 1), (3, 0), DEGLEX) == -1


def test_length_mismatch():
    with pytest.raises(DimensionError):
        compare_terms((1, 0), (1, 0, 0), DEGREVLEX)


def test_blockelim_kills_first_block():
    # any power in the first block beats everything outside it
    order = block_elim(1)
    assert compare_terms((1, 0, 0), (0, 5, 5), order) == 1
    assert compare_terms((0, 2, 0), (0, 1, 1), order) == compare_terms(
        (2, 0), (1, 1), DEGREVLEX
    )


def _random_exp(rng, n, max_e=4):
    return tuple(rng.randint(0, max_e) for _ in range(n))


@pytest.mark.parametrize("order", [LEX, DEGLEX, DEGREVLEX, block_elim(2)])
def test_order_laws(order):
    rng = random.Random(1234)
    n = 4
    zero = (0,) * n
    for _ in range(300):
        u = _random_exp(rng, n)
        v = _random_exp(rng, n)
        w = _random_exp(rng, n)
        cuv = compare_terms(u, v, order)
        # antisymmetry / totality
        assert cuv == -compare_terms(v, u, order)
        assert (cuv == 0) == (u == v)
        # transitivity
        if cuv <= 0 and compare_terms(v, w, order) <= 0:
            assert compare_terms(u, w, order) <= 0
        # multiplicative: u < v implies u+w < v+w
        if cuv == -1:
            uw = tuple(a + b for a, b in zip(u, w))
            vw = tuple(a + b for a, b in zip(v, w))
            assert compare_terms(uw, vw, order) == -1
        # 1 is minimal
        assert compare_terms(zero, u, order) <= 0


def test_degree_compatibility_flags():
    assert DEGLEX.degree_compatible and DEGREVLEX.degree_compatible
    assert not LEX.degree_compatible and not block_elim(1).degree_compatible
