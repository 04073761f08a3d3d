from fractions import Fraction

import pytest

from wrep.gamma import (
    character_of,
    check_fiber_bound,
    elementary_symmetric,
    fiber_bound,
    fibers,
    gamma_coefficients,
    gamma_commutes,
)
from wrep.patterns import generic_weight
from wrep.pyramid import Pyramid
from wrep.rep import build_representation


@pytest.fixture(scope="module")
def reps():
    out = {}
    for rows in [(1, 1), (1, 2), (2, 2), (1, 1, 1)]:
        pyr = Pyramid(rows=rows)
        out[rows] = build_representation(pyr, generic_weight(pyr))
    return out


def test_elementary_symmetric():
    vals = [Fraction(1), Fraction(2), Fraction(3)]
    assert elementary_symmetric(vals, 1) == 6
    assert elementary_symmetric(vals, 2) == 11
    assert elementary_symmetric(vals, 3) == 6


def test_coefficient_count(reps):
    rep = reps[(1, 2)]
    # one generator per (r, k): p_1 + (p_1 + p_2) = 1 + 3
    assert len(gamma_coefficients(rep)) == 4


def test_commutativity(reps):
    for rep in reps.values():
        assert gamma_commutes(rep)


def test_character_consistency(reps):
    for rep in reps.values():
        for mu in rep.basis:
            chi = character_of(rep, mu)  # raises on mismatch
            assert all(v is not None for v in chi.values())


def test_singleton_fibers(reps):
    for rep in reps.values():
        _, singl = fibers(rep)
        assert singl


def test_fiber_bound():
    assert fiber_bound(Pyramid(rows=(1, 2, 2))) == 6
    assert fiber_bound(Pyramid(rows=(2, 2))) == 2
    for rows in [(1, 1), (2, 2), (1, 2, 2)]:
        pyr = Pyramid(rows=rows)
        rep = build_representation(pyr, generic_weight(pyr))
        biggest, ok = check_fiber_bound(rep)
        assert ok and biggest == 1
