import pytest

from wrep.errors import OrderError
from wrep.grord import (
    GradedRing,
    build_weight,
    check_weight_conditions,
    dcoeff_determinant,
    dcoeff_direct,
    predicted_leading,
    variable_slots,
    verify_leading_claims,
    weighted_leading_monomial,
)
from wrep.pyramid import Pyramid


def test_variable_slots():
    pyr = Pyramid(rows=(1, 2))
    slots = variable_slots(pyr)
    # below/on the diagonal: full range; above: truncated to p_2-p_1+1..p_2
    assert (1, 1, 1) in slots and (2, 2, 2) in slots
    assert (1, 2, 2) in slots and (1, 2, 1) not in slots


def test_hand_checked_coefficients():
    ring = GradedRing(Pyramid(rows=(1, 2)))
    x = ring.var
    assert dcoeff_determinant(ring, 2, 1) == x(1, 1, 1) + x(2, 2, 1)
    assert dcoeff_determinant(ring, 2, 2) == x(1, 1, 1) * x(2, 2, 1) + x(2, 2, 2)
    d23 = dcoeff_determinant(ring, 2, 3)
    assert d23 == x(1, 1, 1) * x(2, 2, 2) - x(2, 1, 1) * x(1, 2, 2)


def test_direct_matches_determinant():
    for rows in [(1, 2), (2, 2), (1, 1, 1)]:
        ring = GradedRing(Pyramid(rows=rows))
        for r in range(1, ring.pyramid.n + 1):
            for s in range(1, ring.pyramid.row_block_size(r) + 1):
                assert dcoeff_determinant(ring, r, s) == dcoeff_direct(ring, r, s)


def test_leading_monomial_of_d23():
    pyr = Pyramid(rows=(1, 2))
    ring = GradedRing(pyr)
    _, w = build_weight(pyr)
    d23 = dcoeff_determinant(ring, 2, 3)
    lead = weighted_leading_monomial(ring, w, d23)
    want, slot = predicted_leading(ring, 2, 3)
    assert lead == want
    assert slot == (1, 2, 2)


def test_weight_conditions_enforced():
    pyr = Pyramid(rows=(1, 2))
    v, w = build_weight(pyr)
    n = pyr.n
    with pytest.raises(OrderError):
        check_weight_conditions(pyr, v, w, 2 * n * n, max(pyr.rows) + 1, (2 * n * n + 1) ** 6)
    bad = dict(v)
    bad[(2, 1, 1)] = 0
    with pytest.raises(OrderError):
        N = 2 * n * n + 1
        check_weight_conditions(pyr, bad, w, N, max(pyr.rows) + 1, N**6)


@pytest.mark.parametrize("rows", [(1, 2), (2, 2), (1, 1, 1), (1, 2, 2)])
def test_leading_claims(rows):
    pyr = Pyramid(rows=rows)
    expected = sum(pyr.row_block_size(r) for r in range(1, pyr.n + 1))
    assert verify_leading_claims(pyr) == expected
