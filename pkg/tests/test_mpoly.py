from fractions import Fraction

import pytest

from wrep.errors import EvaluationError
from wrep.mpoly import MPoly, MRat

N = ("x", "y")


def x():
    return MPoly.var(N, 0)


def y():
    return MPoly.var(N, 1)


def test_poly_arithmetic():
    p = (x() + y()) * (x() - y())
    assert p == x() ** 2 - y() ** 2
    assert p.evaluate([Fraction(3), Fraction(2)]) == 5
    assert p.total_degree() == 2
    assert p.degree_in(0) == 2


def test_substitute_and_permute():
    p = x() ** 2 * y() + 3
    assert p.substitute(0, 2) == 4 * y() + 3
    assert p.permute_vars([1, 0]) == y() ** 2 * x() + 3


def test_derivative():
    p = x() ** 3 * y() ** 2
    assert p.derivative(0) == 3 * x() ** 2 * y() ** 2
    assert p.derivative(1) == 2 * x() ** 3 * y()


def test_gcd_and_exact_div():
    a = (x() + y()) ** 2 * (x() - y())
    b = (x() + y()) * (x() + 2 * y())
    g = a.gcd(b)
    # gcd is x + y up to a constant
    assert a.exact_div(g) * g == a
    assert b.exact_div(g) * g == b
    with pytest.raises(ValueError):
        a.exact_div(x() + 2 * y())


def test_mrat_reduction_and_equality():
    r = MRat((x() ** 2 - y() ** 2), (x() + y()))
    assert r.is_polynomial()
    assert r == MRat.from_poly(x() - y())
    s = MRat(MPoly.const(N, 1), x() - y())
    assert (s * (x() - y())) == 1
    assert (s + s) == MRat(MPoly.const(N, 2), x() - y())


def test_mrat_evaluate_and_errors():
    s = MRat(MPoly.const(N, 1), x() - y())
    assert s.evaluate([Fraction(3), Fraction(1)]) == Fraction(1, 2)
    with pytest.raises(EvaluationError):
        s.evaluate([Fraction(1), Fraction(1)])


def test_mrat_derivative():
    s = MRat(x(), y())
    ds = s.derivative(1)
    assert ds == MRat(-x(), y() ** 2)
