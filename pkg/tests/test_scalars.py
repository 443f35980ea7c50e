from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twistq.scalars import HBAR, I, ONE, ZERO, Gauss, HPoly, dump_scalar, parse_scalar

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100)
gauss = st.builds(Gauss, rationals, rationals)


@given(gauss, gauss, gauss)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == ONE


@given(gauss, gauss)
def test_conjugation_is_multiplicative(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert a.conj().conj() == a


@given(gauss)
def test_scalar_round_trip(a):
    assert parse_scalar(dump_scalar(a)) == a
    assert Gauss.from_list(a.to_list()) == a


def test_parse_forms():
    assert parse_scalar(3) == Gauss(3)
    assert parse_scalar("-2/6") == Gauss(Fraction(-1, 3))
    assert parse_scalar([1, 2, -3, 4]) == Gauss(Fraction(1, 2), Fraction(-3, 4))
    assert parse_scalar({"re": "1/2", "im": 1}) == Gauss(Fraction(1, 2), 1)


def test_normalized_denominators():
    g = Gauss(Fraction(4, -6))
    assert g.to_list() == [-2, 3, 0, 1]


def test_i_squared():
    assert I * I == -ONE
    assert (I ** -1) == -I


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_float_complex_rejected():
    with pytest.raises(TypeError):
        Gauss.coerce(1.5j)


def test_hpoly_arithmetic():
    p = HPoly({0: 1, 1: 2})
    q = HPoly({1: I})
    assert p * q == HPoly({1: I, 2: 2 * I})
    assert (p - p) == HPoly()
    assert not HPoly({3: 0})
    assert HBAR.shift(2) == HPoly({3: 1})
    assert p.at(Fraction(1, 2)) == Gauss(2)
    assert str(HPoly({2: 2})) == "2*h^2"


@given(st.dictionaries(st.integers(0, 4), gauss, max_size=4))
def test_hpoly_round_trip(d):
    p = HPoly(d)
    assert HPoly.from_list(p.to_list()) == p
