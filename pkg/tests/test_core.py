import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from denumerant import (
    CoefficientTuple,
    format_rational,
    gcd_chain,
    integer_part,
    parse_rational,
    reduce_by_gcd,
)

small_tuples = st.lists(st.integers(1, 60), min_size=1, max_size=6).map(tuple)


def test_coefficient_tuple_validation():
    with pytest.raises(ValueError):
        CoefficientTuple(())
    with pytest.raises(ValueError):
        CoefficientTuple((0, 3))
    with pytest.raises(ValueError):
        CoefficientTuple((2, -1))
    with pytest.raises(ValueError):
        CoefficientTuple.of((2.5, 3))


def test_coefficient_tuple_basics():
    t = CoefficientTuple.of([4, 6, 9])
    assert t.k == 3
    assert t.product() == 216
    assert list(t) == [4, 6, 9]
    assert t[1] == 6
    assert CoefficientTuple.of(t) is t


def test_gcd_chain_spots():
    assert gcd_chain((4, 6, 9)).d == (4, 2, 1)
    assert gcd_chain((6, 10)).d == (6, 2)
    assert gcd_chain((5,)).d == (5,)
    assert gcd_chain((4, 6, 9)).is_coprime
    assert not gcd_chain((6, 10)).is_coprime


@settings(max_examples=80, deadline=None)
@given(small_tuples)
def test_gcd_chain_divisibility(coeffs):
    chain = gcd_chain(coeffs).d
    assert chain[0] == coeffs[0]
    for i in range(1, len(chain)):
        assert chain[i - 1] % chain[i] == 0
        assert chain[i] == math.gcd(chain[i - 1], coeffs[i])
    assert chain[-1] == math.gcd(*coeffs)


def test_reduce_by_gcd():
    reduced, d = reduce_by_gcd((6, 10))
    assert reduced.coeffs == (3, 5) and d == 2
    same, d1 = reduce_by_gcd((3, 5))
    assert same.coeffs == (3, 5) and d1 == 1


def test_integer_part_truncates_toward_zero():
    assert integer_part(Fraction(7, 2)) == 3
    assert integer_part(Fraction(-1, 3)) == 0
    assert integer_part(Fraction(-7, 2)) == -3
    assert integer_part(0) == 0
    assert integer_part(5) == 5


@settings(max_examples=80, deadline=None)
@given(st.fractions(max_denominator=1000))
def test_integer_part_is_odd(x):
    assert integer_part(-x) == -integer_part(x)
    assert abs(x - integer_part(x)) < 1


def test_rational_round_trip_spots():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == -7
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(8, 4)) == "2"
    assert format_rational(3) == "3"


@settings(max_examples=80, deadline=None)
@given(st.fractions(max_denominator=10**6))
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q
