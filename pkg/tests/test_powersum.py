from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from denumerant import (
    DomainError,
    PowerSumQuery,
    check_sum_bounds,
    power_sum,
    refined_upper_bound,
)
from denumerant.powersum import query


def test_power_sum_spots():
    assert power_sum(query(3, 0, 2)) == 14
    assert power_sum(query(Fraction(1, 2), Fraction(1, 2), 2)) == 1
    assert power_sum(query(Fraction(7, 3), Fraction(1, 2), 3)) == Fraction(2123, 72)
    # -c <= x < 1 leaves a single term.
    assert power_sum(query(Fraction(-1, 4), Fraction(1, 4), 5)) == 0
    assert power_sum(query(Fraction(3, 4), Fraction(1, 4), 1)) == 1


def test_bounds_spot():
    q = query(3, 0, 2)
    assert check_sum_bounds(q) == (True, True, True)
    base = Fraction(3)
    assert base**3 / 3 == 9
    assert base**3 / 3 + base**2 / 2 == Fraction(27, 2)
    assert (base + Fraction(1, 2)) ** 3 / 3 == Fraction(343, 24)
    assert refined_upper_bound(q) == Fraction(57, 4)
    assert power_sum(q) <= refined_upper_bound(q)


def test_boundary_point_is_tight():
    # At x = -c the sum collapses to 0^k and every bound touches it.
    for k in (2, 3, 7):
        for c in (Fraction(0), Fraction(1, 8), Fraction(1, 2)):
            q = PowerSumQuery(-c, c, k)
            assert power_sum(q) == 0
            assert check_sum_bounds(q) == (True, True, True)


def test_domain_errors():
    with pytest.raises(DomainError):
        query(1, Fraction(3, 4), 2)
    with pytest.raises(DomainError):
        query(-1, Fraction(1, 2), 2)
    with pytest.raises(DomainError):
        query(1, 0, 0)
    with pytest.raises(DomainError):
        check_sum_bounds(query(1, 0, 1))
    with pytest.raises(DomainError):
        refined_upper_bound(query(1, 0, 1))


def test_step_identity_spot():
    c = Fraction(1, 4)
    k = 4
    for n in range(0, 12):
        step = power_sum(query(n + 1, c, k)) - power_sum(query(n, c, k))
        assert step == (n + 1 + c) ** k


@settings(max_examples=60, deadline=None)
@given(
    st.integers(2, 8),
    st.integers(0, 8),
    st.integers(0, 64),
)
def test_enclosure_holds_on_random_points(k, c16, j):
    c = Fraction(min(c16, 8), 16)
    x = -c + Fraction(j, 8)
    q = PowerSumQuery(x, c, k)
    assert check_sum_bounds(q) == (True, True, True)
    assert power_sum(q) <= refined_upper_bound(q)
