"""Exactness and presentation behavior of the currency type."""

from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dctco import Money, ValidationError

amounts = st.decimals(
    min_value=Decimal("-1000000"),
    max_value=Decimal("1000000"),
    places=4,
    allow_nan=False,
    allow_infinity=False,
)


def test_construct_from_decimal_string():
    assert Money("198.6768").amount == Fraction(1986768, 10000)


def test_construct_from_int_and_fraction():
    assert Money(3) == Money(Fraction(3))
    assert Money(Decimal("0.0756")).amount == Fraction(756, 10000)


def test_floats_rejected():
    with pytest.raises(ValidationError):
        Money(0.1)


def test_bool_rejected():
    with pytest.raises(ValidationError):
        Money(True)


def test_arithmetic_is_exact():
    # classic float trap: 0.1 + 0.2
    assert Money("0.1") + Money("0.2") == Money("0.3")
    assert Money("2259").divided_by(5) == Money("451.8")
    assert Money("1000").divided_by(4) == Money("250")


def test_division_keeps_exact_rationals():
    third = Money("1000").divided_by(3)
    assert third * 3 == Money("1000")


def test_ratio():
    assert Money("15").ratio(Money("3")) == Fraction(5)
    with pytest.raises(ValidationError):
        Money("1").ratio(Money(0))


def test_rounding_to_cents():
    assert Money("198.6768").rounded("cents") == Decimal("198.68")
    assert Money("0.005").rounded("cents") == Decimal("0.01")
    assert Money("-0.005").rounded("cents") == Decimal("-0.01")


def test_rounding_ceil_dollar():
    assert Money("226.01").rounded("ceil-dollar") == Decimal("227")
    assert Money("227").rounded("ceil-dollar") == Decimal("227")
    assert Money("-1.5").rounded("ceil-dollar") == Decimal("-1")


def test_unknown_rounding_mode():
    with pytest.raises(ValidationError):
        Money("1").rounded("banker")


def test_decimal_string_trims_trailing_zeros():
    assert Money("227.0000").decimal_string() == "227"
    assert Money("198.6768").decimal_string() == "198.6768"
    assert Money("451.8").decimal_string() == "451.8"


def test_formatted_groups_thousands():
    assert Money("118040").formatted("ceil-dollar") == "118,040"
    assert Money("198.6768").formatted("cents") == "198.68"


@given(amounts)
def test_presentation_never_feeds_back(value):
    """Rounding is a pure view: the stored amount is untouched by it."""
    m = Money(value)
    before = m.amount
    m.rounded("cents")
    m.rounded("ceil-dollar")
    m.decimal_string()
    assert m.amount == before
    assert m == Money(value)


@given(amounts, amounts)
def test_addition_matches_decimal_oracle(a, b):
    assert Money(a) + Money(b) == Money(a + b)


@given(amounts, st.integers(min_value=0, max_value=10000))
def test_scalar_multiplication_matches_decimal_oracle(a, n):
    assert Money(a) * n == Money(a * n)


@given(amounts)
def test_reading_presented_value_back_equals_rounded(value):
    """Re-ingesting a presented string yields exactly the presented value."""
    m = Money(value)
    assert Money(str(m.rounded("cents"))).rounded("cents") == m.rounded("cents")
