"""Exact currency values and presentation rounding.

Amounts are carried as exact rationals so that sums, scalar products and
divisions never lose precision; rounding happens only when a value is
*presented* (formatted for a table, CSV cell or JSON field) and never feeds
back into a stored amount.

Binary floats are rejected everywhere: construct amounts from ints, decimal
strings, ``Decimal`` or ``Fraction`` values.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Union

from .errors import ValidationError

ExactNumber = Union[int, str, Decimal, Fraction]

ROUNDING_MODES = ("cents", "ceil-dollar")

# Ample headroom for Fraction -> Decimal conversion of large dollar figures.
_CTX = decimal.Context(prec=60)


def to_fraction(value: ExactNumber, field_path: str = "value") -> Fraction:
    """Coerce an exact numeric input to a Fraction.

    Floats (and bools) are rejected: they would silently smuggle binary
    rounding error into arithmetic that must stay exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(
            "binary floats are not accepted; pass an int, a decimal string "
            'like "0.0756", a Decimal, or a Fraction',
            field_path,
        )
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            value = Decimal(value)
        except decimal.InvalidOperation:
            raise ValidationError(f"not a decimal number: {value!r}", field_path) from None
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValidationError(f"not a finite number: {value}", field_path)
        return Fraction(value)
    raise ValidationError(f"unsupported numeric type {type(value).__name__}", field_path)


def fraction_to_decimal(value: Fraction, places: int = 4) -> Decimal:
    """Convert a rational to a Decimal, exact when it fits in ``places``.

    Values with a finite decimal expansion no longer than ``places`` digits
    come back exact; anything else is rounded half-even at ``places``.
    """
    quantum = Decimal(1).scaleb(-places)
    scaled = value * 10**places
    if scaled.denominator == 1:
        return _CTX.multiply(Decimal(scaled.numerator), quantum)
    rounded = Fraction(round(scaled))  # round() on Fraction is exact half-even
    return _CTX.multiply(Decimal(rounded.numerator), quantum)


def format_decimal(value: Decimal) -> str:
    """Fixed-point string without exponent, trailing zeros trimmed."""
    text = format(value, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text or "0"


def _round_half_away(value: Fraction) -> int:
    """Round a rational to the nearest integer, halves away from zero."""
    n, d = value.numerator, value.denominator
    if n >= 0:
        return (2 * n + d) // (2 * d)
    return -((-2 * n + d) // (2 * d))


@dataclass(frozen=True)
class Money:
    """An exact dollar amount.

    Supports addition, subtraction, negation, comparison, multiplication by
    exact scalars and exact division. ``ratio`` yields a dimensionless
    Fraction for ROI-style quotients.
    """

    amount: Fraction

    def __init__(self, value: ExactNumber | "Money" = 0, field_path: str = "amount") -> None:
        if isinstance(value, Money):
            amount = value.amount
        else:
            amount = to_fraction(value, field_path)
        object.__setattr__(self, "amount", amount)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Money") -> "Money":
        if not isinstance(other, Money):
            return NotImplemented
        return Money(self.amount + other.amount)

    def __sub__(self, other: "Money") -> "Money":
        if not isinstance(other, Money):
            return NotImplemented
        return Money(self.amount - other.amount)

    def __neg__(self) -> "Money":
        return Money(-self.amount)

    def __mul__(self, scalar: ExactNumber) -> "Money":
        return Money(self.amount * to_fraction(scalar, "scalar"))

    __rmul__ = __mul__

    def scaled(self, scalar: ExactNumber) -> "Money":
        return self * scalar

    def divided_by(self, divisor: ExactNumber) -> "Money":
        d = to_fraction(divisor, "divisor")
        if d == 0:
            raise ValidationError("division by zero", "divisor")
        return Money(self.amount / d)

    def ratio(self, other: "Money") -> Fraction:
        """Dimensionless quotient of two amounts (exact)."""
        if other.amount == 0:
            raise ValidationError("ratio denominator is zero")
        return self.amount / other.amount

    # -- comparisons ------------------------------------------------------

    def __lt__(self, other: "Money") -> bool:
        return self.amount < other.amount

    def __le__(self, other: "Money") -> bool:
        return self.amount <= other.amount

    def __gt__(self, other: "Money") -> bool:
        return self.amount > other.amount

    def __ge__(self, other: "Money") -> bool:
        return self.amount >= other.amount

    def is_negative(self) -> bool:
        return self.amount < 0

    # -- presentation (pure views, never mutate the amount) ---------------

    def as_decimal(self, places: int = 4) -> Decimal:
        return fraction_to_decimal(self.amount, places)

    def decimal_string(self, places: int = 4) -> str:
        return format_decimal(self.as_decimal(places))

    def rounded(self, mode: str = "cents") -> Decimal:
        """Presentation rounding: nearest cent (half away from zero), or
        ceiling to whole dollars."""
        if mode == "cents":
            return _CTX.divide(Decimal(_round_half_away(self.amount * 100)), Decimal(100))
        if mode == "ceil-dollar":
            return Decimal(-((-self.amount.numerator) // self.amount.denominator))
        raise ValidationError(f"unknown rounding mode {mode!r} (use one of {ROUNDING_MODES})")

    def formatted(self, mode: str = "cents", grouped: bool = True) -> str:
        value = self.rounded(mode)
        return f"{value:,f}" if grouped else format(value, "f")

    def __str__(self) -> str:
        return self.decimal_string()

    def __repr__(self) -> str:
        return f"Money('{self.decimal_string()}')"


ZERO = Money(0)
