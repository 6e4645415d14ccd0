"""Income, profit and multi-year ROI under cost-per-contact pricing."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError
from .money import ExactNumber, Money

# "fixed-base" holds the ROI denominator at a single year's outcome, so the
# ratio grows linearly with the horizon; "cumulative" divides total profit
# by total outcome and stays flat when the annual figures are constant.
ROI_CONVENTIONS = ("fixed-base", "cumulative")


@dataclass(frozen=True)
class EconomicAssumptions:
    """Flat price earned per served user, the analysis horizon in years and
    the ROI convention used for multi-year figures."""

    price_per_contact: Money
    analysis_years: int = 1
    roi_convention: str = "cumulative"

    def __init__(
        self,
        price_per_contact: ExactNumber | Money,
        analysis_years: int = 1,
        roi_convention: str = "cumulative",
    ) -> None:
        price = Money(price_per_contact, "price_per_contact")
        if price.is_negative():
            raise ValidationError("must be >= 0", "price_per_contact")
        if isinstance(analysis_years, bool) or not isinstance(analysis_years, int) or analysis_years < 1:
            raise ValidationError("must be an integer >= 1", "analysis_years")
        if roi_convention not in ROI_CONVENTIONS:
            raise ValidationError(
                f"must be one of {ROI_CONVENTIONS}, got {roi_convention!r}", "roi_convention"
            )
        object.__setattr__(self, "price_per_contact", price)
        object.__setattr__(self, "analysis_years", analysis_years)
        object.__setattr__(self, "roi_convention", roi_convention)


@dataclass(frozen=True)
class YearFigures:
    """One projection year: annual flows plus running totals.

    ``roi`` is the cumulative ROI *at* this year under the projection's
    convention.
    """

    year: int
    income: Money
    outcome: Money
    profit: Money
    cumulative_profit: Money
    roi: Fraction


@dataclass(frozen=True)
class FinancialProjection:
    years: tuple[YearFigures, ...]
    cumulative_profit: Money
    cumulative_roi: Fraction
    roi_convention: str

    @property
    def final_year(self) -> YearFigures:
        return self.years[-1]


# -- operations ------------------------------------------------------------


def annual_income(users_per_year: int, assumptions: EconomicAssumptions) -> Money:
    """Served users times the price per contact."""
    if isinstance(users_per_year, bool) or not isinstance(users_per_year, int) or users_per_year < 0:
        raise ValidationError("must be an integer >= 0", "users_per_year")
    return assumptions.price_per_contact * users_per_year


def profit(income: Money, outcome: Money) -> Money:
    """Income minus outcome; negative when the operation loses money."""
    return income - outcome


def roi(profit_amount: Money, outcome: Money) -> Fraction:
    """Return on investment as an exact fraction (0.5 means 50%)."""
    if not outcome > Money(0):
        raise ValidationError("must be > 0", "outcome")
    return profit_amount.ratio(outcome)


def project(
    income: Money,
    outcome: Money,
    assumptions: EconomicAssumptions,
) -> FinancialProjection:
    """Project constant annual income/outcome over the analysis horizon.

    Under the fixed-base convention the ROI at year n is n-times the
    first-year ROI (the denominator never grows); under the cumulative
    convention it is total profit over total outcome. Both agree at year
    one. A zero outcome yields an ROI of zero rather than an error, so
    all-zero scenarios project to all-zero reports.
    """
    annual_profit = profit(income, outcome)
    years: list[YearFigures] = []
    for n in range(1, assumptions.analysis_years + 1):
        cumulative = annual_profit * n
        if outcome == Money(0):
            year_roi = Fraction(0)
        elif assumptions.roi_convention == "fixed-base":
            year_roi = roi(cumulative, outcome)
        else:
            year_roi = roi(cumulative, outcome * n)
        years.append(
            YearFigures(
                year=n,
                income=income,
                outcome=outcome,
                profit=annual_profit,
                cumulative_profit=cumulative,
                roi=year_roi,
            )
        )
    return FinancialProjection(
        years=tuple(years),
        cumulative_profit=years[-1].cumulative_profit,
        cumulative_roi=years[-1].roi,
        roi_convention=assumptions.roi_convention,
    )
