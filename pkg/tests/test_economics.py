"""Income, profit and ROI projections against the case-study figures."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dctco import (
    EconomicAssumptions,
    Money,
    ValidationError,
    annual_income,
    profit,
    project,
    roi,
)

PER_CONTACT = EconomicAssumptions("3", analysis_years=5, roi_convention="fixed-base")

# annual income/outcome per role, frozen from the case study
INCOME = {
    "role1": Money("158124657600"),
    "role2": Money("69954206400"),
    "role3": Money("47474294400"),
}
OUTCOME = {
    "role1": Money("45584797952"),
    "role2": Money("45584797948"),
    "role3": Money("45584797951"),
}


class TestAnnualIncome:
    def test_low_security_role(self):
        assert annual_income(52_708_219_200, PER_CONTACT) == INCOME["role1"]

    def test_high_security_role(self):
        assert annual_income(15_824_764_800, PER_CONTACT) == INCOME["role3"]

    def test_no_users(self):
        assert annual_income(0, PER_CONTACT) == Money(0)


class TestProfit:
    def test_low_security_role(self):
        # the published table prints 112,541,034,328: higher by exactly
        # 520 x $2,259 (the year-one hardware purchase it excludes)
        computed = profit(INCOME["role1"], OUTCOME["role1"])
        assert computed == Money("112539859648")
        assert Money("112541034328") - computed == Money("1174680")

    def test_break_even(self):
        assert profit(Money("5"), Money("5")) == Money(0)

    def test_high_security_role(self):
        computed = profit(INCOME["role3"], OUTCOME["role3"])
        assert computed == Money("1889496449")
        assert Money("1890671129") - computed == Money("1174680")

    @given(
        st.decimals(min_value=0, max_value=10**12, places=2, allow_nan=False, allow_infinity=False),
        st.decimals(min_value=0, max_value=10**12, places=2, allow_nan=False, allow_infinity=False),
    )
    def test_antisymmetric(self, a, b):
        assert profit(Money(a), Money(b)) == -profit(Money(b), Money(a))


class TestRoi:
    def test_low_security_first_year(self):
        # published as approximately 247%
        value = roi(Money("112541034328"), OUTCOME["role1"])
        assert abs(value - Fraction(247, 100)) < Fraction(1, 100)

    def test_zero_profit(self):
        assert roi(Money(0), Money("10")) == 0

    def test_high_security_first_year(self):
        # published as approximately 4%
        value = roi(Money("1890671129"), OUTCOME["role3"])
        assert abs(value - Fraction(4, 100)) < Fraction(1, 100)

    def test_zero_outcome_rejected(self):
        with pytest.raises(ValidationError):
            roi(Money("1"), Money(0))

    @given(
        st.decimals(min_value=0, max_value=10**9, places=2, allow_nan=False, allow_infinity=False),
        st.decimals(min_value="0.01", max_value=10**9, places=2, allow_nan=False, allow_infinity=False),
        st.integers(min_value=1, max_value=10**6),
    )
    def test_scale_invariance(self, p, o, k):
        assert roi(Money(p) * k, Money(o) * k) == roi(Money(p), Money(o))


class TestProject:
    def test_fixed_base_five_years_low_security(self):
        proj = project(INCOME["role1"], OUTCOME["role1"], PER_CONTACT)
        assert proj.cumulative_profit == Money("112539859648") * 5
        # published 5-year figure equals ours plus five years of the
        # excluded hardware purchase, to the dollar
        assert proj.cumulative_profit + Money("1174680") * 5 == Money("562705171640")
        # published as approximately 1234%
        assert abs(proj.cumulative_roi - Fraction(1234, 100)) < Fraction(1, 100)

    def test_fixed_base_five_years_medium_security(self):
        proj = project(INCOME["role2"], OUTCOME["role2"], PER_CONTACT)
        published = Money("121852915661")
        adjusted = proj.cumulative_profit + Money("1174680") * 5
        # within $1: the published table rounds its own 1st-year profit
        assert abs((published - adjusted).amount) <= 1
        assert abs(proj.cumulative_roi - Fraction(267, 100)) < Fraction(1, 100)

    def test_cumulative_convention_flat_for_constant_years(self):
        assumptions = EconomicAssumptions("3", analysis_years=5, roi_convention="cumulative")
        proj = project(Money("200"), Money("100"), assumptions)
        rois = {y.roi for y in proj.years}
        assert rois == {Fraction(1)}

    def test_profit_equals_income_minus_outcome_each_year(self):
        proj = project(Money("10"), Money("4"), PER_CONTACT)
        for y in proj.years:
            assert y.profit == y.income - y.outcome
        assert proj.cumulative_profit == Money("6") * 5

    def test_zero_outcome_projects_to_zero_roi(self):
        proj = project(Money(0), Money(0), PER_CONTACT)
        assert proj.cumulative_profit == Money(0)
        assert proj.cumulative_roi == 0


money_values = st.decimals(
    min_value=0, max_value=10**10, places=2, allow_nan=False, allow_infinity=False
)


@given(money_values, st.decimals(min_value="0.01", max_value=10**10, places=2,
                                 allow_nan=False, allow_infinity=False),
       st.integers(min_value=1, max_value=30))
def test_fixed_base_roi_grows_exactly_linearly(income_d, outcome_d, years):
    assumptions = EconomicAssumptions("1", analysis_years=years, roi_convention="fixed-base")
    proj = project(Money(income_d), Money(outcome_d), assumptions)
    first = proj.years[0].roi
    for y in proj.years:
        assert y.roi == first * y.year


@given(money_values, st.decimals(min_value="0.01", max_value=10**10, places=2,
                                 allow_nan=False, allow_infinity=False))
def test_conventions_agree_in_year_one(income_d, outcome_d):
    fixed = EconomicAssumptions("1", analysis_years=3, roi_convention="fixed-base")
    cumulative = EconomicAssumptions("1", analysis_years=3, roi_convention="cumulative")
    a = project(Money(income_d), Money(outcome_d), fixed)
    b = project(Money(income_d), Money(outcome_d), cumulative)
    assert a.years[0].roi == b.years[0].roi
