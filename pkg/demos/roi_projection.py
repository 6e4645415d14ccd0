#!/usr/bin/env python3
"""Income, profit and multi-year ROI for the bundled scenario.

Shows both ROI conventions: fixed-base (denominator held at one year's
outcome, so the ratio climbs each year) and cumulative (flat when annual
figures are constant).
"""

from dctco import (
    EconomicAssumptions,
    builtin_scenario_dir,
    evaluate,
    load_scenario_file,
    project,
)

scenario = load_scenario_file(builtin_scenario_dir() / "callcenter-nevada.json")
report = evaluate(scenario)

print("=== Annual income at $3 per served contact ===")
for role in report.roles:
    print(f"{role.role_name}: {role.users_per_year_facility:,} users/year "
          f"-> ${role.income_annual.formatted()}")
print()

print("=== Five-year projection (fixed-base ROI) ===")
for role in report.roles:
    first = role.projection.years[0]
    last = role.projection.final_year
    print(f"{role.role_name}: year-1 profit ${first.profit.formatted()} "
          f"(ROI {float(first.roi):.2%}), "
          f"year-5 cumulative ${last.cumulative_profit.formatted()} "
          f"(ROI {float(last.roi):.2%})")
print()

print("=== The two conventions, year by year (role1) ===")
role1 = report.role("role1")
fixed = role1.projection
cumulative = project(
    role1.income_annual,
    role1.outcome_annual,
    EconomicAssumptions("3", analysis_years=5, roi_convention="cumulative"),
)
print(f"{'year':>4} {'fixed-base ROI':>15} {'cumulative ROI':>15}")
for yf, yc in zip(fixed.years, cumulative.years):
    print(f"{yf.year:>4} {float(yf.roi):>15.2%} {float(yc.roi):>15.2%}")
print()
print("Fixed-base grows linearly because the denominator never accumulates;")
print("use the cumulative convention when comparing multi-year horizons.")
print()

print("=== Diagnostics the evaluation emitted ===")
for note in report.diagnostics:
    print(f"- {note}")
