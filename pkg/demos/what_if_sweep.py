#!/usr/bin/env python3
"""What-if exploration: sweep one parameter and watch a metric respond.

Any numeric field of the scenario document is addressable by dotted path,
so new fields become sweepable without code changes.
"""

from decimal import Decimal

from dctco import (
    SweepSpec,
    builtin_scenario_dir,
    compare,
    evaluate,
    load_scenario_file,
    sweep,
)

scenario = load_scenario_file(builtin_scenario_dir() / "callcenter-nevada.json")

print("=== Electricity price vs total facility cost (role1) ===")
result = sweep(
    scenario,
    SweepSpec(
        parameter_path="facility.tariff.price_per_kwh",
        values=[Decimal("0.05"), Decimal("0.0756"), Decimal("0.10"), Decimal("0.1512")],
        metric="total_cost",
        role="role1",
    ),
)
for point in result.points:
    print(f"  $/kWh {point.value}: total ${point.metric_value.formatted()}")
print()

print("=== CPU load ceiling vs users served per year (role3) ===")
result = sweep(
    scenario,
    SweepSpec(
        parameter_path="roles.role3.target_load",
        values=[Decimal("0.3"), Decimal("0.6"), Decimal("0.9")],
        metric="users_per_year",
        role="role3",
    ),
)
for point in result.points:
    print(f"  load {point.value}: {point.metric_value:,} users/year")
print()

print("=== A value that violates an invariant becomes a per-point error ===")
result = sweep(
    scenario,
    SweepSpec(
        parameter_path="roles.role3.target_load",
        values=[Decimal("0.9"), Decimal("1.5")],
        metric="users_per_year",
        role="role3",
    ),
)
for point in result.points:
    if point.error:
        print(f"  load {point.value}: ERROR {point.error} ({point.error_field_path})")
    else:
        print(f"  load {point.value}: {point.metric_value:,} users/year")
print()

print("=== Role comparison on the unmodified scenario ===")
report = evaluate(scenario)
summary = compare(report, "role1", "role3")
print(f"role1 serves {float(summary.users_ratio):.2f}x the users of role3 "
      f"(+{float(summary.users_gain_percent):.2f}%)")
print(f"role1 earns {float(summary.profit_ratio):.1f}x the year-1 profit of role3")
for note in summary.notes:
    print(f"note: {note}")
