#!/usr/bin/env python3
"""Walk through the cost model one component at a time.

Prices a single always-on server, then a rack, then the whole facility,
using the bundled call-center scenario's inputs.
"""

from dctco import (
    EnergyTariff,
    HardwareProfile,
    Money,
    PersonnelProfile,
    amortization,
    energy_kwh,
    hardware_software_cost,
    personnel_cost,
    power_cost,
    total_cost,
)

tariff = EnergyTariff(price_per_kwh="0.0756", hours_per_day=24, days=365)

print("=== Energy ===")
kwh = energy_kwh("0.3", tariff)
server_power = power_cost("0.3", tariff)
print(f"A 300 W server running 24/365 draws {kwh} kWh a year.")
print(f"At $0.0756/kWh that is ${server_power} (presented ${server_power.rounded('cents')}).")

# The CPU work for a role adds its own energy on top of the baseline draw.
cpu_increment = Money("28.3232")
per_server_energy = server_power + cpu_increment
print(f"Adding the role's CPU energy (${cpu_increment}) gives ${per_server_energy} per server.")

print()
print("=== Cooling ===")
print("Cooling load mirrors the IT load here, so cooling costs another")
print(f"${per_server_energy} per server per year.")

print()
print("=== Hardware and software ===")
hardware = HardwareProfile(
    server_purchase_cost="2259",
    server_lifetime_years=5,
    include_purchase_in_year_one=True,
    annual_licensing_cost="13050",
)
print(f"A $2,259 server amortized over 5 years costs ${amortization(hardware)} a year.")
print(f"Year 1 (purchase + amortization + licensing): ${hardware_software_cost(hardware, 1)}")
print(f"Year 2 onward:                                ${hardware_software_cost(hardware, 2)}")

print()
print("=== Personnel ===")
staff = PersonnelProfile(it_staff=85, workers=900, housekeeping_facilities=50,
                         avg_monthly_salary="7058")
monthly = personnel_cost(staff, months=1)
annual_staff = personnel_cost(staff, months=12)
print(f"{staff.total_headcount} employees at $7,058/month cost ${monthly.formatted()} a month,")
print(f"${annual_staff.formatted()} a year.")

print()
print("=== Total, per fleet size ===")
for label, servers in (("single server", 1), ("rack", 13), ("facility", 520)):
    personnel = annual_staff if label == "facility" else Money(0)
    breakdown = total_cost(
        per_server_energy * servers,
        per_server_energy * servers,  # mirrored cooling
        hardware_software_cost(hardware, 1) * servers,
        personnel,
    )
    print(f"{label:>13} ({servers:>3} servers): power ${breakdown.power.formatted()}, "
          f"cooling ${breakdown.cooling.formatted()}, hw+sw ${breakdown.hardware_software.formatted()}, "
          f"personnel ${breakdown.personnel.formatted()}, total ${breakdown.total.formatted()}")
