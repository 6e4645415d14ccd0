#!/usr/bin/env python3
"""How security strength turns into user throughput.

Stronger ciphersuites cost more CPU time per session, so a server at the
same 90% load ceiling serves fewer users per hour.
"""

from fractions import Fraction

from dctco import (
    RoleWorkloadProfile,
    UtilizationModel,
    annualize_users,
    calibrate_session_time,
    idle_seconds,
    users_at_load,
    utilization,
)

print("=== Utilization is busy time over capacity ===")
hour = UtilizationModel(capacity_seconds=3600)
print(f"3,240 busy seconds in an hour -> {float(utilization(3240, hour)):.0%} load")
two_cores = UtilizationModel(capacity_seconds=3600, cores=2)
print(f"3,600 busy seconds on 2 cores -> {float(utilization(3600, two_cores)):.0%} load")
print()

roles = [
    ("role1", "low",    "TLSv1 (RC4 + MD5)",            11571),
    ("role2", "medium", "TLSv2 (AES/CBC 128 + SHA-1)",   5119),
    ("role3", "high",   "TLSv3 (AES/CBC 256 + SHA-512)", 3474),
]

print("=== Per-session CPU time recovered from observed throughput ===")
profiles = {}
for name, level, mechanism, observed in roles:
    session = calibrate_session_time(observed, Fraction(9, 10))
    profiles[name] = RoleWorkloadProfile(
        role_name=name,
        security_level=level,
        session_busy_seconds=session,
        target_load=Fraction(9, 10),
        security_mechanism=mechanism,
    )
    print(f"{name} ({level:>6}, {mechanism}): {float(session):.5f} s per session")
print()

print("=== Users served at a 90% load ceiling ===")
print(f"{'role':6} {'users/hour':>12} {'users/day':>12} {'users/year':>14} {'idle s/hour':>12}")
for name, *_ in roles:
    profile = profiles[name]
    hourly = users_at_load(profile, 3600)
    idle = idle_seconds(profile, hourly)
    print(f"{name:6} {hourly:>12,} {hourly * 24:>12,} {annualize_users(hourly):>14,} "
          f"{float(idle):>12.1f}")
print()
print("The one-hour idle residue is what the 10% headroom leaves over;")
print("scaling to the 520-server facility multiplies every row by 520.")
