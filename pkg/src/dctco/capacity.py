"""CPU utilization and user-throughput capacity model.

Utilization is busy time over available time (core-multiplied); a role's
throughput follows from its per-session busy time and the CPU load it is
allowed to consume. All math is exact rational arithmetic so that flooring
to whole users is reliable and calibration round-trips.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError
from .money import ExactNumber, to_fraction

SECURITY_LEVELS = ("low", "medium", "high")

HOURS_PER_YEAR = 24 * 365


def _exact(value: ExactNumber, path: str) -> Fraction:
    return to_fraction(value, path)


@dataclass(frozen=True)
class UtilizationModel:
    """Available CPU time: a capacity window in seconds, multiplied by the
    number of cores."""

    capacity_seconds: Fraction
    cores: int = 1

    def __init__(self, capacity_seconds: ExactNumber, cores: int = 1) -> None:
        capacity = _exact(capacity_seconds, "capacity_seconds")
        if capacity <= 0:
            raise ValidationError("must be > 0", "capacity_seconds")
        if isinstance(cores, bool) or not isinstance(cores, int) or cores < 1:
            raise ValidationError("must be an integer >= 1", "cores")
        object.__setattr__(self, "capacity_seconds", capacity)
        object.__setattr__(self, "cores", cores)

    @property
    def total_capacity_seconds(self) -> Fraction:
        return self.capacity_seconds * self.cores


@dataclass(frozen=True)
class RoleWorkloadProfile:
    """Workload shape of one access-control role.

    ``session_busy_seconds`` is the CPU busy time one user session costs;
    ``target_load`` is the fraction of CPU capacity the role may consume.
    The security mechanism is a descriptive label (e.g. a TLS ciphersuite);
    its performance effect is already folded into the session time.
    """

    role_name: str
    security_level: str
    session_busy_seconds: Fraction
    target_load: Fraction
    security_mechanism: str = ""
    access_types_and_data_sizes: tuple[tuple[str, Fraction], ...] = ()

    def __init__(
        self,
        role_name: str,
        security_level: str,
        session_busy_seconds: ExactNumber,
        target_load: ExactNumber,
        security_mechanism: str = "",
        access_types_and_data_sizes: tuple[tuple[str, ExactNumber], ...] = (),
    ) -> None:
        if not role_name or not isinstance(role_name, str):
            raise ValidationError("must be a non-empty string", "role_name")
        if security_level not in SECURITY_LEVELS:
            raise ValidationError(
                f"must be one of {SECURITY_LEVELS}, got {security_level!r}", "security_level"
            )
        session = _exact(session_busy_seconds, "session_busy_seconds")
        if session <= 0:
            raise ValidationError("must be > 0", "session_busy_seconds")
        load = _exact(target_load, "target_load")
        if not 0 < load <= 1:
            raise ValidationError("must be in (0, 1]", "target_load")
        access = tuple(
            (str(action), _exact(size, f"access_types_and_data_sizes[{i}]"))
            for i, (action, size) in enumerate(access_types_and_data_sizes)
        )
        object.__setattr__(self, "role_name", role_name)
        object.__setattr__(self, "security_level", security_level)
        object.__setattr__(self, "session_busy_seconds", session)
        object.__setattr__(self, "target_load", load)
        object.__setattr__(self, "security_mechanism", security_mechanism)
        object.__setattr__(self, "access_types_and_data_sizes", access)


# -- operations ------------------------------------------------------------


def utilization(busy_seconds: ExactNumber, model: UtilizationModel) -> Fraction:
    """Busy time over total capacity, as an exact fraction in [0, 1]."""
    busy = _exact(busy_seconds, "busy_seconds")
    if busy < 0:
        raise ValidationError("must be >= 0", "busy_seconds")
    capacity = model.total_capacity_seconds
    if busy > capacity:
        raise ValidationError(
            f"busy time {busy} exceeds capacity {capacity} (over-committed)",
            "busy_seconds",
        )
    return busy / capacity


def users_at_load(profile: RoleWorkloadProfile, horizon_seconds: ExactNumber) -> int:
    """Whole users servable within a horizon at the profile's target load.

    Fractional users are floored: a partially served customer does not
    count. Exact arithmetic keeps the floor reliable even for session times
    given as non-terminating rationals.
    """
    horizon = _exact(horizon_seconds, "horizon_seconds")
    if horizon <= 0:
        raise ValidationError("must be > 0", "horizon_seconds")
    served = profile.target_load * horizon / profile.session_busy_seconds
    return served.numerator // served.denominator


def idle_seconds(profile: RoleWorkloadProfile, users: int) -> Fraction:
    """Idle time left when serving ``users`` sessions at the target load.

    At full load there is no idle time by definition.
    """
    if isinstance(users, bool) or not isinstance(users, int) or users < 0:
        raise ValidationError("must be an integer >= 0", "users")
    load = profile.target_load
    busy = profile.session_busy_seconds * users
    return busy * (1 - load) / load


def annualize_users(users_per_hour: int) -> int:
    """Users per year under hour-by-hour linear growth: 24 h x 365 d."""
    if isinstance(users_per_hour, bool) or not isinstance(users_per_hour, int) or users_per_hour < 0:
        raise ValidationError("must be an integer >= 0", "users_per_hour")
    return users_per_hour * HOURS_PER_YEAR


def calibrate_session_time(observed_users_per_hour: ExactNumber, target_load: ExactNumber) -> Fraction:
    """Per-session busy time implied by an observed hourly throughput.

    Inverse of ``users_at_load`` over a one-hour horizon; feeding the result
    back reproduces the observed count exactly (up to the flooring that
    ``users_at_load`` applies).
    """
    observed = _exact(observed_users_per_hour, "observed_users_per_hour")
    if observed <= 0:
        raise ValidationError("must be > 0", "observed_users_per_hour")
    load = _exact(target_load, "target_load")
    if not 0 < load <= 1:
        raise ValidationError("must be in (0, 1]", "target_load")
    return load * 3600 / observed
