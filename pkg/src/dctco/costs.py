"""Closed-form annual cost model for a server fleet.

Covers energy pricing under a duty-cycle tariff, cooling (either mirroring
the IT load or priced from a BTU rating), hardware amortization plus
licensing, personnel, and the combined facility total. All operations are
pure functions over immutable inputs and exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction

from .errors import ValidationError
from .money import ExactNumber, Money, to_fraction

COOLING_MODES = ("mirror-it-load", "btu-rated")

# Heat/power equivalence used to price a BTU/h rating as electrical load.
BTU_PER_HOUR_PER_KW = Decimal("3412.14")


def _exact(value: ExactNumber, path: str) -> Fraction:
    return to_fraction(value, path)


def _require_int(value: object, path: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError("expected an integer", path)
    if minimum is not None and value < minimum:
        raise ValidationError(f"must be >= {minimum}, got {value}", path)
    return value


@dataclass(frozen=True)
class EnergyTariff:
    """Electricity price and duty cycle: price per kWh, operating hours per
    day, and operating days covered by the tariff period."""

    price_per_kwh: Fraction
    hours_per_day: Fraction
    days: int

    def __init__(self, price_per_kwh: ExactNumber, hours_per_day: ExactNumber, days: int) -> None:
        price = _exact(price_per_kwh, "price_per_kwh")
        if price < 0:
            raise ValidationError("must be >= 0", "price_per_kwh")
        hours = _exact(hours_per_day, "hours_per_day")
        if not 0 < hours <= 24:
            raise ValidationError("must be in (0, 24]", "hours_per_day")
        _require_int(days, "days", minimum=1)
        object.__setattr__(self, "price_per_kwh", price)
        object.__setattr__(self, "hours_per_day", hours)
        object.__setattr__(self, "days", days)

    @property
    def operating_hours(self) -> Fraction:
        return self.hours_per_day * self.days


@dataclass(frozen=True)
class ServerPowerProfile:
    """Average electrical draw of one server plus the incremental annual
    cost of the CPU work the fleet is sized for.

    ``avg_power_kw`` is the busy+idle average draw, i.e. kWh consumed per
    operating hour. The CPU increment is an externally supplied annual cost
    (it replaces a per-protocol energy simulation, which is out of scope).
    """

    avg_power_kw: Fraction
    cpu_incremental_annual_cost: Money = field(default_factory=Money)

    def __init__(
        self,
        avg_power_kw: ExactNumber,
        cpu_incremental_annual_cost: ExactNumber | Money = 0,
    ) -> None:
        kw = _exact(avg_power_kw, "avg_power_kw")
        if kw <= 0:
            raise ValidationError("must be > 0", "avg_power_kw")
        cpu = Money(cpu_incremental_annual_cost, "cpu_incremental_annual_cost")
        if cpu.is_negative():
            raise ValidationError("must be >= 0", "cpu_incremental_annual_cost")
        object.__setattr__(self, "avg_power_kw", kw)
        object.__setattr__(self, "cpu_incremental_annual_cost", cpu)


@dataclass(frozen=True)
class CoolingProfile:
    """How cooling energy is priced: mirror the IT power cost exactly, or
    price a BTU/h rating as electrical load."""

    mode: str
    btu_per_hour: Fraction | None = None

    def __init__(self, mode: str, btu_per_hour: ExactNumber | None = None) -> None:
        if mode not in COOLING_MODES:
            raise ValidationError(f"must be one of {COOLING_MODES}, got {mode!r}", "mode")
        rating: Fraction | None = None
        if mode == "btu-rated":
            if btu_per_hour is None:
                raise ValidationError("required in btu-rated mode", "btu_per_hour")
            rating = _exact(btu_per_hour, "btu_per_hour")
            if rating < 0:
                raise ValidationError("must be >= 0", "btu_per_hour")
        elif btu_per_hour is not None:
            rating = _exact(btu_per_hour, "btu_per_hour")
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "btu_per_hour", rating)


@dataclass(frozen=True)
class HardwareProfile:
    """Purchase, amortization and licensing figures for one server."""

    server_purchase_cost: Money
    server_lifetime_years: Fraction
    include_purchase_in_year_one: bool = True
    annual_licensing_cost: Money = field(default_factory=Money)

    def __init__(
        self,
        server_purchase_cost: ExactNumber | Money,
        server_lifetime_years: ExactNumber,
        include_purchase_in_year_one: bool = True,
        annual_licensing_cost: ExactNumber | Money = 0,
    ) -> None:
        purchase = Money(server_purchase_cost, "server_purchase_cost")
        if purchase.is_negative():
            raise ValidationError("must be >= 0", "server_purchase_cost")
        lifetime = _exact(server_lifetime_years, "server_lifetime_years")
        if lifetime < 1:
            raise ValidationError("must be >= 1", "server_lifetime_years")
        licensing = Money(annual_licensing_cost, "annual_licensing_cost")
        if licensing.is_negative():
            raise ValidationError("must be >= 0", "annual_licensing_cost")
        object.__setattr__(self, "server_purchase_cost", purchase)
        object.__setattr__(self, "server_lifetime_years", lifetime)
        object.__setattr__(self, "include_purchase_in_year_one", bool(include_purchase_in_year_one))
        object.__setattr__(self, "annual_licensing_cost", licensing)


@dataclass(frozen=True)
class PersonnelProfile:
    """Headcounts by group and the enterprise-average monthly salary."""

    it_staff: int
    workers: int
    housekeeping_facilities: int
    avg_monthly_salary: Money

    def __init__(
        self,
        it_staff: int,
        workers: int,
        housekeeping_facilities: int,
        avg_monthly_salary: ExactNumber | Money,
    ) -> None:
        object.__setattr__(self, "it_staff", _require_int(it_staff, "it_staff", 0))
        object.__setattr__(self, "workers", _require_int(workers, "workers", 0))
        object.__setattr__(
            self,
            "housekeeping_facilities",
            _require_int(housekeeping_facilities, "housekeeping_facilities", 0),
        )
        salary = Money(avg_monthly_salary, "avg_monthly_salary")
        if salary.is_negative():
            raise ValidationError("must be >= 0", "avg_monthly_salary")
        object.__setattr__(self, "avg_monthly_salary", salary)

    @property
    def total_headcount(self) -> int:
        return self.it_staff + self.workers + self.housekeeping_facilities


@dataclass(frozen=True)
class CostBreakdown:
    """Itemized cost over one period: power, cooling, hardware+software and
    personnel, with ``total`` always their exact sum."""

    power: Money
    cooling: Money
    hardware_software: Money
    personnel: Money
    total: Money
    period_years: int = 1

    def __post_init__(self) -> None:
        _require_int(self.period_years, "period_years", 1)
        expected = self.power + self.cooling + self.hardware_software + self.personnel
        if self.total != expected:
            raise ValidationError(
                f"total {self.total} is not the sum of the components ({expected})",
                "total",
            )

    def __add__(self, other: "CostBreakdown") -> "CostBreakdown":
        if not isinstance(other, CostBreakdown):
            return NotImplemented
        if self.period_years != other.period_years:
            raise ValidationError(
                f"cannot combine breakdowns over different periods "
                f"({self.period_years} vs {other.period_years} years)",
                "period_years",
            )
        return total_cost(
            self.power + other.power,
            self.cooling + other.cooling,
            self.hardware_software + other.hardware_software,
            self.personnel + other.personnel,
            period_years=self.period_years,
        )

    def scale(self, factor: int) -> "CostBreakdown":
        _require_int(factor, "factor", 0)
        return total_cost(
            self.power * factor,
            self.cooling * factor,
            self.hardware_software * factor,
            self.personnel * factor,
            period_years=self.period_years,
        )


# -- operations ------------------------------------------------------------


def energy_kwh(avg_power_kw: ExactNumber, tariff: EnergyTariff) -> Fraction:
    """Energy drawn over the tariff period: draw x hours/day x days."""
    kw = _exact(avg_power_kw, "avg_power_kw")
    if kw <= 0:
        raise ValidationError("must be > 0", "avg_power_kw")
    return kw * tariff.hours_per_day * tariff.days


def power_cost(avg_power_kw: ExactNumber, tariff: EnergyTariff) -> Money:
    """Cost of the energy drawn over the tariff period."""
    return Money(energy_kwh(avg_power_kw, tariff) * tariff.price_per_kwh)


def cooling_cost(cooling: CoolingProfile, it_power_cost: Money, tariff: EnergyTariff) -> Money:
    """Cooling energy cost.

    In mirror mode the cooling load is taken as exactly equal to the IT
    load, so the IT power cost is returned unchanged. In btu-rated mode the
    BTU/h rating is converted to kW and priced like any other draw.
    """
    if cooling.mode == "mirror-it-load":
        return it_power_cost
    rating = cooling.btu_per_hour
    if rating is None:
        raise ValidationError("required in btu-rated mode", "btu_per_hour")
    kw = rating / to_fraction(BTU_PER_HOUR_PER_KW)
    return Money(kw * tariff.hours_per_day * tariff.days * tariff.price_per_kwh)


def amortization(hw: HardwareProfile) -> Money:
    """Annual amortization: purchase cost spread over the server lifetime."""
    if hw.server_lifetime_years == 0:
        raise ValidationError("must be >= 1", "server_lifetime_years")
    return hw.server_purchase_cost.divided_by(hw.server_lifetime_years)


def hardware_software_cost(hw: HardwareProfile, year_index: int = 1) -> Money:
    """Hardware+software cost for one server in a given (1-based) year.

    Always includes amortization and licensing; adds the purchase price in
    year one when the profile says so.
    """
    _require_int(year_index, "year_index", 1)
    cost = amortization(hw) + hw.annual_licensing_cost
    if year_index == 1 and hw.include_purchase_in_year_one:
        cost = cost + hw.server_purchase_cost
    return cost


def personnel_cost(p: PersonnelProfile, months: int = 1) -> Money:
    """Total salary bill: headcount x average monthly salary x months."""
    _require_int(months, "months", 1)
    return p.avg_monthly_salary * p.total_headcount * months


def total_cost(
    power: Money,
    cooling: Money,
    hw_sw: Money,
    personnel: Money,
    period_years: int = 1,
) -> CostBreakdown:
    """Combine the four components; the total is their exact sum.

    All components must cover the same period (the caller passes it as
    ``period_years``); combining breakdowns over different periods raises.
    """
    _require_int(period_years, "period_years", 1)
    for name, component in (
        ("power", power),
        ("cooling", cooling),
        ("hw_sw", hw_sw),
        ("personnel", personnel),
    ):
        if component.is_negative():
            raise ValidationError("must be >= 0", name)
    return CostBreakdown(
        power=power,
        cooling=cooling,
        hardware_software=hw_sw,
        personnel=personnel,
        total=power + cooling + hw_sw + personnel,
        period_years=period_years,
    )
