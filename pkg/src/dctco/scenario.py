"""Scenario documents and the evaluation pipeline.

A scenario is a declarative JSON document (facility, roles, economics) that
is validated strictly: unknown keys are rejected and every invariant
violation names the offending field by dotted path. Evaluation runs the
full pipeline per role (throughput, costs at server/rack/facility
granularity, income, profit, ROI) and is deterministic: equal scenarios
produce equal reports.
"""

from __future__ import annotations

import copy
import json
import os
import re
from contextlib import contextmanager
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Iterator, Mapping

from .capacity import (
    RoleWorkloadProfile,
    annualize_users,
    calibrate_session_time,
    users_at_load,
)
from .costs import (
    CoolingProfile,
    CostBreakdown,
    EnergyTariff,
    HardwareProfile,
    PersonnelProfile,
    ServerPowerProfile,
    cooling_cost,
    hardware_software_cost,
    personnel_cost,
    power_cost,
    total_cost,
)
from .economics import (
    EconomicAssumptions,
    FinancialProjection,
    annual_income,
    project,
)
from .errors import ParseError, UnknownRoleError, UnknownScenarioError, ValidationError
from .money import Money, format_decimal, fraction_to_decimal, to_fraction

GRANULARITIES = ("server", "rack", "facility")
SWEEP_METRICS = ("total_cost", "profit", "roi", "users_per_year")
SCENARIO_DIR_ENV = "DC_TCO_SCENARIO_DIR"

_DECIMAL_STRING = re.compile(r"^-?\d+(\.\d+)?$")


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScenarioRole:
    """One role in a scenario: its workload profile plus the economics
    inputs attached to it.

    ``cpu_incremental_annual_cost`` is the annual energy cost of the role's
    CPU work, quoted at ``cpu_cost_basis`` (usually the facility tariff).
    Quoting against a basis keeps the underlying quantity an energy: when a
    what-if changes the electricity price, the increment is repriced
    proportionally instead of staying a fixed fee.
    """

    profile: RoleWorkloadProfile
    cpu_incremental_annual_cost: Money
    cpu_cost_basis: EnergyTariff
    outcome_override: Money | None = None
    observed_users_per_hour: int | None = None
    description: str = ""

    def __post_init__(self) -> None:
        if self.cpu_incremental_annual_cost.is_negative():
            raise ValidationError("must be >= 0", "cpu_incremental_annual_cost")
        if (
            self.cpu_incremental_annual_cost > Money(0)
            and self.cpu_cost_basis.price_per_kwh == 0
        ):
            raise ValidationError(
                "a positive CPU energy cost cannot be quoted at a zero "
                "electricity price",
                "cpu_cost_basis.price_per_kwh",
            )

    @property
    def role_name(self) -> str:
        return self.profile.role_name


@dataclass(frozen=True)
class FacilitySpec:
    """Physical facility: fleet size, tariff and per-server cost profiles."""

    servers_total: int
    servers_per_rack: int
    tariff: EnergyTariff
    power: ServerPowerProfile
    cooling: CoolingProfile
    hardware: HardwareProfile
    personnel: PersonnelProfile

    def __post_init__(self) -> None:
        for name in ("servers_total", "servers_per_rack"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValidationError("must be an integer >= 1", name)


@dataclass(frozen=True)
class ReferenceFigures:
    """Published figures a scenario declares for cross-checking.

    The engine never silently adopts these: evaluation reports exact
    computed values and emits diagnostics quantifying any differences.
    """

    facility_energy_cost_by_role: tuple[tuple[str, Money], ...] = ()
    profit_year1_by_role: tuple[tuple[str, Money], ...] = ()
    user_gain_percent_claims: tuple[Fraction, ...] = ()


@dataclass(frozen=True)
class Scenario:
    name: str
    facility: FacilitySpec
    roles: tuple[ScenarioRole, ...]
    economics: EconomicAssumptions
    reference: ReferenceFigures | None = None
    description: str = ""

    def __post_init__(self) -> None:
        if not self.roles:
            raise ValidationError("must contain at least one role", "roles")
        names = [r.role_name for r in self.roles]
        dupes = {n for n in names if names.count(n) > 1}
        if dupes:
            raise ValidationError(f"duplicate role name(s): {', '.join(sorted(dupes))}", "roles")

    def role(self, name: str) -> ScenarioRole:
        for role in self.roles:
            if role.role_name == name:
                return role
        raise UnknownRoleError(name, tuple(r.role_name for r in self.roles))


@dataclass(frozen=True)
class GranularCosts:
    """The same annual breakdown at the three reporting granularities.

    Power, cooling and hardware/software scale exactly with the server
    count; personnel is attributed at facility level only.
    """

    server: CostBreakdown
    rack: CostBreakdown
    facility: CostBreakdown

    def at(self, granularity: str) -> CostBreakdown:
        if granularity not in GRANULARITIES:
            raise ValidationError(f"must be one of {GRANULARITIES}, got {granularity!r}", "granularity")
        return getattr(self, granularity)


@dataclass(frozen=True)
class RoleReport:
    role_name: str
    security_level: str
    security_mechanism: str
    users_per_hour: int
    users_per_year_server: int
    users_per_year_facility: int
    costs: GranularCosts
    income_annual: Money
    outcome_annual: Money
    outcome_source: str  # "override" or "cost-model"
    projection: FinancialProjection


@dataclass(frozen=True)
class EvaluationReport:
    scenario_name: str
    servers_total: int
    servers_per_rack: int
    racks_full: int
    rack_remainder_servers: int
    roles: tuple[RoleReport, ...]
    diagnostics: tuple[str, ...]
    user_gain_claims: tuple[Fraction, ...] = ()

    def role(self, name: str) -> RoleReport:
        for role in self.roles:
            if role.role_name == name:
                return role
        raise UnknownRoleError(name, tuple(r.role_name for r in self.roles))


@dataclass(frozen=True)
class ComparisonSummary:
    """Relative deltas between two roles of one report."""

    role_a: str
    role_b: str
    users_ratio: Fraction | None
    users_gain_percent: Fraction | None
    profit_ratio: Fraction | None
    roi_delta_points: Fraction
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class SweepSpec:
    """A one-parameter what-if: a dotted path into the scenario document,
    the values to try, and the metric to record per point."""

    parameter_path: str
    values: tuple[Decimal | int, ...]
    metric: str
    role: str | None = None

    def __init__(
        self,
        parameter_path: str,
        values: tuple[Decimal | int, ...] | list,
        metric: str,
        role: str | None = None,
    ) -> None:
        if not parameter_path or not isinstance(parameter_path, str):
            raise ValidationError("must be a non-empty dotted path", "parameter_path")
        if not values:
            raise ValidationError("values must be non-empty", "values")
        points = []
        for i, v in enumerate(values):
            to_fraction(v, f"values[{i}]")  # rejects floats and non-numbers
            if isinstance(v, str):
                v = Decimal(v)
            points.append(v)
        points = tuple(points)
        if metric not in SWEEP_METRICS:
            raise ValidationError(f"must be one of {SWEEP_METRICS}, got {metric!r}", "metric")
        object.__setattr__(self, "parameter_path", parameter_path)
        object.__setattr__(self, "values", points)
        object.__setattr__(self, "metric", metric)
        object.__setattr__(self, "role", role)


@dataclass(frozen=True)
class SweepPoint:
    value: Decimal | int
    metric_value: Money | Fraction | int | None = None
    error: str | None = None
    error_field_path: str = ""


@dataclass(frozen=True)
class SweepResult:
    parameter_path: str
    metric: str
    role_name: str
    points: tuple[SweepPoint, ...]


# ---------------------------------------------------------------------------
# strict document validation
# ---------------------------------------------------------------------------


def _join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


@contextmanager
def _rooted(path: str) -> Iterator[None]:
    """Re-raise ValidationErrors from nested constructors with a full path."""
    try:
        yield
    except ValidationError as exc:
        raise ValidationError(exc.reason, _join(path, exc.field_path)) from None


class _Fields:
    """Mapping reader that tracks consumed keys and rejects unknown ones."""

    def __init__(self, mapping: object, path: str) -> None:
        if not isinstance(mapping, Mapping):
            raise ValidationError("expected an object", path or "document")
        self._mapping = mapping
        self._path = path
        self._taken: set[str] = set()

    def take(self, key: str, required: bool = False, default: Any = None) -> Any:
        self._taken.add(key)
        if key in self._mapping:
            return self._mapping[key]
        if required:
            raise ValidationError("required key is missing", _join(self._path, key))
        return default

    def at(self, key: str) -> str:
        return _join(self._path, key)

    def done(self) -> None:
        unknown = sorted(set(self._mapping) - self._taken)
        if unknown:
            raise ValidationError("unknown key", _join(self._path, unknown[0]))


def _no_floats(value: Any, path: str) -> None:
    if isinstance(value, float):
        raise ValidationError(
            'binary floats are not accepted; use a decimal string like "0.0756"', path
        )


def _exact_value(value: Any, path: str) -> Fraction:
    _no_floats(value, path)
    if not isinstance(value, (int, str, Decimal)) or isinstance(value, bool):
        raise ValidationError("expected a number (decimal string or integer)", path)
    return to_fraction(value, path)


def _currency(value: Any, path: str, minimum_zero: bool = True) -> Money:
    amount = Money(_exact_value(value, path))
    if minimum_zero and amount.is_negative():
        raise ValidationError("must be >= 0", path)
    return amount


def _int_value(value: Any, path: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError("expected an integer", path)
    if minimum is not None and value < minimum:
        raise ValidationError(f"must be >= {minimum}, got {value}", path)
    return value


def _str_value(value: Any, path: str, required_nonempty: bool = True) -> str:
    if not isinstance(value, str):
        raise ValidationError("expected a string", path)
    if required_nonempty and not value:
        raise ValidationError("must be non-empty", path)
    return value


def _bool_value(value: Any, path: str) -> bool:
    if not isinstance(value, bool):
        raise ValidationError("expected true or false", path)
    return value


def _build_tariff(raw: object, path: str) -> EnergyTariff:
    f = _Fields(raw, path)
    price = _exact_value(f.take("price_per_kwh", required=True), f.at("price_per_kwh"))
    hours = _exact_value(f.take("hours_per_day", required=True), f.at("hours_per_day"))
    days = _int_value(f.take("days", required=True), f.at("days"), minimum=1)
    f.done()
    with _rooted(path):
        return EnergyTariff(price, hours, days)


def _build_facility(raw: object, path: str) -> FacilitySpec:
    f = _Fields(raw, path)
    servers_total = _int_value(f.take("servers_total", required=True), f.at("servers_total"), 1)
    servers_per_rack = _int_value(
        f.take("servers_per_rack", required=True), f.at("servers_per_rack"), 1
    )
    tariff = _build_tariff(f.take("tariff", required=True), f.at("tariff"))

    power_fields = _Fields(f.take("power", required=True), f.at("power"))
    avg_power = _exact_value(
        power_fields.take("avg_power_kw", required=True), power_fields.at("avg_power_kw")
    )
    power_fields.done()
    with _rooted(f.at("power")):
        power = ServerPowerProfile(avg_power)

    cooling_fields = _Fields(f.take("cooling", required=True), f.at("cooling"))
    mode = _str_value(cooling_fields.take("mode", required=True), cooling_fields.at("mode"))
    btu_raw = cooling_fields.take("btu_per_hour")
    btu = None if btu_raw is None else _exact_value(btu_raw, cooling_fields.at("btu_per_hour"))
    cooling_fields.done()
    with _rooted(f.at("cooling")):
        cooling = CoolingProfile(mode, btu)

    hw_fields = _Fields(f.take("hardware", required=True), f.at("hardware"))
    purchase = _currency(
        hw_fields.take("server_purchase_cost", required=True),
        hw_fields.at("server_purchase_cost"),
    )
    lifetime = _exact_value(
        hw_fields.take("server_lifetime_years", default=5), hw_fields.at("server_lifetime_years")
    )
    include_purchase = _bool_value(
        hw_fields.take("include_purchase_in_year_one", default=True),
        hw_fields.at("include_purchase_in_year_one"),
    )
    licensing = _currency(
        hw_fields.take("annual_licensing_cost", default=0),
        hw_fields.at("annual_licensing_cost"),
    )
    hw_fields.done()
    with _rooted(f.at("hardware")):
        hardware = HardwareProfile(purchase, lifetime, include_purchase, licensing)

    p_fields = _Fields(f.take("personnel", required=True), f.at("personnel"))
    it_staff = _int_value(p_fields.take("it_staff", required=True), p_fields.at("it_staff"), 0)
    workers = _int_value(p_fields.take("workers", required=True), p_fields.at("workers"), 0)
    housekeeping = _int_value(
        p_fields.take("housekeeping_facilities", required=True),
        p_fields.at("housekeeping_facilities"),
        0,
    )
    salary = _currency(
        p_fields.take("avg_monthly_salary", required=True), p_fields.at("avg_monthly_salary")
    )
    p_fields.done()
    with _rooted(f.at("personnel")):
        personnel = PersonnelProfile(it_staff, workers, housekeeping, salary)

    f.done()
    with _rooted(path):
        return FacilitySpec(
            servers_total=servers_total,
            servers_per_rack=servers_per_rack,
            tariff=tariff,
            power=power,
            cooling=cooling,
            hardware=hardware,
            personnel=personnel,
        )


def _build_role(raw: object, index: int, facility_tariff: EnergyTariff) -> ScenarioRole:
    probe = _Fields(raw, f"roles[{index}]")
    name = _str_value(probe.take("role_name", required=True), probe.at("role_name"))
    path = f"roles.{name}"

    f = _Fields(raw, path)
    f.take("role_name")
    level = _str_value(f.take("security_level", required=True), f.at("security_level"))
    mechanism = f.take("security_mechanism", default="")
    mechanism = _str_value(mechanism, f.at("security_mechanism"), required_nonempty=False)
    load = _exact_value(f.take("target_load", required=True), f.at("target_load"))

    session_raw = f.take("session_busy_seconds")
    observed_raw = f.take("observed_users_per_hour")
    if (session_raw is None) == (observed_raw is None):
        raise ValidationError(
            "exactly one of session_busy_seconds and observed_users_per_hour is required",
            _join(path, "session_busy_seconds"),
        )
    observed: int | None = None
    if session_raw is not None:
        session = _exact_value(session_raw, f.at("session_busy_seconds"))
    else:
        observed = _int_value(observed_raw, f.at("observed_users_per_hour"), minimum=1)
        with _rooted(path):
            session = calibrate_session_time(observed, load)

    access_raw = f.take("access", default=[])
    if not isinstance(access_raw, list):
        raise ValidationError("expected an array", f.at("access"))
    access: list[tuple[str, Fraction]] = []
    for i, entry in enumerate(access_raw):
        entry_fields = _Fields(entry, f"{path}.access[{i}]")
        action = _str_value(entry_fields.take("action", required=True), entry_fields.at("action"))
        size = _exact_value(entry_fields.take("data_mb", required=True), entry_fields.at("data_mb"))
        entry_fields.done()
        access.append((action, size))

    cpu_cost = _currency(
        f.take("cpu_incremental_annual_cost", default=0),
        f.at("cpu_incremental_annual_cost"),
    )
    basis_raw = f.take("cpu_cost_basis")
    basis = facility_tariff if basis_raw is None else _build_tariff(basis_raw, f.at("cpu_cost_basis"))

    override_raw = f.take("outcome_override")
    override = None if override_raw is None else _currency(override_raw, f.at("outcome_override"))

    description = f.take("description", default="")
    description = _str_value(description, f.at("description"), required_nonempty=False)
    f.done()

    with _rooted(path):
        profile = RoleWorkloadProfile(
            role_name=name,
            security_level=level,
            session_busy_seconds=session,
            target_load=load,
            security_mechanism=mechanism,
            access_types_and_data_sizes=tuple(access),
        )
        return ScenarioRole(
            profile=profile,
            cpu_incremental_annual_cost=cpu_cost,
            cpu_cost_basis=basis,
            outcome_override=override,
            observed_users_per_hour=observed,
            description=description,
        )


def _build_economics(raw: object, path: str) -> EconomicAssumptions:
    f = _Fields(raw, path)
    price = _currency(f.take("price_per_contact", required=True), f.at("price_per_contact"))
    years = _int_value(f.take("analysis_years", default=1), f.at("analysis_years"), 1)
    convention = _str_value(
        f.take("roi_convention", default="cumulative"), f.at("roi_convention")
    )
    f.done()
    with _rooted(path):
        return EconomicAssumptions(price, years, convention)


def _build_role_money_map(
    raw: object, path: str, role_names: tuple[str, ...]
) -> tuple[tuple[str, Money], ...]:
    if not isinstance(raw, Mapping):
        raise ValidationError("expected an object mapping role names to amounts", path)
    entries: list[tuple[str, Money]] = []
    for key in raw:
        if key not in role_names:
            raise ValidationError(f"unknown role {key!r}", _join(path, str(key)))
    for name in role_names:  # deterministic role order
        if name in raw:
            entries.append((name, _currency(raw[name], _join(path, name), minimum_zero=False)))
    return tuple(entries)


def _build_reference(raw: object, path: str, role_names: tuple[str, ...]) -> ReferenceFigures:
    f = _Fields(raw, path)
    energy_raw = f.take("facility_energy_cost_by_role")
    energy = (
        ()
        if energy_raw is None
        else _build_role_money_map(energy_raw, f.at("facility_energy_cost_by_role"), role_names)
    )
    profit_raw = f.take("profit_year1_by_role")
    profits = (
        ()
        if profit_raw is None
        else _build_role_money_map(profit_raw, f.at("profit_year1_by_role"), role_names)
    )
    claims_raw = f.take("user_gain_percent_claims", default=[])
    if not isinstance(claims_raw, list):
        raise ValidationError("expected an array", f.at("user_gain_percent_claims"))
    claims = tuple(
        _exact_value(v, f"{f.at('user_gain_percent_claims')}[{i}]")
        for i, v in enumerate(claims_raw)
    )
    f.done()
    return ReferenceFigures(
        facility_energy_cost_by_role=energy,
        profit_year1_by_role=profits,
        user_gain_percent_claims=claims,
    )


def load_scenario(document: Mapping | str | bytes) -> Scenario:
    """Validate a scenario document (JSON text or parsed mapping).

    Raises ParseError for malformed JSON and ValidationError (with a dotted
    field path) for anything that violates the schema or an invariant.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document, parse_float=Decimal)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed scenario document: {exc}") from None
    if not isinstance(document, Mapping):
        raise ParseError("scenario document must be a JSON object")

    f = _Fields(document, "")
    name = _str_value(f.take("name", required=True), "name")
    description = f.take("description", default="")
    description = _str_value(description, "description", required_nonempty=False)
    facility = _build_facility(f.take("facility", required=True), "facility")

    roles_raw = f.take("roles", required=True)
    if not isinstance(roles_raw, list) or not roles_raw:
        raise ValidationError("must be a non-empty array of roles", "roles")
    roles = tuple(
        _build_role(entry, i, facility.tariff) for i, entry in enumerate(roles_raw)
    )

    economics = _build_economics(f.take("economics", required=True), "economics")

    role_names = tuple(r.role_name for r in roles)
    reference_raw = f.take("reference")
    reference = (
        None
        if reference_raw is None
        else _build_reference(reference_raw, "reference", role_names)
    )
    f.done()

    with _rooted(""):
        return Scenario(
            name=name,
            facility=facility,
            roles=roles,
            economics=economics,
            reference=reference,
            description=description,
        )


def load_scenario_file(path: str | Path) -> Scenario:
    text = Path(path).read_text(encoding="utf-8")
    return load_scenario(text)


# ---------------------------------------------------------------------------
# canonical serialization (round-trips through load_scenario)
# ---------------------------------------------------------------------------


def _number_doc(value: Fraction, places: int = 12) -> int | str:
    if value.denominator == 1:
        return value.numerator
    return format_decimal(fraction_to_decimal(value, places))


def _money_doc(value: Money) -> str:
    return value.decimal_string(places=12)


def _tariff_doc(tariff: EnergyTariff) -> dict:
    return {
        "price_per_kwh": format_decimal(fraction_to_decimal(tariff.price_per_kwh, 12)),
        "hours_per_day": _number_doc(tariff.hours_per_day),
        "days": tariff.days,
    }


def scenario_to_document(scenario: Scenario) -> dict:
    """Canonical JSON-ready form of a scenario.

    Currency and other non-integral numbers become decimal strings; the CPU
    cost basis is materialized on every role so that later tariff edits do
    not change what the quoted cost means.
    """
    facility = scenario.facility
    doc: dict[str, Any] = {"name": scenario.name}
    if scenario.description:
        doc["description"] = scenario.description
    cooling: dict[str, Any] = {"mode": facility.cooling.mode}
    if facility.cooling.btu_per_hour is not None:
        cooling["btu_per_hour"] = _number_doc(facility.cooling.btu_per_hour)
    doc["facility"] = {
        "servers_total": facility.servers_total,
        "servers_per_rack": facility.servers_per_rack,
        "tariff": _tariff_doc(facility.tariff),
        "power": {"avg_power_kw": _number_doc(facility.power.avg_power_kw)},
        "cooling": cooling,
        "hardware": {
            "server_purchase_cost": _money_doc(facility.hardware.server_purchase_cost),
            "server_lifetime_years": _number_doc(facility.hardware.server_lifetime_years),
            "include_purchase_in_year_one": facility.hardware.include_purchase_in_year_one,
            "annual_licensing_cost": _money_doc(facility.hardware.annual_licensing_cost),
        },
        "personnel": {
            "it_staff": facility.personnel.it_staff,
            "workers": facility.personnel.workers,
            "housekeeping_facilities": facility.personnel.housekeeping_facilities,
            "avg_monthly_salary": _money_doc(facility.personnel.avg_monthly_salary),
        },
    }
    roles = []
    for role in scenario.roles:
        entry: dict[str, Any] = {
            "role_name": role.role_name,
            "security_level": role.profile.security_level,
        }
        if role.profile.security_mechanism:
            entry["security_mechanism"] = role.profile.security_mechanism
        entry["target_load"] = _number_doc(role.profile.target_load)
        if role.observed_users_per_hour is not None:
            entry["observed_users_per_hour"] = role.observed_users_per_hour
        else:
            entry["session_busy_seconds"] = _number_doc(role.profile.session_busy_seconds)
        if role.profile.access_types_and_data_sizes:
            entry["access"] = [
                {"action": action, "data_mb": _number_doc(size)}
                for action, size in role.profile.access_types_and_data_sizes
            ]
        entry["cpu_incremental_annual_cost"] = _money_doc(role.cpu_incremental_annual_cost)
        entry["cpu_cost_basis"] = _tariff_doc(role.cpu_cost_basis)
        if role.outcome_override is not None:
            entry["outcome_override"] = _money_doc(role.outcome_override)
        if role.description:
            entry["description"] = role.description
        roles.append(entry)
    doc["roles"] = roles
    doc["economics"] = {
        "price_per_contact": _money_doc(scenario.economics.price_per_contact),
        "analysis_years": scenario.economics.analysis_years,
        "roi_convention": scenario.economics.roi_convention,
    }
    if scenario.reference is not None:
        ref: dict[str, Any] = {}
        if scenario.reference.facility_energy_cost_by_role:
            ref["facility_energy_cost_by_role"] = {
                name: _money_doc(v) for name, v in scenario.reference.facility_energy_cost_by_role
            }
        if scenario.reference.profit_year1_by_role:
            ref["profit_year1_by_role"] = {
                name: _money_doc(v) for name, v in scenario.reference.profit_year1_by_role
            }
        if scenario.reference.user_gain_percent_claims:
            ref["user_gain_percent_claims"] = [
                _number_doc(v) for v in scenario.reference.user_gain_percent_claims
            ]
        doc["reference"] = ref
    return doc


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def _cpu_increment_cost(role: ScenarioRole, tariff: EnergyTariff) -> Money:
    """Reprice the role's quoted CPU energy cost under the current tariff.

    The quote is cost-at-basis; dividing by the basis recovers the implied
    incremental draw, which is then priced like any other load.
    """
    cost = role.cpu_incremental_annual_cost
    if cost == Money(0):
        return cost
    basis = role.cpu_cost_basis
    implied_kw = cost.amount / (basis.price_per_kwh * basis.operating_hours)
    return Money(implied_kw * tariff.price_per_kwh * tariff.operating_hours)


def evaluate(scenario: Scenario) -> EvaluationReport:
    """Run the full pipeline for every role of a scenario.

    Per role: users/hour at the target load, annualized per server and for
    the whole facility; the annual cost breakdown at server, rack and
    facility granularity; and the income/profit/ROI projection. When a role
    declares an outcome override the projection uses it, and the cost-model
    total stays visible in the facility breakdown.
    """
    facility = scenario.facility
    tariff = facility.tariff
    diagnostics: list[str] = []

    remainder = facility.servers_total % facility.servers_per_rack
    if remainder:
        diagnostics.append(
            f"fleet of {facility.servers_total} servers does not fill racks of "
            f"{facility.servers_per_rack} exactly; the last rack holds {remainder} server(s)"
        )

    base_power = power_cost(facility.power.avg_power_kw, tariff)
    hw_sw = hardware_software_cost(facility.hardware, year_index=1)
    personnel_year = personnel_cost(facility.personnel, months=12)

    role_reports: list[RoleReport] = []
    override_roles: list[str] = []
    for role in scenario.roles:
        users_hour = users_at_load(role.profile, 3600)
        users_year_server = annualize_users(users_hour)
        users_year_facility = users_year_server * facility.servers_total

        power_component = base_power + _cpu_increment_cost(role, tariff)
        cooling = cooling_cost(facility.cooling, power_component, tariff)
        zero = Money(0)
        server_bd = total_cost(power_component, cooling, hw_sw, zero)
        rack_bd = total_cost(
            power_component * facility.servers_per_rack,
            cooling * facility.servers_per_rack,
            hw_sw * facility.servers_per_rack,
            zero,
        )
        facility_bd = total_cost(
            power_component * facility.servers_total,
            cooling * facility.servers_total,
            hw_sw * facility.servers_total,
            personnel_year,
        )

        income = annual_income(users_year_facility, scenario.economics)
        if role.outcome_override is not None:
            outcome, source = role.outcome_override, "override"
            override_roles.append(role.role_name)
        else:
            outcome, source = facility_bd.total, "cost-model"
        projection = project(income, outcome, scenario.economics)

        role_reports.append(
            RoleReport(
                role_name=role.role_name,
                security_level=role.profile.security_level,
                security_mechanism=role.profile.security_mechanism,
                users_per_hour=users_hour,
                users_per_year_server=users_year_server,
                users_per_year_facility=users_year_facility,
                costs=GranularCosts(server=server_bd, rack=rack_bd, facility=facility_bd),
                income_annual=income,
                outcome_annual=outcome,
                outcome_source=source,
                projection=projection,
            )
        )

    if override_roles:
        diagnostics.append(
            "annual outcome for "
            + ", ".join(override_roles)
            + " is supplied by the scenario; the cost-model facility totals are"
            " reported alongside in the cost breakdowns"
        )

    claims: tuple[Fraction, ...] = ()
    if scenario.reference is not None:
        diagnostics.extend(_reference_diagnostics(scenario, role_reports))
        claims = scenario.reference.user_gain_percent_claims

    return EvaluationReport(
        scenario_name=scenario.name,
        servers_total=facility.servers_total,
        servers_per_rack=facility.servers_per_rack,
        racks_full=facility.servers_total // facility.servers_per_rack,
        rack_remainder_servers=remainder,
        roles=tuple(role_reports),
        diagnostics=tuple(diagnostics),
        user_gain_claims=claims,
    )


def _fmt_dollars(value: Money) -> str:
    return f"${value.formatted('cents')}"


def _reference_diagnostics(scenario: Scenario, roles: list[RoleReport]) -> list[str]:
    """Quantify how computed figures differ from scenario-declared ones."""
    assert scenario.reference is not None
    ref = scenario.reference
    by_name = {r.role_name: r for r in roles}
    notes: list[str] = []

    for name, declared in ref.facility_energy_cost_by_role:
        report = by_name[name]
        computed = report.costs.facility.power
        shown = computed.rounded("ceil-dollar")
        delta = shown - declared.rounded("ceil-dollar")
        notes.append(
            f"facility energy cost for {name}: computed ${shown:,f} "
            f"(= {scenario.facility.servers_total} x per-server "
            f"${report.costs.server.power.rounded('ceil-dollar'):,f}), declared reference "
            f"${declared.rounded('ceil-dollar'):,f} differs by ${delta:+,f}; the reference "
            "rounds per-role CPU energy before scaling to the fleet"
        )

    fleet_purchase = scenario.facility.hardware.server_purchase_cost * scenario.facility.servers_total
    for name, declared in ref.profit_year1_by_role:
        report = by_name[name]
        computed = report.projection.years[0].profit
        delta = declared - computed
        if delta == fleet_purchase and fleet_purchase > Money(0):
            notes.append(
                f"year-1 profit for {name}: computed {_fmt_dollars(computed)} (income minus outcome); "
                f"declared reference {_fmt_dollars(declared)} is higher by exactly "
                f"{_fmt_dollars(delta)} = {scenario.facility.servers_total} x "
                f"{_fmt_dollars(scenario.facility.hardware.server_purchase_cost)} per server, i.e. the "
                "declared figure excludes the year-one hardware purchase"
            )
        else:
            notes.append(
                f"year-1 profit for {name}: computed {_fmt_dollars(computed)}; declared reference "
                f"{_fmt_dollars(declared)} differs by {_fmt_dollars(delta)}"
            )

    if ref.user_gain_percent_claims:
        gains: list[str] = []
        for a in roles:
            for b in roles:
                if a.role_name == b.role_name or b.users_per_year_facility == 0:
                    continue
                gain = (Fraction(a.users_per_year_facility, b.users_per_year_facility) - 1) * 100
                gains.append(f"{a.role_name} vs {b.role_name} {_fmt_percent(gain)}%")
        claimed = ", ".join(f"{_fmt_percent(c)}%" for c in ref.user_gain_percent_claims)
        notes.append(
            f"declared user-capacity gains of {claimed} are not reproduced by any "
            f"pairwise ratio of computed user counts ({'; '.join(gains)}); exact ratios "
            "are reported instead"
        )
    return notes


def _fmt_percent(value: Fraction) -> str:
    return format_decimal(fraction_to_decimal(value, 2))


# ---------------------------------------------------------------------------
# comparison
# ---------------------------------------------------------------------------


def compare(report: EvaluationReport, role_a: str, role_b: str) -> ComparisonSummary:
    """Relative deltas between two roles: user capacity, profit and ROI."""
    a = report.role(role_a)
    b = report.role(role_b)

    users_ratio: Fraction | None = None
    gain: Fraction | None = None
    if b.users_per_year_facility > 0:
        users_ratio = Fraction(a.users_per_year_facility, b.users_per_year_facility)
        gain = (users_ratio - 1) * 100

    profit_a = a.projection.years[0].profit
    profit_b = b.projection.years[0].profit
    profit_ratio = profit_a.ratio(profit_b) if profit_b != Money(0) else None

    roi_delta = (a.projection.years[0].roi - b.projection.years[0].roi) * 100

    notes: list[str] = []
    if report.user_gain_claims and gain is not None:
        claimed = ", ".join(f"{_fmt_percent(c)}%" for c in report.user_gain_claims)
        notes.append(
            f"declared user-capacity gain claims ({claimed}) do not match this pair's "
            f"exact gain of {_fmt_percent(gain)}%; the exact ratio is authoritative"
        )
    return ComparisonSummary(
        role_a=role_a,
        role_b=role_b,
        users_ratio=users_ratio,
        users_gain_percent=gain,
        profit_ratio=profit_ratio,
        roi_delta_points=roi_delta,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# parameter sweeps
# ---------------------------------------------------------------------------


def _walk_document(doc: dict, path: str) -> tuple[Any, str | int]:
    """Resolve a dotted path to its parent container and final key.

    List segments accept either a numeric index or a role name (matched
    against ``role_name`` entries).
    """
    tokens = path.split(".")
    if any(not t for t in tokens):
        raise ValidationError("invalid sweep path (empty segment)", path)
    container: Any = doc
    for i, token in enumerate(tokens):
        last = i == len(tokens) - 1
        if isinstance(container, list):
            target = None
            if token.isdigit() and int(token) < len(container):
                target = int(token)
            else:
                for j, entry in enumerate(container):
                    if isinstance(entry, Mapping) and entry.get("role_name") == token:
                        target = j
                        break
            if target is None:
                raise ValidationError(f"no list entry matches {token!r}", path)
            if last:
                raise ValidationError("path ends on a list entry, not a field", path)
            container = container[target]
        elif isinstance(container, Mapping):
            if token not in container:
                raise ValidationError(f"unknown key {token!r}", path)
            if last:
                return container, token
            container = container[token]
        else:
            raise ValidationError(f"cannot descend into {token!r}", path)
    raise ValidationError("invalid sweep path", path)


def resolve_sweep_path(doc: dict, path: str) -> int | str | Decimal:
    """Check a sweep path resolves to a numeric leaf; return current value."""
    container, key = _walk_document(doc, path)
    value = container[key]
    if isinstance(value, bool) or not isinstance(value, (int, str, Decimal)):
        raise ValidationError("path does not point at a numeric field", path)
    if isinstance(value, str) and not _DECIMAL_STRING.match(value):
        raise ValidationError("path does not point at a numeric field", path)
    return value


def set_document_value(doc: dict, path: str, value: Decimal | int | str) -> None:
    """Overwrite a numeric leaf, keeping the document's representation:
    integer fields stay integers, everything else becomes a decimal string."""
    existing = resolve_sweep_path(doc, path)
    container, key = _walk_document(doc, path)
    new = to_fraction(value, path)
    if isinstance(existing, int) and new.denominator == 1:
        container[key] = new.numerator
    else:
        container[key] = format_decimal(fraction_to_decimal(new, 12))


def sweepable_paths(doc: dict) -> list[dict]:
    """Enumerate every numeric leaf of a scenario document.

    Derived from the document itself so UI controls stay in lockstep with
    the schema; returns dicts of ``path`` and current ``value``.
    """
    found: list[dict] = []

    def visit(node: Any, prefix: str) -> None:
        if isinstance(node, Mapping):
            for key, child in node.items():
                visit(child, _join(prefix, str(key)))
        elif isinstance(node, list):
            for i, child in enumerate(node):
                label = str(i)
                if isinstance(child, Mapping) and isinstance(child.get("role_name"), str):
                    label = child["role_name"]
                visit(child, _join(prefix, label))
        else:
            if prefix in ("name", "description") or prefix.startswith("reference."):
                return
            if isinstance(node, bool):
                return
            if isinstance(node, int) or (isinstance(node, str) and _DECIMAL_STRING.match(node)):
                found.append({"path": prefix, "value": node})

    visit(doc, "")
    return found


def sweep(scenario: Scenario, spec: SweepSpec) -> SweepResult:
    """Evaluate the scenario once per value of one parameter.

    Each point re-validates the mutated document, so a value that violates
    an invariant produces a per-point error entry while the sweep
    continues. The input scenario is never modified.
    """
    base_doc = scenario_to_document(scenario)
    resolve_sweep_path(base_doc, spec.parameter_path)

    role_name = spec.role if spec.role is not None else scenario.roles[0].role_name
    scenario.role(role_name)  # raises UnknownRoleError early

    points: list[SweepPoint] = []
    for value in spec.values:
        doc = copy.deepcopy(base_doc)
        try:
            set_document_value(doc, spec.parameter_path, value)
            report = evaluate(load_scenario(doc))
            role_report = report.role(role_name)
            metric_value: Money | Fraction | int
            if spec.metric == "total_cost":
                metric_value = role_report.costs.facility.total
            elif spec.metric == "profit":
                metric_value = role_report.projection.years[0].profit
            elif spec.metric == "roi":
                metric_value = role_report.projection.years[0].roi
            else:
                metric_value = role_report.users_per_year_facility
            points.append(SweepPoint(value=value, metric_value=metric_value))
        except ValidationError as exc:
            points.append(
                SweepPoint(value=value, error=exc.reason, error_field_path=exc.field_path)
            )
    return SweepResult(
        parameter_path=spec.parameter_path,
        metric=spec.metric,
        role_name=role_name,
        points=tuple(points),
    )


# ---------------------------------------------------------------------------
# scenario discovery
# ---------------------------------------------------------------------------


def builtin_scenario_dir() -> Path:
    return Path(str(resources.files("dctco") / "scenarios"))


def scenario_search_dirs(explicit: str | Path | None = None) -> list[Path]:
    """Directories searched for scenarios by name: an explicit directory or
    the DC_TCO_SCENARIO_DIR environment variable, then the bundled set."""
    dirs: list[Path] = []
    if explicit is not None:
        dirs.append(Path(explicit))
    else:
        env = os.environ.get(SCENARIO_DIR_ENV)
        if env:
            dirs.append(Path(env))
    dirs.append(builtin_scenario_dir())
    return dirs


def list_scenarios(dirs: list[Path]) -> list[dict]:
    """Names and one-line summaries of every scenario in the given dirs.

    Earlier directories shadow later ones. Unparseable files are listed
    with an ``error`` field rather than hidden.
    """
    seen: dict[str, dict] = {}
    for directory in dirs:
        if not directory.is_dir():
            continue
        for entry in sorted(directory.glob("*.json")):
            name = entry.stem
            if name in seen:
                continue
            try:
                scenario = load_scenario_file(entry)
                seen[name] = {
                    "name": name,
                    "servers_total": scenario.facility.servers_total,
                    "roles": [r.role_name for r in scenario.roles],
                }
            except (ParseError, ValidationError) as exc:
                seen[name] = {"name": name, "error": str(exc)}
    return [seen[name] for name in sorted(seen)]


def resolve_scenario_path(name_or_path: str, dirs: list[Path]) -> Path:
    """Interpret the argument as a path if one exists, else as a scenario
    name looked up across the search directories."""
    candidate = Path(name_or_path)
    if candidate.is_file():
        return candidate
    for directory in dirs:
        hit = directory / f"{name_or_path}.json"
        if hit.is_file():
            return hit
    raise UnknownScenarioError(name_or_path)
