"""Data-center cost, capacity and ROI analyzer.

A scenario-driven engine that prices a server fleet (power, cooling,
hardware amortization and licensing, personnel), models how many users each
access-control role can serve at a target CPU load, projects income and
multi-year ROI under cost-per-contact pricing, and answers what-if
questions via parameter sweeps. Exact decimal/rational arithmetic
throughout; rounding is presentation-only.
"""

from .capacity import (
    RoleWorkloadProfile,
    SECURITY_LEVELS,
    UtilizationModel,
    annualize_users,
    calibrate_session_time,
    idle_seconds,
    users_at_load,
    utilization,
)
from .costs import (
    BTU_PER_HOUR_PER_KW,
    COOLING_MODES,
    CoolingProfile,
    CostBreakdown,
    EnergyTariff,
    HardwareProfile,
    PersonnelProfile,
    ServerPowerProfile,
    amortization,
    cooling_cost,
    energy_kwh,
    hardware_software_cost,
    personnel_cost,
    power_cost,
    total_cost,
)
from .economics import (
    EconomicAssumptions,
    FinancialProjection,
    ROI_CONVENTIONS,
    YearFigures,
    annual_income,
    profit,
    project,
    roi,
)
from .errors import (
    DctcoError,
    ParseError,
    UnknownRoleError,
    UnknownScenarioError,
    ValidationError,
)
from .money import Money, ROUNDING_MODES
from .scenario import (
    ComparisonSummary,
    EvaluationReport,
    FacilitySpec,
    GRANULARITIES,
    GranularCosts,
    ReferenceFigures,
    RoleReport,
    SCENARIO_DIR_ENV,
    SWEEP_METRICS,
    Scenario,
    ScenarioRole,
    SweepPoint,
    SweepResult,
    SweepSpec,
    builtin_scenario_dir,
    compare,
    evaluate,
    list_scenarios,
    load_scenario,
    load_scenario_file,
    resolve_scenario_path,
    scenario_search_dirs,
    scenario_to_document,
    sweep,
    sweepable_paths,
)

__version__ = "0.1.0"

__all__ = [
    "BTU_PER_HOUR_PER_KW",
    "COOLING_MODES",
    "ComparisonSummary",
    "CoolingProfile",
    "CostBreakdown",
    "DctcoError",
    "EconomicAssumptions",
    "EnergyTariff",
    "EvaluationReport",
    "FacilitySpec",
    "FinancialProjection",
    "GRANULARITIES",
    "GranularCosts",
    "HardwareProfile",
    "Money",
    "ParseError",
    "PersonnelProfile",
    "ROI_CONVENTIONS",
    "ROUNDING_MODES",
    "ReferenceFigures",
    "RoleReport",
    "RoleWorkloadProfile",
    "SCENARIO_DIR_ENV",
    "SECURITY_LEVELS",
    "SWEEP_METRICS",
    "Scenario",
    "ScenarioRole",
    "ServerPowerProfile",
    "SweepPoint",
    "SweepResult",
    "SweepSpec",
    "UnknownRoleError",
    "UnknownScenarioError",
    "UtilizationModel",
    "ValidationError",
    "YearFigures",
    "amortization",
    "annual_income",
    "annualize_users",
    "builtin_scenario_dir",
    "calibrate_session_time",
    "compare",
    "cooling_cost",
    "energy_kwh",
    "evaluate",
    "hardware_software_cost",
    "idle_seconds",
    "list_scenarios",
    "load_scenario",
    "load_scenario_file",
    "personnel_cost",
    "power_cost",
    "profit",
    "project",
    "resolve_scenario_path",
    "roi",
    "scenario_search_dirs",
    "scenario_to_document",
    "sweep",
    "sweepable_paths",
    "total_cost",
    "users_at_load",
    "utilization",
]
