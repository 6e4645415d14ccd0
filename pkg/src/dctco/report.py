"""Rendering of reports: canonical JSON, CSV and human tables.

The JSON and CSV forms carry the exact engine values (currency as decimal
strings, never rounded); presentation rounding applies to the human table
format only. Output is byte-stable for identical inputs: no timestamps
unless a stamp is explicitly requested.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from decimal import Decimal
from fractions import Fraction

from .costs import CostBreakdown
from .errors import ValidationError
from .money import Money, ROUNDING_MODES, format_decimal, fraction_to_decimal
from .scenario import (
    ComparisonSummary,
    EvaluationReport,
    GRANULARITIES,
    SweepResult,
)

FORMATS = ("table", "csv", "json")


@dataclass(frozen=True)
class OutputSpec:
    """How a command renders its result."""

    format: str = "table"
    rounding: str = "cents"
    granularity: tuple[str, ...] = GRANULARITIES
    stamp: bool = False

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise ValidationError(f"must be one of {FORMATS}, got {self.format!r}", "format")
        if self.rounding not in ROUNDING_MODES:
            raise ValidationError(
                f"must be one of {ROUNDING_MODES}, got {self.rounding!r}", "rounding"
            )
        if not self.granularity:
            raise ValidationError("at least one granularity must be selected", "granularity")
        for g in self.granularity:
            if g not in GRANULARITIES:
                raise ValidationError(f"must be one of {GRANULARITIES}, got {g!r}", "granularity")


# ---------------------------------------------------------------------------
# canonical JSON values
# ---------------------------------------------------------------------------


def money_json(value: Money) -> str:
    return value.decimal_string(places=12)


def fraction_json(value: Fraction, places: int = 6) -> str:
    return format_decimal(fraction_to_decimal(value, places))


def _breakdown_json(bd: CostBreakdown) -> dict:
    return {
        "power": money_json(bd.power),
        "cooling": money_json(bd.cooling),
        "hardware_software": money_json(bd.hardware_software),
        "personnel": money_json(bd.personnel),
        "total": money_json(bd.total),
        "period_years": bd.period_years,
    }


def report_to_jsonable(report: EvaluationReport) -> dict:
    roles = []
    for role in report.roles:
        projection = {
            "roi_convention": role.projection.roi_convention,
            "years": [
                {
                    "year": y.year,
                    "income": money_json(y.income),
                    "outcome": money_json(y.outcome),
                    "profit": money_json(y.profit),
                    "cumulative_profit": money_json(y.cumulative_profit),
                    "roi": fraction_json(y.roi),
                }
                for y in role.projection.years
            ],
            "cumulative_profit": money_json(role.projection.cumulative_profit),
            "cumulative_roi": fraction_json(role.projection.cumulative_roi),
        }
        roles.append(
            {
                "role": role.role_name,
                "security_level": role.security_level,
                "security_mechanism": role.security_mechanism,
                "users_per_hour": role.users_per_hour,
                "users_per_year_server": role.users_per_year_server,
                "users_per_year_facility": role.users_per_year_facility,
                "costs": {
                    "server": _breakdown_json(role.costs.server),
                    "rack": _breakdown_json(role.costs.rack),
                    "facility": _breakdown_json(role.costs.facility),
                },
                "income_annual": money_json(role.income_annual),
                "outcome_annual": money_json(role.outcome_annual),
                "outcome_source": role.outcome_source,
                "projection": projection,
            }
        )
    return {
        "scenario": report.scenario_name,
        "servers_total": report.servers_total,
        "servers_per_rack": report.servers_per_rack,
        "racks_full": report.racks_full,
        "rack_remainder_servers": report.rack_remainder_servers,
        "roles": roles,
        "diagnostics": list(report.diagnostics),
    }


def comparison_to_jsonable(summary: ComparisonSummary) -> dict:
    return {
        "role_a": summary.role_a,
        "role_b": summary.role_b,
        "users_ratio": None if summary.users_ratio is None else fraction_json(summary.users_ratio),
        "users_gain_percent": (
            None if summary.users_gain_percent is None else fraction_json(summary.users_gain_percent)
        ),
        "profit_ratio": (
            None if summary.profit_ratio is None else fraction_json(summary.profit_ratio)
        ),
        "roi_delta_points": fraction_json(summary.roi_delta_points),
        "notes": list(summary.notes),
    }


def _sweep_value_json(value: Decimal | int) -> int | str:
    if isinstance(value, int):
        return value
    return format_decimal(value)


def _metric_json(value: Money | Fraction | int) -> int | str:
    if isinstance(value, Money):
        return money_json(value)
    if isinstance(value, Fraction):
        return fraction_json(value)
    return value


def sweep_to_jsonable(result: SweepResult) -> dict:
    points = []
    for point in result.points:
        if point.error is not None:
            points.append(
                {
                    "value": _sweep_value_json(point.value),
                    "error": {"message": point.error, "field_path": point.error_field_path},
                }
            )
        else:
            assert point.metric_value is not None
            points.append(
                {
                    "value": _sweep_value_json(point.value),
                    result.metric: _metric_json(point.metric_value),
                }
            )
    return {
        "parameter_path": result.parameter_path,
        "metric": result.metric,
        "role": result.role_name,
        "points": points,
    }


def render_json(payload: dict, stamp: bool = False) -> str:
    if stamp:
        payload = dict(payload)
        payload["stamp"] = {"generated_at": datetime.now(timezone.utc).isoformat()}
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------

_EVALUATE_CSV_COLUMNS = [
    "type",
    "role",
    "granularity",
    "year",
    "users_per_hour",
    "users_per_year_server",
    "users_per_year_facility",
    "power",
    "cooling",
    "hardware_software",
    "personnel",
    "total",
    "income",
    "outcome",
    "profit",
    "cumulative_profit",
    "roi",
    "note",
]


def _csv_text(rows: list[dict], columns: list[str], stamp: bool) -> str:
    out = io.StringIO()
    if stamp:
        out.write(f"# generated_at={datetime.now(timezone.utc).isoformat()}\n")
    writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return out.getvalue()


def render_csv_evaluate(report: EvaluationReport, output: OutputSpec) -> str:
    rows: list[dict] = []
    for role in report.roles:
        rows.append(
            {
                "type": "users",
                "role": role.role_name,
                "users_per_hour": role.users_per_hour,
                "users_per_year_server": role.users_per_year_server,
                "users_per_year_facility": role.users_per_year_facility,
            }
        )
    for role in report.roles:
        for granularity in output.granularity:
            bd = role.costs.at(granularity)
            rows.append(
                {
                    "type": "cost",
                    "role": role.role_name,
                    "granularity": granularity,
                    "power": money_json(bd.power),
                    "cooling": money_json(bd.cooling),
                    "hardware_software": money_json(bd.hardware_software),
                    "personnel": money_json(bd.personnel),
                    "total": money_json(bd.total),
                }
            )
    for role in report.roles:
        for y in role.projection.years:
            rows.append(
                {
                    "type": "projection",
                    "role": role.role_name,
                    "year": y.year,
                    "income": money_json(y.income),
                    "outcome": money_json(y.outcome),
                    "profit": money_json(y.profit),
                    "cumulative_profit": money_json(y.cumulative_profit),
                    "roi": fraction_json(y.roi),
                }
            )
    for note in report.diagnostics:
        rows.append({"type": "diagnostic", "note": note})
    return _csv_text(rows, _EVALUATE_CSV_COLUMNS, output.stamp)


def render_csv_compare(summary: ComparisonSummary, output: OutputSpec) -> str:
    payload = comparison_to_jsonable(summary)
    rows = [
        {"metric": key, "value": "" if payload[key] is None else payload[key]}
        for key in (
            "role_a",
            "role_b",
            "users_ratio",
            "users_gain_percent",
            "profit_ratio",
            "roi_delta_points",
        )
    ]
    for note in summary.notes:
        rows.append({"metric": "note", "value": note})
    return _csv_text(rows, ["metric", "value"], output.stamp)


def render_csv_sweep(result: SweepResult, output: OutputSpec) -> str:
    rows = []
    for point in result.points:
        if point.error is not None:
            rows.append(
                {
                    "value": _sweep_value_json(point.value),
                    result.metric: "",
                    "error": point.error
                    + (f" ({point.error_field_path})" if point.error_field_path else ""),
                }
            )
        else:
            rows.append(
                {
                    "value": _sweep_value_json(point.value),
                    result.metric: _metric_json(point.metric_value),
                    "error": "",
                }
            )
    return _csv_text(rows, ["value", result.metric, "error"], output.stamp)


# ---------------------------------------------------------------------------
# human tables
# ---------------------------------------------------------------------------


def _table(rows: list[list[str]], indent: str = "  ") -> list[str]:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [cell.ljust(widths[i]) for i, cell in enumerate(row)]
        lines.append((indent + "  ".join(cells)).rstrip())
    return lines


def _dollars(value: Money, rounding: str) -> str:
    return f"${value.formatted(rounding)}"


def _count(value: int) -> str:
    return f"{value:,}"


def _percent(value: Fraction) -> str:
    return format_decimal(fraction_to_decimal(value * 100, 2)) + "%"


def render_table_evaluate(report: EvaluationReport, output: OutputSpec) -> str:
    lines: list[str] = []
    lines.append(f"Scenario: {report.scenario_name}")
    racks = f"{report.racks_full} full racks"
    if report.rack_remainder_servers:
        racks += f" + {report.rack_remainder_servers} server(s)"
    lines.append(
        f"Servers: {report.servers_total} total, {report.servers_per_rack} per rack ({racks})"
    )
    lines.append("")

    lines.append("Users served at target load")
    rows = [["role", "users/hour", "users/year/server", "users/year/facility"]]
    for role in report.roles:
        rows.append(
            [
                role.role_name,
                _count(role.users_per_hour),
                _count(role.users_per_year_server),
                _count(role.users_per_year_facility),
            ]
        )
    lines.extend(_table(rows))
    lines.append("")

    server_counts = {
        "server": 1,
        "rack": report.servers_per_rack,
        "facility": report.servers_total,
    }
    lines.append(f"Annual energy cost by fleet size  [rounding: {output.rounding}]")
    rows = [["servers"] + [r.role_name for r in report.roles]]
    for granularity in output.granularity:
        rows.append(
            [str(server_counts[granularity])]
            + [_dollars(r.costs.at(granularity).power, output.rounding) for r in report.roles]
        )
    lines.extend(_table(rows))
    lines.append("")

    for granularity in output.granularity:
        lines.append(
            f"Annual cost breakdown [{granularity} = {server_counts[granularity]} server(s)]"
        )
        rows = [["role", "power", "cooling", "hw+sw", "personnel", "total"]]
        for role in report.roles:
            bd = role.costs.at(granularity)
            rows.append(
                [
                    role.role_name,
                    _dollars(bd.power, output.rounding),
                    _dollars(bd.cooling, output.rounding),
                    _dollars(bd.hardware_software, output.rounding),
                    _dollars(bd.personnel, output.rounding),
                    _dollars(bd.total, output.rounding),
                ]
            )
        lines.extend(_table(rows))
        lines.append("")

    convention = report.roles[0].projection.roi_convention
    horizon = len(report.roles[0].projection.years)
    lines.append(f"Projection ({convention} ROI over {horizon} year(s))")
    rows = [
        [
            "role",
            "income/year",
            "outcome/year",
            "source",
            "year-1 profit",
            "year-1 ROI",
            f"year-{horizon} profit",
            f"year-{horizon} ROI",
        ]
    ]
    for role in report.roles:
        first = role.projection.years[0]
        last = role.projection.final_year
        rows.append(
            [
                role.role_name,
                _dollars(role.income_annual, output.rounding),
                _dollars(role.outcome_annual, output.rounding),
                role.outcome_source,
                _dollars(first.profit, output.rounding),
                _percent(first.roi),
                _dollars(last.cumulative_profit, output.rounding),
                _percent(last.roi),
            ]
        )
    lines.extend(_table(rows))

    if report.diagnostics:
        lines.append("")
        lines.append("Diagnostics")
        for note in report.diagnostics:
            lines.append(f"  - {note}")
    if output.stamp:
        lines.append("")
        lines.append(f"generated at {datetime.now(timezone.utc).isoformat()}")
    return "\n".join(lines) + "\n"


def render_table_compare(summary: ComparisonSummary, output: OutputSpec) -> str:
    lines = [f"Comparison: {summary.role_a} vs {summary.role_b}"]
    if summary.users_ratio is None:
        lines.append("  users:  not comparable (zero users in the second role)")
    else:
        gain = summary.users_gain_percent
        assert gain is not None
        lines.append(
            f"  users ratio:   {fraction_json(summary.users_ratio)}"
            f"  (gain {format_decimal(fraction_to_decimal(gain, 2))}%)"
        )
    if summary.profit_ratio is None:
        lines.append("  profit ratio:  not comparable (zero profit in the second role)")
    else:
        approx = ""
        rounded = round(summary.profit_ratio)
        if summary.profit_ratio >= Fraction(3, 2):
            approx = f"  (≈{rounded}×)"
        lines.append(f"  profit ratio:  {fraction_json(summary.profit_ratio)}{approx}")
    lines.append(
        f"  year-1 ROI delta: "
        f"{format_decimal(fraction_to_decimal(summary.roi_delta_points, 2))} points"
    )
    if summary.notes:
        lines.append("Notes")
        for note in summary.notes:
            lines.append(f"  - {note}")
    if output.stamp:
        lines.append(f"generated at {datetime.now(timezone.utc).isoformat()}")
    return "\n".join(lines) + "\n"


def render_table_sweep(result: SweepResult, output: OutputSpec) -> str:
    lines = [f"Sweep {result.parameter_path} -> {result.metric}  (role {result.role_name})"]
    rows = [["value", result.metric, "error"]]
    for point in result.points:
        if point.error is not None:
            detail = point.error + (
                f" ({point.error_field_path})" if point.error_field_path else ""
            )
            rows.append([str(_sweep_value_json(point.value)), "-", detail])
        else:
            rows.append(
                [str(_sweep_value_json(point.value)), str(_metric_json(point.metric_value)), ""]
            )
    lines.extend(_table(rows))
    if output.stamp:
        lines.append(f"generated at {datetime.now(timezone.utc).isoformat()}")
    return "\n".join(lines) + "\n"
