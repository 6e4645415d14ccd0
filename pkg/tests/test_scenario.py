"""Scenario loading, evaluation, comparison and sweeps."""

import json
from decimal import Decimal
from fractions import Fraction

import pytest

from dctco import (
    Money,
    ParseError,
    SweepSpec,
    UnknownRoleError,
    ValidationError,
    compare,
    evaluate,
    load_scenario,
    scenario_to_document,
    sweep,
    sweepable_paths,
)
from dctco.report import render_json, report_to_jsonable


def minimal_document(**overrides):
    doc = {
        "name": "mini",
        "facility": {
            "servers_total": 1,
            "servers_per_rack": 1,
            "tariff": {"price_per_kwh": "0.10", "hours_per_day": 24, "days": 365},
            "power": {"avg_power_kw": "0.5"},
            "cooling": {"mode": "mirror-it-load"},
            "hardware": {"server_purchase_cost": "1000", "server_lifetime_years": 5},
            "personnel": {
                "it_staff": 0,
                "workers": 0,
                "housekeeping_facilities": 0,
                "avg_monthly_salary": "0",
            },
        },
        "roles": [
            {
                "role_name": "only",
                "security_level": "low",
                "target_load": "0.9",
                "session_busy_seconds": "1",
            }
        ],
        "economics": {"price_per_contact": "1", "analysis_years": 1},
    }
    doc.update(overrides)
    return doc


# -- loading and validation --------------------------------------------------


class TestLoadScenario:
    def test_bundled_fixture(self, nevada):
        assert nevada.facility.servers_total == 520
        assert nevada.facility.servers_per_rack == 13
        assert [r.role_name for r in nevada.roles] == ["role1", "role2", "role3"]
        assert nevada.facility.tariff.price_per_kwh == Fraction(756, 10000)

    def test_malformed_json(self):
        with pytest.raises(ParseError):
            load_scenario("{not json")

    def test_non_object_document(self):
        with pytest.raises(ParseError):
            load_scenario("[1, 2]")

    def test_zero_roles(self):
        with pytest.raises(ValidationError) as exc:
            load_scenario(minimal_document(roles=[]))
        assert exc.value.field_path == "roles"

    def test_out_of_range_load_names_role_and_field(self):
        doc = minimal_document()
        doc["roles"][0]["target_load"] = "1.3"
        with pytest.raises(ValidationError) as exc:
            load_scenario(doc)
        assert exc.value.field_path == "roles.only.target_load"

    def test_unknown_key_rejected(self):
        doc = minimal_document()
        doc["facility"]["tariff"]["price_kwh"] = "0.10"
        with pytest.raises(ValidationError) as exc:
            load_scenario(doc)
        assert exc.value.field_path == "facility.tariff.price_kwh"

    def test_negative_salary_names_full_path(self):
        doc = minimal_document()
        doc["facility"]["personnel"]["avg_monthly_salary"] = "-1"
        with pytest.raises(ValidationError) as exc:
            load_scenario(doc)
        assert exc.value.field_path == "facility.personnel.avg_monthly_salary"

    def test_binary_float_rejected_with_hint(self):
        doc = minimal_document()
        doc["facility"]["power"]["avg_power_kw"] = 0.3
        with pytest.raises(ValidationError) as exc:
            load_scenario(doc)
        assert "decimal string" in exc.value.reason

    def test_duplicate_role_names(self):
        doc = minimal_document()
        doc["roles"] = [doc["roles"][0], dict(doc["roles"][0])]
        with pytest.raises(ValidationError) as exc:
            load_scenario(doc)
        assert exc.value.field_path == "roles"

    def test_session_and_observed_are_exclusive(self):
        doc = minimal_document()
        doc["roles"][0]["observed_users_per_hour"] = 100
        with pytest.raises(ValidationError):
            load_scenario(doc)

    def test_observed_throughput_form(self):
        doc = minimal_document()
        role = doc["roles"][0]
        del role["session_busy_seconds"]
        role["observed_users_per_hour"] = 3474
        scenario = load_scenario(doc)
        report = evaluate(scenario)
        assert report.roles[0].users_per_hour == 3474

    def test_json_text_input(self):
        scenario = load_scenario(json.dumps(minimal_document()))
        assert scenario.name == "mini"

    def test_round_trip_equality(self, nevada):
        again = load_scenario(scenario_to_document(nevada))
        assert again == nevada

    def test_round_trip_of_observed_form(self):
        doc = minimal_document()
        role = doc["roles"][0]
        del role["session_busy_seconds"]
        role["observed_users_per_hour"] = 3474
        scenario = load_scenario(doc)
        assert load_scenario(scenario_to_document(scenario)) == scenario


# -- evaluation ---------------------------------------------------------------


class TestEvaluate:
    def test_fixture_users_and_income(self, nevada_report):
        role1 = nevada_report.role("role1")
        assert role1.users_per_year_facility == 52_708_219_200
        assert role1.income_annual == Money("158124657600")

    def test_fixture_role3_roi_with_override(self, nevada_report):
        role3 = nevada_report.role("role3")
        assert role3.outcome_source == "override"
        assert abs(role3.projection.years[0].roi - Fraction(4, 100)) < Fraction(1, 100)

    def test_energy_matrix_values(self, nevada_report):
        for role in nevada_report.roles:
            assert role.costs.server.power == Money("227")
            assert role.costs.rack.power == Money("2951")
            assert role.costs.facility.power == Money("118040")

    def test_cost_model_total_is_visible_alongside_override(self, nevada_report):
        role1 = nevada_report.role("role1")
        assert role1.costs.facility.total == Money("96092056")
        assert role1.outcome_annual == Money("45584797952")

    def test_all_zero_scenario(self):
        doc = minimal_document()
        doc["facility"]["tariff"]["price_per_kwh"] = "0"
        doc["facility"]["hardware"] = {"server_purchase_cost": "0", "server_lifetime_years": 1}
        doc["economics"]["price_per_contact"] = "0"
        report = evaluate(load_scenario(doc))
        role = report.roles[0]
        assert role.costs.facility.total == Money(0)
        assert role.income_annual == Money(0)
        assert role.projection.years[0].profit == Money(0)
        assert role.projection.years[0].roi == 0

    def test_facility_scaling_is_exact(self, nevada_report):
        for role in nevada_report.roles:
            server, facility = role.costs.server, role.costs.facility
            n = nevada_report.servers_total
            assert facility.power == server.power * n
            assert facility.cooling == server.cooling * n
            assert facility.hardware_software == server.hardware_software * n
        assert facility.personnel == Money("87660360")  # facility-level only
        assert server.personnel == Money(0)

    def test_partial_rack_diagnostic(self):
        doc = minimal_document()
        doc["facility"]["servers_total"] = 15
        doc["facility"]["servers_per_rack"] = 13
        report = evaluate(load_scenario(doc))
        assert report.racks_full == 1
        assert report.rack_remainder_servers == 2
        assert any("rack" in d for d in report.diagnostics)

    def test_profit_offset_diagnostic(self, nevada_report):
        offsets = [d for d in nevada_report.diagnostics if "1,174,680" in d]
        assert len(offsets) == 3  # one per role
        assert all("excludes the year-one hardware purchase" in d for d in offsets)

    def test_unreproduced_claims_diagnostic(self, nevada_report):
        flagged = [d for d in nevada_report.diagnostics if "not reproduced" in d]
        assert len(flagged) == 1
        assert "107.64%" in flagged[0] and "77.32%" in flagged[0]

    def test_deterministic_byte_for_byte(self, nevada):
        a = render_json(report_to_jsonable(evaluate(nevada)))
        b = render_json(report_to_jsonable(evaluate(nevada)))
        assert a == b

    def test_unknown_role_lookup(self, nevada_report):
        with pytest.raises(UnknownRoleError):
            nevada_report.role("role9")


# -- comparison ---------------------------------------------------------------


class TestCompare:
    def test_role1_vs_role3_users(self, nevada_report):
        summary = compare(nevada_report, "role1", "role3")
        assert summary.users_ratio == Fraction(101_361_960, 30_432_240)
        assert abs(summary.users_gain_percent - Fraction("233.07")) < Fraction(1, 100)

    def test_role2_vs_role3_users(self, nevada_report):
        summary = compare(nevada_report, "role2", "role3")
        assert abs(summary.users_gain_percent - Fraction("47.35")) < Fraction(1, 100)

    def test_role_against_itself_is_flat(self, nevada_report):
        summary = compare(nevada_report, "role2", "role2")
        assert summary.users_ratio == 1
        assert summary.users_gain_percent == 0
        assert summary.profit_ratio == 1
        assert summary.roi_delta_points == 0

    def test_profit_ratios_match_published_claims(self, nevada_report):
        one_two = compare(nevada_report, "role1", "role2").profit_ratio
        one_three = compare(nevada_report, "role1", "role3").profit_ratio
        assert Fraction("4.5") <= one_two <= Fraction("4.7")  # "about 5 times"
        assert Fraction("59") <= one_three <= Fraction("60.5")  # "about 60 times"

    def test_reciprocal(self, nevada_report):
        ab = compare(nevada_report, "role1", "role3")
        ba = compare(nevada_report, "role3", "role1")
        assert ab.users_ratio * ba.users_ratio == 1
        assert ab.profit_ratio * ba.profit_ratio == 1
        assert ab.roi_delta_points == -ba.roi_delta_points

    def test_claims_note_present(self, nevada_report):
        summary = compare(nevada_report, "role1", "role3")
        assert any("107.64" in n for n in summary.notes)

    def test_unknown_role(self, nevada_report):
        with pytest.raises(UnknownRoleError):
            compare(nevada_report, "role1", "nope")


# -- sweeps ---------------------------------------------------------------------


class TestSweep:
    def test_price_doubling_doubles_power_component(self, nevada):
        """The CPU increment is quoted energy, so the whole power component
        scales with the electricity price."""
        spec = SweepSpec(
            "facility.tariff.price_per_kwh", [Decimal("0.0756"), Decimal("0.1512")],
            "total_cost", role="role1",
        )
        result = sweep(nevada, spec)
        totals = [p.metric_value for p in result.points]
        # isolate the power+cooling movement: hw/sw and personnel are fixed
        fixed = Money("8195616") + Money("87660360")
        assert totals[1] - fixed == (totals[0] - fixed) * 2

    def test_load_sweep_doubles_users_up_to_flooring(self, nevada):
        spec = SweepSpec(
            "roles.role3.target_load", [Decimal("0.45"), Decimal("0.9")],
            "users_per_year", role="role3",
        )
        points = sweep(nevada, spec).points
        low, high = points[0].metric_value, points[1].metric_value
        per_server_delta = abs(high - 2 * low) // (520 * 8760)
        assert per_server_delta <= 1

    def test_server_count_sweep(self, nevada):
        spec = SweepSpec(
            "facility.servers_total", [13, 520], "users_per_year", role="role3"
        )
        points = sweep(nevada, spec).points
        assert points[0].metric_value == 13 * 30_432_240
        assert points[1].metric_value == 520 * 30_432_240 == 15_824_764_800

    def test_singleton_sweep_equals_evaluate(self, nevada, nevada_report):
        spec = SweepSpec("facility.servers_total", [520], "total_cost", role="role1")
        point = sweep(nevada, spec).points[0]
        assert point.metric_value == nevada_report.role("role1").costs.facility.total

    def test_original_scenario_untouched(self, nevada):
        before = scenario_to_document(nevada)
        sweep(nevada, SweepSpec("facility.tariff.price_per_kwh", [Decimal("9")], "roi"))
        assert scenario_to_document(nevada) == before

    def test_invalid_value_produces_point_error_and_continues(self, nevada):
        spec = SweepSpec(
            "roles.role1.target_load", [Decimal("0.5"), Decimal("2"), Decimal("0.25")],
            "users_per_year", role="role1",
        )
        points = sweep(nevada, spec).points
        assert points[0].error is None
        assert points[1].error is not None
        assert points[1].error_field_path == "roles.role1.target_load"
        assert points[2].error is None

    def test_invalid_path_rejected(self, nevada):
        with pytest.raises(ValidationError):
            sweep(nevada, SweepSpec("facility.nonsense", [1], "roi"))

    def test_non_numeric_leaf_rejected(self, nevada):
        with pytest.raises(ValidationError):
            sweep(nevada, SweepSpec("facility.cooling.mode", [1], "roi"))

    def test_empty_values_rejected(self):
        with pytest.raises(ValidationError):
            SweepSpec("a.b", [], "roi")

    def test_float_values_rejected(self):
        with pytest.raises(ValidationError):
            SweepSpec("a.b", [0.5], "roi")

    def test_default_role_is_first(self, nevada):
        result = sweep(nevada, SweepSpec("facility.servers_total", [10], "users_per_year"))
        assert result.role_name == "role1"

    def test_sweepable_paths_cover_engine_inputs(self, nevada):
        paths = {entry["path"] for entry in sweepable_paths(scenario_to_document(nevada))}
        assert "facility.tariff.price_per_kwh" in paths
        assert "roles.role1.target_load" in paths
        assert "economics.price_per_contact" in paths
        assert not any(p.startswith("reference.") for p in paths)
