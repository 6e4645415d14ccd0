"""Command-line front end: evaluate, compare, sweep and serve.

Exit codes: 0 success, 1 usage/parse/validation errors (message on stderr,
nothing on stdout), 2 internal errors.
"""

from __future__ import annotations

import argparse
import sys
import traceback
from decimal import Decimal, InvalidOperation
from pathlib import Path

from .errors import DctcoError, ParseError, UnknownScenarioError, ValidationError
from .report import (
    FORMATS,
    OutputSpec,
    comparison_to_jsonable,
    render_csv_compare,
    render_csv_evaluate,
    render_csv_sweep,
    render_json,
    render_table_compare,
    render_table_evaluate,
    render_table_sweep,
    report_to_jsonable,
    sweep_to_jsonable,
)
from .money import ROUNDING_MODES
from .scenario import (
    GRANULARITIES,
    SWEEP_METRICS,
    Scenario,
    SweepSpec,
    compare,
    evaluate,
    load_scenario,
    load_scenario_file,
    resolve_scenario_path,
    scenario_search_dirs,
    scenario_to_document,
    set_document_value,
    sweep,
)
from .economics import ROI_CONVENTIONS


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; usage problems are user errors here
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dctco", description="Data-center cost, capacity and ROI analyzer.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="table")
        p.add_argument("--rounding", choices=ROUNDING_MODES, default="cents")
        p.add_argument(
            "--granularity",
            default=",".join(GRANULARITIES),
            help="comma-separated subset of server,rack,facility",
        )
        p.add_argument("--stamp", action="store_true", help="add generation metadata")

    def add_scenario_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--scenario",
            required=True,
            help="scenario file path, or a name resolved against "
            "$DC_TCO_SCENARIO_DIR and the bundled scenarios",
        )

    p_eval = sub.add_parser("evaluate", help="run the full pipeline for every role")
    add_scenario_flag(p_eval)
    add_output_flags(p_eval)
    p_eval.add_argument("--years", type=int, help="override the analysis horizon")
    p_eval.add_argument("--roi-convention", choices=ROI_CONVENTIONS)

    p_cmp = sub.add_parser("compare", help="relative deltas between two roles")
    add_scenario_flag(p_cmp)
    p_cmp.add_argument("--role-a", required=True)
    p_cmp.add_argument("--role-b", required=True)
    add_output_flags(p_cmp)

    p_sweep = sub.add_parser("sweep", help="evaluate across values of one parameter")
    add_scenario_flag(p_sweep)
    p_sweep.add_argument("--param", required=True, help="dotted path, e.g. facility.tariff.price_per_kwh")
    p_sweep.add_argument("--values", required=True, help="comma-separated numbers")
    p_sweep.add_argument("--metric", required=True, choices=SWEEP_METRICS)
    p_sweep.add_argument("--role", help="role the metric is taken from (default: first role)")
    add_output_flags(p_sweep)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--bind", default="127.0.0.1:8080", help="host:port (port 0 picks one)")
    p_serve.add_argument("--scenario-dir", help="directory of scenario JSON files")
    p_serve.add_argument("--static", help="directory of dashboard assets served under /")
    return parser


def _load(args: argparse.Namespace) -> Scenario:
    path = resolve_scenario_path(args.scenario, scenario_search_dirs())
    return load_scenario_file(path)


def _output_spec(args: argparse.Namespace) -> OutputSpec:
    granularity = tuple(g.strip() for g in args.granularity.split(",") if g.strip())
    return OutputSpec(
        format=args.format,
        rounding=args.rounding,
        granularity=granularity,
        stamp=args.stamp,
    )


def _apply_economics_overrides(scenario: Scenario, args: argparse.Namespace) -> Scenario:
    years = getattr(args, "years", None)
    convention = getattr(args, "roi_convention", None)
    if years is None and convention is None:
        return scenario
    doc = scenario_to_document(scenario)
    if years is not None:
        set_document_value(doc, "economics.analysis_years", years)
    if convention is not None:
        doc["economics"]["roi_convention"] = convention
    return load_scenario(doc)


def _cmd_evaluate(args: argparse.Namespace) -> int:
    output = _output_spec(args)
    scenario = _apply_economics_overrides(_load(args), args)
    report = evaluate(scenario)
    if output.format == "json":
        sys.stdout.write(render_json(report_to_jsonable(report), stamp=output.stamp))
    elif output.format == "csv":
        sys.stdout.write(render_csv_evaluate(report, output))
    else:
        sys.stdout.write(render_table_evaluate(report, output))
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    output = _output_spec(args)
    report = evaluate(_load(args))
    summary = compare(report, args.role_a, args.role_b)
    if output.format == "json":
        sys.stdout.write(render_json(comparison_to_jsonable(summary), stamp=output.stamp))
    elif output.format == "csv":
        sys.stdout.write(render_csv_compare(summary, output))
    else:
        sys.stdout.write(render_table_compare(summary, output))
    return 0


def _parse_values(raw: str) -> tuple:
    parts = [p.strip() for p in raw.split(",") if p.strip()]
    if not parts:
        raise ValidationError("values must be non-empty", "values")
    values = []
    for part in parts:
        try:
            values.append(int(part) if part.lstrip("-").isdigit() else Decimal(part))
        except InvalidOperation:
            raise ValidationError(f"not a number: {part!r}", "values") from None
    return tuple(values)


def _cmd_sweep(args: argparse.Namespace) -> int:
    output = _output_spec(args)
    scenario = _load(args)
    spec = SweepSpec(
        parameter_path=args.param,
        values=_parse_values(args.values),
        metric=args.metric,
        role=args.role,
    )
    result = sweep(scenario, spec)
    if output.format == "json":
        sys.stdout.write(render_json(sweep_to_jsonable(result), stamp=output.stamp))
    elif output.format == "csv":
        sys.stdout.write(render_csv_sweep(result, output))
    else:
        sys.stdout.write(render_table_sweep(result, output))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import create_server  # deferred: the other commands don't need it

    host, _, port_text = args.bind.rpartition(":")
    if not host or not port_text.isdigit():
        raise ValidationError("expected HOST:PORT", "bind")
    static_dir = args.static
    if static_dir is None and Path("frontend/dist").is_dir():
        static_dir = "frontend/dist"
    server = create_server(
        (host, int(port_text)),
        scenario_dir=args.scenario_dir,
        static_dir=static_dir,
    )
    bound_host, bound_port = server.server_address[:2]
    print(f"serving on http://{bound_host}:{bound_port}", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "evaluate": _cmd_evaluate,
            "compare": _cmd_compare,
            "sweep": _cmd_sweep,
            "serve": _cmd_serve,
        }[args.command]
        return handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename or exc}", file=sys.stderr)
        return 1
    except UnknownScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, ValidationError, DctcoError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception:
        traceback.print_exc(file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
