"""Embedded HTTP service exposing the engine to dashboards and scripts.

Stateless JSON over HTTP/1.1: every request is answered from a fresh read
of its inputs, so any request order (or N identical concurrent requests)
produces identical responses. Also serves built dashboard assets when a
static directory is configured.
"""

from __future__ import annotations

import json
import posixpath
from dataclasses import dataclass
from decimal import Decimal
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Any, Mapping

from .errors import ParseError, UnknownRoleError, UnknownScenarioError, ValidationError
from .report import render_json, report_to_jsonable, sweep_to_jsonable
from .scenario import (
    SweepSpec,
    evaluate,
    list_scenarios,
    load_scenario,
    load_scenario_file,
    resolve_scenario_path,
    scenario_search_dirs,
    scenario_to_document,
    set_document_value,
    sweep,
    sweepable_paths,
)

API_ERROR_CODES = ("bad_request", "not_found", "unprocessable", "internal")

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json; charset=utf-8",
    ".map": "application/json; charset=utf-8",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".ico": "image/x-icon",
}


@dataclass(frozen=True)
class ApiError:
    """Error body shape returned by every failing endpoint."""

    code: str
    message: str
    field_path: str = ""

    def __post_init__(self) -> None:
        if self.code not in API_ERROR_CODES:
            raise ValidationError(f"must be one of {API_ERROR_CODES}", "code")
        if not self.message:
            raise ValidationError("must be non-empty", "message")

    def to_jsonable(self) -> dict:
        body: dict[str, Any] = {"code": self.code, "message": self.message}
        if self.field_path:
            body["field_path"] = self.field_path
        return {"error": body}


class _RequestError(Exception):
    def __init__(self, status: int, error: ApiError) -> None:
        self.status = status
        self.error = error
        super().__init__(error.message)


def _bad_request(message: str) -> _RequestError:
    return _RequestError(400, ApiError("bad_request", message))


def _not_found(message: str) -> _RequestError:
    return _RequestError(404, ApiError("not_found", message))


def _unprocessable(message: str, field_path: str = "") -> _RequestError:
    return _RequestError(422, ApiError("unprocessable", message, field_path))


class DctcoServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(
        self,
        address: tuple[str, int],
        scenario_dir: str | None = None,
        static_dir: str | None = None,
    ) -> None:
        self.scenario_dir = scenario_dir
        self.static_dir = Path(static_dir).resolve() if static_dir else None
        super().__init__(address, _Handler)


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server: DctcoServer

    # -- plumbing ----------------------------------------------------------

    def log_message(self, format: str, *args: Any) -> None:
        pass  # request logging is noise for an embedded tool

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, payload: dict) -> None:
        self._send(
            status,
            render_json(payload).encode("utf-8"),
            "application/json; charset=utf-8",
        )

    def _read_body(self) -> Any:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            raise _bad_request("request body is empty")
        try:
            return json.loads(raw, parse_float=Decimal)
        except json.JSONDecodeError as exc:
            raise _bad_request(f"malformed JSON body: {exc}") from None

    def _search_dirs(self):
        return scenario_search_dirs(self.server.scenario_dir)

    def _load_named(self, name: str):
        try:
            path = resolve_scenario_path(name, self._search_dirs())
        except UnknownScenarioError as exc:
            raise _not_found(str(exc)) from None
        try:
            return load_scenario_file(path)
        except (ParseError, ValidationError) as exc:
            field = exc.field_path if isinstance(exc, ValidationError) else ""
            raise _unprocessable(f"scenario {name!r}: {exc}", field) from None

    def _scenario_from_body(self, body: Any):
        """Accept {name}, {name, overrides} or a full scenario document."""
        if not isinstance(body, Mapping):
            raise _bad_request("request body must be a JSON object")
        if "facility" in body or "roles" in body:
            try:
                return load_scenario(dict(body))
            except ParseError as exc:
                raise _bad_request(str(exc)) from None
            except ValidationError as exc:
                raise _unprocessable(exc.reason, exc.field_path) from None
        name = body.get("name")
        if not isinstance(name, str) or not name:
            raise _bad_request("expected a scenario document or {\"name\": ...}")
        scenario = self._load_named(name)
        overrides = body.get("overrides")
        unknown = set(body) - {"name", "overrides"}
        if unknown:
            raise _unprocessable("unknown key", sorted(unknown)[0])
        if overrides is None:
            return scenario
        if not isinstance(overrides, Mapping):
            raise _unprocessable("expected an object of path -> value", "overrides")
        doc = scenario_to_document(scenario)
        for path in sorted(overrides):
            try:
                # the one non-numeric override the dashboard needs
                if path == "economics.roi_convention" and isinstance(overrides[path], str):
                    doc["economics"]["roi_convention"] = overrides[path]
                else:
                    set_document_value(doc, str(path), overrides[path])
            except ValidationError as exc:
                raise _unprocessable(exc.reason, exc.field_path or str(path)) from None
        try:
            return load_scenario(doc)
        except ValidationError as exc:
            raise _unprocessable(exc.reason, exc.field_path) from None

    # -- routes ------------------------------------------------------------

    def do_GET(self) -> None:  # noqa: N802 (http.server API)
        try:
            path = self.path.split("?", 1)[0]
            if path == "/api/scenarios":
                self._send_json(200, {"scenarios": list_scenarios(self._search_dirs())})
            elif path.startswith("/api/scenario/"):
                name = path[len("/api/scenario/") :]
                scenario = self._load_named(name)
                doc = scenario_to_document(scenario)
                self._send_json(
                    200,
                    {"name": scenario.name, "document": doc, "sweepable": sweepable_paths(doc)},
                )
            elif path.startswith("/api/"):
                raise _not_found(f"no such endpoint: {path}")
            else:
                self._serve_static(path)
        except _RequestError as exc:
            self._send_json(exc.status, exc.error.to_jsonable())
        except Exception as exc:  # unreadable dirs, unexpected bugs
            self._send_json(500, ApiError("internal", f"{type(exc).__name__}: {exc}").to_jsonable())

    def do_POST(self) -> None:  # noqa: N802
        try:
            path = self.path.split("?", 1)[0]
            if path == "/api/evaluate":
                scenario = self._scenario_from_body(self._read_body())
                self._send_json(200, report_to_jsonable(evaluate(scenario)))
            elif path == "/api/sweep":
                body = self._read_body()
                if not isinstance(body, Mapping):
                    raise _bad_request("request body must be a JSON object")
                unknown = set(body) - {"scenario", "sweep"}
                if unknown:
                    raise _unprocessable("unknown key", sorted(unknown)[0])
                scenario_ref = body.get("scenario")
                if isinstance(scenario_ref, str):
                    scenario = self._load_named(scenario_ref)
                elif isinstance(scenario_ref, Mapping):
                    scenario = self._scenario_from_body(scenario_ref)
                else:
                    raise _bad_request("scenario must be a name or a document")
                sweep_raw = body.get("sweep")
                if not isinstance(sweep_raw, Mapping):
                    raise _unprocessable("expected a sweep object", "sweep")
                unknown = set(sweep_raw) - {"parameter_path", "values", "metric", "role"}
                if unknown:
                    raise _unprocessable("unknown key", f"sweep.{sorted(unknown)[0]}")
                try:
                    spec = SweepSpec(
                        parameter_path=sweep_raw.get("parameter_path", ""),
                        values=tuple(sweep_raw.get("values") or ()),
                        metric=sweep_raw.get("metric", ""),
                        role=sweep_raw.get("role"),
                    )
                    result = sweep(scenario, spec)
                except UnknownRoleError as exc:
                    raise _unprocessable(str(exc), "sweep.role") from None
                except ValidationError as exc:
                    raise _unprocessable(exc.reason, f"sweep.{exc.field_path}") from None
                self._send_json(200, sweep_to_jsonable(result))
            else:
                raise _not_found(f"no such endpoint: {path}")
        except _RequestError as exc:
            self._send_json(exc.status, exc.error.to_jsonable())
        except Exception as exc:
            self._send_json(500, ApiError("internal", f"{type(exc).__name__}: {exc}").to_jsonable())

    # -- static assets -----------------------------------------------------

    def _serve_static(self, path: str) -> None:
        root = self.server.static_dir
        if root is None:
            if path == "/":
                body = (
                    "data-center cost analyzer service\n"
                    "endpoints: GET /api/scenarios, GET /api/scenario/<name>, "
                    "POST /api/evaluate, POST /api/sweep\n"
                ).encode("utf-8")
                self._send(200, body, "text/plain; charset=utf-8")
                return
            raise _not_found(f"no static assets configured: {path}")
        clean = posixpath.normpath(path.lstrip("/")) if path != "/" else "index.html"
        target = (root / clean).resolve()
        if not str(target).startswith(str(root)) or not target.is_file():
            raise _not_found(f"no such file: {path}")
        content_type = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
        self._send(200, target.read_bytes(), content_type)


def create_server(
    address: tuple[str, int],
    scenario_dir: str | None = None,
    static_dir: str | None = None,
) -> DctcoServer:
    """Build (but do not start) the service bound to ``address``.

    Port 0 asks the OS for a free port; the chosen one is available as
    ``server.server_address`` afterwards.
    """
    return DctcoServer(address, scenario_dir=scenario_dir, static_dir=static_dir)
