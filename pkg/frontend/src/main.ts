/**
 * Dashboard wiring: state in, service numbers out.
 *
 * Every figure on screen comes from /api/evaluate. Slider/number edits
 * become overrides (debounced while typing), responses are gated so stale
 * ones never render, and service errors appear inline without losing the
 * entered state.
 */

import { ApiClient, ApiRequestError, ReportDto } from "./api.js";
import { debounce } from "./debounce.js";
import { formatCount, formatMoney, formatRoiPercent } from "./format.js";
import { LatestGate } from "./latest.js";
import {
  WhatIfState,
  clearAllOverrides,
  clearOverride,
  createState,
  requestOverrides,
  setConvention,
  setHorizon,
  setOverride,
  toggleRole,
} from "./state.js";
import {
  ControlSpec,
  Granularity,
  breakdownBars,
  controlsFromManifest,
  roiTimeline,
} from "./viewmodel.js";

const api = new ApiClient();
const gate = new LatestGate();

let state: WhatIfState = createState("");
let controls: ControlSpec[] = [];
let granularity: Granularity = "facility";
let timelineRole = "";
let lastReport: ReportDto | null = null;

const $ = <T extends HTMLElement>(selector: string): T => {
  const el = document.querySelector(selector);
  if (!el) throw new Error(`missing element ${selector}`);
  return el as T;
};

const escapeHtml = (value: unknown): string =>
  String(value ?? "")
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");

// -- rendering ---------------------------------------------------------------

function renderError(message: string | null): void {
  const banner = $("#error-banner");
  if (message === null) {
    banner.hidden = true;
    banner.textContent = "";
  } else {
    banner.hidden = false;
    banner.textContent = `${message} (your inputs are kept; fix the value or retry)`;
  }
}

function clearControlErrors(): void {
  document.querySelectorAll(".control-error").forEach((el) => {
    el.textContent = "";
  });
}

function showControlError(fieldPath: string, message: string): void {
  const slot = document.querySelector(`[data-error-for="${CSS.escape(fieldPath)}"]`);
  if (slot) {
    slot.textContent = message;
  } else {
    renderError(`${fieldPath}: ${message}`);
  }
}

function renderUsers(report: ReportDto): void {
  $("#users").innerHTML = report.roles
    .map(
      (role) => `
      <div class="user-card${state.selectedRoles.includes(role.role) ? "" : " dimmed"}">
        <h3>${escapeHtml(role.role)} <small>${escapeHtml(role.security_level)}</small></h3>
        <div class="big">${formatCount(role.users_per_hour)}<small> users/hour/server</small></div>
        <div>${formatCount(role.users_per_year_facility)}<small> users/year, whole facility</small></div>
      </div>`,
    )
    .join("");
}

function renderBreakdown(report: ReportDto): void {
  const bars = breakdownBars(report, granularity, state.selectedRoles);
  $("#breakdown").innerHTML = bars
    .map((bar) => {
      const segments = bar.segments
        .filter((segment) => segment.share > 0)
        .map(
          (segment) => `
          <span class="seg seg-${segment.component}" style="width:${(segment.share * 100).toFixed(3)}%"
                title="${escapeHtml(segment.component.replace("_", "+"))}: ${formatMoney(segment.amount)}"></span>`,
        )
        .join("");
      const legend = bar.segments
        .map(
          (segment) => `
          <span class="legend-item"><i class="seg-${segment.component}"></i>
            ${escapeHtml(segment.component.replace("_", "+"))}
            <b data-cost="${escapeHtml(bar.role)}.${escapeHtml(segment.component)}">${formatMoney(segment.amount)}</b>
          </span>`,
        )
        .join("");
      return `
      <div class="role-bar">
        <div class="role-bar-head">
          <b>${escapeHtml(bar.role)}</b>
          <span>annual total (${escapeHtml(granularity)}): <b>${formatMoney(bar.total)}</b></span>
        </div>
        <div class="bar">${segments}</div>
        <div class="legend">${legend}</div>
      </div>`;
    })
    .join("");
}

function renderTimeline(report: ReportDto): void {
  const role = report.roles.find((r) => r.role === timelineRole) ?? report.roles[0];
  if (!role) return;
  timelineRole = role.role;
  const points = roiTimeline(role);
  const columns = points
    .map(
      (point) => `
      <div class="timeline-col">
        <div class="timeline-roi">${formatRoiPercent(point.roi)}</div>
        <div class="timeline-bar" style="height:${Math.max(point.scale * 120, 2).toFixed(1)}px"
             title="cumulative profit ${formatMoney(point.cumulativeProfit)}"></div>
        <div class="timeline-year">y${point.year}</div>
      </div>`,
    )
    .join("");
  $("#timeline-chart").innerHTML = columns;
  $("#timeline-caption").textContent =
    `${role.role}: cumulative profit after ${points.length} year(s) ` +
    `${formatMoney(role.projection.cumulative_profit)} at ` +
    `${formatRoiPercent(role.projection.cumulative_roi)} ROI ` +
    `(${report.roles[0].projection.roi_convention} convention)`;
}

function renderDiagnostics(report: ReportDto): void {
  $("#diagnostics").innerHTML = report.diagnostics.length
    ? report.diagnostics.map((d) => `<li>${escapeHtml(d)}</li>`).join("")
    : "<li>none</li>";
}

function renderReport(report: ReportDto): void {
  lastReport = report;
  renderError(null);
  renderUsers(report);
  renderBreakdown(report);
  renderTimeline(report);
  renderDiagnostics(report);
  $("#reset").toggleAttribute("disabled", Object.keys(state.overrides).length === 0);
}

// -- data flow ----------------------------------------------------------------

async function refresh(): Promise<void> {
  const token = gate.next();
  try {
    const report = await api.evaluate(state.baseScenario, requestOverrides(state));
    if (gate.accept(token)) {
      clearControlErrors();
      renderReport(report);
    }
  } catch (error) {
    if (!gate.accept(token)) return; // a newer request is in flight
    if (error instanceof ApiRequestError && error.status === 422 && error.body.field_path) {
      showControlError(error.body.field_path, error.body.message);
    } else {
      renderError(error instanceof Error ? error.message : String(error));
    }
  }
}

const refreshSoon = debounce(() => void refresh(), 150);

// -- controls -----------------------------------------------------------------

function renderControls(): void {
  const groups = new Map<string, ControlSpec[]>();
  for (const control of controls) {
    const list = groups.get(control.group) ?? [];
    list.push(control);
    groups.set(control.group, list);
  }
  const html = [...groups.entries()]
    .map(([group, members]) => {
      const inputs = members
        .map(
          (control) => `
          <label class="control">
            <span>${escapeHtml(control.label)}</span>
            <input type="text" inputmode="decimal" data-path="${escapeHtml(control.path)}"
                   value="${escapeHtml(String(state.overrides[control.path] ?? control.value))}" />
            <em class="control-error" data-error-for="${escapeHtml(control.path)}"></em>
          </label>`,
        )
        .join("");
      return `<fieldset><legend>${escapeHtml(group)}</legend>${inputs}</fieldset>`;
    })
    .join("");
  $("#controls").innerHTML = html;

  document.querySelectorAll<HTMLInputElement>("#controls input[data-path]").forEach((input) => {
    const path = input.dataset.path!;
    const base = controls.find((c) => c.path === path);
    const commit = (debounced: boolean) => {
      const raw = input.value.trim();
      if (raw === "" || raw === base?.value) {
        state = clearOverride(state, path);
      } else {
        const asNumber = base?.isInteger ? Number.parseInt(raw, 10) : raw;
        state = setOverride(state, path, base?.isInteger && Number.isInteger(asNumber) ? asNumber : raw);
      }
      if (debounced) refreshSoon();
      else {
        refreshSoon.cancel();
        void refresh();
      }
    };
    input.addEventListener("input", () => commit(true));
    input.addEventListener("change", () => commit(false));
  });
}

function bindChrome(): void {
  $("#granularity").addEventListener("change", (event) => {
    granularity = (event.target as HTMLSelectElement).value as Granularity;
    if (lastReport) renderBreakdown(lastReport);
  });
  $("#convention").addEventListener("change", (event) => {
    state = setConvention(
      state,
      (event.target as HTMLSelectElement).value as WhatIfState["roiConvention"],
    );
    void refresh();
  });
  $("#horizon").addEventListener("change", (event) => {
    const years = Number.parseInt((event.target as HTMLInputElement).value, 10);
    try {
      state = setHorizon(state, years);
      void refresh();
    } catch (error) {
      renderError(error instanceof Error ? error.message : String(error));
    }
  });
  $("#timeline-role").addEventListener("change", (event) => {
    timelineRole = (event.target as HTMLSelectElement).value;
    if (lastReport) renderTimeline(lastReport);
  });
  $("#reset").addEventListener("click", () => {
    state = clearAllOverrides(state);
    renderControls();
    void refresh();
  });
}

function renderRoleToggles(roles: string[]): void {
  $("#roles").innerHTML = roles
    .map(
      (role) => `
      <label class="role-toggle">
        <input type="checkbox" value="${escapeHtml(role)}"
               ${state.selectedRoles.includes(role) ? "checked" : ""} /> ${escapeHtml(role)}
      </label>`,
    )
    .join("");
  document.querySelectorAll<HTMLInputElement>("#roles input").forEach((box) => {
    box.addEventListener("change", () => {
      state = toggleRole(state, box.value);
      if (lastReport) {
        renderUsers(lastReport);
        renderBreakdown(lastReport);
      }
    });
  });
}

async function selectScenario(name: string): Promise<void> {
  const manifest = await api.manifest(name);
  const summary = (await api.scenarios()).find((s) => s.name === name);
  const roles = summary?.roles ?? [];
  state = createState(name, roles);
  timelineRole = roles[0] ?? "";
  controls = controlsFromManifest(manifest.sweepable);
  renderRoleToggles(roles);
  const roleSelect = $("#timeline-role") as unknown as HTMLSelectElement;
  roleSelect.innerHTML = roles
    .map((role) => `<option value="${escapeHtml(role)}">${escapeHtml(role)}</option>`)
    .join("");
  renderControls();
  await refresh();
}

async function boot(): Promise<void> {
  try {
    const scenarios = await api.scenarios();
    const usable = scenarios.filter((s) => !s.error);
    const select = $("#scenario") as unknown as HTMLSelectElement;
    select.innerHTML = usable
      .map((s) => `<option value="${escapeHtml(s.name)}">${escapeHtml(s.name)}</option>`)
      .join("");
    select.addEventListener("change", () => void selectScenario(select.value));
    bindChrome();
    const first = usable.find((s) => s.name === "callcenter-nevada") ?? usable[0];
    if (!first) {
      renderError("no scenarios available from the service");
      return;
    }
    select.value = first.name;
    await selectScenario(first.name);
  } catch (error) {
    renderError(error instanceof Error ? error.message : String(error));
  }
}

void boot();
