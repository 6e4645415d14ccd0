/**
 * Pure transforms from service reports to view models.
 *
 * Widths and chart heights are layout proportions derived from the
 * service's numbers; the displayed labels always carry the service's exact
 * decimal strings.
 */

import type { ReportDto, RoleReportDto, BreakdownDto, SweepablePath } from "./api.js";

export type Granularity = "server" | "rack" | "facility";

export const COST_COMPONENTS = ["power", "cooling", "hardware_software", "personnel"] as const;
export type CostComponent = (typeof COST_COMPONENTS)[number];

export interface BarSegment {
  component: CostComponent;
  amount: string; // exact decimal string from the service
  share: number; // 0..1 of the breakdown total, for layout only
}

export interface RoleBar {
  role: string;
  securityLevel: string;
  total: string;
  usersPerYearFacility: number;
  segments: BarSegment[];
}

function segmentsOf(breakdown: BreakdownDto): BarSegment[] {
  const total = parseFloat(breakdown.total);
  return COST_COMPONENTS.map((component) => {
    const amount = breakdown[component];
    return {
      component,
      amount,
      share: total > 0 ? parseFloat(amount) / total : 0,
    };
  });
}

export function breakdownBars(
  report: ReportDto,
  granularity: Granularity,
  selectedRoles: string[],
): RoleBar[] {
  const wanted = new Set(selectedRoles);
  return report.roles
    .filter((role) => wanted.size === 0 || wanted.has(role.role))
    .map((role) => ({
      role: role.role,
      securityLevel: role.security_level,
      total: role.costs[granularity].total,
      usersPerYearFacility: role.users_per_year_facility,
      segments: segmentsOf(role.costs[granularity]),
    }));
}

export interface TimelinePoint {
  year: number;
  roi: string; // exact fraction string from the service
  cumulativeProfit: string;
  /** height proportion relative to the final year, for layout only */
  scale: number;
}

export function roiTimeline(role: RoleReportDto): TimelinePoint[] {
  const years = role.projection.years;
  const maxRoi = Math.max(...years.map((y) => Math.abs(parseFloat(y.roi))), 0);
  return years.map((y) => ({
    year: y.year,
    roi: y.roi,
    cumulativeProfit: y.cumulative_profit,
    scale: maxRoi > 0 ? Math.abs(parseFloat(y.roi)) / maxRoi : 0,
  }));
}

export interface ControlSpec {
  path: string;
  label: string;
  group: string;
  value: string; // current base value as text
  isInteger: boolean;
}

/** Paths that would change scenario identity rather than explore it. */
const HIDDEN_PATHS = new Set(["facility.servers_per_rack", "economics.analysis_years"]);

/**
 * Build parameter controls from the service's sweepable-path manifest, so
 * the UI follows the engine schema without a hand-maintained list.
 */
export function controlsFromManifest(sweepable: SweepablePath[]): ControlSpec[] {
  return sweepable
    .filter((entry) => !HIDDEN_PATHS.has(entry.path) && !entry.path.endsWith(".cpu_cost_basis.price_per_kwh")
      && !entry.path.includes(".cpu_cost_basis.") && !entry.path.includes(".access."))
    .map((entry) => {
      const parts = entry.path.split(".");
      const group = parts.length > 2 ? parts.slice(0, -1).join(".") : parts[0];
      return {
        path: entry.path,
        label: parts[parts.length - 1].replace(/_/g, " "),
        group,
        value: String(entry.value),
        isInteger: typeof entry.value === "number",
      };
    });
}
