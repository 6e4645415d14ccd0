import { describe, expect, it } from "vitest";

import type { ReportDto, RoleReportDto } from "../src/api.js";
import { formatCount, formatMoney, formatRoiPercent, groupThousands } from "../src/format.js";
import { breakdownBars, controlsFromManifest, roiTimeline } from "../src/viewmodel.js";

function breakdown(power: string, cooling: string, hwsw: string, personnel: string, total: string) {
  return {
    power,
    cooling,
    hardware_software: hwsw,
    personnel,
    total,
    period_years: 1,
  };
}

const role1: RoleReportDto = {
  role: "role1",
  security_level: "low",
  security_mechanism: "TLSv1",
  users_per_hour: 11571,
  users_per_year_server: 101361960,
  users_per_year_facility: 52708219200,
  costs: {
    server: breakdown("227", "227", "15760.8", "0", "16214.8"),
    rack: breakdown("2951", "2951", "204890.4", "0", "210792.4"),
    facility: breakdown("118040", "118040", "8195616", "87660360", "96092056"),
  },
  income_annual: "158124657600",
  outcome_annual: "45584797952",
  outcome_source: "override",
  projection: {
    roi_convention: "fixed-base",
    years: [
      { year: 1, income: "1", outcome: "1", profit: "1", cumulative_profit: "1", roi: "2.468802" },
      { year: 2, income: "1", outcome: "1", profit: "1", cumulative_profit: "2", roi: "4.937605" },
    ],
    cumulative_profit: "2",
    cumulative_roi: "4.937605",
  },
};

const report: ReportDto = {
  scenario: "callcenter-nevada",
  servers_total: 520,
  servers_per_rack: 13,
  racks_full: 40,
  rack_remainder_servers: 0,
  roles: [role1],
  diagnostics: [],
};

describe("breakdown bars", () => {
  it("carries exact service strings and layout shares", () => {
    const [bar] = breakdownBars(report, "facility", ["role1"]);
    expect(bar.total).toBe("96092056");
    const byComponent = Object.fromEntries(bar.segments.map((s) => [s.component, s]));
    expect(byComponent.power.amount).toBe("118040"); // exact, not recomputed
    expect(byComponent.personnel.amount).toBe("87660360");
    const shares = bar.segments.map((s) => s.share);
    expect(shares.reduce((a, b) => a + b, 0)).toBeCloseTo(1, 9);
  });

  it("mirror cooling renders equal power and cooling segments", () => {
    const [bar] = breakdownBars(report, "server", []);
    const power = bar.segments.find((s) => s.component === "power")!;
    const cooling = bar.segments.find((s) => s.component === "cooling")!;
    expect(power.amount).toBe(cooling.amount);
    expect(power.share).toBe(cooling.share);
  });

  it("filters to the selected roles", () => {
    expect(breakdownBars(report, "facility", ["nope"])).toEqual([]);
    expect(breakdownBars(report, "facility", []).length).toBe(1); // empty = all
  });
});

describe("roi timeline", () => {
  it("exposes service roi strings with the final year at full scale", () => {
    const points = roiTimeline(role1);
    expect(points.map((p) => p.roi)).toEqual(["2.468802", "4.937605"]);
    expect(points[1].scale).toBe(1);
    expect(points[0].scale).toBeCloseTo(0.5, 5);
  });
});

describe("controls from the service manifest", () => {
  it("keeps engine inputs and drops structural/basis paths", () => {
    const controls = controlsFromManifest([
      { path: "facility.tariff.price_per_kwh", value: "0.0756" },
      { path: "facility.servers_total", value: 520 },
      { path: "roles.role1.target_load", value: "0.9" },
      { path: "roles.role1.cpu_cost_basis.price_per_kwh", value: "0.0756" },
      { path: "roles.role1.access.0.data_mb", value: "8" },
      { path: "economics.analysis_years", value: 5 },
    ]);
    const paths = controls.map((c) => c.path);
    expect(paths).toContain("facility.tariff.price_per_kwh");
    expect(paths).toContain("facility.servers_total");
    expect(paths).toContain("roles.role1.target_load");
    expect(paths).not.toContain("roles.role1.cpu_cost_basis.price_per_kwh");
    expect(paths).not.toContain("roles.role1.access.0.data_mb");
    expect(paths).not.toContain("economics.analysis_years");
    const servers = controls.find((c) => c.path === "facility.servers_total")!;
    expect(servers.isInteger).toBe(true);
    expect(servers.label).toBe("servers total");
  });
});

describe("formatting", () => {
  it("groups thousands without locale machinery", () => {
    expect(groupThousands("158124657600")).toBe("158,124,657,600");
    expect(groupThousands("198.6768")).toBe("198.6768");
    expect(groupThousands("-1234567.5")).toBe("-1,234,567.5");
    expect(formatMoney("118040")).toBe("$118,040");
    expect(formatCount(11571)).toBe("11,571");
  });

  it("renders roi fractions as percentages", () => {
    expect(formatRoiPercent("12.344012")).toBe("1234.40%");
    expect(formatRoiPercent("0.041450")).toBe("4.15%");
  });
});
