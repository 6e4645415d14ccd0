import { describe, expect, it } from "vitest";

import {
  clearAllOverrides,
  clearOverride,
  createState,
  hasOverrides,
  requestOverrides,
  setConvention,
  setHorizon,
  setOverride,
  toggleRole,
} from "../src/state.js";

describe("what-if state", () => {
  it("starts pristine", () => {
    const state = createState("callcenter-nevada", ["role1", "role2"]);
    expect(hasOverrides(state)).toBe(false);
    expect(state.selectedRoles).toEqual(["role1", "role2"]);
  });

  it("set/clear override is immutable and round-trips", () => {
    const base = createState("s");
    const edited = setOverride(base, "facility.tariff.price_per_kwh", "0.1512");
    expect(hasOverrides(base)).toBe(false); // original untouched
    expect(edited.overrides["facility.tariff.price_per_kwh"]).toBe("0.1512");
    const cleared = clearOverride(edited, "facility.tariff.price_per_kwh");
    expect(cleared.overrides).toEqual(base.overrides);
  });

  it("clearAllOverrides returns to the base-scenario request", () => {
    let state = createState("s");
    state = setOverride(state, "a.b", 1);
    state = setOverride(state, "c.d", "2");
    const cleared = clearAllOverrides(state);
    expect(requestOverrides(cleared)).toEqual(requestOverrides(createState("s")));
  });

  it("request overrides always carry horizon and convention", () => {
    let state = createState("s");
    state = setHorizon(state, 7);
    state = setConvention(state, "cumulative");
    state = setOverride(state, "facility.servers_total", 13);
    expect(requestOverrides(state)).toEqual({
      "facility.servers_total": 13,
      "economics.analysis_years": 7,
      "economics.roi_convention": "cumulative",
    });
  });

  it("rejects a non-positive horizon", () => {
    expect(() => setHorizon(createState("s"), 0)).toThrow(RangeError);
    expect(() => setHorizon(createState("s"), 2.5)).toThrow(RangeError);
  });

  it("toggles role selection", () => {
    let state = createState("s", ["role1", "role2"]);
    state = toggleRole(state, "role1");
    expect(state.selectedRoles).toEqual(["role2"]);
    state = toggleRole(state, "role1");
    expect(state.selectedRoles).toEqual(["role2", "role1"]);
  });
});
