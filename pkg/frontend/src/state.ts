/**
 * What-if state: a base scenario plus a map of dotted-path overrides.
 *
 * State transitions are pure (each returns a new state object) so that the
 * UI can treat renders as a function of state, and clearing all overrides
 * provably returns to the base scenario.
 */

import type { Overrides } from "./api.js";

export type RoiConvention = "fixed-base" | "cumulative";

export interface WhatIfState {
  baseScenario: string;
  overrides: Overrides;
  selectedRoles: string[];
  horizonYears: number;
  roiConvention: RoiConvention;
}

export function createState(baseScenario: string, roles: string[] = []): WhatIfState {
  return {
    baseScenario,
    overrides: {},
    selectedRoles: [...roles],
    horizonYears: 5,
    roiConvention: "fixed-base",
  };
}

export function setOverride(
  state: WhatIfState,
  path: string,
  value: string | number,
): WhatIfState {
  return { ...state, overrides: { ...state.overrides, [path]: value } };
}

export function clearOverride(state: WhatIfState, path: string): WhatIfState {
  const overrides = { ...state.overrides };
  delete overrides[path];
  return { ...state, overrides };
}

export function clearAllOverrides(state: WhatIfState): WhatIfState {
  return { ...state, overrides: {} };
}

export function hasOverrides(state: WhatIfState): boolean {
  return Object.keys(state.overrides).length > 0;
}

export function setHorizon(state: WhatIfState, years: number): WhatIfState {
  if (!Number.isInteger(years) || years < 1) {
    throw new RangeError(`horizon must be an integer >= 1, got ${years}`);
  }
  return { ...state, horizonYears: years };
}

export function setConvention(state: WhatIfState, convention: RoiConvention): WhatIfState {
  return { ...state, roiConvention: convention };
}

export function toggleRole(state: WhatIfState, role: string): WhatIfState {
  const selected = state.selectedRoles.includes(role)
    ? state.selectedRoles.filter((r) => r !== role)
    : [...state.selectedRoles, role];
  return { ...state, selectedRoles: selected };
}

/**
 * The overrides actually sent to /api/evaluate: user edits plus the
 * horizon and ROI convention the views need. The service recomputes
 * everything; the dashboard never does cost math.
 */
export function requestOverrides(state: WhatIfState): Overrides {
  return {
    ...state.overrides,
    "economics.analysis_years": state.horizonYears,
    "economics.roi_convention": state.roiConvention,
  };
}
