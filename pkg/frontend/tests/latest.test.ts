import { describe, expect, it } from "vitest";

import { LatestGate } from "../src/latest.js";

describe("stale-response gate", () => {
  it("accepts responses arriving in order", () => {
    const gate = new LatestGate();
    const a = gate.next();
    const b = gate.next();
    expect(gate.accept(a)).toBe(false); // b is already in flight
    expect(gate.accept(b)).toBe(true);
  });

  it("never renders a stale response after a newer one", () => {
    const gate = new LatestGate();
    const first = gate.next();
    const second = gate.next();
    expect(gate.accept(second)).toBe(true);
    expect(gate.accept(first)).toBe(false); // late arrival of the older request
  });

  it("last write wins across many interleavings", () => {
    const gate = new LatestGate();
    const tokens = Array.from({ length: 10 }, () => gate.next());
    const shuffled = [3, 7, 1, 9, 0, 4, 8, 2, 6, 5].map((i) => tokens[i]);
    const accepted = shuffled.filter((t) => gate.accept(t));
    expect(accepted).toEqual([tokens[9]]);
  });

  it("single request is always current", () => {
    const gate = new LatestGate();
    expect(gate.accept(gate.next())).toBe(true);
  });
});
