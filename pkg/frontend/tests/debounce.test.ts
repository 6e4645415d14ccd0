import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { debounce } from "../src/debounce.js";

describe("debounce", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("fires once with the latest arguments after the quiet period", () => {
    const calls: number[] = [];
    const push = debounce((n: number) => calls.push(n), 100);
    push(1);
    push(2);
    push(3);
    vi.advanceTimersByTime(99);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(calls).toEqual([3]);
  });

  it("flush runs the pending call immediately", () => {
    const calls: string[] = [];
    const push = debounce((s: string) => calls.push(s), 100);
    push("drag");
    push("release");
    push.flush();
    expect(calls).toEqual(["release"]);
    vi.advanceTimersByTime(200);
    expect(calls).toEqual(["release"]); // no double fire
  });

  it("cancel drops the pending call", () => {
    const calls: number[] = [];
    const push = debounce((n: number) => calls.push(n), 100);
    push(1);
    push.cancel();
    vi.advanceTimersByTime(200);
    expect(calls).toEqual([]);
  });

  it("flush with nothing pending is a no-op", () => {
    const calls: number[] = [];
    const push = debounce((n: number) => calls.push(n), 100);
    push.flush();
    expect(calls).toEqual([]);
  });
});
