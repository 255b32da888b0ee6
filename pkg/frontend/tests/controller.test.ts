import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { CalculatorController, DEBOUNCE_MS } from "../src/controller.js";
import {
  addSegment,
  applyLiveReports,
  editField,
  newState,
  type FormState,
} from "../src/formState.js";
import { StubKernel } from "../src/kernels/stub.js";
import { RulesIndex } from "../src/rulesIndex.js";
import type { FormState as State } from "../src/formState.js";
import type { Violation } from "../src/types.js";
import { loadRulesDocument } from "./helpers.js";

const rulesDoc = loadRulesDocument();
const rules = new RulesIndex(rulesDoc);

const SF001: Violation = {
  rule_id: "SF-001",
  parameter: "lane_width",
  observed: 12.01,
  constraint: "lane_width of 12.01 ft is outside the supported range [9, 12] ft",
  severity: "error",
  citation: "HCM 7th Ed., Ch.15 (Two-Lane Highways)",
};

function makeController(kernel: StubKernel) {
  const seen: State[] = [];
  const errors: unknown[] = [];
  const controller = new CalculatorController(kernel, {
    onValidated: (state) => seen.push(state),
    onKernelError: (err) => errors.push(err),
  });
  return { controller, seen, errors };
}

describe("debounced live validation", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("waits out the debounce interval before calling the kernel", async () => {
    const kernel = new StubKernel(rulesDoc);
    const { controller, seen } = makeController(kernel);
    const state = addSegment(newState());
    controller.noteEdit(state);
    expect(kernel.validateCalls).toHaveLength(0);
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS - 1);
    expect(kernel.validateCalls).toHaveLength(0);
    await vi.advanceTimersByTimeAsync(1);
    expect(kernel.validateCalls).toHaveLength(1);
    expect(seen).toHaveLength(1);
  });

  it("coalesces rapid keystrokes into one validation", async () => {
    const kernel = new StubKernel(rulesDoc);
    const { controller } = makeController(kernel);
    let state = addSegment(newState());
    for (const text of ["1", "12", "12.", "12.0", "12.01"]) {
      state = editField(state, 0, "lane_width_ft", text, rules);
      controller.noteEdit(state);
      await vi.advanceTimersByTimeAsync(50);
    }
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    expect(kernel.validateCalls).toHaveLength(1);
    expect(kernel.validateCalls[0]).toMatchObject({ lane_width_ft: 12.01 });
  });

  it("keeps at most one call in flight and replays only the newest edit", async () => {
    const kernel = new StubKernel(rulesDoc);
    kernel.holdResponses = true;
    const { controller } = makeController(kernel);
    const first = addSegment(newState());
    controller.noteEdit(first);
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    expect(kernel.validateCalls).toHaveLength(1);
    // Two edits arrive while the kernel is busy; only the last must run.
    const second = editField(first, 0, "lane_width_ft", "11.0", rules);
    await controller.validateNow(second);
    const third = editField(second, 0, "lane_width_ft", "10.0", rules);
    await controller.validateNow(third);
    expect(kernel.validateCalls).toHaveLength(1);
    kernel.holdResponses = false;
    kernel.release();
    await vi.advanceTimersByTimeAsync(1);
    kernel.release();
    await vi.advanceTimersByTimeAsync(1);
    expect(kernel.validateCalls).toHaveLength(2);
    expect(kernel.validateCalls[1]).toMatchObject({ lane_width_ft: 10.0 });
  });

  it("validates every segment of the form", async () => {
    const kernel = new StubKernel(rulesDoc);
    const { controller } = makeController(kernel);
    const state = addSegment(addSegment(addSegment(newState())));
    controller.noteEdit(state);
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    expect(kernel.validateCalls).toHaveLength(3);
  });

  it("reports kernel failures through the error hook", async () => {
    const kernel = new StubKernel(rulesDoc);
    kernel.validateParams = async () => {
      throw new Error("boom");
    };
    const { controller, errors } = makeController(kernel);
    controller.noteEdit(addSegment(newState()));
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    expect(errors).toHaveLength(1);
  });
});

describe("run gating", () => {
  it("refuses to run while an error violation is displayed", async () => {
    const kernel = new StubKernel(rulesDoc);
    const { controller } = makeController(kernel);
    let state = addSegment(newState());
    state = applyLiveReports(state, [{ index: 0, violations: [SF001] }]);
    const outcome = await controller.runAnalysis(state);
    expect(outcome).toBeNull();
    expect(kernel.analyzeCalls).toHaveLength(0);
  });

  it("runs a clean form and installs the kernel result verbatim", async () => {
    const kernel = new StubKernel(rulesDoc);
    kernel.nextOutcome = {
      ok: true,
      result: {
        segments: [
          {
            as_mph: 87.654321,
            pf_pct: 43.218765,
            fd_fol_per_mi: 9.876543,
            los: "X",
            flow_rate_pch: 1234.5,
          },
        ],
        overall_fd: 9.876543,
        overall_los: "X",
      },
    };
    const { controller } = makeController(kernel);
    const state = addSegment(newState());
    const outcome = await controller.runAnalysis(state);
    expect(outcome).not.toBeNull();
    // Sentinel values pass through untouched: no client-side math.
    expect(outcome!.state.lastResult).toEqual(kernel.nextOutcome.result);
    expect(outcome!.state.stale).toBe(false);
  });

  it("surfaces a kernel-side rejection without mutating results", async () => {
    const kernel = new StubKernel(rulesDoc);
    kernel.nextOutcome = {
      ok: false,
      rejection: { status: 400, errors: [SF001], unknown_keys: [] },
    };
    const { controller } = makeController(kernel);
    const state = addSegment(newState());
    const outcome = await controller.runAnalysis(state);
    expect(outcome).not.toBeNull();
    expect(outcome!.outcome.ok).toBe(false);
    expect(outcome!.state.lastResult).toBeNull();
  });
});
