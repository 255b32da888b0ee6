// Tests against the real kernels: the WASM build loaded from the wheel and
// the installed CLI as the reference interface. One WASM runtime is shared
// across the file (loading it dominates the cost).

import { join } from "node:path";
import { beforeAll, describe, expect, it } from "vitest";

import { CalculatorController } from "../src/controller.js";
import { importJson, type FormState } from "../src/formState.js";
import { CliKernel } from "../src/kernels/cli.js";
import { PyodideKernel } from "../src/kernels/pyodide.js";
import { RulesIndex } from "../src/rulesIndex.js";
import type { FacilityDoc } from "../src/types.js";
import { kernelWheelBytes, loadRiverFalls, REPO_ROOT, sleep } from "./helpers.js";

let kernel: PyodideKernel;
const cli = new CliKernel("twolane", join(REPO_ROOT, "rules", "two_lane_highway.json"));

beforeAll(async () => {
  kernel = await PyodideKernel.load({ wheel: kernelWheelBytes() });
});

describe("wasm kernel", () => {
  it("flags a boundary attack with the cited rule", async () => {
    const report = await kernel.validateParams({ lane_width: 12.01 });
    expect(report.status).toBe("reject");
    expect(report.violations[0]!.rule_id).toBe("SF-001");
    expect(report.violations[0]!.citation).toContain("HCM 7th Ed.");
  });

  it("passes the boundary value 12.0", async () => {
    const report = await kernel.validateParams({ lane_width: 12.0 });
    expect(report.status).toBe("pass");
  });

  it("flags a tight radius at speed", async () => {
    const report = await kernel.validateParams({
      design_speed: 55,
      design_radius: 200,
    });
    expect(report.violations[0]!.rule_id).toBe("SF-005");
    expect(report.violations[0]!.citation).toContain("AASHTO Green Book");
  });

  it("analyzes the river falls fixture to an all-C facility", async () => {
    const facility = JSON.parse(loadRiverFalls()) as FacilityDoc;
    const outcome = await kernel.analyze(facility);
    expect(outcome.ok).toBe(true);
    if (outcome.ok) {
      expect(outcome.result.segments).toHaveLength(5);
      expect(outcome.result.overall_los).toBe("C");
    }
  });

  it("returns the rejection payload for an invalid facility", async () => {
    const facility = JSON.parse(loadRiverFalls()) as FacilityDoc;
    facility.segments[0]!.lane_width_ft = 13.12;
    const outcome = await kernel.analyze(facility);
    expect(outcome.ok).toBe(false);
    if (!outcome.ok) {
      expect(outcome.rejection.status).toBe(400);
      expect(outcome.rejection.errors[0]!.rule_id).toBe("SF-001");
    }
  });

  it("serves the rules document for UI metadata", async () => {
    const doc = await kernel.rulesDocument();
    const index = new RulesIndex(doc);
    expect(index.affectsClosure("lane_width").has("level_of_service")).toBe(true);
    expect(doc.rules.map((r) => r.id)).toContain("SF-005");
  });

  it("responds to a live edit well inside the 500 ms budget", async () => {
    // Live-validation UX: debounce (150 ms) + kernel call must stay under
    // 500 ms, and validation must not trigger an analysis.
    const outcome = importJson(loadRiverFalls());
    let state = (outcome as { state: FormState }).state;
    let surfaced: FormState | null = null;
    const analyzeCalls: FacilityDoc[] = [];
    const instrumented: typeof kernel = Object.create(kernel);
    instrumented.analyze = async (facility) => {
      analyzeCalls.push(facility);
      return kernel.analyze(facility);
    };
    const controller = new CalculatorController(instrumented, {
      onValidated: (s) => {
        surfaced = s;
      },
      onKernelError: (err) => {
        throw err;
      },
    });
    state.segments[0]!.values.lane_width_ft = "12.01";
    const started = performance.now();
    controller.noteEdit(state);
    while (surfaced === null && performance.now() - started < 2000) {
      await sleep(10);
    }
    const elapsed = performance.now() - started;
    expect(surfaced).not.toBeNull();
    const violations = surfaced!.liveViolations.get("0:lane_width");
    expect(violations).toBeDefined();
    expect(violations![0]!.rule_id).toBe("SF-001");
    expect(violations![0]!.citation).toContain("HCM 7th Ed.");
    expect(elapsed).toBeLessThan(500);
    expect(analyzeCalls).toHaveLength(0);
    // Correcting the value clears the message.
    surfaced = null;
    state.segments[0]!.values.lane_width_ft = "12.0";
    controller.noteEdit(state);
    while (surfaced === null) await sleep(10);
    expect(surfaced!.liveViolations.has("0:lane_width")).toBe(false);
  });
});

describe("kernel load failures", () => {
  it("an unreachable wheel surfaces as a load error", async () => {
    await expect(
      PyodideKernel.load({ wheel: "http://127.0.0.1:9/missing.whl" }),
    ).rejects.toThrowError(/kernel wheel/);
  });
});

describe("cross-interface consistency", () => {
  function variants(): FacilityDoc[] {
    const base = JSON.parse(loadRiverFalls()) as FacilityDoc;
    const heavy = JSON.parse(loadRiverFalls()) as FacilityDoc;
    for (const seg of heavy.segments) {
      seg.demand_vph = 850;
      seg.heavy_pct = 12;
    }
    const lanes = JSON.parse(loadRiverFalls()) as FacilityDoc;
    for (const seg of lanes.segments) {
      seg.passing_type = "Lane";
      seg.posted_speed_mph = 50;
    }
    return [base, heavy, lanes];
  }

  it("wasm results equal CLI results on the fixture corpus", async () => {
    for (const facility of variants()) {
      const fromWasm = await kernel.analyze(facility);
      const fromCli = await cli.analyze(facility);
      expect(fromWasm.ok).toBe(true);
      expect(fromCli.ok).toBe(true);
      if (!fromWasm.ok || !fromCli.ok) continue;
      expect(fromWasm.result.overall_los).toBe(fromCli.result.overall_los);
      expect(
        Math.abs(fromWasm.result.overall_fd - fromCli.result.overall_fd),
      ).toBeLessThanOrEqual(1e-6);
      expect(fromWasm.result.segments).toHaveLength(fromCli.result.segments.length);
      fromWasm.result.segments.forEach((seg, i) => {
        const ref = fromCli.result.segments[i]!;
        expect(seg.los).toBe(ref.los);
        expect(Math.abs(seg.as_mph - ref.as_mph)).toBeLessThanOrEqual(1e-6);
        expect(Math.abs(seg.pf_pct - ref.pf_pct)).toBeLessThanOrEqual(1e-6);
        expect(
          Math.abs(seg.fd_fol_per_mi - ref.fd_fol_per_mi),
        ).toBeLessThanOrEqual(1e-6);
      });
    }
  });

  it("wasm validation verdicts match CLI verdicts", async () => {
    const docs = [
      { lane_width: 12.01 },
      { lane_width: 9.0, shoulder_width: 8.0 },
      { horizontal_class: 6 },
      { design_speed: 55, design_radius: 200 },
      { grade: 11.01 },
    ];
    for (const doc of docs) {
      const fromWasm = await kernel.validateParams(doc);
      const fromCli = await cli.validateParams(doc);
      expect(fromWasm.status).toBe(fromCli.status);
      expect(fromWasm.violations.map((v) => v.rule_id)).toEqual(
        fromCli.violations.map((v) => v.rule_id),
      );
    }
  });
});
