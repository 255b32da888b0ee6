import { describe, expect, it } from "vitest";

import {
  addSegment,
  addSubsegment,
  applyLiveReports,
  applyResult,
  blockingViolations,
  canRun,
  decodeFragment,
  defaultSegment,
  editField,
  editSubsegment,
  encodeFragment,
  exportJson,
  importJson,
  newState,
  revert,
  toFacilityDoc,
  validationDoc,
  type FormState,
} from "../src/formState.js";
import { RulesIndex } from "../src/rulesIndex.js";
import type { FacilityResultDoc, Violation } from "../src/types.js";
import { loadRiverFalls, loadRulesDocument } from "./helpers.js";

const rules = new RulesIndex(loadRulesDocument());

function stateWithOneSegment(): FormState {
  return addSegment(newState());
}

const RESULT: FacilityResultDoc = {
  segments: [
    { as_mph: 50, pf_pct: 40, fd_fol_per_mi: 4, los: "B", flow_rate_pch: 500 },
  ],
  overall_fd: 4,
  overall_los: "B",
};

function violation(parameter: string, severity: "error" | "warning" = "error"): Violation {
  return {
    rule_id: "SF-001",
    parameter,
    observed: 13,
    constraint: "test constraint",
    severity,
    citation: "HCM 7th Ed., Ch.15",
  };
}

describe("editing and staleness", () => {
  it("editing a model-feeding field marks results stale", () => {
    let state = applyResult(stateWithOneSegment(), RESULT);
    expect(state.stale).toBe(false);
    state = editField(state, 0, "lane_width_ft", "10.0", rules);
    expect(state.stale).toBe(true);
    expect(state.dirtyParams.has("0:lane_width_ft")).toBe(true);
  });

  it("editing a note keeps results fresh", () => {
    let state = applyResult(stateWithOneSegment(), RESULT);
    state = editField(state, 0, "note", "resurfaced 2024", rules);
    expect(state.stale).toBe(false);
    expect(state.lastResult).toBe(RESULT);
  });

  it("edits without a prior result do not set stale", () => {
    const state = editField(stateWithOneSegment(), 0, "lane_width_ft", "9", rules);
    expect(state.stale).toBe(false);
  });

  it("reserved inputs (opposing demand) do not stale results", () => {
    let state = applyResult(stateWithOneSegment(), RESULT);
    state = editField(state, 0, "opposing_demand_vph", "700", rules);
    expect(state.stale).toBe(false);
  });

  it("running the analysis clears staleness and dirt", () => {
    let state = applyResult(stateWithOneSegment(), RESULT);
    state = editField(state, 0, "demand_vph", "900", rules);
    expect(state.stale).toBe(true);
    state = applyResult(state, RESULT);
    expect(state.stale).toBe(false);
    expect(state.dirtyParams.size).toBe(0);
  });

  it("revert restores the previous values and result without recompute", () => {
    let state = applyResult(stateWithOneSegment(), RESULT);
    state = editField(state, 0, "lane_width_ft", "8.0", rules);
    expect(state.stale).toBe(true);
    const reverted = revert(state);
    expect(reverted.segments[0]!.values.lane_width_ft).toBe("11.5");
    expect(reverted.stale).toBe(false);
    expect(reverted.lastResult).toBe(RESULT);
  });

  it("revert is a no-op without history", () => {
    const state = newState();
    expect(revert(state)).toBe(state);
  });
});

describe("validation plumbing", () => {
  it("builds the flat per-segment document in binding names", () => {
    let state = stateWithOneSegment();
    state = addSubsegment(state, 0);
    state = editSubsegment(state, 0, 0, "radius_ft", "900");
    const doc = validationDoc(state.segments[0]!);
    expect(doc).toMatchObject({
      lane_width_ft: 11.5,
      shoulder_width_ft: 6.0,
      posted_speed_mph: 55,
      passing_type: "Constrained",
      horizontal_class: 0,
      radius_ft: 900,
    });
  });

  it("takes the tightest subsegment radius", () => {
    let state = addSubsegment(addSubsegment(stateWithOneSegment(), 0), 0);
    state = editSubsegment(state, 0, 0, "radius_ft", "1500");
    state = editSubsegment(state, 0, 1, "radius_ft", "700");
    expect(validationDoc(state.segments[0]!).radius_ft).toBe(700);
  });

  it("skips unparseable fields (they become field errors instead)", () => {
    const state = editField(stateWithOneSegment(), 0, "lane_width_ft", "wide", rules);
    const doc = validationDoc(state.segments[0]!);
    expect(doc).not.toHaveProperty("lane_width_ft");
    expect(toFacilityDoc(state).errors[0]!.path).toBe("segments[0].lane_width_ft");
  });

  it("applyLiveReports keys violations by segment and parameter", () => {
    const state = applyLiveReports(stateWithOneSegment(), [
      { index: 0, violations: [violation("lane_width")] },
    ]);
    expect(state.liveViolations.get("0:lane_width")).toHaveLength(1);
  });

  it("blocking violations gate the run action; warnings do not", () => {
    let state = applyLiveReports(stateWithOneSegment(), [
      { index: 0, violations: [violation("lane_width", "warning")] },
    ]);
    expect(blockingViolations(state)).toHaveLength(0);
    expect(canRun(state)).toBe(true);
    state = applyLiveReports(state, [
      { index: 0, violations: [violation("lane_width", "error")] },
    ]);
    expect(canRun(state)).toBe(false);
  });

  it("an empty facility cannot run", () => {
    expect(canRun(newState())).toBe(false);
  });
});

describe("import and export", () => {
  it("round-trips the river falls fixture", () => {
    const outcome = importJson(loadRiverFalls());
    expect("state" in outcome).toBe(true);
    const state = (outcome as { state: FormState }).state;
    expect(state.segments).toHaveLength(5);
    expect(state.segments[0]!.values.lane_width_ft).toBe("11");
    expect(state.segments[0]!.subsegments[0]!.radius_ft).toBe("1200");
    const reExported = exportJson(state);
    const reImported = importJson(reExported);
    expect("state" in reImported).toBe(true);
    expect(exportJson((reImported as { state: FormState }).state)).toBe(reExported);
  });

  it("export parses as the kernel facility schema", () => {
    const outcome = importJson(loadRiverFalls()) as { state: FormState };
    const doc = JSON.parse(exportJson(outcome.state));
    expect(doc.facility_type).toBe("two_lane_highway");
    expect(doc.segments).toHaveLength(5);
    for (const seg of doc.segments) {
      expect(typeof seg.lane_width_ft).toBe("number");
      expect(typeof seg.passing_type).toBe("string");
    }
  });

  it("unknown keys block the import with per-field errors", () => {
    const text = JSON.stringify({
      facility_type: "two_lane_highway",
      segments: [{ ...JSON.parse(loadRiverFalls()).segments[0], lane_widht: 12 }],
    });
    const outcome = importJson(text);
    expect("errors" in outcome).toBe(true);
    const errors = (outcome as { errors: { path: string }[] }).errors;
    expect(errors.some((e) => e.path === "segments[0].lane_widht")).toBe(true);
  });

  it("missing required fields are reported per field", () => {
    const seg = { ...JSON.parse(loadRiverFalls()).segments[0] };
    delete seg.demand_vph;
    const outcome = importJson(
      JSON.stringify({ facility_type: "two_lane_highway", segments: [seg] }),
    );
    expect("errors" in outcome).toBe(true);
    const errors = (outcome as { errors: { path: string }[] }).errors;
    expect(errors.some((e) => e.path === "segments[0].demand_vph")).toBe(true);
  });

  it("share fragments round-trip", () => {
    const outcome = importJson(loadRiverFalls()) as { state: FormState };
    const fragment = encodeFragment(outcome.state);
    expect(fragment).not.toBeNull();
    const decoded = decodeFragment(fragment!);
    expect(decoded).not.toBeNull();
    expect(exportJson(decoded!)).toBe(exportJson(outcome.state));
  });

  it("oversized facilities decline a share fragment", () => {
    let state = newState();
    for (let i = 0; i < 60; i++) state = addSegment(state);
    expect(encodeFragment(state)).toBeNull();
  });
});

describe("rules index", () => {
  it("lane width reaches the result chain", () => {
    const closure = rules.affectsClosure("lane_width");
    expect(closure.has("average_speed")).toBe(true);
    expect(closure.has("level_of_service")).toBe(true);
  });

  it("fields map through schema bindings", () => {
    expect(rules.parameterForField("lane_width_ft")?.key).toBe("lane_width");
    expect(rules.parameterForField("posted_speed_mph")?.key).toBe("design_speed");
  });

  it("note fields never feed results", () => {
    expect(rules.fieldFeedsResults("note")).toBe(false);
    expect(rules.fieldFeedsResults("lane_width_ft")).toBe(true);
    expect(rules.fieldFeedsResults("length_mi")).toBe(true);
  });

  it("closure terminates and excludes the start key", () => {
    for (const param of loadRulesDocument().parameters) {
      const closure = rules.affectsClosure(param.key);
      expect(closure.has(param.key)).toBe(false);
    }
  });

  it("default segment values all parse", () => {
    const doc = validationDoc(defaultSegment());
    expect(Object.keys(doc).length).toBeGreaterThanOrEqual(6);
  });
});
