// Form state and the pure logic behind the calculator: segment editing with
// dirty tracking, staleness from the AFFECTS closure, one-step revert,
// validation bookkeeping, and facility JSON import/export. No DOM here.

import type { RulesIndex } from "./rulesIndex.js";
import type {
  FacilityDoc,
  FacilityResultDoc,
  SegmentDoc,
  SubsegmentDoc,
  Violation,
} from "./types.js";

export const NUMERIC_FIELDS = [
  "length_mi",
  "lane_width_ft",
  "shoulder_width_ft",
  "posted_speed_mph",
  "demand_vph",
  "opposing_demand_vph",
  "phf",
  "heavy_pct",
  "grade_pct",
] as const;

export type NumericField = (typeof NUMERIC_FIELDS)[number];
export type SegmentField = NumericField | "passing_type" | "horizontal_class" | "note";

const REQUIRED_FIELDS: SegmentField[] = [
  "length_mi",
  "lane_width_ft",
  "shoulder_width_ft",
  "posted_speed_mph",
  "demand_vph",
  "phf",
  "passing_type",
  "horizontal_class",
];

const OPTIONAL_FIELDS: SegmentField[] = [
  "opposing_demand_vph",
  "heavy_pct",
  "grade_pct",
];

const SUBSEGMENT_FIELDS = ["length_mi", "radius_ft", "superelevation_pct"] as const;

export interface SubsegmentForm {
  length_mi: string;
  radius_ft: string;
  superelevation_pct: string;
}

export interface SegmentForm {
  values: Record<SegmentField, string>;
  subsegments: SubsegmentForm[];
}

export interface FieldError {
  path: string;
  message: string;
}

interface Snapshot {
  segments: SegmentForm[];
  lastResult: FacilityResultDoc | null;
  stale: boolean;
}

export interface FormState {
  facilityType: string;
  segments: SegmentForm[];
  /** Fields edited since the last analysis run, as "index:field". */
  dirtyParams: Set<string>;
  /** Latest live-validation outcome keyed "index:parameterKey". */
  liveViolations: Map<string, Violation[]>;
  lastResult: FacilityResultDoc | null;
  stale: boolean;
  history: Snapshot | null;
}

export function defaultSegment(): SegmentForm {
  return {
    values: {
      length_mi: "1.0",
      lane_width_ft: "11.5",
      shoulder_width_ft: "6.0",
      posted_speed_mph: "55",
      demand_vph: "500",
      opposing_demand_vph: "0",
      phf: "0.95",
      heavy_pct: "0",
      grade_pct: "0",
      passing_type: "Constrained",
      horizontal_class: "0",
      note: "",
    },
    subsegments: [],
  };
}

export function newState(): FormState {
  return {
    facilityType: "two_lane_highway",
    segments: [],
    dirtyParams: new Set(),
    liveViolations: new Map(),
    lastResult: null,
    stale: false,
    history: null,
  };
}

function cloneSegments(segments: SegmentForm[]): SegmentForm[] {
  return segments.map((seg) => ({
    values: { ...seg.values },
    subsegments: seg.subsegments.map((sub) => ({ ...sub })),
  }));
}

function snapshot(state: FormState): Snapshot {
  return {
    segments: cloneSegments(state.segments),
    lastResult: state.lastResult,
    stale: state.stale,
  };
}

export function addSegment(state: FormState): FormState {
  return {
    ...state,
    segments: [...state.segments, defaultSegment()],
    stale: state.lastResult !== null ? true : state.stale,
    history: snapshot(state),
  };
}

export function removeSegment(state: FormState, index: number): FormState {
  return {
    ...state,
    segments: state.segments.filter((_, i) => i !== index),
    stale: state.lastResult !== null ? true : state.stale,
    history: snapshot(state),
  };
}

export function editField(
  state: FormState,
  index: number,
  field: SegmentField,
  raw: string,
  rules: RulesIndex,
): FormState {
  const segments = cloneSegments(state.segments);
  const segment = segments[index];
  if (!segment) return state;
  segment.values[field] = raw;
  const dirty = new Set(state.dirtyParams);
  dirty.add(`${index}:${field}`);
  const invalidates = state.lastResult !== null && rules.fieldFeedsResults(field);
  return {
    ...state,
    segments,
    dirtyParams: dirty,
    stale: state.stale || invalidates,
    history: snapshot(state),
  };
}

export function editSubsegment(
  state: FormState,
  index: number,
  subIndex: number,
  field: (typeof SUBSEGMENT_FIELDS)[number],
  raw: string,
): FormState {
  const segments = cloneSegments(state.segments);
  const sub = segments[index]?.subsegments[subIndex];
  if (!sub) return state;
  sub[field] = raw;
  const dirty = new Set(state.dirtyParams);
  dirty.add(`${index}:subsegments[${subIndex}].${field}`);
  // Subsegment radii gate validation but do not enter the speed model.
  return { ...state, segments, dirtyParams: dirty, history: snapshot(state) };
}

export function addSubsegment(state: FormState, index: number): FormState {
  const segments = cloneSegments(state.segments);
  const segment = segments[index];
  if (!segment) return state;
  segment.subsegments.push({
    length_mi: "0.2",
    radius_ft: "1200",
    superelevation_pct: "4.0",
  });
  return { ...state, segments, history: snapshot(state) };
}

/** One-step revert: restores segments, result, and staleness of the last edit. */
export function revert(state: FormState): FormState {
  if (!state.history) return state;
  return {
    ...state,
    segments: cloneSegments(state.history.segments),
    lastResult: state.history.lastResult,
    stale: state.history.stale,
    history: null,
  };
}

function parseNumber(raw: string): number | null {
  if (raw.trim() === "") return null;
  const value = Number(raw);
  return Number.isFinite(value) ? value : null;
}

/**
 * Flat parameter document for one segment, in the kernel's input-schema
 * binding names. Unfilled or unparseable fields are skipped (they surface
 * as field errors instead); the tightest subsegment radius stands in for
 * the segment's design radius.
 */
export function validationDoc(segment: SegmentForm): Record<string, unknown> {
  const doc: Record<string, unknown> = {};
  for (const field of [
    "lane_width_ft",
    "shoulder_width_ft",
    "grade_pct",
    "posted_speed_mph",
  ] as const) {
    const value = parseNumber(segment.values[field]);
    if (value !== null) doc[field] = value;
  }
  const klass = parseNumber(segment.values.horizontal_class);
  if (klass !== null) doc.horizontal_class = klass;
  if (segment.values.passing_type.trim() !== "") {
    doc.passing_type = segment.values.passing_type;
  }
  const radii = segment.subsegments
    .map((sub) => parseNumber(sub.radius_ft))
    .filter((r): r is number => r !== null);
  if (radii.length > 0) doc.radius_ft = Math.min(...radii);
  return doc;
}

export function applyLiveReports(
  state: FormState,
  perSegment: { index: number; violations: Violation[] }[],
): FormState {
  const live = new Map<string, Violation[]>();
  for (const { index, violations } of perSegment) {
    for (const violation of violations) {
      const key = `${index}:${violation.parameter}`;
      const seen = live.get(key) ?? [];
      seen.push(violation);
      live.set(key, seen);
    }
  }
  return { ...state, liveViolations: live };
}

export function blockingViolations(state: FormState): Violation[] {
  const out: Violation[] = [];
  for (const violations of state.liveViolations.values()) {
    out.push(...violations.filter((v) => v.severity === "error"));
  }
  return out;
}

/** The run action is available only for a non-empty, violation-free form. */
export function canRun(state: FormState): boolean {
  if (state.segments.length === 0) return false;
  if (blockingViolations(state).length > 0) return false;
  return toFacilityDoc(state).errors.length === 0;
}

export function applyResult(state: FormState, result: FacilityResultDoc): FormState {
  return {
    ...state,
    lastResult: result,
    stale: false,
    dirtyParams: new Set(),
  };
}

export function toFacilityDoc(state: FormState): {
  doc: FacilityDoc;
  errors: FieldError[];
} {
  const errors: FieldError[] = [];
  const segments: SegmentDoc[] = [];
  state.segments.forEach((segment, i) => {
    const doc: Partial<SegmentDoc> & Record<string, unknown> = {};
    for (const field of NUMERIC_FIELDS) {
      const raw = segment.values[field];
      const value = parseNumber(raw);
      if (value === null) {
        errors.push({
          path: `segments[${i}].${field}`,
          message: raw.trim() === "" ? "required" : `not a number: '${raw}'`,
        });
        continue;
      }
      doc[field] = value;
    }
    doc.passing_type = segment.values.passing_type;
    const klass = parseNumber(segment.values.horizontal_class);
    if (klass === null) {
      errors.push({
        path: `segments[${i}].horizontal_class`,
        message: "required",
      });
    } else {
      doc.horizontal_class = klass;
    }
    if (segment.subsegments.length > 0) {
      const subs: SubsegmentDoc[] = [];
      segment.subsegments.forEach((sub, j) => {
        const radius = parseNumber(sub.radius_ft);
        if (radius === null) {
          errors.push({
            path: `segments[${i}].subsegments[${j}].radius_ft`,
            message: "required",
          });
          return;
        }
        subs.push({
          length_mi: parseNumber(sub.length_mi) ?? 0,
          radius_ft: radius,
          superelevation_pct: parseNumber(sub.superelevation_pct) ?? 0,
        });
      });
      doc.subsegments = subs;
    }
    if (segment.values.note.trim() !== "") doc.note = segment.values.note;
    segments.push(doc as SegmentDoc);
  });
  return {
    doc: { facility_type: state.facilityType, segments },
    errors,
  };
}

export function exportJson(state: FormState): string {
  return JSON.stringify(toFacilityDoc(state).doc, null, 2);
}

const KNOWN_SEGMENT_KEYS = new Set<string>([
  ...REQUIRED_FIELDS,
  ...OPTIONAL_FIELDS,
  "subsegments",
  "note",
]);

export function importJson(text: string): { state: FormState } | { errors: FieldError[] } {
  let parsed: unknown;
  try {
    parsed = JSON.parse(text);
  } catch (err) {
    return { errors: [{ path: "$", message: `invalid JSON: ${err}` }] };
  }
  const errors: FieldError[] = [];
  if (typeof parsed !== "object" || parsed === null || Array.isArray(parsed)) {
    return { errors: [{ path: "$", message: "facility must be an object" }] };
  }
  const doc = parsed as Record<string, unknown>;
  for (const key of Object.keys(doc)) {
    if (key !== "facility_type" && key !== "segments") {
      errors.push({ path: key, message: "unknown key" });
    }
  }
  if (typeof doc.facility_type !== "string" || doc.facility_type === "") {
    errors.push({ path: "facility_type", message: "required string" });
  }
  if (!Array.isArray(doc.segments) || doc.segments.length === 0) {
    errors.push({ path: "segments", message: "non-empty array required" });
    return { errors };
  }
  const segments: SegmentForm[] = [];
  (doc.segments as unknown[]).forEach((entry, i) => {
    const path = `segments[${i}]`;
    if (typeof entry !== "object" || entry === null || Array.isArray(entry)) {
      errors.push({ path, message: "segment must be an object" });
      return;
    }
    const record = entry as Record<string, unknown>;
    for (const key of Object.keys(record)) {
      if (!KNOWN_SEGMENT_KEYS.has(key)) {
        errors.push({ path: `${path}.${key}`, message: "unknown key" });
      }
    }
    for (const field of REQUIRED_FIELDS) {
      if (!(field in record)) {
        errors.push({ path: `${path}.${field}`, message: "required" });
      }
    }
    const segment = defaultSegment();
    segment.values.note = "";
    for (const field of [...REQUIRED_FIELDS, ...OPTIONAL_FIELDS]) {
      if (!(field in record)) continue;
      const value = record[field];
      if (field === "passing_type") {
        if (typeof value !== "string") {
          errors.push({ path: `${path}.${field}`, message: "must be a string" });
          continue;
        }
        segment.values.passing_type = value;
      } else {
        if (typeof value !== "number" || !Number.isFinite(value)) {
          errors.push({ path: `${path}.${field}`, message: "must be a number" });
          continue;
        }
        segment.values[field] = String(value);
      }
    }
    if ("note" in record) {
      if (typeof record.note !== "string") {
        errors.push({ path: `${path}.note`, message: "must be a string" });
      } else {
        segment.values.note = record.note;
      }
    }
    if ("subsegments" in record) {
      if (!Array.isArray(record.subsegments)) {
        errors.push({ path: `${path}.subsegments`, message: "must be an array" });
      } else {
        (record.subsegments as unknown[]).forEach((subEntry, j) => {
          const subPath = `${path}.subsegments[${j}]`;
          if (typeof subEntry !== "object" || subEntry === null) {
            errors.push({ path: subPath, message: "must be an object" });
            return;
          }
          const sub = subEntry as Record<string, unknown>;
          for (const key of Object.keys(sub)) {
            if (!(SUBSEGMENT_FIELDS as readonly string[]).includes(key)) {
              errors.push({ path: `${subPath}.${key}`, message: "unknown key" });
            }
          }
          if (typeof sub.radius_ft !== "number") {
            errors.push({ path: `${subPath}.radius_ft`, message: "required number" });
            return;
          }
          segment.subsegments.push({
            length_mi: sub.length_mi !== undefined ? String(sub.length_mi) : "0",
            radius_ft: String(sub.radius_ft),
            superelevation_pct:
              sub.superelevation_pct !== undefined
                ? String(sub.superelevation_pct)
                : "0",
          });
        });
      }
    }
    segments.push(segment);
  });
  if (errors.length > 0) return { errors };
  const state = newState();
  state.facilityType = doc.facility_type as string;
  state.segments = segments;
  return { state };
}

// URL-fragment sharing for small facilities.

const FRAGMENT_PREFIX = "#facility=";
const FRAGMENT_LIMIT = 4000;

export function encodeFragment(state: FormState): string | null {
  const text = JSON.stringify(toFacilityDoc(state).doc);
  const fragment = FRAGMENT_PREFIX + encodeURIComponent(text);
  return fragment.length <= FRAGMENT_LIMIT ? fragment : null;
}

export function decodeFragment(fragment: string): FormState | null {
  if (!fragment.startsWith(FRAGMENT_PREFIX)) return null;
  const text = decodeURIComponent(fragment.slice(FRAGMENT_PREFIX.length));
  const outcome = importJson(text);
  return "state" in outcome ? outcome.state : null;
}
