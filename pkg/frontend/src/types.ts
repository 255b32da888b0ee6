// JSON shapes shared with the kernel. These mirror the kernel's documented
// payload schemas exactly; nothing else crosses the boundary.

export interface SubsegmentDoc {
  length_mi: number;
  radius_ft: number;
  superelevation_pct?: number;
}

export interface SegmentDoc {
  length_mi: number;
  lane_width_ft: number;
  shoulder_width_ft: number;
  posted_speed_mph: number;
  demand_vph: number;
  phf: number;
  passing_type: string;
  horizontal_class: number;
  opposing_demand_vph?: number;
  heavy_pct?: number;
  grade_pct?: number;
  subsegments?: SubsegmentDoc[];
  note?: string;
}

export interface FacilityDoc {
  facility_type: string;
  segments: SegmentDoc[];
}

export interface Violation {
  rule_id: string;
  parameter: string;
  observed: unknown;
  constraint: string;
  severity: "error" | "warning";
  citation: string;
}

export interface ValidationReport {
  status: "pass" | "reject";
  violations: Violation[];
  unknown_keys: string[];
  checks_performed: number;
  elapsed_us?: number;
}

export interface SegmentResultDoc {
  as_mph: number;
  pf_pct: number;
  fd_fol_per_mi: number;
  los: string;
  flow_rate_pch: number;
}

export interface FacilityResultDoc {
  segments: SegmentResultDoc[];
  overall_fd: number;
  overall_los: string;
}

export interface RejectionPayload {
  status: 400;
  errors: Violation[];
  unknown_keys: string[];
}

export type AnalyzeOutcome =
  | { ok: true; result: FacilityResultDoc }
  | { ok: false; rejection: RejectionPayload };

export interface RuleEntry {
  id: string;
  rule_type: string;
  severity: string;
  validates: string;
  predicate: Record<string, unknown>;
  requires: string[];
  cited_in: string;
  message_template: string;
}

export interface ParameterEntry {
  id: string;
  key: string;
  kind: "continuous" | "categorical";
  unit: string;
  binding: string | null;
  affects: string[];
  domain?: (string | number)[];
}

export interface RulesDocument {
  version: string;
  sources: { id: string; doc: string; edition: string; ref: string }[];
  conditions: { id: string; match: unknown[] }[];
  parameters: ParameterEntry[];
  rules: RuleEntry[];
}
