// The kernel boundary. Every number the UI displays comes back through this
// interface as JSON; the page performs no analysis arithmetic of its own.

import type {
  AnalyzeOutcome,
  FacilityDoc,
  RulesDocument,
  ValidationReport,
} from "./types.js";

export interface KernelClient {
  /** Human-readable backend identifier (shown in the page footer). */
  name(): string;
  /** Flat parameter validation (the per-edit live check). */
  validateParams(doc: Record<string, unknown>): Promise<ValidationReport>;
  /** Validation-gated facility analysis. */
  analyze(facility: FacilityDoc): Promise<AnalyzeOutcome>;
  /** The loaded rules document (field metadata, affects edges, citations). */
  rulesDocument(): Promise<RulesDocument>;
}

export class KernelLoadError extends Error {}
