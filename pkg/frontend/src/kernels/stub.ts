// Deterministic fake kernel for tests. Returns whatever it was configured
// with; the no-client-math tests assert its sentinel values surface in the
// UI verbatim.

import type { KernelClient } from "../kernel.js";
import type {
  AnalyzeOutcome,
  FacilityDoc,
  RulesDocument,
  ValidationReport,
} from "../types.js";

const PASS_REPORT: ValidationReport = {
  status: "pass",
  violations: [],
  unknown_keys: [],
  checks_performed: 0,
};

export class StubKernel implements KernelClient {
  validateCalls: Record<string, unknown>[] = [];
  analyzeCalls: FacilityDoc[] = [];
  nextReport: ValidationReport = PASS_REPORT;
  nextOutcome: AnalyzeOutcome | null = null;
  rules: RulesDocument;
  /** Optional gate so tests can hold responses open. */
  private pending: (() => void)[] = [];
  holdResponses = false;

  constructor(rules: RulesDocument) {
    this.rules = rules;
  }

  name(): string {
    return "stub";
  }

  release(): void {
    const waiting = this.pending;
    this.pending = [];
    for (const resolve of waiting) resolve();
  }

  private async gate(): Promise<void> {
    if (!this.holdResponses) return;
    await new Promise<void>((resolve) => this.pending.push(resolve));
  }

  async validateParams(doc: Record<string, unknown>): Promise<ValidationReport> {
    this.validateCalls.push(doc);
    await this.gate();
    return this.nextReport;
  }

  async analyze(facility: FacilityDoc): Promise<AnalyzeOutcome> {
    this.analyzeCalls.push(facility);
    await this.gate();
    if (this.nextOutcome === null) {
      throw new Error("StubKernel.analyze called without a configured outcome");
    }
    return this.nextOutcome;
  }

  async rulesDocument(): Promise<RulesDocument> {
    return this.rules;
  }
}
