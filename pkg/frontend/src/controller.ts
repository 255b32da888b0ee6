// Orchestration between the form and the kernel: debounced live validation
// (at most one kernel call in flight, newest edit wins) and the gated run
// action. Runs no analysis arithmetic; everything comes back as kernel JSON.

import type { KernelClient } from "./kernel.js";
import type { FormState } from "./formState.js";
import {
  applyLiveReports,
  applyResult,
  canRun,
  toFacilityDoc,
  validationDoc,
} from "./formState.js";
import type { AnalyzeOutcome, Violation } from "./types.js";

export const DEBOUNCE_MS = 150;

export interface ControllerHooks {
  /** Receives the updated state after each completed validation sweep. */
  onValidated(state: FormState): void;
  onKernelError(err: unknown): void;
}

export class CalculatorController {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inFlight = false;
  private queued: FormState | null = null;

  constructor(
    private kernel: KernelClient,
    private hooks: ControllerHooks,
    private debounceMs: number = DEBOUNCE_MS,
  ) {}

  /** Debounced entry point; call on every form edit. */
  noteEdit(state: FormState): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.startValidation(state);
    }, this.debounceMs);
  }

  /** Immediate validation (initial load, post-import). */
  validateNow(state: FormState): Promise<void> {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    return this.startValidation(state);
  }

  private async startValidation(state: FormState): Promise<void> {
    if (this.inFlight) {
      this.queued = state;
      return;
    }
    this.inFlight = true;
    try {
      const sweeps: { index: number; violations: Violation[] }[] = [];
      for (let i = 0; i < state.segments.length; i++) {
        const doc = validationDoc(state.segments[i]!);
        const report = await this.kernel.validateParams(doc);
        sweeps.push({ index: i, violations: report.violations });
      }
      this.hooks.onValidated(applyLiveReports(state, sweeps));
    } catch (err) {
      this.hooks.onKernelError(err);
    } finally {
      this.inFlight = false;
      if (this.queued !== null) {
        const next = this.queued;
        this.queued = null;
        void this.startValidation(next);
      }
    }
  }

  /**
   * Run the analysis. Unreachable while error violations are displayed; a
   * kernel-side rejection is still surfaced (defense in depth).
   */
  async runAnalysis(
    state: FormState,
  ): Promise<{ state: FormState; outcome: AnalyzeOutcome } | null> {
    if (!canRun(state)) return null;
    const { doc } = toFacilityDoc(state);
    const outcome = await this.kernel.analyze(doc);
    if (outcome.ok) {
      return { state: applyResult(state, outcome.result), outcome };
    }
    return { state, outcome };
  }
}
