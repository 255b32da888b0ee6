// Node-only kernel that shells out to the installed `twolane` CLI. Used by
// the test suite as the reference interface for cross-interface consistency
// checks; never shipped to the browser.

import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import type { KernelClient } from "../kernel.js";
import type {
  AnalyzeOutcome,
  FacilityDoc,
  RulesDocument,
  ValidationReport,
} from "../types.js";

export class CliKernel implements KernelClient {
  constructor(
    private executable: string = "twolane",
    private rulesPath?: string,
  ) {}

  name(): string {
    return "cli-subprocess";
  }

  private run(args: string[], inputFile?: { name: string; payload: unknown }) {
    const dir = mkdtempSync(join(tmpdir(), "twolane-"));
    try {
      const argv = [...args];
      if (inputFile) {
        const path = join(dir, inputFile.name);
        writeFileSync(path, JSON.stringify(inputFile.payload));
        argv.push(path);
      }
      const proc = spawnSync(this.executable, argv, { encoding: "utf-8" });
      if (proc.error) throw proc.error;
      return { status: proc.status ?? -1, stdout: proc.stdout, stderr: proc.stderr };
    } finally {
      rmSync(dir, { recursive: true, force: true });
    }
  }

  async validateParams(doc: Record<string, unknown>): Promise<ValidationReport> {
    const { status, stdout } = this.run(
      ["validate", "--output-format", "json"],
      { name: "params.json", payload: doc },
    );
    if (status !== 0 && status !== 2) {
      throw new Error(`validate subcommand failed with exit ${status}`);
    }
    return JSON.parse(stdout);
  }

  async analyze(facility: FacilityDoc): Promise<AnalyzeOutcome> {
    const { status, stdout, stderr } = this.run(
      ["analyze", "--output-format", "json"],
      { name: "facility.json", payload: facility },
    );
    if (status === 0) return { ok: true, result: JSON.parse(stdout) };
    if (status === 2) return { ok: false, rejection: JSON.parse(stderr) };
    throw new Error(`analyze subcommand failed with exit ${status}: ${stderr}`);
  }

  async rulesDocument(): Promise<RulesDocument> {
    if (!this.rulesPath) {
      throw new Error("CliKernel needs a rules document path for rulesDocument()");
    }
    return JSON.parse(readFileSync(this.rulesPath, "utf-8"));
  }
}
