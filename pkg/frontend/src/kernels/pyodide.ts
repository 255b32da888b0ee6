// In-browser kernel: the Python package runs inside a WebAssembly Python
// runtime, so the page executes the same kernel code as the command line.
// Only JSON strings cross the boundary.

import type { KernelClient } from "../kernel.js";
import { KernelLoadError } from "../kernel.js";
import type {
  AnalyzeOutcome,
  FacilityDoc,
  RulesDocument,
  ValidationReport,
} from "../types.js";

const BRIDGE = `
import json
import twolane
from twolane.analysis import CoefficientSet, analyze_facility, facility_from_dict
from twolane.cli import _load_default_rules_bytes
from twolane.graph import load_rules
from twolane.validator import RelationalBindings, ValidationRejected, validate

_GRAPH = load_rules(_load_default_rules_bytes())
_BINDINGS = RelationalBindings()
_COEFFS = CoefficientSet()


def kernel_call(op, payload_json):
    payload = json.loads(payload_json)
    if op == "validate":
        report = validate(_GRAPH, payload, _BINDINGS)
        return json.dumps(report.to_dict(include_timing=False))
    if op == "analyze":
        facility = facility_from_dict(payload)
        try:
            result = analyze_facility(facility, _COEFFS, _GRAPH, _BINDINGS)
        except ValidationRejected as exc:
            return json.dumps({"ok": False, "rejection": exc.payload()})
        return json.dumps({"ok": True, "result": result.to_dict()})
    if op == "rules":
        return json.dumps(_GRAPH.to_document())
    raise ValueError(f"unknown kernel op {op!r}")

kernel_call
`;

export interface PyodideKernelOptions {
  /** Wheel bytes (Node tests) or a URL to fetch (browser). */
  wheel: ArrayBuffer | string;
  /** Passed through to loadPyodide; defaults to the bundled distribution. */
  indexURL?: string;
}

type PyodideModule = {
  loadPyodide(opts?: { indexURL?: string }): Promise<PyodideRuntime>;
};

type PyodideRuntime = {
  unpackArchive(buffer: ArrayBuffer, format: string): void;
  runPython(code: string): unknown;
};

export class PyodideKernel implements KernelClient {
  private call: (op: string, payload: string) => string;

  private constructor(call: (op: string, payload: string) => string) {
    this.call = call;
  }

  static async load(options: PyodideKernelOptions): Promise<PyodideKernel> {
    let runtime: PyodideRuntime;
    try {
      const mod = (await import("pyodide")) as unknown as PyodideModule;
      runtime = await mod.loadPyodide(
        options.indexURL ? { indexURL: options.indexURL } : undefined,
      );
    } catch (err) {
      throw new KernelLoadError(`WebAssembly runtime failed to load: ${err}`);
    }
    let wheel: ArrayBuffer;
    if (typeof options.wheel === "string") {
      let response: Response;
      try {
        response = await fetch(options.wheel);
      } catch (err) {
        throw new KernelLoadError(`cannot fetch kernel wheel: ${err}`);
      }
      if (!response.ok) {
        throw new KernelLoadError(`cannot fetch kernel wheel: ${response.status}`);
      }
      wheel = await response.arrayBuffer();
    } else {
      wheel = options.wheel;
    }
    try {
      runtime.unpackArchive(wheel, "wheel");
      const callable = runtime.runPython(BRIDGE) as unknown as (
        op: string,
        payload: string,
      ) => string;
      return new PyodideKernel(callable);
    } catch (err) {
      throw new KernelLoadError(`kernel bridge failed to initialize: ${err}`);
    }
  }

  name(): string {
    return "wasm-python";
  }

  async validateParams(doc: Record<string, unknown>): Promise<ValidationReport> {
    return JSON.parse(this.call("validate", JSON.stringify(doc)));
  }

  async analyze(facility: FacilityDoc): Promise<AnalyzeOutcome> {
    return JSON.parse(this.call("analyze", JSON.stringify(facility)));
  }

  async rulesDocument(): Promise<RulesDocument> {
    return JSON.parse(this.call("rules", "{}"));
  }
}
