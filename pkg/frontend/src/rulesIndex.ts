// Index over the rules document: parameter metadata, schema-binding lookup,
// and the transitive closure of the AFFECTS edges. The closure drives the
// stale-results banner: an edit can only invalidate results if the edited
// parameter reaches a downstream quantity.

import type { ParameterEntry, RulesDocument } from "./types.js";

export class RulesIndex {
  private byKey = new Map<string, ParameterEntry>();
  private byBinding = new Map<string, ParameterEntry>();

  constructor(doc: RulesDocument) {
    for (const param of doc.parameters) {
      this.byKey.set(param.key, param);
      if (param.binding) this.byBinding.set(param.binding, param);
    }
  }

  parameterForField(field: string): ParameterEntry | undefined {
    return this.byBinding.get(field) ?? this.byKey.get(field);
  }

  parameter(key: string): ParameterEntry | undefined {
    return this.byKey.get(key);
  }

  /** Transitive AFFECTS closure, excluding the start key; {} for unknown keys. */
  affectsClosure(key: string): Set<string> {
    const start = this.byKey.get(key);
    const closure = new Set<string>();
    if (!start) return closure;
    const stack = [...start.affects];
    while (stack.length > 0) {
      const current = stack.pop()!;
      if (closure.has(current)) continue;
      closure.add(current);
      const node = this.byKey.get(current);
      if (node) stack.push(...node.affects);
    }
    closure.delete(key);
    return closure;
  }

  /** True when editing this form field can change analysis results. */
  fieldFeedsResults(field: string): boolean {
    const param = this.parameterForField(field);
    if (!param) return false;
    return this.affectsClosure(param.key).size > 0;
  }
}
