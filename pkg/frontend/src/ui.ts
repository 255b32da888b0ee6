// DOM rendering and event wiring. All displayed numbers are kernel output
// rendered verbatim (two decimals for readability, values untouched).

import type { CalculatorController } from "./controller.js";
import type { RulesIndex } from "./rulesIndex.js";
import {
  addSegment,
  addSubsegment,
  blockingViolations,
  canRun,
  editField,
  editSubsegment,
  encodeFragment,
  exportJson,
  importJson,
  newState,
  removeSegment,
  revert,
  type FormState,
  type SegmentField,
} from "./formState.js";
import type { RejectionPayload, Violation } from "./types.js";

const FIELD_LABELS: [SegmentField, string][] = [
  ["length_mi", "Length (mi)"],
  ["lane_width_ft", "Lane width (ft)"],
  ["shoulder_width_ft", "Shoulder width (ft)"],
  ["posted_speed_mph", "Posted speed (mph)"],
  ["demand_vph", "Demand (veh/h)"],
  ["opposing_demand_vph", "Opposing demand (veh/h)"],
  ["phf", "Peak-hour factor"],
  ["heavy_pct", "Heavy vehicles (%)"],
  ["grade_pct", "Grade (%)"],
  ["passing_type", "Passing type"],
  ["horizontal_class", "Horizontal class"],
  ["note", "Note"],
];

// Form field -> canonical parameter key, for attaching inline violations.
const FIELD_TO_PARAM: Partial<Record<SegmentField, string>> = {
  lane_width_ft: "lane_width",
  shoulder_width_ft: "shoulder_width",
  posted_speed_mph: "design_speed",
  grade_pct: "grade",
  passing_type: "passing_type",
  horizontal_class: "horizontal_class",
};

export class CalculatorApp {
  state: FormState = newState();

  constructor(
    private root: HTMLElement,
    private controller: CalculatorController,
    private rules: RulesIndex,
    private kernelName: string,
  ) {}

  setState(state: FormState): void {
    this.state = state;
    this.render();
  }

  onEdit(index: number, field: SegmentField, raw: string): void {
    this.setState(editField(this.state, index, field, raw, this.rules));
    this.controller.noteEdit(this.state);
  }

  render(): void {
    this.root.replaceChildren();
    this.root.appendChild(this.renderToolbar());
    const segments = document.createElement("div");
    segments.className = "segments";
    this.state.segments.forEach((_, i) => segments.appendChild(this.renderSegment(i)));
    this.root.appendChild(segments);
    this.root.appendChild(this.renderRunRow());
    if (this.state.stale) this.root.appendChild(this.renderStaleBanner());
    if (this.state.lastResult) this.root.appendChild(this.renderResults());
    const footer = document.createElement("p");
    footer.className = "kernel-info";
    footer.textContent = `kernel: ${this.kernelName}`;
    this.root.appendChild(footer);
  }

  private renderToolbar(): HTMLElement {
    const bar = document.createElement("div");
    bar.className = "toolbar";
    const add = button("Add segment", () => {
      this.setState(addSegment(this.state));
      this.controller.noteEdit(this.state);
    });
    add.dataset.action = "add-segment";
    bar.appendChild(add);
    const revertBtn = button("Revert last edit", () => {
      this.setState(revert(this.state));
      this.controller.noteEdit(this.state);
    });
    revertBtn.dataset.action = "revert";
    revertBtn.disabled = this.state.history === null;
    bar.appendChild(revertBtn);
    bar.appendChild(
      button("Export JSON", () => {
        const blob = new Blob([exportJson(this.state)], { type: "application/json" });
        const link = document.createElement("a");
        link.href = URL.createObjectURL(blob);
        link.download = "facility.json";
        link.click();
        URL.revokeObjectURL(link.href);
      }),
    );
    const importInput = document.createElement("input");
    importInput.type = "file";
    importInput.accept = "application/json";
    importInput.addEventListener("change", async () => {
      const file = importInput.files?.[0];
      if (!file) return;
      this.importText(await file.text());
    });
    bar.appendChild(importInput);
    const share = button("Copy share link", () => {
      const fragment = encodeFragment(this.state);
      if (fragment) {
        const url = location.origin + location.pathname + fragment;
        void navigator.clipboard.writeText(url);
      }
    });
    bar.appendChild(share);
    return bar;
  }

  importText(text: string): void {
    const outcome = importJson(text);
    if ("errors" in outcome) {
      const box = this.root.querySelector(".import-errors") ?? document.createElement("ul");
      box.className = "import-errors";
      box.replaceChildren(
        ...outcome.errors.map((e) => {
          const li = document.createElement("li");
          li.textContent = `${e.path}: ${e.message}`;
          return li;
        }),
      );
      this.root.prepend(box);
      return;
    }
    this.setState(outcome.state);
    void this.controller.validateNow(this.state);
  }

  private renderSegment(index: number): HTMLElement {
    const segment = this.state.segments[index]!;
    const card = document.createElement("fieldset");
    card.className = "segment";
    card.dataset.segment = String(index);
    const legend = document.createElement("legend");
    legend.textContent = `Segment ${index + 1}`;
    card.appendChild(legend);
    for (const [field, label] of FIELD_LABELS) {
      const row = document.createElement("label");
      row.className = "field";
      const caption = document.createElement("span");
      caption.textContent = label;
      row.appendChild(caption);
      const input =
        field === "passing_type"
          ? this.passingSelect(segment.values[field])
          : textInput(segment.values[field]);
      input.dataset.field = field;
      input.addEventListener("input", () =>
        this.onEdit(index, field, (input as HTMLInputElement).value),
      );
      row.appendChild(input);
      const violations = this.violationsFor(index, field);
      if (violations.length > 0) {
        const msg = document.createElement("span");
        msg.className = "violation";
        msg.dataset.violationFor = `${index}:${field}`;
        msg.textContent = violations
          .map((v) => `${v.rule_id}: ${v.constraint} [${v.citation}]`)
          .join(" ");
        row.appendChild(msg);
      }
      card.appendChild(row);
    }
    card.appendChild(this.renderSubsegments(index));
    const remove = button("Remove segment", () => {
      this.setState(removeSegment(this.state, index));
      this.controller.noteEdit(this.state);
    });
    remove.dataset.action = `remove-${index}`;
    card.appendChild(remove);
    return card;
  }

  private renderSubsegments(index: number): HTMLElement {
    const segment = this.state.segments[index]!;
    const wrap = document.createElement("div");
    wrap.className = "subsegments";
    segment.subsegments.forEach((sub, j) => {
      const row = document.createElement("div");
      row.className = "subsegment";
      (["length_mi", "radius_ft", "superelevation_pct"] as const).forEach((field) => {
        const input = textInput(sub[field]);
        input.dataset.field = `subsegments[${j}].${field}`;
        input.addEventListener("input", () => {
          this.setState(editSubsegment(this.state, index, j, field, input.value));
          this.controller.noteEdit(this.state);
        });
        row.appendChild(input);
      });
      wrap.appendChild(row);
    });
    const radiusViolations = this.state.liveViolations.get(`${index}:design_radius`);
    if (radiusViolations && radiusViolations.length > 0) {
      const msg = document.createElement("span");
      msg.className = "violation";
      msg.dataset.violationFor = `${index}:design_radius`;
      msg.textContent = radiusViolations
        .map((v) => `${v.rule_id}: ${v.constraint} [${v.citation}]`)
        .join(" ");
      wrap.appendChild(msg);
    }
    wrap.appendChild(
      button("Add curve", () => {
        this.setState(addSubsegment(this.state, index));
        this.controller.noteEdit(this.state);
      }),
    );
    return wrap;
  }

  private violationsFor(index: number, field: SegmentField): Violation[] {
    const param = FIELD_TO_PARAM[field];
    if (!param) return [];
    return this.state.liveViolations.get(`${index}:${param}`) ?? [];
  }

  private renderRunRow(): HTMLElement {
    const row = document.createElement("div");
    row.className = "run-row";
    const run = button("Run analysis", async () => {
      const outcome = await this.controller.runAnalysis(this.state);
      if (!outcome) return;
      if (!outcome.outcome.ok) {
        this.renderRejection(outcome.outcome.rejection);
        return;
      }
      this.setState(outcome.state);
    });
    run.dataset.action = "run";
    run.disabled = !canRun(this.state);
    row.appendChild(run);
    const blocking = blockingViolations(this.state);
    if (blocking.length > 0) {
      const note = document.createElement("span");
      note.className = "run-blocked";
      note.textContent = `${blocking.length} violation(s) must be fixed before running`;
      row.appendChild(note);
    }
    return row;
  }

  private renderRejection(rejection: RejectionPayload): void {
    const box = document.createElement("pre");
    box.className = "rejection";
    box.textContent = JSON.stringify(rejection, null, 2);
    this.root.appendChild(box);
  }

  private renderStaleBanner(): HTMLElement {
    const banner = document.createElement("div");
    banner.className = "stale-banner";
    banner.dataset.banner = "stale";
    banner.textContent = "Inputs changed since the last run; results are stale.";
    return banner;
  }

  private renderResults(): HTMLElement {
    const result = this.state.lastResult!;
    const table = document.createElement("table");
    table.className = "results";
    table.createCaption().textContent = "Analysis results";
    const head = table.createTHead().insertRow();
    for (const title of ["Segment", "AS (mph)", "PF (%)", "FD (fol/mi)", "LOS"]) {
      const cell = document.createElement("th");
      cell.textContent = title;
      head.appendChild(cell);
    }
    const body = table.createTBody();
    result.segments.forEach((seg, i) => {
      const row = body.insertRow();
      row.insertCell().textContent = String(i + 1);
      row.insertCell().textContent = seg.as_mph.toFixed(2);
      row.insertCell().textContent = seg.pf_pct.toFixed(2);
      row.insertCell().textContent = seg.fd_fol_per_mi.toFixed(2);
      row.insertCell().textContent = seg.los;
    });
    const overall = body.insertRow();
    overall.className = "overall";
    overall.insertCell().textContent = "Overall";
    overall.insertCell();
    overall.insertCell();
    overall.insertCell().textContent = result.overall_fd.toFixed(2);
    overall.insertCell().textContent = result.overall_los;
    return table;
  }

  private passingSelect(current: string): HTMLSelectElement {
    const select = document.createElement("select");
    for (const token of ["Constrained", "Zone", "Lane"]) {
      const option = document.createElement("option");
      option.value = token;
      option.textContent = token;
      option.selected = token === current;
      select.appendChild(option);
    }
    if (!["Constrained", "Zone", "Lane"].includes(current)) {
      const option = document.createElement("option");
      option.value = current;
      option.textContent = current;
      option.selected = true;
      select.appendChild(option);
    }
    return select;
  }
}

function textInput(value: string): HTMLInputElement {
  const input = document.createElement("input");
  input.type = "text";
  input.value = value;
  return input;
}

function button(label: string, onClick: () => void): HTMLButtonElement {
  const btn = document.createElement("button");
  btn.type = "button";
  btn.textContent = label;
  btn.addEventListener("click", onClick);
  return btn;
}
