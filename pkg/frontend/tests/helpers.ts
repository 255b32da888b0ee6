import { readFileSync, readdirSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { RulesDocument } from "../src/types.js";

const HERE = dirname(fileURLToPath(import.meta.url));
export const REPO_ROOT = join(HERE, "..", "..");

export function loadRulesDocument(): RulesDocument {
  return JSON.parse(
    readFileSync(join(REPO_ROOT, "rules", "two_lane_highway.json"), "utf-8"),
  );
}

export function loadRiverFalls(): string {
  return readFileSync(join(REPO_ROOT, "fixtures", "river_falls.json"), "utf-8");
}

/** The kernel wheel the WASM runtime installs; built by `pip wheel` at the root. */
export function kernelWheelBytes(): ArrayBuffer {
  const dist = join(REPO_ROOT, "dist");
  let wheelName: string | undefined;
  try {
    wheelName = readdirSync(dist).find(
      (name) => name.startsWith("twolane-") && name.endsWith(".whl"),
    );
  } catch {
    wheelName = undefined;
  }
  if (!wheelName) {
    throw new Error(
      "kernel wheel not found; run `pip wheel --no-build-isolation --no-deps " +
        "-w dist .` in the repository root first",
    );
  }
  const buffer = readFileSync(join(dist, wheelName));
  return buffer.buffer.slice(
    buffer.byteOffset,
    buffer.byteOffset + buffer.byteLength,
  ) as ArrayBuffer;
}

export function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}
