// Browser entry point: load the WASM kernel, build the app, hydrate from a
// share link when one is present.

import { CalculatorController } from "./controller.js";
import { addSegment, decodeFragment, newState } from "./formState.js";
import { KernelLoadError } from "./kernel.js";
import { PyodideKernel } from "./kernels/pyodide.js";
import { RulesIndex } from "./rulesIndex.js";
import { CalculatorApp } from "./ui.js";

const WHEEL_URL = "./kernel/twolane-0.1.0-py3-none-any.whl";

async function start(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app element");
  root.textContent = "Loading kernel...";
  let kernel: PyodideKernel;
  try {
    kernel = await PyodideKernel.load({ wheel: WHEEL_URL });
  } catch (err) {
    const banner = document.createElement("div");
    banner.className = "kernel-error";
    banner.textContent =
      err instanceof KernelLoadError
        ? `Kernel failed to load; inputs disabled. ${err.message}`
        : `Unexpected startup failure: ${err}`;
    root.replaceChildren(banner);
    return;
  }
  const rules = new RulesIndex(await kernel.rulesDocument());
  const controller = new CalculatorController(kernel, {
    onValidated: (state) => app.setState(state),
    onKernelError: (err) => console.error("kernel call failed", err),
  });
  const app = new CalculatorApp(root, controller, rules, kernel.name());
  const shared = decodeFragment(location.hash);
  app.setState(shared ?? addSegment(newState()));
  void controller.validateNow(app.state);
}

void start();
