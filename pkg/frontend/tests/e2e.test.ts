// @vitest-environment happy-dom
//
// Scripted sessions against the real engine service: the whole app runs in
// an emulated DOM, every interaction goes through rendered elements, and
// the Python service is spawned as a subprocess for the duration.
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { spawn, type ChildProcess } from "node:child_process";
import { createServer } from "node:net";

import { createApp, type App } from "../src/main.js";

let service: ChildProcess;
let baseUrl: string;

function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const probe = createServer();
    probe.once("error", reject);
    probe.listen(0, "127.0.0.1", () => {
      const address = probe.address();
      if (address === null || typeof address === "string") {
        reject(new Error("no port"));
        return;
      }
      probe.close(() => resolve(address.port));
    });
  });
}

async function waitForService(url: string): Promise<void> {
  const deadline = Date.now() + 30_000;
  for (;;) {
    try {
      const response = await fetch(`${url}/api/variants`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) throw new Error("service did not start");
    if (service.exitCode !== null) {
      throw new Error(`service exited with ${service.exitCode}`);
    }
    await new Promise((r) => setTimeout(r, 200));
  }
}

async function waitFor(check: () => boolean, what: string): Promise<void> {
  const deadline = Date.now() + 15_000;
  while (!check()) {
    if (Date.now() > deadline) throw new Error(`timed out waiting for ${what}`);
    await new Promise((r) => setTimeout(r, 25));
  }
}

beforeAll(async () => {
  const port = await freePort();
  baseUrl = `http://127.0.0.1:${port}`;
  service = spawn("python3", ["-m", "ryuo_nim.cli", "serve"], {
    env: { ...process.env, RYUO_PORT: String(port) },
    stdio: ["ignore", "ignore", "pipe"],
  });
  await waitForService(baseUrl);
}, 60_000);

afterAll(() => {
  service?.kill();
});

function freshApp(): App {
  document.body.textContent = "";
  return createApp(document, { baseUrl, devChecks: true });
}

function cell(x: number, y: number): HTMLElement {
  const found = document.querySelector(`#board [data-x="${x}"][data-y="${y}"]`);
  if (!found) throw new Error(`no cell (${x}, ${y})`);
  return found as HTMLElement;
}

function setForm(app: App, variant: string, p: string, start: string): void {
  app.element<HTMLSelectElement>("variant").value = variant;
  app.element<HTMLInputElement>("param-p").value = p;
  app.element<HTMLInputElement>("start-coords").value = start;
}

describe("scripted sessions against the live service", () => {
  it("engine moving second wins the two-heap game from (2, 2)", async () => {
    const app = freshApp();
    setForm(app, "ryuo", "3", "2, 2");
    app.element<HTMLButtonElement>("new-game").click();
    await waitFor(() => document.querySelectorAll("#board .cell").length > 0,
      "board render");

    // (2, 2) is a winnable position, but the scripted human blunders into
    // the diagonal; the engine answers by taking everything.
    cell(1, 1).click();
    await waitFor(() => app.controller.current().finished, "game end");

    const state = app.controller.current();
    expect(state.winner).toBe("engine");
    expect(state.current).toEqual({ coords: [0, 0] });
    expect(state.history.map((h) => h.coords)).toEqual([[2, 2], [1, 1], [0, 0]]);
    expect(app.element<HTMLElement>("status").textContent).toBe("engine wins");
  });

  it("ignores clicks on cells that are not legal targets", async () => {
    const app = freshApp();
    setForm(app, "ryuo", "3", "2, 2");
    app.element<HTMLButtonElement>("new-game").click();
    await waitFor(() => document.querySelectorAll("#board .cell").length > 0,
      "board render");

    cell(0, 1).click();  // diagonal reach is capped: not an option of (2, 2)
    await new Promise((r) => setTimeout(r, 300));
    const state = app.controller.current();
    expect(state.current).toEqual({ coords: [2, 2] });
    expect(state.history).toHaveLength(1);
    expect(state.finished).toBe(false);
    expect(document.querySelectorAll("#history li")).toHaveLength(1);
  });

  it("engine moving second wins the pass variant from (1, 1, pass)", async () => {
    const app = freshApp();
    setForm(app, "pass-ryuo", "3", "1, 1");
    app.element<HTMLInputElement>("start-pass").checked = true;
    app.element<HTMLButtonElement>("new-game").click();
    await waitFor(() => document.querySelectorAll("#board .cell").length > 0,
      "board render");

    const passButton =
      document.querySelector(".pass-button") as HTMLButtonElement;
    expect(passButton.disabled).toBe(false);  // pass is on offer

    cell(0, 1).click();  // losing token move; engine answers (0, 0, pass)
    await waitFor(() => app.controller.current().finished, "game end");

    const state = app.controller.current();
    expect(state.winner).toBe("engine");
    expect(state.current).toEqual({ coords: [0, 0], pass: true });
    expect(app.element<HTMLElement>("status").textContent).toBe("engine wins");
  });

  it("burns the pass through the pass button", async () => {
    const app = freshApp();
    setForm(app, "pass-ryuo", "3", "3, 3");
    app.element<HTMLInputElement>("start-pass").checked = true;
    app.element<HTMLButtonElement>("new-game").click();
    await waitFor(() => document.querySelectorAll("#board .cell").length > 0,
      "board render");

    (document.querySelector(".pass-button") as HTMLButtonElement).click();
    await waitFor(() => app.controller.current().history.length >= 3,
      "engine reply");
    const state = app.controller.current();
    expect(state.history[1]).toEqual({ coords: [3, 3], pass: false });
    expect(state.current.pass).toBe(false);
  });

  it("heatmap zero cells agree with P-outcomes (dev cross-check)", async () => {
    const app = freshApp();
    setForm(app, "ryuo", "3", "6, 5");
    app.element<HTMLButtonElement>("new-game").click();
    await waitFor(() => document.querySelectorAll("#board .cell").length > 0,
      "board render");

    // devChecks makes this throw if any sampled zero cell is not P
    await app.setHeatmap("grundy");
    await waitFor(
      () => document.querySelectorAll("#board .cell.p-cell").length > 0,
      "heatmap paint");
    const zeros = document.querySelectorAll("#board .cell.p-cell");
    for (const el of Array.from(zeros)) {
      expect(el.textContent === "0" || el.textContent === "●").toBe(true);
    }

    await app.setHeatmap("outcome");
    const pCells = document.querySelectorAll("#board .cell.p-cell");
    expect(pCells.length).toBe(zeros.length);
  });
});
