// Scripted browser sessions against the real game service: the UI is
// mounted in jsdom and driven by synthetic clicks; the Python backend
// runs as a child process.

import { spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, beforeEach, describe, expect, it } from "vitest";

import { mount, type App } from "../src/app.js";
import { VIEW, worldToScreen } from "../src/board.js";

const PORT = 8731;
const BASE = `http://127.0.0.1:${PORT}`;

let backend: ChildProcess;
let dataDir: string;

async function waitForBackend(): Promise<void> {
  for (let i = 0; i < 120; i++) {
    try {
      const r = await fetch(`${BASE}/games/none`);
      if (r.status === 404) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 400));
  }
  throw new Error("backend did not start");
}

beforeAll(async () => {
  dataDir = mkdtempSync(join(tmpdir(), "esgame-ui-"));
  backend = spawn(
    "python3",
    ["-m", "esgame.cli", "serve", "--port", String(PORT), "--data", dataDir],
    { cwd: "..", stdio: "ignore" },
  );
  await waitForBackend();
});

afterAll(() => {
  backend?.kill();
  rmSync(dataDir, { recursive: true, force: true });
});

function fixBoundingRect(app: App): void {
  // jsdom performs no layout; pin the svg rect so client coordinates
  // map 1:1 onto the viewBox
  Object.defineProperty(app.board.svg, "getBoundingClientRect", {
    value: () => ({
      left: 0,
      top: 0,
      width: VIEW,
      height: VIEW,
      right: VIEW,
      bottom: VIEW,
      x: 0,
      y: 0,
      toJSON: () => ({}),
    }),
  });
}

async function clickAt(app: App, px: number, py: number): Promise<void> {
  const event = new MouseEvent("click", { clientX: px, clientY: py });
  app.board.svg.dispatchEvent(event);
  // onClick runs async; wait for the in-flight move to settle
  await new Promise((resolve) => setTimeout(resolve, 0));
  for (let i = 0; i < 400; i++) {
    if ((app as unknown as { busy: boolean })["busy"] === false) {
      break;
    }
    await new Promise((resolve) => setTimeout(resolve, 25));
  }
}

function mountApp(): App {
  document.body.innerHTML = '<div id="root"></div>';
  const app = mount(document.getElementById("root") as HTMLElement, BASE);
  fixBoundingRect(app);
  return app;
}

describe("play-ui against the live service", () => {
  beforeEach(() => {
    document.body.innerHTML = "";
  });

  it("five human moves vs the engine reach the step-9 loss banner", async () => {
    const app = mountApp();
    await app.newGame();
    // a safe line for Player 1, precomputed against the deterministic
    // engine (empty variant): survives steps 1..8, forced loss at 9
    const clicks: Array<[number, number]> = [
      [752, 577],
      [713, 509],
      [290, 128],
      [497, 824],
      [929, 543],
    ];
    for (const [px, py] of clicks) {
      await clickAt(app, px, py);
      expect(document.querySelector("#warning")!.textContent).toBe("");
    }
    const banner = document.querySelector("#banner")!.textContent!;
    expect(banner).toContain("you lose");
    expect(banner).toContain("step 9");
    expect(document.querySelectorAll(".move-point").length).toBe(9);
    const witness = document.querySelectorAll("polygon.witness");
    expect(witness.length).toBe(1);
    expect(witness[0].getAttribute("points")!.split(" ").length).toBe(5);
  }, 120_000);

  it("rejects a collinear click with a visible warning", async () => {
    const app = mountApp();
    await app.newGame();
    // first human point at world (2, 3); the engine replies at (3, 3)
    const [px1, py1] = worldToScreen(2, 3);
    await clickAt(app, px1, py1);
    expect(document.querySelectorAll(".move-point").length).toBe(2);
    // world (4, 3) is collinear with both placed points
    const [px2, py2] = worldToScreen(4, 3);
    await clickAt(app, px2, py2);
    const warning = document.querySelector("#warning")!.textContent!;
    expect(warning).toContain("general position");
    expect(document.querySelectorAll(".move-point").length).toBe(2);
  }, 120_000);

  it("overlay at configuration 4 shades exactly the regions the server reports", async () => {
    const app = mountApp();
    await app.newGame();
    await clickAt(app, ...worldToScreen(1, 2));
    await clickAt(app, ...worldToScreen(-3, 5.5));
    const badge = document.querySelector("#label-badge")!.textContent!;
    expect(badge).toContain("configuration 4");
    // overlay off: nothing shaded
    expect(document.querySelectorAll("polygon.losing-region").length).toBe(0);
    const toggle = document.querySelector("#overlay-toggle") as HTMLInputElement;
    toggle.checked = true;
    await app.toggleOverlay();
    const state = await (await fetch(`${BASE}/games/${(app as unknown as { gameId: string })["gameId"]}/overlay`)).json();
    const drawn = document.querySelectorAll("polygon.losing-region");
    expect(drawn.length).toBe(state.losing_regions.length);
    expect(drawn.length).toBeGreaterThan(0);
    // toggling off removes the shading
    toggle.checked = false;
    await app.toggleOverlay();
    expect(document.querySelectorAll("polygon.losing-region").length).toBe(0);
  }, 120_000);
});
