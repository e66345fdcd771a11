import { ApiClient, RequestFailed } from "./api.js";
import { BoardView, quantize } from "./board.js";
import type { GameStateJson, OverlayJson } from "./types.js";

export class App {
  readonly board: BoardView;
  private api: ApiClient;
  private gameId: string | null = null;
  private state: GameStateJson | null = null;
  private overlay: OverlayJson | null = null;
  private overlayOn = false;
  private busy = false; // one in-flight move at a time

  private banner: HTMLElement;
  private warning: HTMLElement;
  private labelBadge: HTMLElement;
  private variantSelect: HTMLSelectElement;
  private overlayToggle: HTMLInputElement;

  constructor(root: HTMLElement, apiBase: string) {
    this.api = new ApiClient(apiBase);
    root.innerHTML = `
      <div class="controls">
        <select id="variant">
          <option value="empty">empty convex 5-gon</option>
          <option value="convex">convex 5-gon</option>
        </select>
        <button id="new-game">new game</button>
        <label><input type="checkbox" id="overlay-toggle"> losing regions</label>
        <span id="label-badge" class="label-badge"></span>
      </div>
      <div id="banner" class="banner"></div>
      <div id="warning" class="warning"></div>
      <div id="board-container"></div>
    `;
    this.banner = root.querySelector("#banner") as HTMLElement;
    this.warning = root.querySelector("#warning") as HTMLElement;
    this.labelBadge = root.querySelector("#label-badge") as HTMLElement;
    this.variantSelect = root.querySelector("#variant") as HTMLSelectElement;
    this.overlayToggle = root.querySelector("#overlay-toggle") as HTMLInputElement;
    this.board = new BoardView(
      root.querySelector("#board-container") as HTMLElement,
    );

    (root.querySelector("#new-game") as HTMLButtonElement).addEventListener(
      "click",
      () => void this.newGame(),
    );
    this.overlayToggle.addEventListener("change", () => void this.toggleOverlay());
    this.board.svg.addEventListener("click", (evt) => void this.onClick(evt));
  }

  async newGame(): Promise<void> {
    this.gameId = await this.api.createGame(this.variantSelect.value, "human");
    this.overlayOn = this.overlayToggle.checked;
    this.banner.textContent = "";
    this.warning.textContent = "";
    await this.refresh();
  }

  /** Reconstructs the entire view from the server (pure render). */
  async refresh(): Promise<void> {
    if (!this.gameId) {
      return;
    }
    this.state = await this.api.getGame(this.gameId);
    // layer polylines come from the overlay endpoint; losing regions are
    // drawn only when the toggle is on
    const bundle = await this.api.getOverlay(this.gameId);
    this.overlay = {
      ...bundle,
      losing_regions: this.overlayOn ? bundle.losing_regions : [],
    };
    this.board.render(this.state, this.overlay);
    this.labelBadge.textContent = this.state.label
      ? `configuration ${this.state.label}`
      : "";
    if (this.state.status !== "ongoing") {
      const gone =
        this.state.variant === "empty" ? "empty convex 5-gon" : "convex 5-gon";
      this.banner.textContent =
        this.state.status.loser === 1
          ? `${gone} formed at step ${this.state.step} — you lose`
          : `${gone} formed at step ${this.state.step} — engine loses`;
    }
  }

  async onClick(event: MouseEvent): Promise<void> {
    if (!this.gameId || this.busy || !this.state) {
      return;
    }
    if (this.state.status !== "ongoing" || this.state.step % 2 !== 0) {
      return; // not the human's turn
    }
    const [wx, wy] = this.board.clientToWorld(event);
    this.busy = true;
    try {
      await this.api.postMove(this.gameId, quantize(wx), quantize(wy));
      this.warning.textContent = "";
      await this.refresh();
    } catch (err) {
      if (err instanceof RequestFailed) {
        // rejected move: show the reason, leave the board untouched
        this.warning.textContent =
          err.detail.code === "general_position"
            ? "rejected: collinear with two placed points (general position)"
            : `rejected: ${err.detail.message}`;
      } else {
        this.warning.textContent = `network error: ${String(err)}`;
      }
    } finally {
      this.busy = false;
    }
  }

  async toggleOverlay(): Promise<void> {
    this.overlayOn = this.overlayToggle.checked;
    await this.refresh();
  }
}

export function mount(root: HTMLElement, apiBase: string): App {
  return new App(root, apiBase);
}

declare global {
  interface Window {
    esgameApp?: App;
  }
}

if (typeof document !== "undefined" && document.getElementById("app-root")) {
  window.esgameApp = mount(
    document.getElementById("app-root") as HTMLElement,
    "http://127.0.0.1:8000",
  );
}
