import type { GameStateJson, MoveCoord, OverlayJson } from "./types.js";

export const VIEW = 1000;
export const SCALE = 40; // pixels per world unit; world origin at center

const SVG_NS = "http://www.w3.org/2000/svg";

// rational strings -> numbers, for drawing only (the server owns all
// geometric decisions; the client never computes geometry)
export function rationalToNumber(text: string): number {
  const slash = text.indexOf("/");
  if (slash < 0) {
    return Number(text);
  }
  return Number(text.slice(0, slash)) / Number(text.slice(slash + 1));
}

export function worldToScreen(wx: number, wy: number): [number, number] {
  return [VIEW / 2 + wx * SCALE, VIEW / 2 - wy * SCALE];
}

export function screenToWorld(px: number, py: number): [number, number] {
  return [(px - VIEW / 2) / SCALE, (VIEW / 2 - py) / SCALE];
}

// clicks quantize to 4 decimal places so human moves reproduce exactly
// from traces
export function quantize(value: number): string {
  return (Math.round(value * 10000) / 10000).toFixed(4);
}

function coordToScreen(c: MoveCoord): [number, number] {
  return worldToScreen(rationalToNumber(c.x), rationalToNumber(c.y));
}

export class BoardView {
  readonly svg: SVGSVGElement;
  private overlayGroup: SVGGElement;
  private layerGroup: SVGGElement;
  private pointGroup: SVGGElement;
  private witnessGroup: SVGGElement;

  constructor(container: HTMLElement) {
    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("viewBox", `0 0 ${VIEW} ${VIEW}`);
    this.svg.setAttribute("class", "board");
    this.overlayGroup = document.createElementNS(SVG_NS, "g");
    this.layerGroup = document.createElementNS(SVG_NS, "g");
    this.witnessGroup = document.createElementNS(SVG_NS, "g");
    this.pointGroup = document.createElementNS(SVG_NS, "g");
    this.svg.append(
      this.overlayGroup,
      this.layerGroup,
      this.witnessGroup,
      this.pointGroup,
    );
    container.appendChild(this.svg);
  }

  clientToWorld(event: MouseEvent): [number, number] {
    const rect = this.svg.getBoundingClientRect();
    const px = ((event.clientX - rect.left) * VIEW) / rect.width;
    const py = ((event.clientY - rect.top) * VIEW) / rect.height;
    return screenToWorld(px, py);
  }

  render(state: GameStateJson, overlay: OverlayJson | null): void {
    this.renderOverlay(overlay);
    this.renderLayers(overlay);
    this.renderWitness(state);
    this.renderPoints(state);
  }

  private clear(group: SVGGElement): void {
    while (group.firstChild) {
      group.removeChild(group.firstChild);
    }
  }

  private polygonPoints(coords: MoveCoord[]): string {
    return coords
      .map((c) => {
        const [x, y] = coordToScreen(c);
        return `${x.toFixed(2)},${y.toFixed(2)}`;
      })
      .join(" ");
  }

  private renderOverlay(overlay: OverlayJson | null): void {
    this.clear(this.overlayGroup);
    if (!overlay) {
      return;
    }
    for (const region of overlay.losing_regions) {
      const poly = document.createElementNS(SVG_NS, "polygon");
      poly.setAttribute("points", this.polygonPoints(region));
      poly.setAttribute("class", "losing-region");
      poly.setAttribute("fill", "#e3433b");
      poly.setAttribute("fill-opacity", "0.25");
      this.overlayGroup.appendChild(poly);
    }
  }

  private renderLayers(overlay: OverlayJson | null): void {
    this.clear(this.layerGroup);
    if (!overlay) {
      return;
    }
    overlay.layers.forEach((layer, index) => {
      if (layer.length < 2) {
        return;
      }
      const poly = document.createElementNS(SVG_NS, "polygon");
      poly.setAttribute("points", this.polygonPoints(layer));
      poly.setAttribute("class", "hull-layer");
      poly.setAttribute("fill", "none");
      poly.setAttribute("stroke", index === 0 ? "#2c7fb8" : "#7fcdbb");
      poly.setAttribute("stroke-width", "2");
      this.layerGroup.appendChild(poly);
    });
  }

  private renderWitness(state: GameStateJson): void {
    this.clear(this.witnessGroup);
    if (state.status === "ongoing") {
      return;
    }
    const coords = state.status.witness.map((i) => state.moves[i]);
    const poly = document.createElementNS(SVG_NS, "polygon");
    poly.setAttribute("points", this.polygonPoints(coords));
    poly.setAttribute("class", "witness");
    poly.setAttribute("fill", "#f7d04b");
    poly.setAttribute("fill-opacity", "0.45");
    poly.setAttribute("stroke", "#b8860b");
    poly.setAttribute("stroke-width", "3");
    this.witnessGroup.appendChild(poly);
  }

  private renderPoints(state: GameStateJson): void {
    this.clear(this.pointGroup);
    state.moves.forEach((coord, index) => {
      const [x, y] = coordToScreen(coord);
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", x.toFixed(2));
      circle.setAttribute("cy", y.toFixed(2));
      circle.setAttribute("r", "9");
      circle.setAttribute("class", "move-point");
      circle.setAttribute("fill", index % 2 === 0 ? "#1a1a64" : "#8c1a1a");
      const text = document.createElementNS(SVG_NS, "text");
      text.setAttribute("x", x.toFixed(2));
      text.setAttribute("y", (y - 14).toFixed(2));
      text.setAttribute("text-anchor", "middle");
      text.setAttribute("font-size", "20");
      text.textContent = String(index + 1);
      this.pointGroup.append(circle, text);
    });
  }
}
