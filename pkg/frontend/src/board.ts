// SVG board view. Renders the plane layout, labels counters with the
// service's arrangement, and wires hover previews and click-to-move.
// Highlights are presentation only: the pairs and the acting line come
// from the preview endpoint and the mirrored plane payload.

import { MovePreview } from "./api.js";
import { boardLayout, Point2D } from "./layout.js";
import { GameController } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const PAIR_COLORS = [
  "#e63946", "#2a9d8f", "#e9c46a", "#7209b7", "#f3722c", "#577590",
  "#43aa8b", "#f94144", "#90be6d", "#277da1", "#f8961e", "#4d908e",
  "#9d4edd", "#ff006e", "#8ac926",
];
const SCALE = 48;
const PAD = 40;

interface GlyphRefs {
  group: SVGGElement;
  circle: SVGCircleElement;
  label: SVGTextElement;
}

export class BoardView {
  private glyphs: GlyphRefs[] = [];
  private svg: SVGSVGElement | null = null;
  private linePath: SVGPathElement | null = null;
  private screen: Point2D[] = [];
  lastPreview: MovePreview | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly controller: GameController,
  ) {
    controller.onChange(() => this.render());
  }

  render(): void {
    const { plane, session, error } = this.controller;
    this.root.replaceChildren();
    this.glyphs = [];
    this.svg = null;
    this.lastPreview = null;

    const status = document.createElement("div");
    status.className = "status";
    const counter = document.createElement("span");
    counter.className = "move-counter";
    counter.textContent = `moves: ${this.controller.moveCount}`;
    status.appendChild(counter);
    if (this.controller.solved) {
      const banner = document.createElement("span");
      banner.className = "banner solved";
      banner.textContent = "solved!";
      status.appendChild(banner);
    }
    if (error) {
      const banner = document.createElement("span");
      banner.className = "error-banner";
      banner.textContent = error;
      status.appendChild(banner);
    }
    if (this.controller.hint) {
      const hint = document.createElement("span");
      hint.className = "hint";
      hint.textContent = this.controller.hint;
      status.appendChild(hint);
    }
    this.root.appendChild(status);

    // Error banner with no partial board when the service is unreachable.
    if (!plane || !session) return;

    const q = plane.q;
    const layout = boardLayout(q);
    const maxY = Math.max(...layout.map((p) => p.y));
    this.screen = layout.map((p) => ({
      x: PAD + p.x * SCALE,
      y: PAD + (maxY - p.y) * SCALE,
    }));

    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("class", "board");
    svg.setAttribute("viewBox", `0 0 ${2 * PAD + q * SCALE} ${2 * PAD + maxY * SCALE}`);
    svg.setAttribute("width", "640");

    this.linePath = document.createElementNS(SVG_NS, "path");
    this.linePath.setAttribute("class", "line-path");
    this.linePath.setAttribute("fill", "none");
    this.linePath.setAttribute("visibility", "hidden");
    svg.appendChild(this.linePath);

    session.arrangement.forEach((label, pointId) => {
      const { x, y } = this.screen[pointId];
      const group = document.createElementNS(SVG_NS, "g");
      group.setAttribute("class", label === null ? "point hole" : "point");
      group.setAttribute("data-point", String(pointId));

      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(x));
      circle.setAttribute("cy", String(y));
      circle.setAttribute("r", String(SCALE * 0.38));
      group.appendChild(circle);

      const text = document.createElementNS(SVG_NS, "text");
      text.setAttribute("x", String(x));
      text.setAttribute("y", String(y + 4));
      text.setAttribute("text-anchor", "middle");
      text.textContent = label === null ? "" : String(label);
      group.appendChild(text);

      group.addEventListener("mouseenter", () => void this.showPreview(pointId));
      group.addEventListener("mouseleave", () => this.clearHighlights());
      group.addEventListener("click", () => void this.clickPoint(pointId));

      svg.appendChild(group);
      this.glyphs[pointId] = { group, circle, label: text };
    });

    this.svg = svg;
    this.root.appendChild(svg);
  }

  private async showPreview(pointId: number): Promise<void> {
    const preview = await this.controller.hover(pointId);
    this.lastPreview = preview;
    if (!preview) return;
    this.applyHighlights(preview);
  }

  private applyHighlights(preview: MovePreview): void {
    const plane = this.controller.plane;
    if (!plane || !this.svg) return;
    this.clearHighlights();
    const linePoints = plane.lines[preview.line].point_ids;
    for (const p of linePoints) this.glyphs[p]?.group.classList.add("on-line");
    for (const p of preview.swap) {
      const glyph = this.glyphs[p];
      if (glyph) {
        glyph.group.classList.add("swap-highlight");
        glyph.circle.style.stroke = "#1d3557";
      }
    }
    preview.pairs.forEach((pair, i) => {
      const color = PAIR_COLORS[i % PAIR_COLORS.length];
      for (const p of pair) {
        const glyph = this.glyphs[p];
        if (glyph) {
          glyph.group.classList.add(`pair-${i}`);
          glyph.circle.style.stroke = color;
          glyph.circle.style.strokeWidth = "4";
        }
      }
    });
    if (this.linePath) {
      const d = linePoints
        .map((p, i) => `${i === 0 ? "M" : "L"}${this.screen[p].x},${this.screen[p].y}`)
        .join(" ");
      this.linePath.setAttribute("d", d);
      this.linePath.setAttribute("visibility", "visible");
    }
  }

  private clearHighlights(): void {
    for (const glyph of this.glyphs) {
      if (!glyph) continue;
      glyph.group.classList.remove("on-line", "swap-highlight");
      glyph.group.setAttribute(
        "class",
        glyph.group.getAttribute("class")!.replace(/\bpair-\d+\b/g, "").trim(),
      );
      glyph.circle.style.stroke = "";
      glyph.circle.style.strokeWidth = "";
    }
    this.linePath?.setAttribute("visibility", "hidden");
  }

  private async clickPoint(pointId: number): Promise<void> {
    const response = await this.controller.play(pointId);
    if (response === null && !this.controller.busy) {
      // Rejected: shake the glyph (looked up after the re-render), state
      // untouched on the server.
      const glyph = this.glyphs[pointId];
      if (glyph) {
        glyph.group.classList.add("shake");
        setTimeout(() => glyph.group.classList.remove("shake"), 400);
      }
    }
  }
}
