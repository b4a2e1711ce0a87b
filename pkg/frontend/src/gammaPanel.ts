/**
 * Descending gamma strip: one bar per point, tallest first, with the
 * server-suggested k (if any) outlined. Clicking bar i requests a top-i
 * selection through the dedicated select-k endpoint.
 */

import type { GammaResponse } from "./api.js";

export interface GammaPanelOptions {
  maxBars?: number;
  onPickK: (k: number) => void;
}

export class GammaPanel {
  private readonly root: HTMLElement;
  private readonly maxBars: number;
  private readonly onPickK: (k: number) => void;

  constructor(container: HTMLElement, options: GammaPanelOptions) {
    this.root = document.createElement("div");
    this.root.className = "gamma-panel";
    container.appendChild(this.root);
    this.maxBars = options.maxBars ?? 40;
    this.onPickK = options.onPickK;
  }

  render(gamma: GammaResponse): void {
    this.root.textContent = "";
    const shown = gamma.points.slice(0, this.maxBars);
    const top = shown.length > 0 ? shown[0].gamma : 1;

    const note = document.createElement("div");
    note.className = "gamma-note";
    if (gamma.suggestedK !== null) {
      const label = document.createElement("span");
      label.textContent = "suggested k = ";
      const value = document.createElement("span");
      value.className = "badge";
      value.dataset.value = String(gamma.suggestedK);
      value.textContent = String(gamma.suggestedK);
      note.append(label, value);
      if (gamma.jumpRatio !== null) {
        const ratio = document.createElement("span");
        ratio.className = "muted";
        ratio.dataset.value = String(gamma.jumpRatio);
        ratio.textContent = ` (jump ratio ${gamma.jumpRatio})`;
        note.append(ratio);
      }
    } else {
      note.textContent = "no clear jump in the gamma ranking";
    }
    this.root.appendChild(note);

    const strip = document.createElement("div");
    strip.className = "gamma-strip";
    shown.forEach((entry, rank) => {
      const bar = document.createElement("button");
      bar.type = "button";
      bar.className = "gamma-bar";
      if (gamma.suggestedK !== null && rank < gamma.suggestedK) {
        bar.classList.add("suggested");
      }
      const height = top > 0 ? Math.max((entry.gamma / top) * 100, 2) : 2;
      bar.style.height = `${height}%`;
      bar.dataset.value = String(entry.gamma);
      bar.dataset.pointIndex = String(entry.i);
      bar.title = `rank ${rank + 1}: point ${entry.i}, gamma=${entry.gamma}`;
      bar.addEventListener("click", () => this.onPickK(rank + 1));
      strip.appendChild(bar);
    });
    this.root.appendChild(strip);
  }
}
