/**
 * 2-D projection of the dataset colored by the current assignment, with
 * star-marked centers and E / accuracy badges. Axes are user-selectable
 * feature columns; a one-feature dataset falls back to the point index on y.
 */

import type { DataResponse, SelectResponse } from "./api.js";
import { LinearScale, paddedExtent } from "./scale.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const PALETTE = [
  "#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2",
  "#b279a2", "#eeca3b", "#ff9da6", "#9d755d", "#bab0ac",
];

export interface ClusterViewOptions {
  width?: number;
  height?: number;
  onAxesChange: (x: string, y: string) => void;
}

export class ClusterView {
  private readonly root: HTMLElement;
  private readonly width: number;
  private readonly height: number;
  private readonly onAxesChange: (x: string, y: string) => void;
  private readonly badges: HTMLElement;
  private readonly controls: HTMLElement;
  private readonly plotHost: HTMLElement;
  private xSelect: HTMLSelectElement | null = null;
  private ySelect: HTMLSelectElement | null = null;

  constructor(container: HTMLElement, options: ClusterViewOptions) {
    this.width = options.width ?? 460;
    this.height = options.height ?? 340;
    this.onAxesChange = options.onAxesChange;
    this.root = document.createElement("div");
    this.root.className = "cluster-view";
    this.badges = document.createElement("div");
    this.badges.className = "badges";
    this.controls = document.createElement("div");
    this.controls.className = "axis-controls";
    this.plotHost = document.createElement("div");
    this.root.append(this.badges, this.controls, this.plotHost);
    container.appendChild(this.root);
  }

  renderBadges(selection: SelectResponse | null): void {
    this.badges.textContent = "";
    if (selection === null) {
      this.badges.textContent = "brush the decision graph to pick centers";
      return;
    }
    this.badges.append(
      this.badge("centers", String(selection.centers.length)),
      this.badge("E", String(selection.e)),
    );
    if (selection.accuracy !== null) {
      this.badges.appendChild(this.badge("accuracy", String(selection.accuracy)));
    }
  }

  renderError(message: string): void {
    this.badges.textContent = "";
    const banner = document.createElement("span");
    banner.className = "error-banner";
    banner.textContent = message;
    this.badges.appendChild(banner);
  }

  render(data: DataResponse): void {
    this.renderControls(data);
    this.plotHost.textContent = "";
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("class", "cluster-plot");
    svg.setAttribute("width", String(this.width));
    svg.setAttribute("height", String(this.height));
    this.plotHost.appendChild(svg);

    const [xLo, xHi] = paddedExtent(data.points.map((p) => p.x));
    const [yLo, yHi] = paddedExtent(data.points.map((p) => p.y));
    const xScale = new LinearScale(xLo, xHi, 42, this.width - 10);
    const yScale = new LinearScale(yLo, yHi, this.height - 30, 10);

    const centers = new Set(data.centers);
    for (const point of data.points) {
      const px = xScale.apply(point.x);
      const py = yScale.apply(point.y);
      if (centers.has(point.i)) continue; // drawn on top below
      const mark = document.createElementNS(SVG_NS, "circle");
      mark.setAttribute("class", "sample");
      mark.setAttribute("cx", String(px));
      mark.setAttribute("cy", String(py));
      mark.setAttribute("r", "3");
      mark.setAttribute("fill", this.color(point.cluster));
      const tooltip = document.createElementNS(SVG_NS, "title");
      tooltip.textContent = `point ${point.i}: ${data.xName}=${point.x} ${data.yName}=${point.y}`;
      mark.appendChild(tooltip);
      svg.appendChild(mark);
    }
    for (const point of data.points) {
      if (!centers.has(point.i)) continue;
      const star = document.createElementNS(SVG_NS, "path");
      star.setAttribute("class", "center-star");
      star.setAttribute("d", starPath(xScale.apply(point.x), yScale.apply(point.y), 8));
      star.setAttribute("fill", this.color(point.cluster));
      svg.appendChild(star);
    }

    const xLabel = document.createElementNS(SVG_NS, "text");
    xLabel.setAttribute("class", "axis-label");
    xLabel.setAttribute("x", String(this.width / 2));
    xLabel.setAttribute("y", String(this.height - 6));
    xLabel.textContent = data.xName;
    svg.appendChild(xLabel);
    const yLabel = document.createElementNS(SVG_NS, "text");
    yLabel.setAttribute("class", "axis-label");
    yLabel.setAttribute("x", "12");
    yLabel.setAttribute("y", String(this.height / 2));
    yLabel.setAttribute("transform", `rotate(-90 12 ${this.height / 2})`);
    yLabel.textContent = data.yName;
    svg.appendChild(yLabel);
  }

  private color(cluster: number | null): string {
    if (cluster === null) return "#90a4ae";
    return PALETTE[cluster % PALETTE.length];
  }

  private badge(label: string, rawValue: string): HTMLElement {
    const wrapper = document.createElement("span");
    wrapper.className = "badge";
    const name = document.createElement("span");
    name.className = "badge-label";
    name.textContent = `${label} `;
    const value = document.createElement("span");
    value.dataset.value = rawValue;
    value.textContent = rawValue;
    wrapper.append(name, value);
    return wrapper;
  }

  private renderControls(data: DataResponse): void {
    this.controls.textContent = "";
    const axisOptions = [...data.columns];
    if (!axisOptions.includes("index")) axisOptions.push("index");
    this.xSelect = this.axisSelect("x", axisOptions, data.xName);
    this.ySelect = this.axisSelect("y", axisOptions, data.yName);
    this.controls.append(this.xSelect, this.ySelect);
  }

  private axisSelect(label: string, columns: string[], current: string): HTMLSelectElement {
    const select = document.createElement("select");
    select.setAttribute("aria-label", `${label} axis`);
    for (const column of columns) {
      const option = document.createElement("option");
      option.value = column;
      option.textContent = column;
      option.selected = column === current;
      select.appendChild(option);
    }
    select.addEventListener("change", () => {
      if (this.xSelect && this.ySelect) {
        this.onAxesChange(this.xSelect.value, this.ySelect.value);
      }
    });
    return select;
  }
}

function starPath(cx: number, cy: number, radius: number): string {
  const inner = radius * 0.45;
  const parts: string[] = [];
  for (let i = 0; i < 10; i += 1) {
    const r = i % 2 === 0 ? radius : inner;
    const angle = (Math.PI / 5) * i - Math.PI / 2;
    const x = cx + r * Math.cos(angle);
    const y = cy + r * Math.sin(angle);
    parts.push(`${i === 0 ? "M" : "L"}${x.toFixed(2)},${y.toFixed(2)}`);
  }
  return `${parts.join("")}Z`;
}
