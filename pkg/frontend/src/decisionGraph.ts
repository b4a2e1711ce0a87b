/**
 * Interactive (rho, delta) scatter with a rectangle brush.
 *
 * Only the brush's lower-left corner matters: the server applies strict
 * rho > rhoMin AND delta > deltaMin, so the selected region is really the
 * open upper-right quadrant anchored at that corner. The drawn rectangle is
 * a visual affordance; we additionally shade the implied quadrant.
 */

import type { ProfilePoint, ProfileResponse } from "./api.js";
import { LinearScale } from "./scale.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface BrushCorner {
  rhoMin: number;
  deltaMin: number;
}

export interface DecisionGraphOptions {
  width?: number;
  height?: number;
  onBrush: (corner: BrushCorner) => void;
}

interface Margins {
  left: number;
  right: number;
  top: number;
  bottom: number;
}

const MARGINS: Margins = { left: 48, right: 12, top: 12, bottom: 36 };

export class DecisionGraph {
  readonly svg: SVGSVGElement;
  private readonly width: number;
  private readonly height: number;
  private readonly onBrush: (corner: BrushCorner) => void;
  private marksGroup: SVGGElement | null = null;
  private brushRect: SVGRectElement;
  private quadrantRect: SVGRectElement;
  private centerIds = new Set<number>();
  private points: ProfilePoint[] = [];
  private dragStart: { x: number; y: number } | null = null;

  xScale: LinearScale = new LinearScale(0, 1, 0, 1);
  yScale: LinearScale = new LinearScale(0, 1, 1, 0);

  constructor(container: HTMLElement, options: DecisionGraphOptions) {
    this.width = options.width ?? 460;
    this.height = options.height ?? 340;
    this.onBrush = options.onBrush;

    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("class", "decision-graph");
    this.svg.setAttribute("width", String(this.width));
    this.svg.setAttribute("height", String(this.height));
    container.appendChild(this.svg);

    this.quadrantRect = document.createElementNS(SVG_NS, "rect");
    this.quadrantRect.setAttribute("class", "quadrant");
    this.quadrantRect.setAttribute("display", "none");
    this.svg.appendChild(this.quadrantRect);

    this.brushRect = document.createElementNS(SVG_NS, "rect");
    this.brushRect.setAttribute("class", "brush");
    this.brushRect.setAttribute("display", "none");
    this.svg.appendChild(this.brushRect);

    this.svg.addEventListener("mousedown", this.handleDown);
    window.addEventListener("mousemove", this.handleMove);
    window.addEventListener("mouseup", this.handleUp);
  }

  render(profile: ProfileResponse): void {
    this.points = profile.points;
    const rhoMax = Math.max(...profile.points.map((p) => p.rho), 0);
    const deltaMax = Math.max(...profile.points.map((p) => p.delta), 0);
    this.xScale = new LinearScale(
      0, rhoMax * 1.05 || 1, MARGINS.left, this.width - MARGINS.right,
    );
    this.yScale = new LinearScale(
      0, deltaMax * 1.05 || 1, this.height - MARGINS.bottom, MARGINS.top,
    );

    this.marksGroup?.remove();
    this.marksGroup = document.createElementNS(SVG_NS, "g");
    this.svg.insertBefore(this.marksGroup, this.quadrantRect);

    this.drawAxes(this.marksGroup);
    for (const point of this.points) {
      const mark = document.createElementNS(SVG_NS, "circle");
      mark.setAttribute("class", "point");
      mark.setAttribute("data-index", String(point.i));
      mark.setAttribute("cx", String(this.xScale.apply(point.rho)));
      mark.setAttribute("cy", String(this.yScale.apply(point.delta)));
      mark.setAttribute("r", "3.5");
      const tooltip = document.createElementNS(SVG_NS, "title");
      tooltip.textContent =
        `point ${point.i}: rho=${point.rho} delta=${point.delta} ` +
        `gamma=${point.gamma} nneigh=${point.nneigh === null ? "none" : point.nneigh}`;
      mark.appendChild(tooltip);
      this.marksGroup.appendChild(mark);
    }
    this.highlightCenters([...this.centerIds]);
  }

  /** Re-style the marks that are currently selected as centers. */
  highlightCenters(centers: number[]): void {
    this.centerIds = new Set(centers);
    if (!this.marksGroup) return;
    for (const mark of Array.from(this.marksGroup.querySelectorAll("circle.point"))) {
      const index = Number(mark.getAttribute("data-index"));
      mark.classList.toggle("center", this.centerIds.has(index));
    }
  }

  get pointCount(): number {
    return this.points.length;
  }

  private drawAxes(group: SVGGElement): void {
    const axisY = this.height - MARGINS.bottom;
    const xAxis = document.createElementNS(SVG_NS, "line");
    xAxis.setAttribute("class", "axis");
    xAxis.setAttribute("x1", String(MARGINS.left));
    xAxis.setAttribute("y1", String(axisY));
    xAxis.setAttribute("x2", String(this.width - MARGINS.right));
    xAxis.setAttribute("y2", String(axisY));
    group.appendChild(xAxis);
    const yAxis = document.createElementNS(SVG_NS, "line");
    yAxis.setAttribute("class", "axis");
    yAxis.setAttribute("x1", String(MARGINS.left));
    yAxis.setAttribute("y1", String(MARGINS.top));
    yAxis.setAttribute("x2", String(MARGINS.left));
    yAxis.setAttribute("y2", String(axisY));
    group.appendChild(yAxis);
    const xLabel = document.createElementNS(SVG_NS, "text");
    xLabel.setAttribute("class", "axis-label");
    xLabel.setAttribute("x", String(this.width / 2));
    xLabel.setAttribute("y", String(this.height - 8));
    xLabel.textContent = "rho (local density)";
    group.appendChild(xLabel);
    const yLabel = document.createElementNS(SVG_NS, "text");
    yLabel.setAttribute("class", "axis-label");
    yLabel.setAttribute("x", "14");
    yLabel.setAttribute("y", String(this.height / 2));
    yLabel.setAttribute(
      "transform", `rotate(-90 14 ${this.height / 2})`,
    );
    yLabel.textContent = "delta (distance to denser point)";
    group.appendChild(yLabel);
  }

  private localPoint(event: MouseEvent): { x: number; y: number } {
    const bounds = this.svg.getBoundingClientRect();
    return { x: event.clientX - bounds.left, y: event.clientY - bounds.top };
  }

  private handleDown = (event: MouseEvent): void => {
    if (this.points.length === 0) return;
    this.dragStart = this.localPoint(event);
    this.brushRect.setAttribute("display", "none");
    this.quadrantRect.setAttribute("display", "none");
    event.preventDefault();
  };

  private handleMove = (event: MouseEvent): void => {
    if (!this.dragStart) return;
    const current = this.localPoint(event);
    this.updateBrushRect(this.dragStart, current);
  };

  private handleUp = (event: MouseEvent): void => {
    if (!this.dragStart) return;
    const start = this.dragStart;
    this.dragStart = null;
    const end = this.localPoint(event);
    this.updateBrushRect(start, end);
    // lower-left corner in data coordinates: min rho, min delta
    const cornerPixelX = Math.min(start.x, end.x);
    const cornerPixelY = Math.max(start.y, end.y); // screen y grows downward
    const corner: BrushCorner = {
      rhoMin: this.xScale.invert(cornerPixelX),
      deltaMin: this.yScale.invert(cornerPixelY),
    };
    this.showQuadrant(cornerPixelX, cornerPixelY);
    this.onBrush(corner);
  };

  private updateBrushRect(a: { x: number; y: number }, b: { x: number; y: number }): void {
    this.brushRect.setAttribute("display", "");
    this.brushRect.setAttribute("x", String(Math.min(a.x, b.x)));
    this.brushRect.setAttribute("y", String(Math.min(a.y, b.y)));
    this.brushRect.setAttribute("width", String(Math.abs(a.x - b.x)));
    this.brushRect.setAttribute("height", String(Math.abs(a.y - b.y)));
  }

  private showQuadrant(pixelX: number, pixelY: number): void {
    this.quadrantRect.setAttribute("display", "");
    this.quadrantRect.setAttribute("x", String(pixelX));
    this.quadrantRect.setAttribute("y", "0");
    this.quadrantRect.setAttribute("width", String(Math.max(this.width - pixelX, 0)));
    this.quadrantRect.setAttribute("height", String(pixelY));
  }
}
