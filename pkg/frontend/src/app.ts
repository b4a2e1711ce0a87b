/**
 * Wiring: load the profile and gamma ranking once, then loop
 * brush/click -> select request -> re-render. At most one selection request
 * is in flight; a newer gesture aborts and supersedes an older one.
 */

import {
  ApiClient,
  ApiError,
  type GammaResponse,
  type ProfileResponse,
  type SelectResponse,
} from "./api.js";
import { DecisionGraph, type BrushCorner } from "./decisionGraph.js";
import { GammaPanel } from "./gammaPanel.js";
import { ClusterView } from "./clusterView.js";

export interface UiState {
  profile: ProfileResponse | null;
  gamma: GammaResponse | null;
  rectangle: BrushCorner | null;
  lastSelect: SelectResponse | null;
  axes: { x?: string; y?: string };
}

export class App {
  readonly state: UiState = {
    profile: null,
    gamma: null,
    rectangle: null,
    lastSelect: null,
    axes: {},
  };

  private graph: DecisionGraph;
  private panel: GammaPanel;
  private view: ClusterView;
  private header: HTMLElement;
  private inflight: AbortController | null = null;
  private requestSeq = 0;

  constructor(private readonly api: ApiClient, root: HTMLElement) {
    this.header = document.createElement("div");
    this.header.className = "app-header";
    root.appendChild(this.header);

    const columns = document.createElement("div");
    columns.className = "app-columns";
    root.appendChild(columns);

    const left = document.createElement("section");
    left.className = "panel";
    const middle = document.createElement("section");
    middle.className = "panel";
    const right = document.createElement("section");
    right.className = "panel";
    columns.append(left, middle, right);

    left.insertAdjacentHTML("beforeend", "<h2>decision graph</h2>");
    middle.insertAdjacentHTML("beforeend", "<h2>gamma ranking</h2>");
    right.insertAdjacentHTML("beforeend", "<h2>clusters</h2>");

    this.graph = new DecisionGraph(left, { onBrush: (corner) => void this.brush(corner) });
    this.panel = new GammaPanel(middle, { onPickK: (k) => void this.pickK(k) });
    this.view = new ClusterView(right, {
      onAxesChange: (x, y) => void this.changeAxes(x, y),
    });
  }

  async init(): Promise<void> {
    try {
      const [profile, gamma] = await Promise.all([
        this.api.fetchProfile(),
        this.api.fetchGamma(),
      ]);
      this.state.profile = profile;
      this.state.gamma = gamma;
      this.renderHeader(profile);
      if (profile.points.length === 0) {
        this.header.textContent = "empty profile";
        return;
      }
      this.graph.render(profile);
      this.panel.render(gamma);
      this.view.renderBadges(null);
      await this.refreshData();
    } catch (error) {
      this.header.textContent = `failed to load profile: ${describe(error)}`;
    }
  }

  async brush(corner: BrushCorner): Promise<void> {
    this.state.rectangle = corner;
    await this.runSelect((signal) =>
      this.api.select({ rhoMin: corner.rhoMin, deltaMin: corner.deltaMin }, signal),
    );
  }

  async pickK(k: number): Promise<void> {
    this.state.rectangle = null;
    await this.runSelect((signal) => this.api.selectK(k, signal));
  }

  async changeAxes(x: string, y: string): Promise<void> {
    this.state.axes = { x, y };
    await this.refreshData();
  }

  /** Single-flight selection: a newer request aborts and supersedes an older one. */
  private async runSelect(
    send: (signal: AbortSignal) => Promise<SelectResponse>,
  ): Promise<void> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    this.requestSeq += 1;
    const seq = this.requestSeq;
    try {
      const response = await send(controller.signal);
      if (seq !== this.requestSeq) return; // superseded while awaiting
      this.state.lastSelect = response;
      this.view.renderBadges(response);
      this.graph.highlightCenters(response.centers);
      await this.refreshData();
    } catch (error) {
      if (seq !== this.requestSeq || isAbort(error)) return;
      this.view.renderError(describe(error));
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
  }

  private async refreshData(): Promise<void> {
    try {
      const data = await this.api.fetchData(this.state.axes.x, this.state.axes.y);
      this.state.axes = { x: data.xName, y: data.yName };
      this.view.render(data);
    } catch (error) {
      this.view.renderError(describe(error));
    }
  }

  private renderHeader(profile: ProfileResponse): void {
    this.header.textContent = "";
    const title = document.createElement("span");
    title.className = "app-title";
    title.textContent = "decision-graph explorer";
    const kernel = document.createElement("span");
    kernel.className = "muted";
    kernel.textContent = ` ${profile.kernel} density, dc = `;
    const dc = document.createElement("span");
    dc.dataset.value = String(profile.dc);
    dc.textContent = String(profile.dc);
    const count = document.createElement("span");
    count.className = "muted";
    count.dataset.value = String(profile.points.length);
    count.textContent = ` · ${profile.points.length} points`;
    this.header.append(title, kernel, dc, count);
  }
}

function isAbort(error: unknown): boolean {
  return error instanceof DOMException && error.name === "AbortError";
}

function describe(error: unknown): string {
  if (error instanceof ApiError) return error.message;
  return error instanceof Error ? error.message : String(error);
}
