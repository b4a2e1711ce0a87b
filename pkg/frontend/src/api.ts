/**
 * Typed client for the dpkmeans serve endpoints.
 *
 * The UI is a thin client: every number it renders is taken verbatim from
 * one of these responses, never recomputed locally.
 */

export interface ProfilePoint {
  i: number;
  rho: number;
  delta: number;
  gamma: number;
  nneigh: number | null;
}

export interface ProfileResponse {
  points: ProfilePoint[];
  dc: number;
  kernel: string;
}

export interface GammaEntry {
  i: number;
  gamma: number;
}

export interface GammaResponse {
  points: GammaEntry[];
  suggestedK: number | null;
  jumpRatio: number | null;
}

export interface SelectRequest {
  rhoMin: number;
  deltaMin: number;
  q?: number;
  mode?: "iterate" | "single_pass";
}

export interface SelectResponse {
  centers: number[];
  assignment: number[];
  e: number;
  accuracy: number | null;
}

export interface DataPoint {
  i: number;
  x: number;
  y: number;
  cluster: number | null;
}

export interface DataResponse {
  points: DataPoint[];
  xName: string;
  yName: string;
  centers: number[];
  columns: string[];
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

async function parseError(response: Response): Promise<never> {
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = (await response.json()) as { error?: string };
    if (body.error) message = body.error;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, message);
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.base + path);
    if (!response.ok) await parseError(response);
    return (await response.json()) as T;
  }

  private async post<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    const response = await fetch(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    if (!response.ok) await parseError(response);
    return (await response.json()) as T;
  }

  fetchProfile(): Promise<ProfileResponse> {
    return this.get("/api/profile");
  }

  fetchGamma(): Promise<GammaResponse> {
    return this.get("/api/gamma");
  }

  select(request: SelectRequest, signal?: AbortSignal): Promise<SelectResponse> {
    return this.post("/api/select", request, signal);
  }

  selectK(k: number, signal?: AbortSignal): Promise<SelectResponse> {
    return this.post("/api/select-k", { k }, signal);
  }

  fetchData(x?: string, y?: string): Promise<DataResponse> {
    const params = new URLSearchParams();
    if (x !== undefined) params.set("x", x);
    if (y !== undefined) params.set("y", y);
    const query = params.toString();
    return this.get(`/api/data${query ? `?${query}` : ""}`);
  }
}
