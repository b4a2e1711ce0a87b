import type {
  DataResponse,
  GammaResponse,
  ProfileResponse,
  SelectResponse,
} from "../src/api.js";

export const PROFILE: ProfileResponse = {
  points: [
    { i: 0, rho: 9.25, delta: 4.75, gamma: 43.9375, nneigh: null },
    { i: 1, rho: 8.5, delta: 3.25, gamma: 27.625, nneigh: 0 },
    { i: 2, rho: 2.125, delta: 0.5, gamma: 1.0625, nneigh: 1 },
    { i: 3, rho: 1.75, delta: 0.625, gamma: 1.09375, nneigh: 1 },
    { i: 4, rho: 0.375, delta: 3.125, gamma: 1.171875, nneigh: 0 },
    { i: 5, rho: 0.25, delta: 0.875, gamma: 0.21875, nneigh: 2 },
  ],
  dc: 0.31622776601683794,
  kernel: "gaussian",
};

export const GAMMA: GammaResponse = {
  points: [
    { i: 0, gamma: 43.9375 },
    { i: 1, gamma: 27.625 },
    { i: 4, gamma: 1.171875 },
    { i: 3, gamma: 1.09375 },
    { i: 2, gamma: 1.0625 },
    { i: 5, gamma: 0.21875 },
  ],
  suggestedK: 2,
  jumpRatio: 23.573333333333334,
};

export const SELECT: SelectResponse = {
  centers: [0, 1],
  assignment: [0, 1, 1, 0, 0, 1],
  e: 78.85566447657592,
  accuracy: 0.8866666666666667,
};

export const DATA: DataResponse = {
  points: [
    { i: 0, x: 5.1, y: 3.5, cluster: 0 },
    { i: 1, x: 4.9, y: 3.0, cluster: 1 },
    { i: 2, x: 4.7, y: 3.2, cluster: 1 },
    { i: 3, x: 4.6, y: 3.1, cluster: 0 },
    { i: 4, x: 5.0, y: 3.6, cluster: 0 },
    { i: 5, x: 5.4, y: 3.9, cluster: 1 },
  ],
  xName: "sepal_length",
  yName: "sepal_width",
  centers: [0, 1],
  columns: ["sepal_length", "sepal_width", "petal_length", "petal_width"],
};

export interface RecordedRequest {
  url: string;
  method: string;
  body: unknown;
}

export interface FetchStub {
  requests: RecordedRequest[];
  restore: () => void;
}

/** Replace global fetch with a canned-response router that records requests. */
export function stubFetch(
  routes: Record<string, unknown | ((body: unknown) => { status: number; payload: unknown })>,
): FetchStub {
  const original = globalThis.fetch;
  const requests: RecordedRequest[] = [];
  globalThis.fetch = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const path = url.split("?")[0];
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    requests.push({ url, method, body });
    const route = routes[path];
    if (route === undefined) {
      return new Response(JSON.stringify({ error: `no stub for ${path}` }), { status: 404 });
    }
    const outcome =
      typeof route === "function"
        ? (route as (b: unknown) => { status: number; payload: unknown })(body)
        : { status: 200, payload: route };
    return new Response(JSON.stringify(outcome.payload), {
      status: outcome.status,
      headers: { "content-type": "application/json" },
    });
  }) as typeof fetch;
  return { requests, restore: () => (globalThis.fetch = original) };
}

/** Every number that appears in a JSON payload, stringified exactly. */
export function numericFields(payload: unknown, into = new Set<string>()): Set<string> {
  if (typeof payload === "number") {
    into.add(String(payload));
  } else if (Array.isArray(payload)) {
    for (const entry of payload) numericFields(entry, into);
  } else if (payload !== null && typeof payload === "object") {
    for (const value of Object.values(payload)) numericFields(value, into);
  }
  return into;
}
