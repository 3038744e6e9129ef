/** Typed client for the workbench API.
 *
 * The fetch implementation is injected so headless tests can replay
 * recorded fixtures and count round-trips.
 */

import type {
  DrawnAllocation,
  FitnessResponse,
  JobStatus,
  MetricSpec,
  SessionSummary,
  TestResultPayload,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

export interface EnumerateParams {
  mechanism?: string;
  k?: number;
  m_pool?: number;
  n?: number | null;
  comps?: number[] | null;
  group_size?: number | null;
  seed?: number;
  deduplicate?: boolean;
}

export interface FitnessParams {
  metrics: MetricSpec[];
  weights: number[] | null;
  aggregator: string;
  m_accept: number;
  mirrors: boolean;
  comps?: number[] | null;
  exposure?: Record<string, unknown> | null;
}

export class ApiClient {
  constructor(private fetchFn: FetchLike = (url, init) => fetch(url, init), private base = "") {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: {} };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.base + path, init);
    if (!response.ok) {
      let detail = `${response.status}`;
      try {
        const payload = await response.json();
        detail = typeof payload.detail === "string" ? payload.detail : JSON.stringify(payload.detail);
      } catch {
        /* non-JSON error body */
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  createSession(): Promise<{ id: string }> {
    return this.request("POST", "/sessions");
  }

  sessionSummary(sid: string): Promise<SessionSummary> {
    return this.request("GET", `/sessions/${sid}`);
  }

  async uploadData(sid: string, kind: string, file: File, sidecar?: Record<string, unknown>): Promise<void> {
    const form = new FormData();
    form.append("file", file);
    if (sidecar) form.append("sidecar", JSON.stringify(sidecar));
    const response = await this.fetchFn(`${this.base}/sessions/${sid}/data/${kind}`, {
      method: "POST",
      body: form,
    });
    if (!response.ok) throw new ApiError(response.status, await response.text());
  }

  enumerate(sid: string, params: EnumerateParams): Promise<{ job: string }> {
    return this.request("POST", `/sessions/${sid}/enumerate`, params);
  }

  jobStatus(sid: string, jid: string): Promise<JobStatus> {
    return this.request("GET", `/sessions/${sid}/jobs/${jid}`);
  }

  /** One restrict round-trip: fitness + rule in, mask + diagnostics out. */
  setFitness(sid: string, params: FitnessParams): Promise<FitnessResponse> {
    return this.request("POST", `/sessions/${sid}/fitness`, {
      fitness: {
        metrics: params.metrics,
        weights: params.weights,
        aggregator: params.aggregator,
        normalization: "pool_minmax",
      },
      rule: { kind: "threshold_percentile", m_accept: params.m_accept },
      mirrors: params.mirrors,
      comps: params.comps ?? null,
      exposure: params.exposure ?? null,
    });
  }

  lock(sid: string): Promise<{ digest: string; bundle: string }> {
    return this.request("POST", `/sessions/${sid}/lock`);
  }

  async downloadBundle(sid: string): Promise<Blob> {
    const response = await this.fetchFn(`${this.base}/sessions/${sid}/bundle`, { method: "GET" });
    if (!response.ok) throw new ApiError(response.status, await response.text());
    return response.blob();
  }

  randomize(sid: string, seed: number): Promise<{ drawn: DrawnAllocation }> {
    return this.request("POST", `/sessions/${sid}/randomize`, { seed });
  }

  runTest(sid: string, outcomes: number[], estimator?: Record<string, unknown>): Promise<TestResultPayload> {
    return this.request("POST", `/sessions/${sid}/test`, {
      outcomes,
      estimator: estimator ?? { kind: "diff_in_means" },
    });
  }
}
