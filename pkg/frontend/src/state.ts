/** Single serializable view-model plus the controller that mutates it.
 *
 * All workflow logic lives here so it can be exercised headless against
 * recorded service fixtures. The controller enforces the client side of the
 * protocol: while the session is locked, no mutating request is ever
 * issued; every weight/threshold adjustment is exactly one restriction
 * round-trip, whose response carries the full diagnostics payload the
 * charts render from.
 */

import { ApiClient, ApiError, EnumerateParams } from "./api.js";
import type { DiagnosticsPayload, DrawnAllocation, MetricSpec, PoolInfo, TestResultPayload } from "./types.js";

export interface MetricChoice {
  spec: MetricSpec;
  weight: number;
}

export interface ViewState {
  sessionId: string | null;
  pool: PoolInfo | null;
  metrics: MetricChoice[];
  mAccept: number;
  mirrors: boolean;
  showAcceptedOverlay: boolean;
  locked: boolean;
  digest: string | null;
  diagnostics: DiagnosticsPayload | null;
  cacheHits: string[];
  drawn: DrawnAllocation | null;
  testResult: TestResultPayload | null;
  busy: boolean;
  notice: string | null;
  dataUploaded: Record<string, boolean>;
}

export function initialState(): ViewState {
  return {
    sessionId: null,
    pool: null,
    metrics: [],
    mAccept: 50,
    mirrors: true,
    showAcceptedOverlay: true,
    locked: false,
    digest: null,
    diagnostics: null,
    cacheHits: [],
    drawn: null,
    testResult: null,
    busy: false,
    notice: null,
    dataUploaded: { covariates: false, clusters: false, network: false, coords: false },
  };
}

export type Listener = (state: ViewState) => void;

export class DashboardController {
  state: ViewState = initialState();

  constructor(
    private api: ApiClient,
    private listener: Listener = () => undefined,
    private pollDelayMs = 150
  ) {}

  private emit() {
    this.listener(this.state);
  }

  private fail(message: string) {
    this.state.notice = message;
    this.state.busy = false;
    this.emit();
  }

  /** Mutations are refused locally once locked; the server would 409 anyway. */
  private guardUnlocked(): boolean {
    if (this.state.locked) {
      this.fail("design is locked: adjust nothing, only randomize or test");
      return false;
    }
    return true;
  }

  async createSession(): Promise<void> {
    const { id } = await this.api.createSession();
    this.state = initialState();
    this.state.sessionId = id;
    this.state.notice = `session ${id} created`;
    this.emit();
  }

  async attachSession(sid: string): Promise<void> {
    const summary = await this.api.sessionSummary(sid);
    this.state = initialState();
    this.state.sessionId = summary.id;
    this.state.pool = summary.pool;
    this.state.locked = summary.locked;
    this.state.digest = summary.design?.digest ?? null;
    for (const key of Object.keys(this.state.dataUploaded)) {
      this.state.dataUploaded[key] = Boolean(summary.data[key]);
    }
    this.emit();
  }

  async upload(kind: string, file: File, sidecar?: Record<string, unknown>): Promise<void> {
    if (!this.guardUnlocked()) return;
    const sid = this.requireSession();
    this.state.busy = true;
    this.emit();
    try {
      await this.api.uploadData(sid, kind, file, sidecar);
      this.state.dataUploaded[kind] = true;
      this.state.notice = `${kind} uploaded`;
    } catch (err) {
      this.state.notice = `upload failed: ${describe(err)}`;
    }
    this.state.busy = false;
    this.emit();
  }

  async enumerate(params: EnumerateParams): Promise<void> {
    if (!this.guardUnlocked()) return;
    const sid = this.requireSession();
    this.state.busy = true;
    this.state.notice = "enumerating...";
    this.emit();
    try {
      const { job } = await this.api.enumerate(sid, params);
      const result = await this.pollJob(sid, job);
      this.state.pool = result as unknown as PoolInfo;
      this.state.diagnostics = null;
      this.state.notice = `pool ready: ${this.state.pool.n} candidates`;
    } catch (err) {
      this.state.notice = `enumeration failed: ${describe(err)}`;
    }
    this.state.busy = false;
    this.emit();
  }

  private async pollJob(sid: string, jid: string): Promise<Record<string, unknown>> {
    for (;;) {
      const status = await this.api.jobStatus(sid, jid);
      if (status.status === "done") return status.result ?? {};
      if (status.status === "failed") throw new Error(status.error ?? "job failed");
      await sleep(this.pollDelayMs);
    }
  }

  setMetrics(metrics: MetricChoice[]): void {
    this.state.metrics = metrics;
    this.emit();
  }

  /** Slider handlers: adjust locally, then one restrict round-trip. */
  async changeWeight(index: number, weight: number): Promise<void> {
    if (!this.guardUnlocked()) return;
    if (index < 0 || index >= this.state.metrics.length) return;
    this.state.metrics[index].weight = weight;
    await this.restrict();
  }

  async changeMAccept(mAccept: number): Promise<void> {
    if (!this.guardUnlocked()) return;
    this.state.mAccept = mAccept;
    await this.restrict();
  }

  toggleAcceptedOverlay(show: boolean): void {
    this.state.showAcceptedOverlay = show;
    this.emit();
  }

  /** The restriction round-trip: POST fitness, render from its response. */
  async restrict(): Promise<void> {
    if (!this.guardUnlocked()) return;
    const sid = this.requireSession();
    if (this.state.metrics.length === 0) {
      this.fail("choose at least one inspection metric");
      return;
    }
    this.state.busy = true;
    this.emit();
    try {
      const weights = this.state.metrics.map((m) => m.weight);
      const gated = this.state.metrics.some((m) => m.spec.name === "desired_comps");
      const response = await this.api.setFitness(sid, {
        metrics: this.state.metrics.map((m) => m.spec),
        weights: gated || this.state.metrics.length === 1 ? null : weights,
        aggregator: gated ? "gated" : this.state.metrics.length === 1 ? "identity" : "weighted_sum",
        m_accept: this.state.mAccept,
        mirrors: this.state.mirrors,
      });
      this.state.diagnostics = response.diagnostics;
      this.state.cacheHits = response.cache_hits;
      this.state.notice = `accepted ${response.n_accepted} of ${response.n_pool}`;
    } catch (err) {
      this.state.notice = `restriction failed: ${describe(err)}`;
    }
    this.state.busy = false;
    this.emit();
  }

  async lockAndPreregister(): Promise<Blob | null> {
    if (!this.guardUnlocked()) return null;
    const sid = this.requireSession();
    if (!this.state.diagnostics) {
      this.fail("restrict first: there is no design to lock");
      return null;
    }
    this.state.busy = true;
    this.emit();
    try {
      const { digest } = await this.api.lock(sid);
      this.state.locked = true;
      this.state.digest = digest;
      this.state.notice = `locked; digest ${digest.slice(0, 12)}...`;
      const bundle = await this.api.downloadBundle(sid);
      this.state.busy = false;
      this.emit();
      return bundle;
    } catch (err) {
      this.state.busy = false;
      this.fail(`lock failed: ${describe(err)}`);
      return null;
    }
  }

  async randomize(seed: number): Promise<void> {
    const sid = this.requireSession();
    if (!this.state.locked) {
      this.fail("pre-register before drawing the official randomization");
      return;
    }
    try {
      const { drawn } = await this.api.randomize(sid, seed);
      this.state.drawn = drawn;
      this.state.notice = "official allocation drawn";
    } catch (err) {
      this.state.notice = `randomization failed: ${describe(err)}`;
    }
    this.emit();
  }

  async runTest(outcomes: number[]): Promise<void> {
    const sid = this.requireSession();
    if (!this.state.locked) {
      this.fail("outcomes are only analyzed after pre-registration");
      return;
    }
    try {
      this.state.testResult = await this.api.runTest(sid, outcomes);
      this.state.notice = `exact test done: p = ${this.state.testResult.p_value}`;
    } catch (err) {
      this.state.notice = `test failed: ${describe(err)}`;
    }
    this.emit();
  }

  private requireSession(): string {
    if (!this.state.sessionId) throw new Error("no active session");
    return this.state.sessionId;
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) return `${err.status}: ${err.message}`;
  return err instanceof Error ? err.message : String(err);
}

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}
