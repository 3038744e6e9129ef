/** Single serializable view-model plus the controller that mutates it.
 *
 * All workflow logic lives here so it can be exercised headless against
 * recorded service fixtures. The controller enforces the client side of the
 * protocol: while the session is locked, no mutating request is ever
 * issued; every weight/threshold adjustment is exactly one restriction
 * round-trip, whose response carries the full diagnostics payload the
 * charts render from.
 */
import { ApiError } from "./api.js";
export function initialState() {
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
export class DashboardController {
    constructor(api, listener = () => undefined, pollDelayMs = 150) {
        this.api = api;
        this.listener = listener;
        this.pollDelayMs = pollDelayMs;
        this.state = initialState();
    }
    emit() {
        this.listener(this.state);
    }
    fail(message) {
        this.state.notice = message;
        this.state.busy = false;
        this.emit();
    }
    /** Mutations are refused locally once locked; the server would 409 anyway. */
    guardUnlocked() {
        if (this.state.locked) {
            this.fail("design is locked: adjust nothing, only randomize or test");
            return false;
        }
        return true;
    }
    async createSession() {
        const { id } = await this.api.createSession();
        this.state = initialState();
        this.state.sessionId = id;
        this.state.notice = `session ${id} created`;
        this.emit();
    }
    async attachSession(sid) {
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
    async upload(kind, file, sidecar) {
        if (!this.guardUnlocked())
            return;
        const sid = this.requireSession();
        this.state.busy = true;
        this.emit();
        try {
            await this.api.uploadData(sid, kind, file, sidecar);
            this.state.dataUploaded[kind] = true;
            this.state.notice = `${kind} uploaded`;
        }
        catch (err) {
            this.state.notice = `upload failed: ${describe(err)}`;
        }
        this.state.busy = false;
        this.emit();
    }
    async enumerate(params) {
        if (!this.guardUnlocked())
            return;
        const sid = this.requireSession();
        this.state.busy = true;
        this.state.notice = "enumerating...";
        this.emit();
        try {
            const { job } = await this.api.enumerate(sid, params);
            const result = await this.pollJob(sid, job);
            this.state.pool = result;
            this.state.diagnostics = null;
            this.state.notice = `pool ready: ${this.state.pool.n} candidates`;
        }
        catch (err) {
            this.state.notice = `enumeration failed: ${describe(err)}`;
        }
        this.state.busy = false;
        this.emit();
    }
    async pollJob(sid, jid) {
        for (;;) {
            const status = await this.api.jobStatus(sid, jid);
            if (status.status === "done")
                return status.result ?? {};
            if (status.status === "failed")
                throw new Error(status.error ?? "job failed");
            await sleep(this.pollDelayMs);
        }
    }
    setMetrics(metrics) {
        this.state.metrics = metrics;
        this.emit();
    }
    /** Slider handlers: adjust locally, then one restrict round-trip. */
    async changeWeight(index, weight) {
        if (!this.guardUnlocked())
            return;
        if (index < 0 || index >= this.state.metrics.length)
            return;
        this.state.metrics[index].weight = weight;
        await this.restrict();
    }
    async changeMAccept(mAccept) {
        if (!this.guardUnlocked())
            return;
        this.state.mAccept = mAccept;
        await this.restrict();
    }
    toggleAcceptedOverlay(show) {
        this.state.showAcceptedOverlay = show;
        this.emit();
    }
    /** The restriction round-trip: POST fitness, render from its response. */
    async restrict() {
        if (!this.guardUnlocked())
            return;
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
        }
        catch (err) {
            this.state.notice = `restriction failed: ${describe(err)}`;
        }
        this.state.busy = false;
        this.emit();
    }
    async lockAndPreregister() {
        if (!this.guardUnlocked())
            return null;
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
        }
        catch (err) {
            this.state.busy = false;
            this.fail(`lock failed: ${describe(err)}`);
            return null;
        }
    }
    async randomize(seed) {
        const sid = this.requireSession();
        if (!this.state.locked) {
            this.fail("pre-register before drawing the official randomization");
            return;
        }
        try {
            const { drawn } = await this.api.randomize(sid, seed);
            this.state.drawn = drawn;
            this.state.notice = "official allocation drawn";
        }
        catch (err) {
            this.state.notice = `randomization failed: ${describe(err)}`;
        }
        this.emit();
    }
    async runTest(outcomes) {
        const sid = this.requireSession();
        if (!this.state.locked) {
            this.fail("outcomes are only analyzed after pre-registration");
            return;
        }
        try {
            this.state.testResult = await this.api.runTest(sid, outcomes);
            this.state.notice = `exact test done: p = ${this.state.testResult.p_value}`;
        }
        catch (err) {
            this.state.notice = `test failed: ${describe(err)}`;
        }
        this.emit();
    }
    requireSession() {
        if (!this.state.sessionId)
            throw new Error("no active session");
        return this.state.sessionId;
    }
}
function describe(err) {
    if (err instanceof ApiError)
        return `${err.status}: ${err.message}`;
    return err instanceof Error ? err.message : String(err);
}
function sleep(ms) {
    return new Promise((resolve) => setTimeout(resolve, ms));
}
