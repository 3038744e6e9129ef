/** Typed client for the workbench API.
 *
 * The fetch implementation is injected so headless tests can replay
 * recorded fixtures and count round-trips.
 */
export class ApiError extends Error {
    constructor(status, detail) {
        super(detail);
        this.status = status;
    }
}
export class ApiClient {
    constructor(fetchFn = (url, init) => fetch(url, init), base = "") {
        this.fetchFn = fetchFn;
        this.base = base;
    }
    async request(method, path, body) {
        const init = { method, headers: {} };
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
            }
            catch {
                /* non-JSON error body */
            }
            throw new ApiError(response.status, detail);
        }
        return (await response.json());
    }
    createSession() {
        return this.request("POST", "/sessions");
    }
    sessionSummary(sid) {
        return this.request("GET", `/sessions/${sid}`);
    }
    async uploadData(sid, kind, file, sidecar) {
        const form = new FormData();
        form.append("file", file);
        if (sidecar)
            form.append("sidecar", JSON.stringify(sidecar));
        const response = await this.fetchFn(`${this.base}/sessions/${sid}/data/${kind}`, {
            method: "POST",
            body: form,
        });
        if (!response.ok)
            throw new ApiError(response.status, await response.text());
    }
    enumerate(sid, params) {
        return this.request("POST", `/sessions/${sid}/enumerate`, params);
    }
    jobStatus(sid, jid) {
        return this.request("GET", `/sessions/${sid}/jobs/${jid}`);
    }
    /** One restrict round-trip: fitness + rule in, mask + diagnostics out. */
    setFitness(sid, params) {
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
    lock(sid) {
        return this.request("POST", `/sessions/${sid}/lock`);
    }
    async downloadBundle(sid) {
        const response = await this.fetchFn(`${this.base}/sessions/${sid}/bundle`, { method: "GET" });
        if (!response.ok)
            throw new ApiError(response.status, await response.text());
        return response.blob();
    }
    randomize(sid, seed) {
        return this.request("POST", `/sessions/${sid}/randomize`, { seed });
    }
    runTest(sid, outcomes, estimator) {
        return this.request("POST", `/sessions/${sid}/test`, {
            outcomes,
            estimator: estimator ?? { kind: "diff_in_means" },
        });
    }
}
