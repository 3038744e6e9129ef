/** DOM wiring: binds the controller's view-model to the page.
 *
 * Rendering reads exclusively from the state object; every chart and figure
 * is built from server payloads by the chart module. The wiring layer adds
 * no statistics of its own.
 */
import { ApiClient } from "./api.js";
import { fmt, heatmapSvg, histogramSvg } from "./charts.js";
import { DashboardController } from "./state.js";
const METRIC_CATALOG = [
    { label: "Balance: sum of worst-pair SMDs", spec: { name: "sum_max_abs_smd", params: { exclude_salient: false } } },
    { label: "Balance: worst-pair Mahalanobis", spec: { name: "max_mahalanobis", params: { exclude_salient: false } } },
    { label: "Interference: exposed control fraction", spec: { name: "frac_ctrl_exposed", params: {} } },
    { label: "Interference: 1 / min cross-arm distance", spec: { name: "inv_min_euclidean", params: {} } },
];
function el(id) {
    const node = document.getElementById(id);
    if (!node)
        throw new Error(`missing #${id}`);
    return node;
}
export function mountApp(root = document) {
    const api = new ApiClient();
    const controller = new DashboardController(api, render);
    // -- static wiring -------------------------------------------------------
    el("new-session").addEventListener("click", () => void controller.createSession());
    el("attach-session").addEventListener("click", () => {
        const sid = el("session-id-input").value.trim();
        if (sid)
            void controller.attachSession(sid);
    });
    for (const kind of ["covariates", "clusters", "network", "coords"]) {
        el(`upload-${kind}`).addEventListener("change", (event) => {
            const input = event.target;
            const file = input.files?.[0];
            if (!file)
                return;
            let sidecar;
            if (kind === "covariates") {
                const raw = el("covariates-sidecar").value.trim();
                sidecar = raw ? JSON.parse(raw) : undefined;
            }
            void controller.upload(kind, file, sidecar);
        });
    }
    el("enumerate").addEventListener("click", () => {
        void controller.enumerate({
            mechanism: el("mechanism").value,
            n: numberOrNull(el("enum-n").value),
            k: Number(el("enum-k").value || "2"),
            m_pool: Number(el("enum-m").value || "1000"),
            seed: Number(el("enum-seed").value || "0"),
            comps: listOrNull(el("enum-comps").value),
            group_size: numberOrNull(el("enum-group-size").value),
        });
    });
    const metricBoxes = el("metric-catalog");
    for (const [index, entry] of METRIC_CATALOG.entries()) {
        const row = root.createElement("label");
        row.className = "metric-row";
        row.innerHTML =
            `<input type="checkbox" data-metric="${index}"> ${entry.label} ` +
                `<input type="range" class="weight" data-weight="${index}" min="0" max="1" step="0.05" value="0.5" disabled>` +
                `<span class="weight-value" data-weight-value="${index}">0.50</span>`;
        metricBoxes.appendChild(row);
    }
    metricBoxes.addEventListener("change", (event) => {
        const target = event.target;
        if (target.dataset.metric !== undefined) {
            syncMetricSelection();
            void controller.restrict();
        }
        else if (target.dataset.weight !== undefined) {
            // one committed slider change = one restriction round-trip
            const index = selectedIndexes().indexOf(Number(target.dataset.weight));
            if (index >= 0)
                void controller.changeWeight(index, Number(target.value));
        }
    });
    metricBoxes.addEventListener("input", (event) => {
        const target = event.target;
        if (target.dataset.weight !== undefined) {
            metricBoxes.querySelector(`[data-weight-value="${target.dataset.weight}"]`).textContent = Number(target.value).toFixed(2);
        }
    });
    function selectedIndexes() {
        return [...metricBoxes.querySelectorAll("input[data-metric]")]
            .filter((box) => box.checked)
            .map((box) => Number(box.dataset.metric));
    }
    function syncMetricSelection() {
        const choices = selectedIndexes().map((i) => ({
            spec: METRIC_CATALOG[i].spec,
            weight: Number(metricBoxes.querySelector(`input[data-weight="${i}"]`).value),
        }));
        controller.setMetrics(choices);
        for (const slider of metricBoxes.querySelectorAll("input[data-weight]")) {
            const checked = metricBoxes.querySelector(`input[data-metric="${slider.dataset.weight}"]`).checked;
            slider.disabled = !checked || controller.state.locked;
        }
    }
    const mSlider = el("m-accept");
    mSlider.addEventListener("change", () => void controller.changeMAccept(Number(mSlider.value)));
    mSlider.addEventListener("input", () => {
        el("m-accept-value").textContent = mSlider.value;
    });
    el("overlay-toggle").addEventListener("change", (event) => {
        controller.toggleAcceptedOverlay(event.target.checked);
    });
    el("lock").addEventListener("click", () => {
        void controller.lockAndPreregister().then((bundle) => {
            if (bundle) {
                const link = root.createElement("a");
                link.href = URL.createObjectURL(bundle);
                link.download = `igrand-bundle-${controller.state.sessionId}.zip`;
                link.click();
                URL.revokeObjectURL(link.href);
            }
        });
    });
    el("randomize").addEventListener("click", () => {
        void controller.randomize(Number(el("draw-seed").value || "0"));
    });
    el("run-test").addEventListener("click", () => {
        const raw = el("outcomes").value.trim();
        const outcomes = raw.split(/[\s,]+/).filter(Boolean).map(Number);
        void controller.runTest(outcomes);
    });
    // -- rendering -----------------------------------------------------------
    function render(state) {
        el("session-label").textContent = state.sessionId ?? "none";
        el("pool-label").textContent = state.pool
            ? `${state.pool.n} candidates (k=${state.pool.k}, ${state.pool.level} level)`
            : "none";
        el("notice").textContent = state.notice ?? "";
        root.body.classList.toggle("busy", state.busy);
        root.body.classList.toggle("locked", state.locked);
        const lockState = el("lock-state");
        lockState.textContent = state.locked ? `locked (${(state.digest ?? "").slice(0, 12)}...)` : "unlocked";
        // post-lock: the adaptation controls go inert, analysis controls wake up
        for (const control of root.querySelectorAll(".adapt-control")) {
            control.disabled = state.locked || state.busy;
        }
        el("randomize").disabled = !state.locked;
        el("run-test").disabled = !state.locked;
        const diag = state.diagnostics;
        el("score-chart").innerHTML = diag
            ? histogramSvg(diag.score_summary.histogram, {
                cutoff: diag.threshold,
                title: "fitness scores across the pool",
            })
            : "";
        el("discrimination-banner").hidden = !diag?.score_summary.low_discrimination;
        el("correlation-chart").innerHTML = diag?.correlation
            ? histogramSvg(diag.correlation.histogram, { title: "pairwise assignment correlation" })
            : "";
        const flags = [
            ...(diag?.score_summary.flags ?? []),
            ...(diag?.correlation?.flags ?? []),
        ];
        el("flag-list").innerHTML = flags.map((f) => `<li>${f}</li>`).join("");
        const tradeoffHost = el("tradeoff-charts");
        if (diag && Object.keys(diag.tradeoffs).length) {
            tradeoffHost.innerHTML = Object.entries(diag.tradeoffs)
                .map(([key, grid]) => {
                const [xName, yName] = key.split("__vs__");
                return (`<figure><figcaption>${xName} vs ${yName}</figcaption>` +
                    heatmapSvg(grid, {
                        overlayAccepted: state.showAcceptedOverlay,
                        xLabel: xName,
                        yLabel: yName,
                    }) +
                    `</figure>`);
            })
                .join("");
        }
        else {
            tradeoffHost.innerHTML = "";
        }
        el("acceptance-summary").textContent = diag
            ? `accepted ${fmt(diag.n_accepted)} of ${fmt(diag.n_pool)}` +
                (diag.threshold !== null ? ` at s* = ${fmt(diag.threshold)}` : "")
            : "";
        el("drawn").textContent = state.drawn
            ? JSON.stringify(state.drawn, null, 2)
            : "";
        el("test-result").textContent = state.testResult
            ? `p = ${state.testResult.p_value} (observed ${fmt(state.testResult.observed)}, ` +
                `${fmt(state.testResult.n_null)} null statistics)`
            : "";
    }
    render(controller.state);
    return controller;
}
function numberOrNull(raw) {
    const trimmed = raw.trim();
    return trimmed ? Number(trimmed) : null;
}
function listOrNull(raw) {
    const trimmed = raw.trim();
    if (!trimmed)
        return null;
    return trimmed.split(",").map((v) => Number(v.trim()));
}
