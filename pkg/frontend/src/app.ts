/** DOM wiring: binds the controller's view-model to the page.
 *
 * Rendering reads exclusively from the state object; every chart and figure
 * is built from server payloads by the chart module. The wiring layer adds
 * no statistics of its own.
 */

import { ApiClient } from "./api.js";
import { fmt, heatmapSvg, histogramSvg } from "./charts.js";
import { DashboardController, MetricChoice, ViewState } from "./state.js";

const METRIC_CATALOG: { label: string; spec: MetricChoice["spec"] }[] = [
  { label: "Balance: sum of worst-pair SMDs", spec: { name: "sum_max_abs_smd", params: { exclude_salient: false } } },
  { label: "Balance: worst-pair Mahalanobis", spec: { name: "max_mahalanobis", params: { exclude_salient: false } } },
  { label: "Interference: exposed control fraction", spec: { name: "frac_ctrl_exposed", params: {} } },
  { label: "Interference: 1 / min cross-arm distance", spec: { name: "inv_min_euclidean", params: {} } },
];

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

export function mountApp(root: Document = document): DashboardController {
  const api = new ApiClient();
  const controller = new DashboardController(api, render);

  // -- static wiring -------------------------------------------------------

  el<HTMLButtonElement>("new-session").addEventListener("click", () => void controller.createSession());
  el<HTMLButtonElement>("attach-session").addEventListener("click", () => {
    const sid = el<HTMLInputElement>("session-id-input").value.trim();
    if (sid) void controller.attachSession(sid);
  });

  for (const kind of ["covariates", "clusters", "network", "coords"]) {
    el<HTMLInputElement>(`upload-${kind}`).addEventListener("change", (event) => {
      const input = event.target as HTMLInputElement;
      const file = input.files?.[0];
      if (!file) return;
      let sidecar: Record<string, unknown> | undefined;
      if (kind === "covariates") {
        const raw = el<HTMLInputElement>("covariates-sidecar").value.trim();
        sidecar = raw ? JSON.parse(raw) : undefined;
      }
      void controller.upload(kind, file, sidecar);
    });
  }

  el<HTMLButtonElement>("enumerate").addEventListener("click", () => {
    void controller.enumerate({
      mechanism: el<HTMLSelectElement>("mechanism").value,
      n: numberOrNull(el<HTMLInputElement>("enum-n").value),
      k: Number(el<HTMLInputElement>("enum-k").value || "2"),
      m_pool: Number(el<HTMLInputElement>("enum-m").value || "1000"),
      seed: Number(el<HTMLInputElement>("enum-seed").value || "0"),
      comps: listOrNull(el<HTMLInputElement>("enum-comps").value),
      group_size: numberOrNull(el<HTMLInputElement>("enum-group-size").value),
    });
  });

  const metricBoxes = el<HTMLDivElement>("metric-catalog");
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
    const target = event.target as HTMLInputElement;
    if (target.dataset.metric !== undefined) {
      syncMetricSelection();
      void controller.restrict();
    } else if (target.dataset.weight !== undefined) {
      // one committed slider change = one restriction round-trip
      const index = selectedIndexes().indexOf(Number(target.dataset.weight));
      if (index >= 0) void controller.changeWeight(index, Number(target.value));
    }
  });
  metricBoxes.addEventListener("input", (event) => {
    const target = event.target as HTMLInputElement;
    if (target.dataset.weight !== undefined) {
      metricBoxes.querySelector<HTMLSpanElement>(
        `[data-weight-value="${target.dataset.weight}"]`
      )!.textContent = Number(target.value).toFixed(2);
    }
  });

  function selectedIndexes(): number[] {
    return [...metricBoxes.querySelectorAll<HTMLInputElement>("input[data-metric]")]
      .filter((box) => box.checked)
      .map((box) => Number(box.dataset.metric));
  }

  function syncMetricSelection() {
    const choices: MetricChoice[] = selectedIndexes().map((i) => ({
      spec: METRIC_CATALOG[i].spec,
      weight: Number(
        metricBoxes.querySelector<HTMLInputElement>(`input[data-weight="${i}"]`)!.value
      ),
    }));
    controller.setMetrics(choices);
    for (const slider of metricBoxes.querySelectorAll<HTMLInputElement>("input[data-weight]")) {
      const checked = metricBoxes.querySelector<HTMLInputElement>(
        `input[data-metric="${slider.dataset.weight}"]`
      )!.checked;
      slider.disabled = !checked || controller.state.locked;
    }
  }

  const mSlider = el<HTMLInputElement>("m-accept");
  mSlider.addEventListener("change", () => void controller.changeMAccept(Number(mSlider.value)));
  mSlider.addEventListener("input", () => {
    el<HTMLSpanElement>("m-accept-value").textContent = mSlider.value;
  });

  el<HTMLInputElement>("overlay-toggle").addEventListener("change", (event) => {
    controller.toggleAcceptedOverlay((event.target as HTMLInputElement).checked);
  });

  el<HTMLButtonElement>("lock").addEventListener("click", () => {
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

  el<HTMLButtonElement>("randomize").addEventListener("click", () => {
    void controller.randomize(Number(el<HTMLInputElement>("draw-seed").value || "0"));
  });

  el<HTMLButtonElement>("run-test").addEventListener("click", () => {
    const raw = el<HTMLTextAreaElement>("outcomes").value.trim();
    const outcomes = raw.split(/[\s,]+/).filter(Boolean).map(Number);
    void controller.runTest(outcomes);
  });

  // -- rendering -----------------------------------------------------------

  function render(state: ViewState) {
    el<HTMLSpanElement>("session-label").textContent = state.sessionId ?? "none";
    el<HTMLSpanElement>("pool-label").textContent = state.pool
      ? `${state.pool.n} candidates (k=${state.pool.k}, ${state.pool.level} level)`
      : "none";
    el<HTMLDivElement>("notice").textContent = state.notice ?? "";
    root.body.classList.toggle("busy", state.busy);
    root.body.classList.toggle("locked", state.locked);

    const lockState = el<HTMLSpanElement>("lock-state");
    lockState.textContent = state.locked ? `locked (${(state.digest ?? "").slice(0, 12)}...)` : "unlocked";

    // post-lock: the adaptation controls go inert, analysis controls wake up
    for (const control of root.querySelectorAll<HTMLInputElement>(".adapt-control")) {
      control.disabled = state.locked || state.busy;
    }
    el<HTMLButtonElement>("randomize").disabled = !state.locked;
    el<HTMLButtonElement>("run-test").disabled = !state.locked;

    const diag = state.diagnostics;
    el<HTMLDivElement>("score-chart").innerHTML = diag
      ? histogramSvg(diag.score_summary.histogram, {
          cutoff: diag.threshold,
          title: "fitness scores across the pool",
        })
      : "";
    el<HTMLDivElement>("discrimination-banner").hidden = !diag?.score_summary.low_discrimination;
    el<HTMLDivElement>("correlation-chart").innerHTML = diag?.correlation
      ? histogramSvg(diag.correlation.histogram, { title: "pairwise assignment correlation" })
      : "";
    const flags = [
      ...(diag?.score_summary.flags ?? []),
      ...(diag?.correlation?.flags ?? []),
    ];
    el<HTMLUListElement>("flag-list").innerHTML = flags.map((f) => `<li>${f}</li>`).join("");

    const tradeoffHost = el<HTMLDivElement>("tradeoff-charts");
    if (diag && Object.keys(diag.tradeoffs).length) {
      tradeoffHost.innerHTML = Object.entries(diag.tradeoffs)
        .map(([key, grid]) => {
          const [xName, yName] = key.split("__vs__");
          return (
            `<figure><figcaption>${xName} vs ${yName}</figcaption>` +
            heatmapSvg(grid, {
              overlayAccepted: state.showAcceptedOverlay,
              xLabel: xName,
              yLabel: yName,
            }) +
            `</figure>`
          );
        })
        .join("");
    } else {
      tradeoffHost.innerHTML = "";
    }

    el<HTMLDivElement>("acceptance-summary").textContent = diag
      ? `accepted ${fmt(diag.n_accepted)} of ${fmt(diag.n_pool)}` +
        (diag.threshold !== null ? ` at s* = ${fmt(diag.threshold)}` : "")
      : "";

    el<HTMLPreElement>("drawn").textContent = state.drawn
      ? JSON.stringify(state.drawn, null, 2)
      : "";
    el<HTMLPreElement>("test-result").textContent = state.testResult
      ? `p = ${state.testResult.p_value} (observed ${fmt(state.testResult.observed)}, ` +
        `${fmt(state.testResult.n_null)} null statistics)`
      : "";
  }

  render(controller.state);
  return controller;
}

function numberOrNull(raw: string): number | null {
  const trimmed = raw.trim();
  return trimmed ? Number(trimmed) : null;
}

function listOrNull(raw: string): number[] | null {
  const trimmed = raw.trim();
  if (!trimmed) return null;
  return trimmed.split(",").map((v) => Number(v.trim()));
}
