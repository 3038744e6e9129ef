/** SVG chart builders.
 *
 * Thin-client contract: charts are drawn strictly from the bin edges and
 * counts the server supplies. Nothing here re-bins, averages, or otherwise
 * derives statistics; the only arithmetic is mapping server values onto
 * pixels. Every numeric label shown is a server value passed through
 * `fmt`.
 */
export function fmt(value) {
    if (!isFinite(value))
        return value > 0 ? "inf" : "-inf";
    if (value === Math.trunc(value) && Math.abs(value) < 1e7)
        return String(value);
    return value.toPrecision(4);
}
function esc(text) {
    return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}
/** Bar chart over the server's bins; optional vertical cutoff marker. */
export function histogramSvg(hist, options = {}) {
    const width = options.width ?? 420;
    const height = options.height ?? 160;
    const pad = { left: 10, right: 10, top: 12, bottom: 22 };
    const edges = hist.edges;
    const counts = hist.counts;
    if (edges.length !== counts.length + 1) {
        throw new Error("histogram payload malformed: edges must bracket counts");
    }
    const lo = edges[0];
    const hi = edges[edges.length - 1];
    const span = hi - lo || 1;
    const plotW = width - pad.left - pad.right;
    const plotH = height - pad.top - pad.bottom;
    const peak = Math.max(...counts, 1);
    const x = (v) => pad.left + ((v - lo) / span) * plotW;
    const bars = counts
        .map((count, i) => {
        const x0 = x(edges[i]);
        const barW = Math.max(x(edges[i + 1]) - x0 - 0.5, 0.5);
        const barH = (count / peak) * plotH;
        const y0 = pad.top + plotH - barH;
        return (`<rect class="${options.barClass ?? "bar"}" x="${x0.toFixed(2)}" y="${y0.toFixed(2)}"` +
            ` width="${barW.toFixed(2)}" height="${barH.toFixed(2)}"><title>[${fmt(edges[i])}, ${fmt(edges[i + 1])}): ${fmt(count)}</title></rect>`);
    })
        .join("");
    let cutoffMark = "";
    if (options.cutoff !== null && options.cutoff !== undefined && isFinite(options.cutoff)) {
        const cx = x(options.cutoff);
        cutoffMark =
            `<line class="cutoff" x1="${cx.toFixed(2)}" y1="${pad.top}" x2="${cx.toFixed(2)}"` +
                ` y2="${pad.top + plotH}"/>` +
                `<text class="cutoff-label" x="${(cx + 4).toFixed(2)}" y="${pad.top + 10}">s* = ${fmt(options.cutoff)}</text>`;
    }
    const overflow = hist.overflow_inf
        ? `<text class="overflow" x="${width - pad.right}" y="${pad.top + 10}" text-anchor="end">+${fmt(hist.overflow_inf)} inf</text>`
        : "";
    const axis = `<text class="tick" x="${pad.left}" y="${height - 6}">${fmt(lo)}</text>` +
        `<text class="tick" x="${width - pad.right}" y="${height - 6}" text-anchor="end">${fmt(hi)}</text>`;
    const title = options.title
        ? `<text class="chart-title" x="${pad.left}" y="${pad.top - 2}">${esc(options.title)}</text>`
        : "";
    return (`<svg viewBox="0 0 ${width} ${height}" xmlns="http://www.w3.org/2000/svg" role="img">` +
        `${title}${bars}${cutoffMark}${overflow}${axis}</svg>`);
}
/** Trade-off heatmap: one cell per server bin, darker = more allocations.
 * With the overlay enabled, cells holding accepted allocations get a ring. */
export function heatmapSvg(grid, options = {}) {
    const width = options.width ?? 420;
    const height = options.height ?? 300;
    const pad = { left: 14, right: 10, top: 12, bottom: 26 };
    const nx = grid.counts.length;
    const ny = nx > 0 ? grid.counts[0].length : 0;
    if (grid.x_edges.length !== nx + 1 || (nx > 0 && grid.y_edges.length !== ny + 1)) {
        throw new Error("trade-off payload malformed: edges must bracket the count grid");
    }
    const plotW = width - pad.left - pad.right;
    const plotH = height - pad.top - pad.bottom;
    const cellW = plotW / Math.max(nx, 1);
    const cellH = plotH / Math.max(ny, 1);
    let peak = 1;
    for (const row of grid.counts)
        for (const c of row)
            peak = Math.max(peak, c);
    const cells = [];
    for (let i = 0; i < nx; i++) {
        for (let j = 0; j < ny; j++) {
            const count = grid.counts[i][j];
            if (count === 0 && !(options.overlayAccepted && grid.accepted_counts?.[i][j]))
                continue;
            const cx = pad.left + i * cellW;
            // y axis grows upward: bin j=0 is the lowest value band
            const cy = pad.top + plotH - (j + 1) * cellH;
            const shade = count === 0 ? 0 : 0.15 + 0.85 * (count / peak);
            cells.push(`<rect class="cell" x="${cx.toFixed(2)}" y="${cy.toFixed(2)}" width="${cellW.toFixed(2)}"` +
                ` height="${cellH.toFixed(2)}" fill-opacity="${shade.toFixed(3)}">` +
                `<title>x[${fmt(grid.x_edges[i])}, ${fmt(grid.x_edges[i + 1])}) y[${fmt(grid.y_edges[j])}, ${fmt(grid.y_edges[j + 1])}): ${fmt(count)}</title></rect>`);
            if (options.overlayAccepted && grid.accepted_counts && grid.accepted_counts[i][j] > 0) {
                cells.push(`<rect class="accepted-cell" x="${(cx + 0.5).toFixed(2)}" y="${(cy + 0.5).toFixed(2)}"` +
                    ` width="${(cellW - 1).toFixed(2)}" height="${(cellH - 1).toFixed(2)}" fill="none">` +
                    `<title>accepted: ${fmt(grid.accepted_counts[i][j])}</title></rect>`);
            }
        }
    }
    const xTicks = `<text class="tick" x="${pad.left}" y="${height - 8}">${fmt(grid.x_edges[0])}</text>` +
        `<text class="tick" x="${width - pad.right}" y="${height - 8}" text-anchor="end">${fmt(grid.x_edges[nx])}</text>`;
    const yTicks = `<text class="tick" x="${pad.left - 2}" y="${pad.top + plotH}" text-anchor="end">${fmt(grid.y_edges[0])}</text>` +
        `<text class="tick" x="${pad.left - 2}" y="${pad.top + 8}" text-anchor="end">${fmt(grid.y_edges[ny])}</text>`;
    const labels = (options.xLabel
        ? `<text class="axis-label" x="${width / 2}" y="${height - 8}" text-anchor="middle">${esc(options.xLabel)}</text>`
        : "") +
        (options.yLabel
            ? `<text class="axis-label" x="10" y="${pad.top - 2}">${esc(options.yLabel)}</text>`
            : "");
    return (`<svg viewBox="0 0 ${width} ${height}" xmlns="http://www.w3.org/2000/svg" role="img">` +
        `${cells.join("")}${xTicks}${yTicks}${labels}</svg>`);
}
