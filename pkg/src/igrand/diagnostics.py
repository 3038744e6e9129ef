"""Design evaluation diagnostics: discriminatory power, trade-offs, over-restriction.

Everything here reduces to plain arrays plus explicit bin edges so any
frontend (CLI tables, the bundled dashboard) renders the same picture
without re-deriving statistics client-side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .fitness import AcceptedDesign
from .types import ClusterMap, ValidationError

LOW_DISTINCT = 10


@dataclass
class Histogram:
    edges: np.ndarray
    counts: np.ndarray
    #: +inf scores excluded from the binned range; edges cover finite values only
    overflow_inf: int = 0

    def to_dict(self) -> dict:
        return {
            "edges": np.asarray(self.edges, dtype=float).tolist(),
            "counts": np.asarray(self.counts, dtype=int).tolist(),
            "overflow_inf": int(self.overflow_inf),
        }


@dataclass
class ScoreSummary:
    n: int
    n_finite: int
    minimum: float
    maximum: float
    quartiles: tuple[float, float, float]
    distinct: int
    histogram: Histogram
    low_discrimination: bool
    flags: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "n_finite": self.n_finite,
            "min": self.minimum,
            "max": self.maximum,
            "quartiles": list(self.quartiles),
            "distinct": self.distinct,
            "histogram": self.histogram.to_dict(),
            "low_discrimination": self.low_discrimination,
            "flags": self.flags,
        }


def score_spread(scores, bins="fd") -> ScoreSummary:
    """Summarize how well scores differentiate candidate allocations.

    Quartiles use the type-7 (linear interpolation) convention; histogram
    bins default to Freedman-Diaconis. Scores of +inf are tallied separately
    so histogram counts plus the overflow equal the pool size. Flags low
    discrimination when the finite scores take fewer than 10 distinct values
    or the IQR is zero.
    """
    scores = np.asarray(scores, dtype=float)
    finite = scores[np.isfinite(scores)]
    if finite.size == 0:
        raise ValidationError("all scores are infinite; nothing to summarize")
    q1, q2, q3 = np.percentile(finite, [25, 50, 75])
    distinct = int(np.unique(finite).size)
    if finite.min() == finite.max():
        edges = np.array([finite.min() - 0.5, finite.max() + 0.5])
    else:
        edges = np.histogram_bin_edges(finite, bins=bins)
    counts, _ = np.histogram(finite, bins=edges)
    flags = []
    low = False
    if distinct < LOW_DISTINCT:
        low = True
        flags.append(f"only {distinct} distinct finite scores")
    if q3 - q1 == 0:
        low = True
        flags.append("zero interquartile range")
    return ScoreSummary(
        n=scores.size,
        n_finite=int(finite.size),
        minimum=float(finite.min()),
        maximum=float(finite.max()),
        quartiles=(float(q1), float(q2), float(q3)),
        distinct=distinct,
        histogram=Histogram(edges, counts, overflow_inf=int(scores.size - finite.size)),
        low_discrimination=low,
        flags=flags,
    )


@dataclass
class CorrelationSummary:
    values: np.ndarray  # one per unit pair
    mean: float
    histogram: Histogram
    n_degenerate_pairs: int
    degenerate_units: np.ndarray
    flags: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "mean": self.mean,
            "histogram": self.histogram.to_dict(),
            "n_pairs": int(self.values.size),
            "n_degenerate_pairs": self.n_degenerate_pairs,
            "degenerate_units": np.asarray(self.degenerate_units, dtype=int).tolist(),
            "flags": self.flags,
        }


def pairwise_assignment_correlation(
    design, cmap: Optional[ClusterMap] = None, bins: int = 40
) -> CorrelationSummary:
    """How coupled unit assignments are across the accepted set.

    Binary arms: Pearson correlation of the two units' treatment indicators
    across accepted allocations. Multi-arm: co-assignment rate centered at
    the complete-randomization baseline (n/k - 1)/(n - 1). Units whose
    assignment never varies make correlations undefined; their pairs are
    reported as +/-1 by co-assignment direction and flagged, since frozen
    units are the over-restriction signal.
    """
    if isinstance(design, AcceptedDesign):
        z = design.accepted_unit_matrix(cmap)
        k = design.pool.k
    else:
        z = np.asarray(design, dtype=np.int64)
        k = int(z.max()) + 1 if z.size else 2
    if z.shape[0] < 2:
        raise ValidationError("need at least 2 accepted allocations")
    m, n = z.shape

    degenerate_units = np.flatnonzero((z == z[0]).all(axis=0))
    iu, ju = np.triu_indices(n, k=1)
    if k == 2:
        zf = z.astype(float)
        centered = zf - zf.mean(axis=0)
        sd = zf.std(axis=0)
        cov = (centered[:, iu] * centered[:, ju]).mean(axis=0)
        with np.errstate(divide="ignore", invalid="ignore"):
            values = cov / (sd[iu] * sd[ju])
        co_rate = (z[:, iu] == z[:, ju]).mean(axis=0)
        undefined = ~np.isfinite(values)
        values[undefined] = np.where(co_rate[undefined] >= 0.5, 1.0, -1.0)
        n_degenerate = int(undefined.sum())
    else:
        baseline = (n / k - 1) / (n - 1)
        co_rate = (z[:, iu] == z[:, ju]).mean(axis=0)
        values = co_rate - baseline
        frozen = np.zeros(n, dtype=bool)
        frozen[degenerate_units] = True
        n_degenerate = int((frozen[iu] | frozen[ju]).sum())

    flags = []
    if degenerate_units.size:
        flags.append(
            f"{degenerate_units.size} unit(s) constantly assigned across the accepted set"
        )
    lo, hi = min(-1.0, values.min()), max(1.0, values.max())
    edges = np.linspace(lo, hi, bins + 1)
    counts, _ = np.histogram(values, bins=edges)
    return CorrelationSummary(
        values=values,
        mean=float(values.mean()),
        histogram=Histogram(edges, counts),
        n_degenerate_pairs=n_degenerate,
        degenerate_units=degenerate_units,
        flags=flags,
    )


@dataclass
class TradeoffGrid:
    x_edges: np.ndarray
    y_edges: np.ndarray
    counts: np.ndarray
    accepted_counts: Optional[np.ndarray] = None
    n_dropped_nonfinite: int = 0

    def to_dict(self) -> dict:
        return {
            "x_edges": np.asarray(self.x_edges, dtype=float).tolist(),
            "y_edges": np.asarray(self.y_edges, dtype=float).tolist(),
            "counts": np.asarray(self.counts, dtype=int).tolist(),
            "accepted_counts": None
            if self.accepted_counts is None
            else np.asarray(self.accepted_counts, dtype=int).tolist(),
            "n_dropped_nonfinite": self.n_dropped_nonfinite,
        }


def tradeoff_grid(
    scores_a,
    scores_b,
    bins: int = 30,
    accept_mask: Optional[np.ndarray] = None,
) -> TradeoffGrid:
    """2-D histogram of two metrics over the pool, for trade-off inspection.

    Optionally overlays the accepted set as a second count grid on the same
    edges. Allocations with a non-finite score on either axis are dropped
    and tallied.
    """
    a = np.asarray(scores_a, dtype=float)
    b = np.asarray(scores_b, dtype=float)
    if a.shape != b.shape:
        raise ValidationError("score vectors must have equal length")
    ok = np.isfinite(a) & np.isfinite(b)
    dropped = int((~ok).sum())
    if not ok.any():
        raise ValidationError("no allocation has finite scores on both axes")
    counts, x_edges, y_edges = np.histogram2d(a[ok], b[ok], bins=bins)
    accepted_counts = None
    if accept_mask is not None:
        accept_mask = np.asarray(accept_mask, dtype=bool)
        sel = ok & accept_mask
        accepted_counts, _, _ = np.histogram2d(a[sel], b[sel], bins=(x_edges, y_edges))
    return TradeoffGrid(x_edges, y_edges, counts, accepted_counts, dropped)


@dataclass
class DiagnosticsReport:
    """Everything the evaluation step inspects before locking a design."""

    score_summary: ScoreSummary
    correlation: Optional[CorrelationSummary]
    tradeoffs: dict[str, TradeoffGrid]
    n_pool: int
    n_accepted: int
    threshold: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "score_summary": self.score_summary.to_dict(),
            "correlation": None if self.correlation is None else self.correlation.to_dict(),
            "tradeoffs": {k: v.to_dict() for k, v in self.tradeoffs.items()},
            "n_pool": self.n_pool,
            "n_accepted": self.n_accepted,
            "threshold": self.threshold,
        }


def diagnose(
    design: AcceptedDesign,
    cmap: Optional[ClusterMap] = None,
    metric_names: Optional[list[str]] = None,
) -> DiagnosticsReport:
    """Full diagnostics for a restricted design."""
    summary = score_spread(design.scores)
    correlation = None
    if design.n_accepted >= 2:
        correlation = pairwise_assignment_correlation(design, cmap)
    tradeoffs = {}
    ms = design.metric_scores
    if ms is not None and ms.shape[1] >= 2:
        names = metric_names or (
            design.fitness.metric_names() if design.fitness else None
        ) or [f"m{j}" for j in range(ms.shape[1])]
        for i in range(ms.shape[1]):
            for j in range(i + 1, ms.shape[1]):
                key = f"{names[i]}__vs__{names[j]}"
                tradeoffs[key] = tradeoff_grid(ms[:, i], ms[:, j], accept_mask=design.accept_mask)
    return DiagnosticsReport(
        score_summary=summary,
        correlation=correlation,
        tradeoffs=tradeoffs,
        n_pool=len(design.pool),
        n_accepted=design.n_accepted,
        threshold=design.threshold,
    )
