"""Inspection metrics.

Each metric maps one candidate allocation plus side data to a scalar where
smaller is better. Two call surfaces are provided: per-allocation functions
mirroring the math, and pool scorers (``score_pool``) vectorized over an
entire candidate pool for production use. All metrics are pure functions of
immutable inputs, so pool scoring is safe under any degree of parallelism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.spatial import cKDTree

from .types import (
    Allocation,
    AllocationPool,
    ClusterMap,
    CovariateMatrix,
    GroupDesign,
    GroupDesignPool,
    Pool,
    ValidationError,
)
from .validation import check_adjacency, check_coords

COMP_TOL = 1e-9


@dataclass(frozen=True)
class ExposureSpec:
    """Declares when a unit counts as exposed through its neighbors.

    ``one_neighbor``: exposed if any neighbor is treated.
    ``fraction_q``: exposed if treated neighbors exceed q * degree (strict),
    so isolated units are never exposed.
    """

    kind: str = "one_neighbor"
    q: float = 0.0

    def __post_init__(self):
        if self.kind not in ("one_neighbor", "fraction_q"):
            raise ValidationError(f"unknown exposure kind {self.kind!r}")
        if self.kind == "fraction_q" and not 0.0 <= self.q < 1.0:
            raise ValidationError("q must lie in [0, 1)")

    def exposed(self, z_matrix: np.ndarray, adjacency: np.ndarray) -> np.ndarray:
        """Boolean (M, N) exposure indicators for unit-level treatment rows."""
        z = np.asarray(z_matrix, dtype=float)
        treated_neighbors = z @ adjacency
        if self.kind == "one_neighbor":
            return treated_neighbors > 0
        degree = adjacency.sum(axis=0)
        return treated_neighbors > self.q * degree

    def to_dict(self) -> dict:
        return {"kind": self.kind, "q": float(self.q)}

    @classmethod
    def from_dict(cls, d: dict) -> "ExposureSpec":
        return cls(kind=d.get("kind", "one_neighbor"), q=float(d.get("q", 0.0)))


@dataclass
class MetricContext:
    """Side data that metrics may require, bundled once per design session."""

    covariates: Optional[CovariateMatrix] = None
    cluster_map: Optional[ClusterMap] = None
    adjacency: Optional[np.ndarray] = None
    coords: Optional[np.ndarray] = None
    comps: Optional[Sequence[float]] = None
    exposure: ExposureSpec = field(default_factory=ExposureSpec)

    def require(self, name: str):
        value = getattr(self, name)
        if value is None:
            raise ValidationError(f"metric requires {name} but none was provided")
        return value


# ---------------------------------------------------------------------------
# Cell statistics shared by the balance metrics.
# Cells are treatment arms for plain allocations and groups for group designs.
# ---------------------------------------------------------------------------


def _pool_cells(pool: Pool, cmap: Optional[ClusterMap]) -> tuple[np.ndarray, int]:
    """Unit-level cell labels (M, N) and cell count for a pool."""
    if isinstance(pool, GroupDesignPool):
        return pool.group_of, pool.n_groups
    return pool.unit_matrix(cmap), pool.k


def _cell_moments(cells: np.ndarray, n_cells: int, x: np.ndarray):
    """Per-row cell means, sample variances, and counts via segment sums.

    cells: (M, N) integer cell labels; x: (N, p) covariates.
    Returns (means, variances, counts) with shapes (M, C, p), (M, C, p), (M, C).
    """
    m, n = cells.shape
    p = x.shape[1]
    seg = (cells + n_cells * np.arange(m, dtype=np.int64)[:, None]).ravel()
    counts = np.bincount(seg, minlength=m * n_cells).reshape(m, n_cells)
    sums = np.empty((m, n_cells, p))
    sumsq = np.empty((m, n_cells, p))
    for j in range(p):
        col = np.broadcast_to(x[:, j], (m, n)).ravel()
        sums[:, :, j] = np.bincount(seg, weights=col, minlength=m * n_cells).reshape(m, n_cells)
        sumsq[:, :, j] = np.bincount(seg, weights=col * col, minlength=m * n_cells).reshape(
            m, n_cells
        )
    if (counts < 2).any():
        raise ValidationError("every arm/group must have at least 2 members")
    cnt = counts[:, :, None]
    means = sums / cnt
    variances = np.maximum(sumsq - cnt * means**2, 0.0) / (cnt - 1)
    return means, variances, counts


def _sum_max_abs_smd(means: np.ndarray, variances: np.ndarray) -> np.ndarray:
    """Per covariate, max |standardized mean difference| over cell pairs; summed."""
    m, c, p = means.shape
    best = np.zeros((m, p))
    for h1 in range(c):
        for h2 in range(h1 + 1, c):
            diff = np.abs(means[:, h1] - means[:, h2])
            denom = np.sqrt(variances[:, h1] + variances[:, h2])
            with np.errstate(divide="ignore", invalid="ignore"):
                smd = diff / denom
            # Zero variance in both cells: 0 when means agree, +inf otherwise.
            degenerate = denom == 0
            smd[degenerate & (diff == 0)] = 0.0
            smd[degenerate & (diff > 0)] = np.inf
            np.maximum(best, smd, out=best)
    return best.sum(axis=1)


def _covariance_inverse(x: np.ndarray, ridge: float = 1e-8) -> np.ndarray:
    """Inverse sample covariance, ridge-regularized if singular."""
    s = np.cov(x, rowvar=False, ddof=1)
    s = np.atleast_2d(s)
    p = s.shape[0]
    try:
        return np.linalg.inv(s)
    except np.linalg.LinAlgError:
        pass
    lam = ridge * np.trace(s) / p
    try:
        return np.linalg.inv(s + lam * np.eye(p))
    except np.linalg.LinAlgError:
        raise ValidationError("covariance matrix is singular even after ridge regularization")


def _max_mahalanobis(means: np.ndarray, s_inv: np.ndarray) -> np.ndarray:
    m, c, _ = means.shape
    best = np.zeros(m)
    for h1 in range(c):
        for h2 in range(h1 + 1, c):
            d = means[:, h1] - means[:, h2]
            np.maximum(best, np.einsum("mp,pq,mq->m", d, s_inv, d), out=best)
    return best


# ---------------------------------------------------------------------------
# Metric classes: bindable to a context, scoring pools vectorized.
# ---------------------------------------------------------------------------


class Metric:
    """Base class: a named, parameterized inspection metric."""

    name: str = ""
    #: gate metrics return {0, 1} with 1 = pass; used by the gated aggregator
    is_gate: bool = False

    def get_params(self) -> dict:
        return {}

    def to_dict(self) -> dict:
        return {"name": self.name, "params": self.get_params()}

    def score_pool(self, pool: Pool, ctx: MetricContext) -> np.ndarray:
        raise NotImplementedError

    def score(self, alloc, ctx: MetricContext) -> float:
        return float(self.score_pool(_as_pool(alloc), ctx)[0])


def _as_pool(alloc) -> Pool:
    if isinstance(alloc, (AllocationPool, GroupDesignPool)):
        return alloc
    if isinstance(alloc, GroupDesign):
        return GroupDesignPool(alloc.group_of[None, :], alloc.arm_of_group[None, :], k=alloc.k)
    if isinstance(alloc, Allocation):
        return AllocationPool(alloc.labels[None, :], k=alloc.k, level=alloc.level)
    raise ValidationError(f"cannot interpret {type(alloc).__name__} as an allocation")


class SumMaxAbsSmd(Metric):
    """Sum over covariates of the worst pairwise standardized mean difference."""

    name = "sum_max_abs_smd"

    def __init__(self, exclude_salient: bool = True):
        self.exclude_salient = exclude_salient

    def get_params(self) -> dict:
        return {"exclude_salient": self.exclude_salient}

    def score_pool(self, pool: Pool, ctx: MetricContext) -> np.ndarray:
        x = ctx.require("covariates")
        cells, n_cells = _pool_cells(pool, ctx.cluster_map)
        means, variances, _ = _cell_moments(cells, n_cells, x.metric_matrix(self.exclude_salient))
        return _sum_max_abs_smd(means, variances)


class MaxMahalanobis(Metric):
    """Worst pairwise Mahalanobis distance between cell covariate means."""

    name = "max_mahalanobis"

    def __init__(self, exclude_salient: bool = True):
        self.exclude_salient = exclude_salient

    def get_params(self) -> dict:
        return {"exclude_salient": self.exclude_salient}

    def score_pool(self, pool: Pool, ctx: MetricContext) -> np.ndarray:
        x = ctx.require("covariates")
        xm = x.metric_matrix(self.exclude_salient)
        cells, n_cells = _pool_cells(pool, ctx.cluster_map)
        means, _, _ = _cell_moments(cells, n_cells, xm)
        return _max_mahalanobis(means, _covariance_inverse(xm))


class DesiredComps(Metric):
    """Gate: 1 iff every group composition is requested and each requested
    composition has at least one treated and one control group."""

    name = "desired_comps"
    is_gate = True

    def score_pool(self, pool: Pool, ctx: MetricContext) -> np.ndarray:
        if not isinstance(pool, GroupDesignPool):
            raise ValidationError("desired_comps applies to group designs")
        x = ctx.require("covariates")
        comps = np.asarray(ctx.require("comps"), dtype=float)
        salient = x.salient_vector().astype(float)
        m = len(pool)
        n_groups = pool.n_groups
        seg = (pool.group_of + n_groups * np.arange(m, dtype=np.int64)[:, None]).ravel()
        counts = np.bincount(seg, minlength=m * n_groups).reshape(m, n_groups)
        on = np.bincount(
            seg, weights=np.broadcast_to(salient, pool.group_of.shape).ravel(), minlength=m * n_groups
        ).reshape(m, n_groups)
        rho = on / counts  # (M, G)

        matches = np.abs(rho[:, :, None] - comps[None, None, :]) < COMP_TOL  # (M, G, L)
        all_known = matches.any(axis=2).all(axis=1)
        treated = pool.arm_of_group[:, :, None] > 0
        gamma1 = (matches & treated).sum(axis=1)
        gamma0 = (matches & ~treated).sum(axis=1)
        covered = ((gamma0 > 0) & (gamma1 > 0)).all(axis=1)
        return (all_known & covered).astype(float)


class FracCtrlExposed(Metric):
    """Fraction of control units exposed to treatment through the network."""

    name = "frac_ctrl_exposed"

    def __init__(self, exposure: Optional[ExposureSpec] = None):
        self.exposure = exposure

    def get_params(self) -> dict:
        return {"exposure": self.exposure.to_dict() if self.exposure else None}

    def score_pool(self, pool: Pool, ctx: MetricContext) -> np.ndarray:
        adjacency = check_adjacency(ctx.require("adjacency"))
        exposure = self.exposure or ctx.exposure
        if pool.k != 2:
            raise ValidationError("frac_ctrl_exposed requires binary arms")
        z = pool.unit_matrix(ctx.cluster_map).astype(float)
        n_control = (1 - z).sum(axis=1)
        if (n_control == 0).any():
            raise ValidationError("allocation with zero control units")
        exposed = exposure.exposed(z, adjacency)
        return (exposed * (1 - z)).sum(axis=1) / n_control


class InvMinEuclidean(Metric):
    """Reciprocal of the smallest squared distance between opposite arms.

    Co-located cross-arm pairs yield +inf by definition, not an error. For
    small problems the full pairwise squared-distance matrix is scanned; for
    larger ones a KD-tree nearest-cross-pair search is used.
    """

    name = "inv_min_euclidean"

    _DENSE_LIMIT = 1024

    def score_pool(self, pool: Pool, ctx: MetricContext) -> np.ndarray:
        if isinstance(pool, GroupDesignPool):
            raise ValidationError("inv_min_euclidean applies to unit or cluster allocations")
        if pool.k != 2:
            raise ValidationError("inv_min_euclidean requires binary arms")
        n = pool.labels.shape[1]
        coords = check_coords(ctx.require("coords"), n)
        labels = pool.labels
        if ((labels.sum(axis=1) == 0) | (labels.sum(axis=1) == n)).any():
            raise ValidationError("both arms must be non-empty")
        if n <= self._DENSE_LIMIT:
            diff = coords[:, None, :] - coords[None, :, :]
            sq = np.einsum("ijk,ijk->ij", diff, diff)
            out = np.empty(len(pool))
            for i, z in enumerate(labels):
                t = z == 1
                out[i] = sq[np.ix_(t, ~t)].min()
        else:
            out = np.empty(len(pool))
            for i, z in enumerate(labels):
                t = z == 1
                tree = cKDTree(coords[~t])
                d, _ = tree.query(coords[t], k=1)
                out[i] = float(np.min(d)) ** 2
        with np.errstate(divide="ignore"):
            return 1.0 / out


_METRICS = {
    cls.name: cls for cls in (SumMaxAbsSmd, MaxMahalanobis, DesiredComps, FracCtrlExposed, InvMinEuclidean)
}


def metric_from_dict(d: dict) -> Metric:
    name = d["name"]
    if name not in _METRICS:
        raise ValidationError(f"unknown metric {name!r}; known: {sorted(_METRICS)}")
    params = dict(d.get("params") or {})
    if name == "frac_ctrl_exposed" and params.get("exposure"):
        params["exposure"] = ExposureSpec.from_dict(params["exposure"])
    return _METRICS[name](**{k: v for k, v in params.items() if v is not None})


# ---------------------------------------------------------------------------
# Per-allocation convenience functions mirroring the math.
# ---------------------------------------------------------------------------


def composition(gd: GroupDesign, x: CovariateMatrix, group: int) -> float:
    """Fraction of a group's members possessing the salient attribute."""
    salient = x.salient_vector()
    members = gd.group_of == group
    if not members.any():
        raise ValidationError(f"group {group} is empty")
    return float(salient[members].mean())


def smd_summaxabs(alloc, x: CovariateMatrix, exclude_salient: bool = True, cmap=None) -> float:
    ctx = MetricContext(covariates=x, cluster_map=cmap)
    return SumMaxAbsSmd(exclude_salient=exclude_salient).score(alloc, ctx)


def mahalanobis_max(alloc, x: CovariateMatrix, exclude_salient: bool = True, cmap=None) -> float:
    ctx = MetricContext(covariates=x, cluster_map=cmap)
    return MaxMahalanobis(exclude_salient=exclude_salient).score(alloc, ctx)


def desired_comps(gd: GroupDesign, x: CovariateMatrix, comps: Sequence[float]) -> float:
    ctx = MetricContext(covariates=x, comps=list(comps))
    return DesiredComps().score(gd, ctx)


def frac_ctrl_exposed(alloc, adjacency: np.ndarray, exposure: ExposureSpec, cmap=None) -> float:
    ctx = MetricContext(adjacency=adjacency, cluster_map=cmap, exposure=exposure)
    return FracCtrlExposed(exposure=exposure).score(alloc, ctx)


def inv_min_euclidean(alloc, coords: np.ndarray) -> float:
    ctx = MetricContext(coords=coords)
    return InvMinEuclidean().score(alloc, ctx)
