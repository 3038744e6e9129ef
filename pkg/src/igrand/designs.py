"""Randomization designs with an estimator-style API.

Each design is configured in ``__init__`` (``get_params``/``set_params``
compatible), realized against data with ``fit``, and afterwards exposes the
restricted assignment mechanism as ``design_`` plus convenience accessors.
``fit`` never mutates its inputs; refitting with different parameters is the
supported way to adapt a design during evaluation.

    design = InspectionGuidedDesign(
        metrics=[MaxMahalanobis(exclude_salient=False)],
        m_pool=10_000, m_accept=500, seed=7,
    ).fit(x)
    design.lock()
    z_obs = design.sample()
"""

from __future__ import annotations

import inspect
from typing import Optional, Sequence

import numpy as np

from .diagnostics import DiagnosticsReport, diagnose
from .fitness import (
    AcceptedDesign,
    FitnessConfig,
    RestrictionRule,
    add_mirrors,
    draw_official,
    restrict,
)
from .genetic import GaConfig, evolve
from .metrics import ExposureSpec, Metric, MetricContext, metric_from_dict
from .pools import dedup, enumerate_cluster, enumerate_complete, enumerate_group_formation
from .rng import RngSpec
from .types import ClusterMap, CovariateMatrix, Pool, ValidationError
from .validation import check_adjacency, check_coords, check_covariates

BASES = ("complete", "cluster", "group_formation")


class BaseDesign:
    """Parameter handling shared by every design (estimator conventions)."""

    @classmethod
    def _param_names(cls) -> list[str]:
        sig = inspect.signature(cls.__init__)
        return [
            p.name
            for p in sig.parameters.values()
            if p.name != "self" and p.kind in (p.POSITIONAL_OR_KEYWORD, p.KEYWORD_ONLY)
        ]

    def get_params(self, deep: bool = True) -> dict:
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params) -> "BaseDesign":
        valid = set(self._param_names())
        for name, value in params.items():
            if name not in valid:
                raise ValidationError(
                    f"invalid parameter {name!r} for {type(self).__name__}; valid: {sorted(valid)}"
                )
            setattr(self, name, value)
        return self

    def __repr__(self) -> str:
        args = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({args})"

    # -- fitted-state helpers ------------------------------------------------

    def _require_fitted(self) -> AcceptedDesign:
        design = getattr(self, "design_", None)
        if design is None:
            raise ValidationError(f"{type(self).__name__} is not fitted yet; call fit() first")
        return design

    def lock(self) -> "BaseDesign":
        self._require_fitted().lock()
        return self

    def sample(self, rng: Optional[RngSpec] = None):
        """Draw the official allocation (requires a locked design)."""
        design = self._require_fitted()
        rng = rng or self._rng().child(2)
        return draw_official(design, rng)

    def diagnose(self) -> DiagnosticsReport:
        return diagnose(self._require_fitted(), cmap=getattr(self, "cluster_map_", None))

    def _rng(self) -> RngSpec:
        return RngSpec(seed=self.seed, stream=self.stream)


def _accept_all(pool: Pool) -> AcceptedDesign:
    m = len(pool)
    return AcceptedDesign(
        pool=pool,
        scores=np.zeros(m),
        accept_mask=np.ones(m, dtype=bool),
        probabilities=np.full(m, 1.0 / m),
        provenance=dict(pool.provenance),
    )


class CompleteRandomization(BaseDesign):
    """Unrestricted complete randomization: every draw is accepted.

    ``deduplicate=False`` keeps the pool as i.i.d. draws from the mechanism,
    which is what benchmark comparisons re-run over.
    """

    def __init__(self, k: int = 2, m_pool: int = 1000, deduplicate: bool = False, seed: int = 0, stream: int = 0):
        self.k = k
        self.m_pool = m_pool
        self.deduplicate = deduplicate
        self.seed = seed
        self.stream = stream

    def fit(self, x=None, n: Optional[int] = None) -> "CompleteRandomization":
        if n is None:
            if x is None:
                raise ValidationError("provide covariates or an explicit unit count")
            n = check_covariates(x).n_units
        pool = enumerate_complete(n, self.k, self.m_pool, self._rng().child(0))
        if self.deduplicate:
            pool = dedup(pool)
        self.pool_ = pool
        self.design_ = _accept_all(pool)
        self.cluster_map_ = None
        return self


class ClusterRandomization(BaseDesign):
    """Complete randomization at the cluster level; units inherit cluster arms."""

    def __init__(self, k: int = 2, m_pool: int = 1000, deduplicate: bool = False, seed: int = 0, stream: int = 0):
        self.k = k
        self.m_pool = m_pool
        self.deduplicate = deduplicate
        self.seed = seed
        self.stream = stream

    def fit(self, clusters: ClusterMap) -> "ClusterRandomization":
        pool = enumerate_cluster(clusters, self.k, self.m_pool, self._rng().child(0))
        if self.deduplicate:
            pool = dedup(pool)
        self.pool_ = pool
        self.design_ = _accept_all(pool)
        self.cluster_map_ = clusters
        return self


class GroupFormationRandomization(BaseDesign):
    """Blocked group formation: requested compositions hold by construction."""

    def __init__(
        self,
        comps: Sequence[float] = (0.5,),
        group_size: int = 2,
        m_pool: int = 1000,
        deduplicate: bool = False,
        seed: int = 0,
        stream: int = 0,
    ):
        self.comps = comps
        self.group_size = group_size
        self.m_pool = m_pool
        self.deduplicate = deduplicate
        self.seed = seed
        self.stream = stream

    def fit(self, x) -> "GroupFormationRandomization":
        x = check_covariates(x)
        pool = enumerate_group_formation(
            x, list(self.comps), self.group_size, self.m_pool, self._rng().child(0)
        )
        if self.deduplicate:
            pool = dedup(pool)
        self.pool_ = pool
        self.design_ = _accept_all(pool)
        self.cluster_map_ = None
        self.x_ = x
        return self


class InspectionGuidedDesign(BaseDesign):
    """Restricted randomization driven by inspection metrics.

    Enumerates a candidate pool with the configured base mechanism
    (optionally refined by a genetic search), scores every candidate with
    the configured metrics, aggregates to a fitness value, accepts the
    ``m_accept`` best, and (by default) closes the accepted set under arm
    mirroring. The fitted ``design_`` is the restricted assignment
    mechanism, ready for diagnosis, pre-registration, and the official draw.

    ``aggregator="auto"`` resolves to gated when a gate metric is present,
    weighted_sum when weights are given, and identity for a single metric.
    """

    def __init__(
        self,
        metrics: Sequence[Metric] = (),
        weights: Optional[Sequence[float]] = None,
        aggregator: str = "auto",
        normalization: str = "pool_minmax",
        base: str = "complete",
        k: int = 2,
        m_pool: int = 10_000,
        m_accept: int = 500,
        rule: str = "threshold_percentile",
        comps: Optional[Sequence[float]] = None,
        group_size: Optional[int] = None,
        exposure: Optional[ExposureSpec] = None,
        mirrors: bool = True,
        mirror_group: str = "auto",
        ga: Optional[GaConfig] = None,
        seed: int = 0,
        stream: int = 0,
    ):
        self.metrics = metrics
        self.weights = weights
        self.aggregator = aggregator
        self.normalization = normalization
        self.base = base
        self.k = k
        self.m_pool = m_pool
        self.m_accept = m_accept
        self.rule = rule
        self.comps = comps
        self.group_size = group_size
        self.exposure = exposure
        self.mirrors = mirrors
        self.mirror_group = mirror_group
        self.ga = ga
        self.seed = seed
        self.stream = stream

    def _fitness(self) -> FitnessConfig:
        metrics = [m if isinstance(m, Metric) else metric_from_dict(m) for m in self.metrics]
        if not metrics:
            raise ValidationError("an inspection-guided design needs at least one metric")
        aggregator = self.aggregator
        if aggregator == "auto":
            if any(m.is_gate for m in metrics):
                aggregator = "gated"
            elif self.weights is not None:
                aggregator = "weighted_sum"
            else:
                aggregator = "identity"
        weights = list(self.weights) if self.weights is not None else None
        return FitnessConfig(
            metrics=metrics,
            weights=weights,
            aggregator=aggregator,
            normalization=self.normalization,
        )

    def _enumerate(self, x, clusters, n) -> Pool:
        rng = self._rng().child(0)
        if self.base == "complete":
            if n is None:
                if x is None:
                    raise ValidationError("base='complete' needs covariates or a unit count")
                n = x.n_units
            return dedup(enumerate_complete(n, self.k, self.m_pool, rng))
        if self.base == "cluster":
            if clusters is None:
                raise ValidationError("base='cluster' needs a ClusterMap")
            return dedup(enumerate_cluster(clusters, self.k, self.m_pool, rng))
        if self.base == "group_formation":
            if x is None or self.comps is None or self.group_size is None:
                raise ValidationError("base='group_formation' needs covariates, comps, group_size")
            return dedup(
                enumerate_group_formation(x, list(self.comps), self.group_size, self.m_pool, rng)
            )
        raise ValidationError(f"base must be one of {BASES}")

    def fit(
        self,
        x=None,
        *,
        clusters: Optional[ClusterMap] = None,
        adjacency: Optional[np.ndarray] = None,
        coords: Optional[np.ndarray] = None,
        n: Optional[int] = None,
        pool: Optional[Pool] = None,
    ) -> "InspectionGuidedDesign":
        if x is not None:
            x = check_covariates(x)
        ctx = MetricContext(
            covariates=x,
            cluster_map=clusters,
            adjacency=None if adjacency is None else check_adjacency(adjacency),
            coords=None if coords is None else check_coords(coords),
            comps=None if self.comps is None else list(self.comps),
            exposure=self.exposure or ExposureSpec(),
        )
        fitness = self._fitness()
        pool = pool if pool is not None else self._enumerate(x, clusters, n)
        if self.ga is not None:
            pool = evolve(pool, fitness, ctx, self.ga, self._rng().child(1))

        metric_matrix = fitness.score_metrics(pool, ctx)
        _, bounds = fitness.normalize(metric_matrix)
        scores = fitness.aggregate_matrix(metric_matrix, bounds=bounds)
        design = restrict(
            pool,
            scores,
            RestrictionRule(self.rule, self.m_accept),
            fitness=fitness,
            metric_scores=metric_matrix,
        )
        if self.mirrors:
            # appended mirrors get true scores, normalized on the pool's bounds
            design = add_mirrors(
                design,
                mirror_group=self.mirror_group,
                rescore=lambda p: fitness.aggregate_matrix(
                    fitness.score_metrics(p, ctx), bounds=bounds
                ),
            )
            if len(design.pool) > metric_matrix.shape[0]:
                tail = design.pool.take(range(metric_matrix.shape[0], len(design.pool)))
                metric_matrix = np.vstack([metric_matrix, fitness.score_metrics(tail, ctx)])
            design.metric_scores = metric_matrix
        self.ctx_ = ctx
        self.fitness_ = fitness
        self.pool_ = design.pool
        self.metric_scores_ = design.metric_scores
        self.scores_ = design.scores
        self.design_ = design
        self.cluster_map_ = clusters
        return self
