"""Fitness aggregation, restriction, mirror closure, and the official draw.

The restricted assignment mechanism is represented by :class:`AcceptedDesign`:
the candidate pool, per-allocation fitness scores, the acceptance mask, and
uniform probabilities over the accepted set, plus provenance sufficient to
reproduce all of it from seeds. Once locked (digest computed) the design is
immutable and the official randomization may be drawn.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Optional, Sequence

import numpy as np

from .metrics import Metric, MetricContext, metric_from_dict
from .rng import RngSpec
from .types import AllocationPool, GroupDesignPool, Pool, ValidationError

AGGREGATORS = ("weighted_sum", "gated", "identity")
NORMALIZATIONS = ("none", "pool_minmax")


@dataclass
class FitnessConfig:
    """How per-metric scores combine into one fitness value (smaller = better)."""

    metrics: list[Metric]
    weights: Optional[list[float]] = None
    aggregator: str = "identity"
    normalization: str = "pool_minmax"

    def __post_init__(self):
        if self.aggregator not in AGGREGATORS:
            raise ValidationError(f"aggregator must be one of {AGGREGATORS}")
        if self.normalization not in NORMALIZATIONS:
            raise ValidationError(f"normalization must be one of {NORMALIZATIONS}")
        if self.aggregator == "weighted_sum":
            if self.weights is None or len(self.weights) != len(self.metrics):
                raise ValidationError("weighted_sum needs one weight per metric")
            w = np.asarray(self.weights, dtype=float)
            if (w < 0).any() or w.sum() <= 0:
                raise ValidationError("weights must be >= 0 and sum to > 0")
        elif self.aggregator == "gated":
            gates = [m for m in self.metrics if m.is_gate]
            scored = [m for m in self.metrics if not m.is_gate]
            if len(gates) != 1 or len(scored) != 1:
                raise ValidationError("gated aggregation needs exactly one gate and one score metric")
        elif self.aggregator == "identity":
            if len(self.metrics) != 1:
                raise ValidationError("identity aggregation takes exactly one metric")

    def metric_names(self) -> list[str]:
        return [m.name for m in self.metrics]

    def score_metrics(self, pool: Pool, ctx: MetricContext) -> np.ndarray:
        """Raw per-metric score matrix, one column per metric."""
        return np.column_stack([m.score_pool(pool, ctx) for m in self.metrics])

    def normalize(self, matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Pool min-max bounds per metric; +/-inf entries are left infinite."""
        bounds = np.empty((matrix.shape[1], 2))
        for j in range(matrix.shape[1]):
            finite = matrix[np.isfinite(matrix[:, j]), j]
            if finite.size == 0:
                bounds[j] = (0.0, 0.0)
            else:
                bounds[j] = (finite.min(), finite.max())
        return self._apply_bounds(matrix, bounds), bounds

    @staticmethod
    def _apply_bounds(matrix: np.ndarray, bounds: np.ndarray) -> np.ndarray:
        out = matrix.astype(float).copy()
        for j in range(matrix.shape[1]):
            lo, hi = bounds[j]
            col = out[:, j]
            finite = np.isfinite(col)
            col[finite] = (col[finite] - lo) / (hi - lo) if hi > lo else 0.0
        return out

    def aggregate_matrix(self, matrix: np.ndarray, bounds: Optional[np.ndarray] = None) -> np.ndarray:
        """Fitness per pool row from the raw per-metric score matrix.

        With pool min-max normalization, ``bounds`` fixes the normalization
        range (as computed on the enumerated pool); by default the bounds of
        ``matrix`` itself are used.
        """
        matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
        if matrix.shape[1] != len(self.metrics):
            raise ValidationError("score matrix width does not match metric count")
        if self.aggregator == "identity":
            return matrix[:, 0].copy()
        if self.aggregator == "gated":
            gate_idx = next(i for i, m in enumerate(self.metrics) if m.is_gate)
            score_idx = 1 - gate_idx
            out = matrix[:, score_idx].copy()
            out[matrix[:, gate_idx] != 1.0] = np.inf
            return out
        # weighted_sum
        values = matrix
        if self.normalization == "pool_minmax":
            if bounds is None:
                values, _ = self.normalize(matrix)
            else:
                values = self._apply_bounds(matrix, np.asarray(bounds, dtype=float))
        out = np.zeros(values.shape[0])
        for j, w in enumerate(self.weights):
            if w == 0:
                continue
            col = values[:, j]
            out = out + w * np.where(np.isinf(col), np.inf, col)
        return out

    def to_dict(self) -> dict:
        return {
            "metrics": [m.to_dict() for m in self.metrics],
            "weights": None if self.weights is None else [float(w) for w in self.weights],
            "aggregator": self.aggregator,
            "normalization": self.normalization,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FitnessConfig":
        return cls(
            metrics=[metric_from_dict(m) for m in d["metrics"]],
            weights=d.get("weights"),
            aggregator=d.get("aggregator", "identity"),
            normalization=d.get("normalization", "pool_minmax"),
        )


def aggregate(scores: Sequence[float], cfg: FitnessConfig, bounds: Optional[np.ndarray] = None) -> float:
    """Combine one allocation's per-metric scores into its fitness value.

    With pool min-max normalization, pass the pool ``bounds`` recorded during
    pool scoring; a single allocation carries no pool to normalize against.
    """
    row = np.asarray(scores, dtype=float)[None, :]
    if cfg.aggregator == "weighted_sum" and cfg.normalization == "pool_minmax" and bounds is not None:
        row = cfg._apply_bounds(row, np.asarray(bounds, dtype=float))
        plain = FitnessConfig(cfg.metrics, cfg.weights, cfg.aggregator, "none")
        return float(plain.aggregate_matrix(row)[0])
    return float(cfg.aggregate_matrix(row)[0])


@dataclass
class RestrictionRule:
    """Accept the m_accept best-scoring allocations.

    ``threshold_percentile`` records the score cutoff at the (100*m/M)th
    percentile; ``top_m`` selects directly. Both accept exactly m_accept
    allocations, breaking ties by pool (enumeration) order.
    """

    kind: str = "top_m"
    m_accept: int = 1

    def __post_init__(self):
        if self.kind not in ("threshold_percentile", "top_m"):
            raise ValidationError("rule kind must be threshold_percentile or top_m")
        if self.m_accept < 1:
            raise ValidationError("m_accept must be >= 1")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "m_accept": int(self.m_accept)}

    @classmethod
    def from_dict(cls, d: dict) -> "RestrictionRule":
        return cls(kind=d.get("kind", "top_m"), m_accept=int(d["m_accept"]))


@dataclass
class AcceptedDesign:
    """The restricted assignment mechanism, ready for pre-registration."""

    pool: Pool
    scores: np.ndarray
    accept_mask: np.ndarray
    probabilities: np.ndarray
    fitness: Optional[FitnessConfig] = None
    rule: Optional[RestrictionRule] = None
    mirrors_added: bool = False
    bundle_hash: Optional[str] = None
    metric_scores: Optional[np.ndarray] = None
    threshold: Optional[float] = None
    provenance: dict = field(default_factory=dict)
    audit: list = field(default_factory=list)

    def __post_init__(self):
        self.scores = np.asarray(self.scores, dtype=float)
        self.accept_mask = np.asarray(self.accept_mask, dtype=bool)
        self.probabilities = np.asarray(self.probabilities, dtype=float)
        m = len(self.pool)
        if not (self.scores.shape == self.accept_mask.shape == self.probabilities.shape == (m,)):
            raise ValidationError("scores, mask, and probabilities must align with the pool")
        if (self.probabilities[~self.accept_mask] != 0).any():
            raise ValidationError("rejected allocations must have probability exactly 0")
        if self.accept_mask.any() and not np.isclose(self.probabilities.sum(), 1.0):
            raise ValidationError("probabilities must sum to 1")

    @property
    def n_accepted(self) -> int:
        return int(self.accept_mask.sum())

    @property
    def locked(self) -> bool:
        return self.bundle_hash is not None

    def accepted_indices(self) -> np.ndarray:
        return np.flatnonzero(self.accept_mask)

    def accepted_unit_matrix(self, cmap=None) -> np.ndarray:
        return self.pool.unit_matrix(cmap)[self.accept_mask]

    def canonical_bytes(self) -> bytes:
        """Deterministic serialization covered by the pre-registration digest.

        The draw audit trail is excluded: draws happen after locking and must
        not invalidate the digest.
        """
        head = {
            "fitness": self.fitness.to_dict() if self.fitness else None,
            "rule": self.rule.to_dict() if self.rule else None,
            "mirrors_added": self.mirrors_added,
            "threshold": self.threshold,
            "provenance": _jsonable(self.provenance),
            "level": self.pool.level,
            "k": int(self.pool.k),
        }
        parts = [json.dumps(head, sort_keys=True).encode()]
        if isinstance(self.pool, GroupDesignPool):
            parts.append(np.ascontiguousarray(self.pool.group_of).tobytes())
            parts.append(np.ascontiguousarray(self.pool.arm_of_group).tobytes())
        else:
            parts.append(np.ascontiguousarray(self.pool.labels).tobytes())
        parts.append(np.ascontiguousarray(self.scores).tobytes())
        parts.append(np.ascontiguousarray(self.accept_mask).tobytes())
        parts.append(np.ascontiguousarray(self.probabilities).tobytes())
        return b"\x00".join(parts)

    def compute_hash(self) -> str:
        return hashlib.sha256(self.canonical_bytes()).hexdigest()

    def lock(self) -> "AcceptedDesign":
        if self.bundle_hash is None:
            self.bundle_hash = self.compute_hash()
        return self


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    return obj


def score_pool(pool: Pool, cfg: FitnessConfig, ctx: MetricContext):
    """Score a pool with every metric and aggregate.

    Returns (fitness vector, per-metric raw score matrix).
    """
    matrix = cfg.score_metrics(pool, ctx)
    return cfg.aggregate_matrix(matrix), matrix


def restrict(
    pool: Pool,
    scores: np.ndarray,
    rule: RestrictionRule,
    fitness: Optional[FitnessConfig] = None,
    metric_scores: Optional[np.ndarray] = None,
) -> AcceptedDesign:
    """Accept the m_accept smallest-scoring allocations.

    Ties at the boundary are broken by pool order (stable), which keeps the
    accepted set deterministic and pre-registrable.
    """
    scores = np.asarray(scores, dtype=float)
    if scores.shape != (len(pool),):
        raise ValidationError("scores must align with the pool")
    m = rule.m_accept
    if m > len(pool):
        raise ValidationError(f"m_accept={m} exceeds pool size {len(pool)}")
    n_finite = int(np.isfinite(scores).sum())
    if m > n_finite:
        raise ValidationError(
            f"m_accept={m} exceeds the {n_finite} finite-score allocations in the pool"
        )
    order = np.argsort(scores, kind="stable")
    accepted = order[:m]
    mask = np.zeros(len(pool), dtype=bool)
    mask[accepted] = True
    probs = np.zeros(len(pool))
    probs[mask] = 1.0 / m
    threshold = None
    if rule.kind == "threshold_percentile":
        threshold = float(np.percentile(scores[np.isfinite(scores)], 100.0 * m / len(pool)))
    return AcceptedDesign(
        pool=pool,
        scores=scores,
        accept_mask=mask,
        probabilities=probs,
        fitness=fitness,
        rule=rule,
        metric_scores=metric_scores,
        threshold=threshold,
        provenance=dict(pool.provenance),
    )


def _mirror_permutations(k: int, group: str) -> list[tuple[int, ...]]:
    if group == "auto":
        group = "symmetric" if k <= 4 else "cyclic"
    if group == "symmetric":
        return [p for p in permutations(range(k)) if p != tuple(range(k))]
    if group == "cyclic":
        return [tuple((a + s) % k for a in range(k)) for s in range(1, k)]
    raise ValidationError("mirror group must be 'auto', 'symmetric', or 'cyclic'")


def _pool_rows(pool: Pool) -> np.ndarray:
    if isinstance(pool, GroupDesignPool):
        return np.hstack([pool.group_of, pool.arm_of_group])
    return pool.labels


def add_mirrors(
    design: AcceptedDesign,
    mirror_group: str = "auto",
    rescore: Optional[Callable[[Pool], np.ndarray]] = None,
) -> AcceptedDesign:
    """Close the accepted set under arm relabeling.

    For binary arms the mirror is 1-z (for group designs, the per-group arm
    flip). Multi-arm closure applies every permutation in the configured
    arm-label group: the full symmetric group for k <= 4, else the cyclic
    group; the mirror property (equal per-unit arm marginals) holds either
    way. Mirrors absent from the pool are appended with a provenance flag;
    their scores come from ``rescore`` when given, otherwise they inherit
    the source allocation's score.
    """
    if design.locked:
        raise ValidationError("cannot modify a locked design")
    pool = design.pool
    k = pool.k
    perms = _mirror_permutations(k, mirror_group)
    rows = _pool_rows(pool)
    index = {row.tobytes(): i for i, row in enumerate(rows)}

    is_group = isinstance(pool, GroupDesignPool)
    accepted = list(np.flatnonzero(design.accept_mask))
    new_mask = design.accept_mask.copy()
    appended_rows = []
    appended_scores = []
    appended_sources = []

    queue = list(accepted)
    while queue:
        i = queue.pop()
        if is_group:
            base_g = pool.group_of[i] if i < len(pool) else appended_rows[i - len(pool)][0]
            base_z = pool.arm_of_group[i] if i < len(pool) else appended_rows[i - len(pool)][1]
        else:
            base = pool.labels[i] if i < len(pool) else appended_rows[i - len(pool)]
        score_i = design.scores[i] if i < len(pool) else appended_scores[i - len(pool)]
        for perm in perms:
            lut = np.asarray(perm, dtype=np.int64)
            if is_group:
                mg, mz = base_g, lut[base_z]
                key = np.hstack([mg, mz]).tobytes()
            else:
                mirror = lut[base]
                key = mirror.tobytes()
            j = index.get(key)
            if j is None:
                j = len(pool) + len(appended_rows)
                index[key] = j
                appended_rows.append((mg, mz) if is_group else mirror)
                appended_scores.append(score_i if rescore is None else np.nan)
                appended_sources.append(i)
                new_mask = np.append(new_mask, True)
                queue.append(j)
            elif not new_mask[j]:
                new_mask[j] = True
                queue.append(j)

    if appended_rows:
        if is_group:
            new_g = np.vstack([pool.group_of] + [g for g, _ in appended_rows])
            new_z = np.vstack([pool.arm_of_group] + [z for _, z in appended_rows])
            new_pool = GroupDesignPool(new_g, new_z, k=k, provenance=dict(pool.provenance))
        else:
            new_pool = AllocationPool(
                np.vstack([pool.labels, np.vstack(appended_rows)]),
                k=k,
                level=pool.level,
                provenance=dict(pool.provenance),
            )
        scores = np.concatenate([design.scores, np.asarray(appended_scores, dtype=float)])
        if rescore is not None:
            tail = new_pool.take(range(len(pool), len(new_pool)))
            scores[len(pool):] = rescore(tail)
        new_pool = new_pool.with_provenance(
            mirrors={"appended": len(appended_rows), "scores": "rescored" if rescore else "inherited"}
        )
    else:
        new_pool = pool
        scores = design.scores.copy()

    probs = np.zeros(len(new_pool))
    probs[new_mask] = 1.0 / new_mask.sum()
    return AcceptedDesign(
        pool=new_pool,
        scores=scores,
        accept_mask=new_mask,
        probabilities=probs,
        fitness=design.fitness,
        rule=design.rule,
        mirrors_added=True,
        metric_scores=None if appended_rows else design.metric_scores,
        threshold=design.threshold,
        provenance=dict(new_pool.provenance),
    )


def draw_official(design: AcceptedDesign, rng: RngSpec):
    """Draw the observed allocation uniformly from the accepted set.

    Pre-registration ordering is enforced: the design must be locked first.
    The draw is recorded in the design's audit trail (outside the digest).
    """
    if not design.locked:
        raise ValidationError("design must be locked (pre-registered) before the official draw")
    accepted = design.accepted_indices()
    gen = rng.generator()
    pick = int(accepted[gen.integers(0, accepted.size)])
    design.audit.append({"event": "draw", "index": pick, "rng": rng.to_dict()})
    return design.pool[pick]
