"""Genetic-algorithm refinement of candidate pools.

Starting from an enumerated pool, allocations mate in pairs over a number of
generations: crossover swaps segments of two parents, mutation flips single
entries, and tournament selection with elite carry-over keeps the best
scorers. The union of survivors across generations, deduplicated and sorted
by fitness, becomes the refined candidate pool.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .fitness import FitnessConfig
from .metrics import MetricContext
from .pools import canonicalize_groups, dedup
from .rng import RngSpec
from .types import AllocationPool, GroupDesignPool, Pool, ValidationError

CONSTRAINT_MODES = ("strict_repair", "tolerance_band")


@dataclass
class GaConfig:
    """Evolution hyperparameters.

    Defaults are package choices, documented and overridable: population is
    the initial pool size capped at 1,000; mutation rate 1/length; crossover
    rate 0.9; elite fraction 0.05; 50 generations.
    """

    generations: int = 50
    population: Optional[int] = None
    mutation_rate: Optional[float] = None
    crossover_rate: float = 0.9
    elite_fraction: float = 0.05
    constraint: str = "strict_repair"
    tolerance: int = 0

    def __post_init__(self):
        if self.generations < 0:
            raise ValidationError("generations must be >= 0")
        if self.population is not None and self.population < 2:
            raise ValidationError("population size must be >= 2")
        if self.mutation_rate is not None and not 0.0 <= self.mutation_rate <= 1.0:
            raise ValidationError("mutation rate must lie in [0, 1]")
        if not 0.0 <= self.crossover_rate <= 1.0:
            raise ValidationError("crossover rate must lie in [0, 1]")
        if not 0.0 <= self.elite_fraction <= 1.0:
            raise ValidationError("elite fraction must lie in [0, 1]")
        if self.constraint not in CONSTRAINT_MODES:
            raise ValidationError(f"constraint mode must be one of {CONSTRAINT_MODES}")
        if self.tolerance < 0:
            raise ValidationError("tolerance must be >= 0")

    def to_dict(self) -> dict:
        return {
            "generations": self.generations,
            "population": self.population,
            "mutation_rate": self.mutation_rate,
            "crossover_rate": self.crossover_rate,
            "elite_fraction": self.elite_fraction,
            "constraint": self.constraint,
            "tolerance": self.tolerance,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GaConfig":
        return cls(**{k: d[k] for k in cls.__dataclass_fields__ if k in d})


def _relaxed(cfg: FitnessConfig) -> FitnessConfig:
    """Fitness with the composition gate dropped, for scoring child generations."""
    if cfg.aggregator != "gated":
        return cfg
    score_metric = next(m for m in cfg.metrics if not m.is_gate)
    return FitnessConfig(metrics=[score_metric], aggregator="identity")


def _target_counts(vector: np.ndarray, n_labels: int) -> np.ndarray:
    return np.bincount(vector, minlength=n_labels)


def _repair(child: np.ndarray, target: np.ndarray, n_labels: int, tol: int, gen) -> np.ndarray:
    """Random swap-repair until every label count is within tolerance of target."""
    counts = np.bincount(child, minlength=n_labels)
    while True:
        surplus = counts - target
        over = np.flatnonzero(surplus > tol)
        under = np.flatnonzero(surplus < -tol)
        if over.size == 0 and under.size == 0:
            return child
        a = int(over[gen.integers(0, over.size)]) if over.size else int(np.argmax(surplus))
        b = int(under[gen.integers(0, under.size)]) if under.size else int(np.argmin(surplus))
        members = np.flatnonzero(child == a)
        child[members[gen.integers(0, members.size)]] = b
        counts[a] -= 1
        counts[b] += 1


def _breed_vectors(
    parents: np.ndarray,
    n_labels: int,
    target: np.ndarray,
    cfg: GaConfig,
    mutation_rate: float,
    rng: RngSpec,
    generation: int,
) -> tuple[np.ndarray, np.ndarray]:
    """One generation of children for a (pop, L) label matrix.

    Returns the children and each child's first-parent index (group designs
    inherit that parent's arm pattern).
    """
    pop, length = parents.shape
    sel_gen = rng.generator(generation, 0)
    children = np.empty_like(parents)
    first_parent = np.empty(pop, dtype=np.int64)
    tol = cfg.tolerance if cfg.constraint == "tolerance_band" else 0
    for c in range(pop):
        gen = rng.generator(generation, c + 1)
        # tournament of size 2 per parent, fought on position in the sorted population
        i1, i2 = sel_gen.integers(0, pop, 2)
        j1, j2 = sel_gen.integers(0, pop, 2)
        first_parent[c] = min(i1, i2)
        p1 = parents[first_parent[c]]
        p2 = parents[min(j1, j2)]
        child = p1.copy()
        if gen.random() < cfg.crossover_rate:
            point = int(gen.integers(1, length))
            child[point:] = p2[point:]
        flips = gen.random(length) < mutation_rate
        if flips.any():
            child[flips] = gen.integers(0, n_labels, int(flips.sum()))
        children[c] = _repair(child, target, n_labels, tol, gen)
    return children, first_parent


def evolve(
    pool: Pool,
    fitness: FitnessConfig,
    ctx: MetricContext,
    cfg: GaConfig,
    rng: RngSpec,
) -> Pool:
    """Refine a candidate pool by evolutionary search.

    Returns the union of surviving populations across generations,
    deduplicated and sorted ascending by the full fitness. When the fitness
    is gated, children are scored with the gate relaxed and the final output
    is filtered back through the gate, so the result is always valid input
    for restriction. A per-generation best/median trace lands in the output
    pool's provenance.
    """
    if len(pool) == 0:
        raise ValidationError("cannot evolve an empty pool")
    is_group = isinstance(pool, GroupDesignPool)

    full_scores = fitness.aggregate_matrix(fitness.score_metrics(pool, ctx))
    if cfg.generations == 0:
        return _finalize(pool, fitness, ctx, [], rng)

    relaxed = _relaxed(fitness)
    pop_size = cfg.population or min(len(pool), 1000)
    pop_size = min(pop_size, len(pool))
    if pop_size < 2:
        raise ValidationError("population size must be >= 2")
    order = np.argsort(full_scores, kind="stable")[:pop_size]

    if is_group:
        vectors = pool.group_of[order]
        arms = pool.arm_of_group[order]
        n_labels = pool.n_groups
    else:
        vectors = pool.labels[order]
        arms = None
        n_labels = pool.k
    target = _target_counts(vectors[0], n_labels)
    mutation_rate = cfg.mutation_rate if cfg.mutation_rate is not None else 1.0 / vectors.shape[1]
    elite_n = max(1, int(round(cfg.elite_fraction * pop_size))) if cfg.elite_fraction > 0 else 0

    scores = relaxed.aggregate_matrix(relaxed.score_metrics(pool.take(order), ctx))
    rank = np.argsort(scores, kind="stable")
    vectors = vectors[rank]
    if arms is not None:
        arms = arms[rank]
    scores = scores[rank]

    union_vectors = [vectors.copy()]
    union_arms = [arms.copy()] if arms is not None else None
    trace = [_trace_row(0, scores)]
    diagnostic = None

    for g in range(1, cfg.generations + 1):
        children, first_parent = _breed_vectors(
            vectors, n_labels, target, cfg, mutation_rate, rng, g
        )
        child_arms = arms[first_parent] if arms is not None else None
        child_pool = _make_pool(pool, children, child_arms)
        child_scores = relaxed.aggregate_matrix(relaxed.score_metrics(child_pool, ctx))

        if not np.isfinite(child_scores).any():
            diagnostic = f"generation {g}: every child scored +inf; kept parents and stopped"
            break

        # next population: elites plus the best children
        child_rank = np.argsort(child_scores, kind="stable")
        keep_children = child_rank[: pop_size - elite_n]
        merged_vectors = np.vstack([vectors[:elite_n], children[keep_children]])
        merged_arms = (
            np.vstack([arms[:elite_n], child_arms[keep_children]]) if arms is not None else None
        )
        merged_scores = np.concatenate([scores[:elite_n], child_scores[keep_children]])
        rank = np.argsort(merged_scores, kind="stable")
        vectors = merged_vectors[rank]
        arms = merged_arms[rank] if merged_arms is not None else None
        scores = merged_scores[rank]

        union_vectors.append(vectors.copy())
        if union_arms is not None:
            union_arms.append(arms.copy())
        trace.append(_trace_row(g, scores))

    out_vectors = np.vstack(union_vectors)
    out_arms = np.vstack(union_arms) if union_arms is not None else None
    out_pool = _make_pool(pool, out_vectors, out_arms)
    return _finalize(out_pool, fitness, ctx, trace, rng, diagnostic)


def _trace_row(generation: int, scores: np.ndarray) -> dict:
    finite = scores[np.isfinite(scores)]
    return {
        "generation": generation,
        "best": float(finite.min()) if finite.size else float("inf"),
        "median": float(np.median(finite)) if finite.size else float("inf"),
    }


def _make_pool(template: Pool, vectors: np.ndarray, arms: Optional[np.ndarray]) -> Pool:
    if isinstance(template, GroupDesignPool):
        return GroupDesignPool(vectors, arms, k=template.k, provenance=dict(template.provenance))
    return AllocationPool(
        vectors, k=template.k, level=template.level, provenance=dict(template.provenance)
    )


def _finalize(
    pool: Pool,
    fitness: FitnessConfig,
    ctx: MetricContext,
    trace: list,
    rng: RngSpec,
    diagnostic: Optional[str] = None,
) -> Pool:
    if isinstance(pool, GroupDesignPool):
        pool = canonicalize_groups(pool)
    pool = dedup(pool)
    scores = fitness.aggregate_matrix(fitness.score_metrics(pool, ctx))
    keep = np.isfinite(scores)
    if keep.any():
        idx = np.flatnonzero(keep)[np.argsort(scores[keep], kind="stable")]
        pool = pool.take(idx)
    prov = {
        "mechanism": "genetic",
        "rng": rng.to_dict(),
        "ga_trace": trace,
        "parent": pool.provenance.get("mechanism"),
    }
    if diagnostic:
        prov["diagnostic"] = diagnostic
    return pool.with_provenance(**prov)
