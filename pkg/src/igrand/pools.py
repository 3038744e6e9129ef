"""Candidate-pool enumeration: complete, cluster-level, and group formation draws."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .rng import RngSpec
from .types import (
    CLUSTER,
    GROUP,
    UNIT,
    AllocationPool,
    ClusterMap,
    CovariateMatrix,
    GroupDesignPool,
    Pool,
    ValidationError,
)
from .validation import check_arm_sizes

MAX_POOL = 1_000_000


def _check_m_pool(m_pool: int):
    if not 1 <= m_pool <= MAX_POOL:
        raise ValidationError(f"m_pool must be in [1, {MAX_POOL}], got {m_pool}")


def enumerate_complete(n: int, k: int, m_pool: int, rng: RngSpec) -> AllocationPool:
    """Draw m_pool complete randomizations of n units into k equal arms.

    Each draw is a uniform permutation of the fixed arm-count multiset;
    duplicates are possible until :func:`dedup` is applied.
    """
    per_arm = check_arm_sizes(n, k)
    _check_m_pool(m_pool)
    base = np.repeat(np.arange(k, dtype=np.int64), per_arm)
    gen = rng.generator()
    labels = np.empty((m_pool, n), dtype=np.int64)
    for i in range(m_pool):
        labels[i] = gen.permutation(base)
    return AllocationPool(
        labels,
        k=k,
        level=UNIT,
        provenance={"mechanism": "complete", "rng": rng.to_dict(), "params": {"n": n, "k": k, "m_pool": m_pool}},
    )


def enumerate_cluster(cmap: ClusterMap, k: int, m_pool: int, rng: RngSpec) -> AllocationPool:
    """Complete randomization at the cluster level.

    Returned allocations carry ``level="cluster"``; expand with
    ``cmap.expand`` / ``pool.unit_matrix(cmap)`` so that units inherit
    their cluster's arm.
    """
    c = cmap.n_clusters
    per_arm = check_arm_sizes(c, k)
    _check_m_pool(m_pool)
    base = np.repeat(np.arange(k, dtype=np.int64), per_arm)
    gen = rng.generator()
    labels = np.empty((m_pool, c), dtype=np.int64)
    for i in range(m_pool):
        labels[i] = gen.permutation(base)
    return AllocationPool(
        labels,
        k=k,
        level=CLUSTER,
        provenance={
            "mechanism": "cluster",
            "rng": rng.to_dict(),
            "params": {"n_clusters": c, "k": k, "m_pool": m_pool},
        },
    )


def _composition_counts(comps: Sequence[float], group_size: int) -> np.ndarray:
    counts = np.asarray([c * group_size for c in comps])
    rounded = np.rint(counts).astype(np.int64)
    if not np.allclose(counts, rounded, atol=1e-9):
        raise ValidationError(
            f"compositions {list(comps)} are not realizable with group size {group_size}"
        )
    if (rounded < 0).any() or (rounded > group_size).any():
        raise ValidationError("compositions must lie in [0, 1]")
    return rounded


def enumerate_group_formation(
    x: CovariateMatrix,
    comps: Sequence[float],
    group_size: int,
    m_pool: int,
    rng: RngSpec,
) -> GroupDesignPool:
    """Draw group designs realizing the requested compositions by construction.

    Forms one treated and one control group per composition. Units with the
    salient attribute are drawn without replacement into the with-attribute
    slots of each group, the rest into the remaining slots, and one group of
    each same-composition pair is assigned to treatment uniformly at random.
    Every returned design therefore passes the composition gate.
    """
    _check_m_pool(m_pool)
    salient = x.salient_vector()
    n = x.n_units
    n_comps = len(comps)
    n_groups = 2 * n_comps
    if n_groups * group_size != n:
        raise ValidationError(
            f"{n_comps} compositions x 2 groups x {group_size} units = "
            f"{n_groups * group_size}, but there are {n} units"
        )
    with_counts = _composition_counts(comps, group_size)
    need_on = int(2 * with_counts.sum())
    need_off = n - need_on
    have_on = int(salient.sum())
    have_off = n - have_on
    if have_on != need_on or have_off != need_off:
        raise ValidationError(
            "infeasible composition demand: "
            f"salient=1 units needed {need_on}, have {have_on}; "
            f"salient=0 units needed {need_off}, have {have_off}"
        )

    on_idx = np.flatnonzero(salient == 1)
    off_idx = np.flatnonzero(salient == 0)
    # Group slots, listed per group 0..n_groups-1 (pair j occupies 2j, 2j+1).
    on_slots = np.repeat(np.arange(n_groups, dtype=np.int64), np.repeat(with_counts, 2))
    off_slots = np.repeat(
        np.arange(n_groups, dtype=np.int64), np.repeat(group_size - with_counts, 2)
    )

    gen = rng.generator()
    group_of = np.empty((m_pool, n), dtype=np.int64)
    arm_of_group = np.empty((m_pool, n_groups), dtype=np.int64)
    for i in range(m_pool):
        group_of[i, on_idx] = gen.permutation(on_slots)
        group_of[i, off_idx] = gen.permutation(off_slots)
        treat_first = gen.integers(0, 2, size=n_comps)
        arms = np.empty(n_groups, dtype=np.int64)
        arms[0::2] = treat_first
        arms[1::2] = 1 - treat_first
        arm_of_group[i] = arms

    pool = GroupDesignPool(
        group_of,
        arm_of_group,
        k=2,
        provenance={
            "mechanism": "group_formation",
            "rng": rng.to_dict(),
            "params": {"comps": list(map(float, comps)), "group_size": group_size, "m_pool": m_pool},
        },
    )
    return canonicalize_groups(pool)


def canonicalize_groups(pool: GroupDesignPool) -> GroupDesignPool:
    """Relabel each design's groups in order of their smallest member index.

    Makes exact-equality dedup well-defined for group designs.
    """
    m, n = pool.group_of.shape
    n_groups = pool.n_groups
    group_of = np.empty_like(pool.group_of)
    arm_of_group = np.empty_like(pool.arm_of_group)
    for i in range(m):
        g = pool.group_of[i]
        order = np.full(n_groups, -1, dtype=np.int64)
        seen = 0
        for gid in g:
            if order[gid] < 0:
                order[gid] = seen
                seen += 1
        group_of[i] = order[g]
        arm_of_group[i][order] = pool.arm_of_group[i]
    return GroupDesignPool(group_of, arm_of_group, k=pool.k, provenance=dict(pool.provenance))


def dedup(pool: Pool) -> Pool:
    """Order-preserving removal of exact duplicates.

    Labeled arms are distinct: two allocations are equal only if their label
    vectors match entry-wise (group designs additionally compare the group
    partition). Provenance records pre/post counts.
    """
    if isinstance(pool, GroupDesignPool):
        rows = np.hstack([pool.group_of, pool.arm_of_group])
    else:
        rows = pool.labels
    _, first = np.unique(rows, axis=0, return_index=True)
    keep = np.sort(first)
    out = pool.take(keep)
    return out.with_provenance(dedup={"before": len(pool), "after": len(out)})
