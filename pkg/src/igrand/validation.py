"""Input validation helpers shared across the estimator API and the CLI."""

from __future__ import annotations

from typing import Optional

import numpy as np

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


def check_covariates(x, names=None, latent=None, salient=None) -> CovariateMatrix:
    """Coerce array-like / DataFrame / CovariateMatrix input to CovariateMatrix."""
    if isinstance(x, CovariateMatrix):
        return x
    if hasattr(x, "columns") and hasattr(x, "to_numpy"):  # pandas DataFrame
        names = list(map(str, x.columns))
        values = x.to_numpy(dtype=float)
    else:
        values = np.asarray(x, dtype=float)
        if values.ndim == 1:
            values = values[:, None]
        if names is None:
            names = [f"x{j}" for j in range(values.shape[1])]
    latent_mask = np.zeros(values.shape[1], dtype=bool)
    if latent:
        latent_mask = np.array([n in set(latent) for n in names])
    return CovariateMatrix(names=list(names), values=values, latent=latent_mask, salient=salient)


def check_allocation(z, k: Optional[int] = None, level: str = "unit") -> Allocation:
    if isinstance(z, Allocation):
        return z
    labels = np.asarray(z, dtype=np.int64)
    if k is None:
        k = int(labels.max()) + 1 if labels.size else 2
        k = max(k, 2)
    return Allocation(labels, k=k, level=level)


def check_pool(pool) -> Pool:
    if isinstance(pool, (AllocationPool, GroupDesignPool)):
        return pool
    labels = np.asarray(pool, dtype=np.int64)
    if labels.ndim != 2:
        raise ValidationError("a raw pool must be an (M, L) label matrix")
    k = max(int(labels.max()) + 1, 2) if labels.size else 2
    return AllocationPool(labels, k=k)


def check_arm_sizes(n: int, k: int) -> int:
    """Equal arm sizes: reject when k does not divide n."""
    if k < 2:
        raise ValidationError("need at least 2 arms")
    if n % k != 0:
        raise ValidationError(
            f"arm count {k} does not divide {n} units (remainder {n % k}); "
            "equal arm sizes are required"
        )
    return n // k


def check_adjacency(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError("adjacency must be a square matrix")
    if not np.array_equal(a, a.T):
        raise ValidationError("adjacency must be symmetric")
    if np.diagonal(a).any():
        raise ValidationError("adjacency must have a zero diagonal")
    return a.astype(np.int8)


def check_coords(coords: np.ndarray, n: Optional[int] = None) -> np.ndarray:
    coords = np.asarray(coords, dtype=float)
    if coords.ndim != 2 or coords.shape[1] != 2:
        raise ValidationError("coordinates must be an (L, 2) array")
    if n is not None and coords.shape[0] != n:
        raise ValidationError(f"expected {n} coordinate rows, got {coords.shape[0]}")
    return coords


def unit_labels(alloc, cmap: Optional[ClusterMap] = None) -> np.ndarray:
    """Unit-level arm labels for an Allocation or GroupDesign."""
    if isinstance(alloc, GroupDesign):
        return alloc.unit_arms()
    alloc = check_allocation(alloc) if not isinstance(alloc, Allocation) else alloc
    if alloc.level == "cluster":
        if cmap is None:
            raise ValidationError("cluster-level allocation needs a ClusterMap")
        return cmap.expand(alloc).labels
    return alloc.labels
