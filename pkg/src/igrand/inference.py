"""Effect estimators and exact randomization inference.

Inference is design-based: outcomes are fixed, the only randomness is the
draw from the restricted assignment mechanism, and the null distribution of
the test statistic is its value over every accepted allocation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .fitness import AcceptedDesign
from .types import (
    Allocation,
    ClusterMap,
    CovariateMatrix,
    GroupDesign,
    GroupDesignPool,
    ValidationError,
)
from .validation import unit_labels

COMP_TOL = 1e-9


def diff_in_means(z, y, arm_a: int = 1, arm_b: int = 0, cmap: Optional[ClusterMap] = None) -> float:
    """mean(y | arm_a) - mean(y | arm_b) at the unit level."""
    labels = unit_labels(z, cmap)
    y = np.asarray(y, dtype=float)
    in_a, in_b = labels == arm_a, labels == arm_b
    if not in_a.any() or not in_b.any():
        raise ValidationError(f"empty arm in comparison ({arm_a} vs {arm_b})")
    return float(y[in_a].mean() - y[in_b].mean())


class DiffInMeans:
    """Arm-contrast estimator, vectorized over an allocation matrix."""

    kind = "diff_in_means"

    def __init__(self, arm_a: int = 1, arm_b: int = 0):
        self.arm_a = arm_a
        self.arm_b = arm_b

    def to_dict(self) -> dict:
        return {"kind": self.kind, "arm_a": self.arm_a, "arm_b": self.arm_b}

    def compute(self, design: AcceptedDesign, y: np.ndarray, cmap=None, x=None) -> np.ndarray:
        z = design.accepted_unit_matrix(cmap)
        return self.compute_matrix(z, y)

    def compute_matrix(self, z: np.ndarray, y: np.ndarray) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        in_a = (z == self.arm_a)
        in_b = (z == self.arm_b)
        n_a, n_b = in_a.sum(axis=1), in_b.sum(axis=1)
        if (n_a == 0).any() or (n_b == 0).any():
            raise ValidationError(f"empty arm in comparison ({self.arm_a} vs {self.arm_b})")
        return in_a @ y / n_a - in_b @ y / n_b


class GroupPairContrast:
    """Treated-vs-control contrast among groups of one composition.

    For each design, pools the units of treated groups whose composition
    matches, pools the matching control groups, and differences the means.
    """

    kind = "group_pair"

    def __init__(self, comp: float):
        self.comp = float(comp)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "comp": self.comp}

    def compute(
        self,
        design: AcceptedDesign,
        y: np.ndarray,
        cmap=None,
        x: Optional[CovariateMatrix] = None,
    ) -> np.ndarray:
        pool = design.pool
        if not isinstance(pool, GroupDesignPool):
            raise ValidationError("group_pair estimator needs a group design pool")
        if x is None:
            raise ValidationError("group_pair estimator needs covariates (salient attribute)")
        idx = design.accepted_indices()
        return self.compute_groups(
            pool.group_of[idx], pool.arm_of_group[idx], x.salient_vector(), y
        )

    def compute_groups(
        self, group_of: np.ndarray, arm_of_group: np.ndarray, salient: np.ndarray, y: np.ndarray
    ) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        m, n = group_of.shape
        n_groups = arm_of_group.shape[1]
        seg = (group_of + n_groups * np.arange(m, dtype=np.int64)[:, None]).ravel()
        counts = np.bincount(seg, minlength=m * n_groups).reshape(m, n_groups)
        on = np.bincount(
            seg,
            weights=np.broadcast_to(salient.astype(float), group_of.shape).ravel(),
            minlength=m * n_groups,
        ).reshape(m, n_groups)
        rho = on / counts
        match = np.abs(rho - self.comp) < COMP_TOL
        sel_t = match & (arm_of_group == 1)
        sel_c = match & (arm_of_group == 0)
        if (~sel_t.any(axis=1)).any() or (~sel_c.any(axis=1)).any():
            raise ValidationError(
                f"some design lacks a treated or control group with composition {self.comp}"
            )
        unit_t = np.take_along_axis(sel_t, group_of, axis=1)
        unit_c = np.take_along_axis(sel_c, group_of, axis=1)
        return unit_t @ y / unit_t.sum(axis=1) - unit_c @ y / unit_c.sum(axis=1)


def estimator_from_dict(d: dict):
    kind = d.get("kind", "diff_in_means")
    if kind == "diff_in_means":
        return DiffInMeans(arm_a=int(d.get("arm_a", 1)), arm_b=int(d.get("arm_b", 0)))
    if kind == "group_pair":
        return GroupPairContrast(comp=float(d["comp"]))
    raise ValidationError(f"unknown estimator kind {kind!r}")


@dataclass
class TestResult:
    __test__ = False  # not a pytest class

    observed: float
    null_statistics: np.ndarray
    p_value: float

    def to_dict(self) -> dict:
        return {
            "observed": self.observed,
            "p_value": self.p_value,
            "n_null": int(self.null_statistics.size),
            "null_statistics": np.asarray(self.null_statistics, dtype=float).tolist(),
        }


def _match_observed(design: AcceptedDesign, z_obs) -> int:
    pool = design.pool
    accepted = design.accepted_indices()
    if isinstance(pool, GroupDesignPool):
        if not isinstance(z_obs, GroupDesign):
            raise ValidationError("observed allocation must be a GroupDesign for this design")
        gd = z_obs.canonicalized()
        hits = (pool.group_of[accepted] == gd.group_of).all(axis=1) & (
            pool.arm_of_group[accepted] == gd.arm_of_group
        ).all(axis=1)
    else:
        labels = z_obs.labels if isinstance(z_obs, Allocation) else np.asarray(z_obs, dtype=np.int64)
        if labels.shape != (pool.labels.shape[1],):
            raise ValidationError("observed allocation has the wrong length")
        hits = (pool.labels[accepted] == labels).all(axis=1)
    where = np.flatnonzero(hits)
    if where.size == 0:
        raise ValidationError(
            "observed allocation is not in the accepted set; "
            "the test protocol requires the deployed allocation to come from it"
        )
    return int(where[0])


def fisher_test(
    design: AcceptedDesign,
    y_obs,
    z_obs,
    statistic=None,
    cmap: Optional[ClusterMap] = None,
    x: Optional[CovariateMatrix] = None,
) -> TestResult:
    """Exact test of the sharp null of no effect for any unit.

    Holds the observed outcomes fixed, recomputes the statistic under every
    accepted allocation, and returns the two-sided p-value: the proportion
    of accepted allocations whose |statistic| is at least |observed|. The
    observed allocation is a member of the null set, so p >= 1/m.
    """
    statistic = statistic or DiffInMeans()
    y = np.asarray(y_obs, dtype=float)
    pos = _match_observed(design, z_obs)
    null = np.asarray(statistic.compute(design, y, cmap=cmap, x=x), dtype=float)
    observed = null[pos]
    p = float((np.abs(null) >= np.abs(observed)).mean())
    return TestResult(observed=float(observed), null_statistics=null, p_value=p)
