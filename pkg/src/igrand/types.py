"""Core data types: covariates, allocations, cluster maps, and pools."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterator, Optional, Sequence

import numpy as np

UNIT = "unit"
CLUSTER = "cluster"
GROUP = "group"

LEVELS = (UNIT, CLUSTER, GROUP)


class ValidationError(ValueError):
    """Raised when an input violates a structural precondition."""


@dataclass
class CovariateMatrix:
    """N units by p named covariates.

    Columns flagged latent are carried for outcome generation but are
    excluded from balance-metric inputs. The salient column, when declared,
    must be binary and is the attribute that group compositions count.
    """

    names: list[str]
    values: np.ndarray  # (n_units, p) float
    latent: np.ndarray  # (p,) bool
    salient: Optional[str] = None

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        self.latent = np.asarray(self.latent, dtype=bool)
        if self.values.ndim != 2:
            raise ValidationError("covariate values must be a 2-D array")
        n, p = self.values.shape
        if n < 2:
            raise ValidationError(f"need at least 2 units, got {n}")
        if len(self.names) != p or self.latent.shape != (p,):
            raise ValidationError("names, values, and latent flags must agree on p")
        if len(set(self.names)) != p:
            raise ValidationError("column names must be unique")
        if self.salient is not None:
            col = self.column(self.salient)
            if not np.isin(col, (0.0, 1.0)).all():
                raise ValidationError(f"salient column {self.salient!r} must be binary 0/1")

    @property
    def n_units(self) -> int:
        return self.values.shape[0]

    def column(self, name: str) -> np.ndarray:
        try:
            j = self.names.index(name)
        except ValueError:
            raise ValidationError(f"no covariate named {name!r}") from None
        return self.values[:, j]

    def salient_vector(self) -> np.ndarray:
        if self.salient is None:
            raise ValidationError("no salient column declared")
        return self.column(self.salient).astype(int)

    def metric_matrix(self, exclude_salient: bool = True) -> np.ndarray:
        """Observed columns fed to balance metrics.

        Latent columns are always dropped; the salient column is dropped
        when ``exclude_salient``.
        """
        keep = ~self.latent
        if exclude_salient and self.salient is not None:
            keep &= np.array([n != self.salient for n in self.names])
        if not keep.any():
            raise ValidationError("no observed covariates left for metrics")
        return self.values[:, keep]

    def metric_names(self, exclude_salient: bool = True) -> list[str]:
        keep = ~self.latent
        if exclude_salient and self.salient is not None:
            keep &= np.array([n != self.salient for n in self.names])
        return [n for n, k in zip(self.names, keep) if k]


@dataclass(frozen=True)
class Allocation:
    """One realized assignment of arm labels, at unit, cluster, or group level."""

    labels: np.ndarray
    k: int
    level: str = UNIT

    def __post_init__(self):
        object.__setattr__(self, "labels", np.asarray(self.labels, dtype=np.int64))
        if self.labels.ndim != 1:
            raise ValidationError("allocation labels must be 1-D")
        if self.level not in LEVELS:
            raise ValidationError(f"level must be one of {LEVELS}")
        if self.k < 2:
            raise ValidationError("need at least 2 arms")
        if self.labels.size and (self.labels.min() < 0 or self.labels.max() >= self.k):
            raise ValidationError(f"labels must lie in [0, {self.k})")

    def __len__(self) -> int:
        return self.labels.size


@dataclass(frozen=True)
class ClusterMap:
    """Unit-to-cluster assignment with dense cluster ids 0..C-1."""

    unit_to_cluster: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "unit_to_cluster", np.asarray(self.unit_to_cluster, dtype=np.int64)
        )
        u = self.unit_to_cluster
        if u.ndim != 1 or u.size == 0:
            raise ValidationError("cluster map must be a non-empty 1-D vector")
        c = int(u.max()) + 1
        counts = np.bincount(u, minlength=c)
        if u.min() < 0 or (counts == 0).any():
            raise ValidationError("cluster ids must be dense 0..C-1 with no empty cluster")

    @property
    def n_units(self) -> int:
        return self.unit_to_cluster.size

    @property
    def n_clusters(self) -> int:
        return int(self.unit_to_cluster.max()) + 1

    def expand(self, alloc: Allocation) -> Allocation:
        """Map a cluster-level allocation onto units (units share their cluster's arm)."""
        if alloc.level != CLUSTER:
            raise ValidationError("expand() expects a cluster-level allocation")
        if len(alloc) != self.n_clusters:
            raise ValidationError("allocation length does not match cluster count")
        return Allocation(alloc.labels[self.unit_to_cluster], k=alloc.k, level=UNIT)

    def expand_matrix(self, labels: np.ndarray) -> np.ndarray:
        """Vectorized expansion of an (M, C) cluster-label matrix to (M, N)."""
        return np.asarray(labels)[:, self.unit_to_cluster]


@dataclass(frozen=True)
class GroupDesign:
    """Joint group formation and per-group arm assignment."""

    group_of: np.ndarray  # (n_units,) group ids 0..n_groups-1
    arm_of_group: np.ndarray  # (n_groups,) arm labels
    k: int = 2

    def __post_init__(self):
        object.__setattr__(self, "group_of", np.asarray(self.group_of, dtype=np.int64))
        object.__setattr__(self, "arm_of_group", np.asarray(self.arm_of_group, dtype=np.int64))
        g, z = self.group_of, self.arm_of_group
        if g.ndim != 1 or z.ndim != 1:
            raise ValidationError("group_of and arm_of_group must be 1-D")
        n_groups = z.size
        if n_groups == 0 or g.min() < 0 or g.max() >= n_groups:
            raise ValidationError("group ids must lie in [0, n_groups)")
        if (np.bincount(g, minlength=n_groups) == 0).any():
            raise ValidationError("every group must be non-empty")
        if z.min() < 0 or z.max() >= self.k:
            raise ValidationError(f"arm labels must lie in [0, {self.k})")

    @property
    def n_units(self) -> int:
        return self.group_of.size

    @property
    def n_groups(self) -> int:
        return self.arm_of_group.size

    def unit_arms(self) -> np.ndarray:
        return self.arm_of_group[self.group_of]

    def canonicalized(self) -> "GroupDesign":
        """Relabel groups in order of their smallest member index."""
        order = np.full(self.n_groups, -1, dtype=np.int64)
        seen = 0
        for gid in self.group_of:
            if order[gid] < 0:
                order[gid] = seen
                seen += 1
        new_arm = np.empty_like(self.arm_of_group)
        new_arm[order] = self.arm_of_group
        return GroupDesign(order[self.group_of], new_arm, k=self.k)


@dataclass
class AllocationPool:
    """Ordered pool of candidate allocations sharing length, k, and level.

    ``labels`` is an (M, L) matrix, one allocation per row. Pools are
    immutable by convention once constructed; operations return new pools.
    """

    labels: np.ndarray
    k: int
    level: str = UNIT
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        self.labels = np.asarray(self.labels, dtype=np.int64)
        if self.labels.ndim != 2:
            raise ValidationError("pool labels must be a 2-D (M, L) matrix")
        if self.level not in LEVELS:
            raise ValidationError(f"level must be one of {LEVELS}")
        if self.labels.size and (self.labels.min() < 0 or self.labels.max() >= self.k):
            raise ValidationError(f"pool labels must lie in [0, {self.k})")

    def __len__(self) -> int:
        return self.labels.shape[0]

    def __iter__(self) -> Iterator[Allocation]:
        for row in self.labels:
            yield Allocation(row, k=self.k, level=self.level)

    def __getitem__(self, i: int) -> Allocation:
        return Allocation(self.labels[i], k=self.k, level=self.level)

    def unit_matrix(self, cmap: Optional[ClusterMap] = None) -> np.ndarray:
        """Pool as an (M, N) unit-level arm matrix."""
        if self.level == CLUSTER:
            if cmap is None:
                raise ValidationError("cluster-level pool needs a ClusterMap to expand")
            return cmap.expand_matrix(self.labels)
        return self.labels

    def take(self, idx: Sequence[int], note: Optional[str] = None) -> "AllocationPool":
        prov = dict(self.provenance)
        if note:
            prov.setdefault("notes", []).append(note)
        return AllocationPool(self.labels[np.asarray(idx)], k=self.k, level=self.level, provenance=prov)

    def with_provenance(self, **kv) -> "AllocationPool":
        prov = dict(self.provenance)
        prov.update(kv)
        return replace(self, provenance=prov)


@dataclass
class GroupDesignPool:
    """Pool of group designs: (M, N) group ids plus (M, G) per-group arms."""

    group_of: np.ndarray
    arm_of_group: np.ndarray
    k: int = 2
    provenance: dict = field(default_factory=dict)
    level: str = GROUP

    def __post_init__(self):
        self.group_of = np.asarray(self.group_of, dtype=np.int64)
        self.arm_of_group = np.asarray(self.arm_of_group, dtype=np.int64)
        if self.group_of.ndim != 2 or self.arm_of_group.ndim != 2:
            raise ValidationError("group design pool matrices must be 2-D")
        if self.group_of.shape[0] != self.arm_of_group.shape[0]:
            raise ValidationError("group_of and arm_of_group row counts differ")

    def __len__(self) -> int:
        return self.group_of.shape[0]

    def __iter__(self) -> Iterator[GroupDesign]:
        for g, z in zip(self.group_of, self.arm_of_group):
            yield GroupDesign(g, z, k=self.k)

    def __getitem__(self, i: int) -> GroupDesign:
        return GroupDesign(self.group_of[i], self.arm_of_group[i], k=self.k)

    @property
    def n_groups(self) -> int:
        return self.arm_of_group.shape[1]

    def unit_matrix(self, cmap: Optional[ClusterMap] = None) -> np.ndarray:
        """Pool as an (M, N) unit-level arm matrix."""
        return np.take_along_axis(self.arm_of_group, self.group_of, axis=1)

    def take(self, idx: Sequence[int], note: Optional[str] = None) -> "GroupDesignPool":
        idx = np.asarray(idx)
        prov = dict(self.provenance)
        if note:
            prov.setdefault("notes", []).append(note)
        return GroupDesignPool(self.group_of[idx], self.arm_of_group[idx], k=self.k, provenance=prov)

    def with_provenance(self, **kv) -> "GroupDesignPool":
        prov = dict(self.provenance)
        prov.update(kv)
        return replace(self, provenance=prov)


Pool = AllocationPool | GroupDesignPool
