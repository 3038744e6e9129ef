"""Inspection-guided randomization.

Design restricted randomizations by enumerating candidate treatment
allocations, scoring them against domain-informed inspection metrics,
restricting to an accepted set, diagnosing the restriction, pre-registering
the locked design, drawing the official randomization, and analyzing the
experiment with exact randomization inference.
"""

from .rng import RngSpec
from .types import (
    Allocation,
    AllocationPool,
    ClusterMap,
    CovariateMatrix,
    GroupDesign,
    GroupDesignPool,
    ValidationError,
)
from .pools import dedup, enumerate_cluster, enumerate_complete, enumerate_group_formation
from .metrics import (
    DesiredComps,
    ExposureSpec,
    FracCtrlExposed,
    InvMinEuclidean,
    MaxMahalanobis,
    MetricContext,
    SumMaxAbsSmd,
    composition,
    desired_comps,
    frac_ctrl_exposed,
    inv_min_euclidean,
    mahalanobis_max,
    smd_summaxabs,
)
from .fitness import (
    AcceptedDesign,
    FitnessConfig,
    RestrictionRule,
    add_mirrors,
    aggregate,
    draw_official,
    restrict,
    score_pool,
)

__version__ = "0.1.0"

__all__ = [
    "RngSpec",
    "Allocation",
    "AllocationPool",
    "ClusterMap",
    "CovariateMatrix",
    "GroupDesign",
    "GroupDesignPool",
    "ValidationError",
    "dedup",
    "enumerate_cluster",
    "enumerate_complete",
    "enumerate_group_formation",
    "DesiredComps",
    "ExposureSpec",
    "FracCtrlExposed",
    "InvMinEuclidean",
    "MaxMahalanobis",
    "MetricContext",
    "SumMaxAbsSmd",
    "composition",
    "desired_comps",
    "frac_ctrl_exposed",
    "inv_min_euclidean",
    "mahalanobis_max",
    "smd_summaxabs",
    "AcceptedDesign",
    "FitnessConfig",
    "RestrictionRule",
    "add_mirrors",
    "aggregate",
    "draw_official",
    "restrict",
    "score_pool",
]
