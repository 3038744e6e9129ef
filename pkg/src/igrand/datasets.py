"""Synthetic study populations and outcome models for the bundled experiments.

Three generators ship with the package:

* a student sample (age, gender, major, homework, exam) whose course
  performance tracks latent ability and confidence, for the multi-arm and
  group formation experiments;
* a two-level settlement/school sample with a distance-decaying interference
  network, for the interference experiment;
* deterministic outcome models for each, plus the closed-form bias of the
  difference-in-means estimator under network spillover.

All generators are pure functions of an :class:`RngSpec`, so samples replay
bit-identically and independent replicates can be generated concurrently on
distinct streams.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .fitness import AcceptedDesign
from .metrics import ExposureSpec
from .rng import RngSpec
from .types import ClusterMap, CovariateMatrix, GroupDesign, ValidationError
from .validation import unit_labels

GENDER_MODES = ("fixed_half", "bernoulli_07")


def gen_students(
    n: int,
    gender_mode: str = "fixed_half",
    rng: Optional[RngSpec] = None,
    noise_scale: float = 1.0,
) -> CovariateMatrix:
    """Simulated classroom sample.

    Ability rises with age and the first major and is lower for men;
    confidence is higher for men and the second major; homework tracks
    ability and the exam grade tracks ability plus confidence, each with
    unit-normal noise (scaled by ``noise_scale``; 0 disables noise for exact
    identity checks). ``fixed_half`` assigns exactly half the sample to be
    men; ``bernoulli_07`` draws gender as Bernoulli(0.7).
    """
    if gender_mode not in GENDER_MODES:
        raise ValidationError(f"gender_mode must be one of {GENDER_MODES}")
    rng = rng or RngSpec(0)
    gen = rng.generator()

    age = gen.uniform(19, 25, size=n)
    if gender_mode == "fixed_half":
        if n % 2:
            raise ValidationError("fixed_half needs an even sample size")
        gender = gen.permutation(np.repeat([1.0, 0.0], n // 2))
    else:
        gender = (gen.random(n) < 0.7).astype(float)
    major = gen.choice([1, 2, 3], size=n, p=[0.5, 0.3, 0.2])

    def eps():
        return noise_scale * gen.normal(size=n)

    ability = (age - age.mean()) / age.std(ddof=1) - 0.5 * gender + (major == 1) + eps()
    confidence = gender + (major == 2) + eps()
    hw = ability + eps()
    exam = ability + confidence + eps()

    values = np.column_stack(
        [
            age,
            gender,
            (major == 1).astype(float),
            (major == 2).astype(float),
            (major == 3).astype(float),
            hw,
            exam,
            ability,
            confidence,
        ]
    )
    return CovariateMatrix(
        names=[
            "age",
            "gender",
            "major_1",
            "major_2",
            "major_3",
            "hw",
            "exam",
            "ability",
            "confidence",
        ],
        values=values,
        latent=np.array([False] * 7 + [True, True]),
        salient="gender",
    )


def _effect_sizes_to_shifts(d: Sequence[float], baseline: np.ndarray) -> np.ndarray:
    """Convert standardized effect sizes to outcome shifts via the sample SD."""
    return np.asarray(d, dtype=float) * np.std(np.asarray(baseline, dtype=float), ddof=1)


def outcome_groupform(
    sample: CovariateMatrix,
    gd: GroupDesign,
    comps: Sequence[float],
    d: Sequence[float],
    comp_tol: float = 1e-9,
) -> np.ndarray:
    """Exam outcome under a group design: a composition-specific additive
    effect for units in treated groups.

    ``d[j]`` is the effect size for composition ``comps[j]`` in units of the
    exam's sample standard deviation. Outcomes are deterministic given the
    sample and the design (no extra noise term).
    """
    if len(d) != len(comps):
        raise ValidationError("need one effect size per composition")
    exam = sample.column("exam")
    salient = sample.salient_vector()
    tau = _effect_sizes_to_shifts(d, exam)
    shift = np.zeros(sample.n_units)
    for h in range(gd.n_groups):
        members = gd.group_of == h
        rho = salient[members].mean()
        match = np.flatnonzero(np.abs(np.asarray(comps, dtype=float) - rho) < comp_tol)
        if match.size == 0:
            raise ValidationError(f"group {h} has composition {rho}, not in {list(comps)}")
        if gd.arm_of_group[h] == 1:
            shift[members] = tau[match[0]]
    return exam + shift


def outcome_multiarm(
    sample: CovariateMatrix, z, d: Sequence[float]
) -> np.ndarray:
    """Exam outcome with one additive effect per treated arm (arm 0 = control).

    ``d[j]`` is the effect size of arm j+1 in exam-SD units.
    """
    labels = unit_labels(z)
    exam = sample.column("exam")
    k = int(labels.max()) + 1
    if len(d) < k - 1:
        raise ValidationError(f"need {k - 1} effect sizes for {k} arms")
    tau = np.concatenate([[0.0], _effect_sizes_to_shifts(d, exam)])
    return exam + tau[labels]


# ---------------------------------------------------------------------------
# Settlement / interference experiment
# ---------------------------------------------------------------------------

SETTLEMENT_NAMES = ("Kibera", "Mukuru", "Huruma", "Korogocho", "Dandora")

# Approximate central coordinates (lat, lon) for each settlement; only the
# relative geometry matters because network distances are min-normalized.
SETTLEMENT_CENTERS = np.array(
    [
        [-1.3167, 36.7833],
        [-1.3072, 36.8750],
        [-1.2542, 36.8692],
        [-1.2464, 36.8889],
        [-1.2486, 36.9067],
    ]
)


@dataclass
class SettlementParams:
    """Parameters of the two-level covariate and network model."""

    mu: np.ndarray = field(
        default_factory=lambda: np.array(
            [[0.25, 0.0, 0.05, 0.0, 1.0], [0.25, 0.75, 0.0, 0.25, 0.0]]
        )
    )  # (2, 5): per-covariate settlement means
    sigma_individual_scale: float = 0.1
    sigma_school_scale: float = 0.2
    theta_within: float = 0.2
    theta_between_same: float = 0.1
    theta_between_diff: float = 0.01
    gamma: float = 0.5
    beta: np.ndarray = field(default_factory=lambda: np.array([1.0, 1.0]))
    q: float = 0.25
    effect_size: float = 0.3
    n_schools: int = 40
    grid_spacing: float = 0.004
    centers: np.ndarray = field(default_factory=lambda: SETTLEMENT_CENTERS.copy())

    def sigma_individual(self) -> np.ndarray:
        return self.sigma_individual_scale * self.mu.std(axis=1, ddof=1)

    def sigma_school(self) -> np.ndarray:
        return self.sigma_school_scale * self.mu.std(axis=1, ddof=1)

    def to_dict(self) -> dict:
        return {
            "mu": self.mu.tolist(),
            "sigma_individual_scale": self.sigma_individual_scale,
            "sigma_school_scale": self.sigma_school_scale,
            "theta_within": self.theta_within,
            "theta_between_same": self.theta_between_same,
            "theta_between_diff": self.theta_between_diff,
            "gamma": self.gamma,
            "beta": self.beta.tolist(),
            "q": self.q,
            "effect_size": self.effect_size,
            "n_schools": self.n_schools,
            "grid_spacing": self.grid_spacing,
            "centers": self.centers.tolist(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SettlementParams":
        out = cls()
        for key, value in d.items():
            if not hasattr(out, key):
                raise ValidationError(f"unknown settlement parameter {key!r}")
            if key in ("mu", "beta", "centers"):
                value = np.asarray(value, dtype=float)
            setattr(out, key, value)
        return out


@dataclass
class SettlementSample:
    """Generated interference-experiment data."""

    covariates: CovariateMatrix  # homophily-transformed, used by balance metrics
    raw_covariates: np.ndarray  # pre-transform draws
    adjacency: np.ndarray
    schools: ClusterMap  # unit -> school
    school_coords: np.ndarray  # (S, 2)
    school_settlement: np.ndarray  # (S,)
    params: SettlementParams
    clamped_probabilities: int = 0

    @property
    def n_units(self) -> int:
        return self.covariates.n_units

    def baseline_outcome(self) -> np.ndarray:
        return self.covariates.values @ self.params.beta

    def exposure(self) -> ExposureSpec:
        return ExposureSpec("fraction_q", q=self.params.q)

    def effect_magnitude(self) -> float:
        return float(self.params.effect_size * np.std(self.baseline_outcome(), ddof=1))


def _school_grid(params: SettlementParams, gen) -> tuple[np.ndarray, np.ndarray]:
    """Jittered grid of school coordinates around each settlement center."""
    n_settlements = params.centers.shape[0]
    if params.n_schools % n_settlements:
        raise ValidationError(
            f"n_schools={params.n_schools} must divide evenly over {n_settlements} settlements"
        )
    per = params.n_schools // n_settlements
    side = int(np.ceil(np.sqrt(per)))
    coords = []
    settlement = []
    for t in range(n_settlements):
        offsets = np.array(
            [(r - (side - 1) / 2, c - (side - 1) / 2) for r in range(side) for c in range(side)]
        )[:per]
        jitter = gen.uniform(-0.25, 0.25, size=offsets.shape)
        coords.append(params.centers[t] + params.grid_spacing * (offsets + jitter))
        settlement.extend([t] * per)
    return np.vstack(coords), np.asarray(settlement, dtype=np.int64)


def school_edge_probabilities(
    params: SettlementParams, school_coords: np.ndarray, school_settlement: np.ndarray
) -> tuple[np.ndarray, int]:
    """Per school-pair edge probability matrix and the count clamped to 1.

    Within a school the probability is theta_within. Across schools it decays
    with the squared school distance normalized by the smallest cross-school
    squared distance (so the closest cross-school pair sits at exactly
    theta_between_same or theta_between_diff).
    """
    s = school_coords.shape[0]
    diff = school_coords[:, None, :] - school_coords[None, :, :]
    sq = np.einsum("ijk,ijk->ij", diff, diff)
    cross = ~np.eye(s, dtype=bool)
    d_norm = sq / sq[cross].min()

    same_settlement = school_settlement[:, None] == school_settlement[None, :]
    with np.errstate(divide="ignore"):
        decay = np.where(cross, d_norm ** -params.gamma, 1.0)
    p_school = np.where(
        ~cross,
        params.theta_within,
        np.where(
            same_settlement,
            params.theta_between_same * decay,
            params.theta_between_diff * decay,
        ),
    )
    clamped = int((p_school > 1).sum())
    return np.clip(p_school, 0.0, 1.0), clamped


def gen_settlements(
    params: Optional[SettlementParams] = None,
    n: int = 4000,
    rng: Optional[RngSpec] = None,
) -> SettlementSample:
    """Two-level sample: units nested in schools nested in settlements.

    School covariate means draw around their settlement's mean, unit
    covariates around their school's mean. Edges connect units with
    probability theta_within inside a school and theta_between * d^-gamma
    across schools, where d is the squared school distance normalized by
    the smallest cross-school squared distance. Covariates then receive the
    homophily transform (each unit adds its neighbors' raw values), so
    connected units are more alike.
    """
    params = params or SettlementParams()
    rng = rng or RngSpec(0)
    gen = rng.generator()

    school_coords, school_settlement = _school_grid(params, gen)
    s = params.n_schools
    if n % s:
        raise ValidationError(f"n={n} must divide evenly over {s} schools")
    per_school = n // s
    schools = ClusterMap(np.repeat(np.arange(s, dtype=np.int64), per_school))

    sigma_school = params.sigma_school()
    sigma_individual = params.sigma_individual()
    school_means = np.column_stack(
        [
            gen.normal(params.mu[j, school_settlement], sigma_school[j])
            for j in range(params.mu.shape[0])
        ]
    )  # (S, 2)
    raw = np.column_stack(
        [
            gen.normal(school_means[schools.unit_to_cluster, j], sigma_individual[j])
            for j in range(params.mu.shape[0])
        ]
    )  # (N, 2)

    p_school, clamped = school_edge_probabilities(params, school_coords, school_settlement)

    # sample the upper triangle block-by-block over school pairs
    adjacency = np.zeros((n, n), dtype=np.int8)
    starts = np.arange(s) * per_school
    for a in range(s):
        for b in range(a, s):
            rows = slice(starts[a], starts[a] + per_school)
            cols = slice(starts[b], starts[b] + per_school)
            block = (gen.random((per_school, per_school)) < p_school[a, b]).astype(np.int8)
            if a == b:
                block = np.triu(block, k=1)
                adjacency[rows, cols] |= block
                adjacency[cols, rows] |= block.T
            else:
                adjacency[rows, cols] = block
                adjacency[cols, rows] = block.T

    transformed = raw + adjacency @ raw  # homophily: own value plus neighbors' sum
    covariates = CovariateMatrix(
        names=["x1", "x2"],
        values=transformed,
        latent=np.array([False, False]),
        salient=None,
    )
    return SettlementSample(
        covariates=covariates,
        raw_covariates=raw,
        adjacency=adjacency,
        schools=schools,
        school_coords=school_coords,
        school_settlement=school_settlement,
        params=params,
        clamped_probabilities=clamped,
    )


def outcome_interference(
    sample: SettlementSample,
    z,
    tau: Optional[float] = None,
    delta: Optional[float] = None,
    q: Optional[float] = None,
) -> np.ndarray:
    """Outcome with a direct effect and an additive spillover onto exposed
    control units.

    A control unit is exposed when its treated-neighbor count strictly
    exceeds q times its degree. Defaults tie tau and delta to
    effect_size * SD(baseline). The all-treated vs all-control contrast
    equals tau exactly.
    """
    labels = unit_labels(z, sample.schools)
    base = sample.baseline_outcome()
    magnitude = sample.effect_magnitude()
    tau = magnitude if tau is None else tau
    delta = magnitude if delta is None else delta
    q = sample.params.q if q is None else q
    exposed = ExposureSpec("fraction_q", q=q).exposed(labels[None, :], sample.adjacency)[0]
    return base + tau * labels + delta * exposed * (1 - labels)


def tate_bias_oracle(
    design: AcceptedDesign,
    adjacency: np.ndarray,
    delta: float,
    q: float,
    cmap: Optional[ClusterMap] = None,
) -> float:
    """Closed-form bias of the difference-in-means estimator under spillover.

    bias = -delta / N_c * sum_i E[ exposed_i * (1 - z_i) ], with the
    expectation the exact average over the accepted set. Requires a fixed
    control-arm size across accepted allocations.
    """
    z = design.accepted_unit_matrix(cmap)
    n_control = (z == 0).sum(axis=1)
    if np.unique(n_control).size != 1:
        raise ValidationError("bias formula requires a fixed control-arm size")
    n_c = int(n_control[0])
    if n_c == 0:
        raise ValidationError("no control units")
    exposed = ExposureSpec("fraction_q", q=q).exposed(z, adjacency)
    return float(-delta / n_c * (exposed * (1 - z)).sum(axis=1).mean())


# ---------------------------------------------------------------------------
# Named DGP presets
# ---------------------------------------------------------------------------

DGP_PRESETS: dict[str, dict] = {
    "vignette0-4arm": {
        "kind": "students",
        "n": 80,
        "k": 4,
        "gender_mode": "bernoulli_07",
        "effect_sizes": [0.0, 0.3, 0.6],
    },
    "vignette0-6arm": {
        "kind": "students",
        "n": 120,
        "k": 6,
        "gender_mode": "bernoulli_07",
        # table values; the prose lists (0, 0, 0.1, 0.3, 0.6) but the reported
        # results use this ladder
        "effect_sizes": [0.0, 0.15, 0.3, 0.45, 0.6],
    },
    "vignette1": {
        "kind": "students",
        "n": 120,
        "gender_mode": "fixed_half",
        "comps": [0.5, 0.3, 0.7],
        "group_size": 20,
        "effect_sizes": [0.3, 0.5, 0.1],
    },
    "vignette2-gamma025": {"kind": "settlements", "n": 4000, "gamma": 0.25},
    "vignette2-gamma050": {"kind": "settlements", "n": 4000, "gamma": 0.5},
    "vignette2-gamma075": {"kind": "settlements", "n": 4000, "gamma": 0.75},
    "vignette2-desk": {"kind": "settlements", "n": 400, "n_schools": 20, "gamma": 0.5},
}


def dgp_preset(name: str) -> dict:
    if name not in DGP_PRESETS:
        raise ValidationError(f"unknown DGP preset {name!r}; known: {sorted(DGP_PRESETS)}")
    return dict(DGP_PRESETS[name])
