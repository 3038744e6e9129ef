"""Simulation harness: benchmark designs against restricted designs.

One experiment = a scenario (data-generating process plus estimands), a list
of design arms, and replicate/seed bookkeeping. Per data replicate, each arm
produces an accepted set of size m; the experiment is then re-run under every
accepted allocation (outcomes generated, effects estimated, exact test run)
and bias / variance / RMSE / rejection rate are aggregated over those m
re-runs, then summarized as mean +/- SD across replicates with relative
columns against a reference arm.

The restricted arms follow the top-(m/k)-plus-mirrors acceptance scheme so
mirror closure is exact by construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from .datasets import (
    SettlementParams,
    gen_settlements,
    gen_students,
)
from .fitness import AcceptedDesign, FitnessConfig, RestrictionRule, add_mirrors, restrict
from .genetic import GaConfig, evolve
from .metrics import ExposureSpec, MetricContext, metric_from_dict
from .pools import dedup, enumerate_cluster, enumerate_complete, enumerate_group_formation
from .rng import RngSpec
from .types import GroupDesignPool, Pool, ValidationError

ALPHA_DEFAULT = 0.05


# ---------------------------------------------------------------------------
# Scenarios: data, benchmark mechanism, estimands, vectorized re-run algebra
# ---------------------------------------------------------------------------


class MultiArmScenario:
    """k-arm classroom experiment; estimands are each arm vs control."""

    kind = "multiarm"

    def __init__(self, n=80, k=4, effect_sizes=(0.0, 0.3, 0.6), gender_mode="bernoulli_07", noise_scale=1.0):
        self.n = n
        self.k = k
        self.effect_sizes = list(effect_sizes)
        self.gender_mode = gender_mode
        self.noise_scale = noise_scale
        if len(self.effect_sizes) != k - 1:
            raise ValidationError(f"need {k - 1} effect sizes for {k} arms")

    def generate(self, rng: RngSpec) -> dict:
        x = gen_students(self.n, self.gender_mode, rng, noise_scale=self.noise_scale)
        sd = float(np.std(x.column("exam"), ddof=1))
        tau = np.concatenate([[0.0], sd * np.asarray(self.effect_sizes)])
        return {"x": x, "tau": tau}

    def context(self, data) -> MetricContext:
        return MetricContext(covariates=data["x"])

    def benchmark(self, data, m: int, rng: RngSpec) -> Pool:
        return enumerate_complete(self.n, self.k, m, rng)

    def pool(self, data, m_pool: int, rng: RngSpec) -> Pool:
        return dedup(enumerate_complete(self.n, self.k, m_pool, rng))

    def truths(self, data) -> dict[str, float]:
        return {f"arm{h}_vs_0": float(data["tau"][h]) for h in range(1, self.k)}

    def rerun(self, data, design: AcceptedDesign):
        z = design.accepted_unit_matrix()
        y = data["x"].column("exam")[None, :] + data["tau"][z]
        weights = {}
        for h in range(1, self.k):
            in_h = (z == h).astype(float)
            in_0 = (z == 0).astype(float)
            weights[f"arm{h}_vs_0"] = in_h / in_h.sum(1, keepdims=True) - in_0 / in_0.sum(
                1, keepdims=True
            )
        return y, weights


class GroupFormationScenario:
    """Group formation experiment; estimands are per-composition effects."""

    kind = "group_formation"

    def __init__(self, n=120, comps=(0.5, 0.3, 0.7), group_size=20, effect_sizes=(0.3, 0.5, 0.1), noise_scale=1.0):
        self.n = n
        self.comps = list(comps)
        self.group_size = group_size
        self.effect_sizes = list(effect_sizes)
        self.noise_scale = noise_scale
        if len(self.effect_sizes) != len(self.comps):
            raise ValidationError("need one effect size per composition")

    def generate(self, rng: RngSpec) -> dict:
        x = gen_students(self.n, "fixed_half", rng, noise_scale=self.noise_scale)
        sd = float(np.std(x.column("exam"), ddof=1))
        tau = sd * np.asarray(self.effect_sizes)
        return {"x": x, "tau": tau}

    def context(self, data) -> MetricContext:
        return MetricContext(covariates=data["x"], comps=self.comps)

    def benchmark(self, data, m: int, rng: RngSpec) -> Pool:
        return enumerate_group_formation(data["x"], self.comps, self.group_size, m, rng)

    def pool(self, data, m_pool: int, rng: RngSpec) -> Pool:
        return dedup(
            enumerate_group_formation(data["x"], self.comps, self.group_size, m_pool, rng)
        )

    def truths(self, data) -> dict[str, float]:
        return {f"comp{c}": float(t) for c, t in zip(self.comps, data["tau"])}

    def rerun(self, data, design: AcceptedDesign):
        x = data["x"]
        salient = x.salient_vector().astype(float)
        idx = design.accepted_indices()
        pool = design.pool
        if not isinstance(pool, GroupDesignPool):
            raise ValidationError("group formation scenario needs group design pools")
        group_of = pool.group_of[idx]
        arm_of_group = pool.arm_of_group[idx]
        m, n = group_of.shape
        n_groups = arm_of_group.shape[1]
        seg = (group_of + n_groups * np.arange(m, dtype=np.int64)[:, None]).ravel()
        counts = np.bincount(seg, minlength=m * n_groups).reshape(m, n_groups)
        on = np.bincount(
            seg, weights=np.broadcast_to(salient, group_of.shape).ravel(), minlength=m * n_groups
        ).reshape(m, n_groups)
        rho = on / counts

        comps = np.asarray(self.comps)
        comp_idx = np.argmin(np.abs(rho[:, :, None] - comps[None, None, :]), axis=2)
        if not (np.abs(rho - comps[comp_idx]) < 1e-9).all():
            raise ValidationError("accepted design contains a group with an unplanned composition")
        group_shift = data["tau"][comp_idx] * (arm_of_group == 1)
        y = x.column("exam")[None, :] + np.take_along_axis(group_shift, group_of, axis=1)

        weights = {}
        for j, c in enumerate(self.comps):
            match = comp_idx == j
            sel_t = match & (arm_of_group == 1)
            sel_c = match & (arm_of_group == 0)
            unit_t = np.take_along_axis(sel_t, group_of, axis=1).astype(float)
            unit_c = np.take_along_axis(sel_c, group_of, axis=1).astype(float)
            weights[f"comp{c}"] = unit_t / unit_t.sum(1, keepdims=True) - unit_c / unit_c.sum(
                1, keepdims=True
            )
        return y, weights


class InterferenceScenario:
    """Cluster-randomized experiment with network spillover; estimand is the
    all-treated vs all-control contrast."""

    kind = "interference"

    def __init__(self, n=4000, n_schools=40, gamma=0.5, effect_size=0.3, q=0.25, params: Optional[dict] = None):
        base = {"n_schools": n_schools, "gamma": gamma, "effect_size": effect_size, "q": q}
        base.update(params or {})
        self.params = SettlementParams.from_dict(base)
        self.n = n

    def generate(self, rng: RngSpec) -> dict:
        sample = gen_settlements(self.params, self.n, rng)
        magnitude = sample.effect_magnitude()
        return {"sample": sample, "tau": magnitude, "delta": magnitude}

    def context(self, data) -> MetricContext:
        sample = data["sample"]
        return MetricContext(
            covariates=sample.covariates,
            cluster_map=sample.schools,
            adjacency=sample.adjacency,
            coords=sample.school_coords,
            exposure=sample.exposure(),
        )

    def benchmark(self, data, m: int, rng: RngSpec) -> Pool:
        return enumerate_cluster(data["sample"].schools, 2, m, rng)

    def pool(self, data, m_pool: int, rng: RngSpec) -> Pool:
        return dedup(enumerate_cluster(data["sample"].schools, 2, m_pool, rng))

    def truths(self, data) -> dict[str, float]:
        return {"tate": float(data["tau"])}

    def rerun(self, data, design: AcceptedDesign):
        sample = data["sample"]
        z = design.accepted_unit_matrix(sample.schools).astype(float)
        base = sample.baseline_outcome()
        exposed = sample.exposure().exposed(z, sample.adjacency)
        y = base[None, :] + data["tau"] * z + data["delta"] * exposed * (1 - z)
        n_t = z.sum(1, keepdims=True)
        n_c = (1 - z).sum(1, keepdims=True)
        weights = {"tate": z / n_t - (1 - z) / n_c}
        return y, weights


SCENARIOS = {
    cls.kind: cls for cls in (MultiArmScenario, GroupFormationScenario, InterferenceScenario)
}


def scenario_from_dict(d: dict):
    d = dict(d)
    kind = d.pop("kind")
    if kind not in SCENARIOS:
        raise ValidationError(f"unknown scenario kind {kind!r}; known: {sorted(SCENARIOS)}")
    return SCENARIOS[kind](**d)


# ---------------------------------------------------------------------------
# Design arms
# ---------------------------------------------------------------------------


@dataclass
class DesignArm:
    """One column of the comparison: a benchmark or a restricted design."""

    kind: str  # benchmark | restricted
    label: str
    metrics: list = field(default_factory=list)  # metric spec dicts (restricted only)
    weights: Optional[list] = None
    aggregator: str = "auto"
    normalization: str = "pool_minmax"
    ga: Optional[GaConfig] = None

    def __post_init__(self):
        if self.kind not in ("benchmark", "restricted"):
            raise ValidationError("design kind must be 'benchmark' or 'restricted'")
        if self.kind == "restricted" and not self.metrics:
            raise ValidationError(f"restricted arm {self.label!r} needs metrics")

    def fitness(self) -> Optional[FitnessConfig]:
        if self.kind == "benchmark":
            return None
        metrics = [metric_from_dict(m) if isinstance(m, dict) else m for m in self.metrics]
        aggregator = self.aggregator
        if aggregator == "auto":
            if any(m.is_gate for m in metrics):
                aggregator = "gated"
            elif self.weights is not None:
                aggregator = "weighted_sum"
            else:
                aggregator = "identity"
        return FitnessConfig(
            metrics=metrics,
            weights=self.weights,
            aggregator=aggregator,
            normalization=self.normalization,
        )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "label": self.label,
            "metrics": [m.to_dict() if hasattr(m, "to_dict") else m for m in self.metrics],
            "weights": self.weights,
            "aggregator": self.aggregator,
            "normalization": self.normalization,
            "ga": self.ga.to_dict() if self.ga else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DesignArm":
        d = dict(d)
        if d.get("ga"):
            d["ga"] = GaConfig.from_dict(d["ga"])
        return cls(**d)


@dataclass
class ExperimentConfig:
    scenario: dict
    designs: list[DesignArm]
    m_pool: int = 10_000
    m_accept: int = 200
    replicates: int = 3
    seed: int = 0
    alpha: float = ALPHA_DEFAULT
    reference: Optional[str] = None  # defaults to the first benchmark arm

    def __post_init__(self):
        if self.m_accept > self.m_pool:
            raise ValidationError("m_accept cannot exceed m_pool")
        if self.replicates < 1:
            raise ValidationError("need at least one replicate")
        self.designs = [
            d if isinstance(d, DesignArm) else DesignArm.from_dict(d) for d in self.designs
        ]
        labels = [d.label for d in self.designs]
        if len(set(labels)) != len(labels):
            raise ValidationError("design labels must be unique")

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "designs": [d.to_dict() for d in self.designs],
            "m_pool": self.m_pool,
            "m_accept": self.m_accept,
            "replicates": self.replicates,
            "seed": self.seed,
            "alpha": self.alpha,
            "reference": self.reference,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        return cls(**d)


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


@dataclass
class ResultsTable:
    """Per-replicate absolute metrics plus aggregate/relative views."""

    per_replicate: pd.DataFrame
    reference: str
    failures: list[dict] = field(default_factory=list)

    def aggregate(self) -> pd.DataFrame:
        """Mean +/- SD across replicates, with relative columns vs the reference.

        Relative columns are computed per replicate from the stored absolute
        values (ratio of this arm to the reference arm on the same replicate
        and comparison), then summarized.
        """
        df = self.per_replicate.copy()
        ref = df[df["design"] == self.reference][
            ["replicate", "comparison", "bias", "variance", "rmse"]
        ].rename(columns={"bias": "ref_bias", "variance": "ref_variance", "rmse": "ref_rmse"})
        df = df.merge(ref, on=["replicate", "comparison"], how="left")
        with np.errstate(divide="ignore", invalid="ignore"):
            df["pct_rmse"] = 100.0 * df["rmse"] / df["ref_rmse"]
            df["pct_abs_bias"] = 100.0 * df["bias"].abs() / df["ref_bias"].abs()
            df["pct_variance"] = 100.0 * df["variance"] / df["ref_variance"]

        stats = ["bias", "variance", "rmse", "rejection_rate", "pct_rmse", "pct_abs_bias", "pct_variance"]
        grouped = df.groupby(["design", "comparison"], sort=False)
        out = grouped[stats].agg(["mean", "std"])
        out.columns = [f"{stat}_{agg}" for stat, agg in out.columns]
        out["n_replicates"] = grouped.size()
        return out.reset_index()

    def to_csv(self, out_dir) -> dict[str, Path]:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        paths = {
            "per_replicate": out_dir / "results_per_replicate.csv",
            "aggregate": out_dir / "results_aggregate.csv",
        }
        self.per_replicate.to_csv(paths["per_replicate"], index=False)
        self.aggregate().to_csv(paths["aggregate"], index=False)
        if self.failures:
            paths["failures"] = out_dir / "failures.json"
            with open(paths["failures"], "w") as fh:
                json.dump(self.failures, fh, indent=2)
        return paths

    def to_json(self) -> dict:
        return {
            "reference": self.reference,
            "per_replicate": self.per_replicate.to_dict(orient="records"),
            "aggregate": self.aggregate().to_dict(orient="records"),
            "failures": self.failures,
        }


def build_restricted_design(
    arm: DesignArm,
    pool: Pool,
    ctx: MetricContext,
    m_accept: int,
    rng: RngSpec,
    metric_cache: Optional[dict] = None,
) -> AcceptedDesign:
    """Score a pool and accept the top m/k plus their mirrors (m total)."""
    fitness = arm.fitness()
    k = pool.k
    if m_accept % k:
        raise ValidationError(f"m_accept={m_accept} must be divisible by k={k}")
    if arm.ga is not None:
        pool = evolve(pool, fitness, ctx, arm.ga, rng.child(1))
        metric_cache = None  # pool changed; cached columns no longer align

    columns = []
    for metric in fitness.metrics:
        key = json.dumps(metric.to_dict(), sort_keys=True)
        if metric_cache is not None and key in metric_cache:
            columns.append(metric_cache[key])
        else:
            col = metric.score_pool(pool, ctx)
            if metric_cache is not None:
                metric_cache[key] = col
            columns.append(col)
    matrix = np.column_stack(columns)
    _, bounds = fitness.normalize(matrix)
    scores = fitness.aggregate_matrix(matrix, bounds=bounds)

    design = restrict(
        pool,
        scores,
        RestrictionRule("threshold_percentile", m_accept // k),
        fitness=fitness,
        metric_scores=matrix,
    )
    mirror_group = "auto" if k == 2 else "cyclic"
    design = add_mirrors(
        design,
        mirror_group=mirror_group,
        rescore=lambda p: fitness.aggregate_matrix(fitness.score_metrics(p, ctx), bounds=bounds),
    )
    return design


def _accept_all(pool: Pool) -> AcceptedDesign:
    m = len(pool)
    return AcceptedDesign(
        pool=pool,
        scores=np.zeros(m),
        accept_mask=np.ones(m, dtype=bool),
        probabilities=np.full(m, 1.0 / m),
        provenance=dict(pool.provenance),
    )


def _rerun_metrics(y, weights, truths, alpha) -> list[dict]:
    rows = []
    for comparison, w in weights.items():
        t_matrix = y @ w.T  # [i, j] = statistic of allocation j on re-run i's outcomes
        estimates = np.diagonal(t_matrix)
        pvals = (np.abs(t_matrix) >= np.abs(estimates)[:, None]).mean(axis=1)
        tau = truths[comparison]
        err = estimates - tau
        rows.append(
            {
                "comparison": comparison,
                "bias": float(err.mean()),
                "variance": float(estimates.var()),  # population variance: rmse^2 = bias^2 + var
                "rmse": float(np.sqrt((err**2).mean())),
                "rejection_rate": float((pvals <= alpha).mean()),
                "n_runs": int(estimates.size),
            }
        )
    return rows


def run_experiment(cfg: ExperimentConfig, progress=None) -> ResultsTable:
    """Run every design arm over every data replicate.

    Failed arm/replicate combinations are recorded and excluded from the
    aggregates; the run continues.
    """
    scenario = scenario_from_dict(cfg.scenario)
    base_rng = RngSpec(cfg.seed)
    records = []
    failures = []
    reference = cfg.reference or next(
        (d.label for d in cfg.designs if d.kind == "benchmark"), cfg.designs[0].label
    )

    for r in range(cfg.replicates):
        rep_rng = base_rng.child(r)
        data = scenario.generate(rep_rng.child(0))
        ctx = scenario.context(data)
        truths = scenario.truths(data)
        shared_pool = None
        metric_cache: dict = {}

        for d_idx, arm in enumerate(cfg.designs):
            if progress:
                progress(f"replicate {r}: {arm.label}")
            arm_rng = rep_rng.child(2 + d_idx)
            try:
                if arm.kind == "benchmark":
                    design = _accept_all(scenario.benchmark(data, cfg.m_accept, arm_rng.child(0)))
                else:
                    if shared_pool is None:
                        shared_pool = scenario.pool(data, cfg.m_pool, rep_rng.child(1))
                    design = build_restricted_design(
                        arm, shared_pool, ctx, cfg.m_accept, arm_rng, metric_cache
                    )
                y, weights = scenario.rerun(data, design)
                for row in _rerun_metrics(y, weights, truths, cfg.alpha):
                    row.update(
                        {"design": arm.label, "replicate": r, "n_accepted": design.n_accepted}
                    )
                    records.append(row)
            except ValidationError as exc:
                failures.append({"replicate": r, "design": arm.label, "error": str(exc)})

    if not records:
        raise ValidationError("every design failed on every replicate; nothing to report")
    columns = [
        "design",
        "comparison",
        "replicate",
        "bias",
        "variance",
        "rmse",
        "rejection_rate",
        "n_runs",
        "n_accepted",
    ]
    frame = pd.DataFrame.from_records(records)[columns]
    return ResultsTable(per_replicate=frame, reference=reference, failures=failures)


# ---------------------------------------------------------------------------
# Named experiment presets
# ---------------------------------------------------------------------------


def _v1_designs(ga: bool = False) -> list[DesignArm]:
    arms = [DesignArm(kind="benchmark", label="GFR")]
    smd_gd = [
        {"name": "sum_max_abs_smd", "params": {"exclude_salient": True}},
        {"name": "desired_comps", "params": {}},
    ]
    mahal_gd = [
        {"name": "max_mahalanobis", "params": {"exclude_salient": True}},
        {"name": "desired_comps", "params": {}},
    ]
    arms.append(DesignArm(kind="restricted", label="IGR-SumMaxAbsSMD-GD", metrics=smd_gd))
    arms.append(DesignArm(kind="restricted", label="IGR-MaxMahalanobis-GD", metrics=mahal_gd))
    if ga:
        arms.append(
            DesignArm(
                kind="restricted",
                label="IGRg-SumMaxAbsSMD-GD",
                metrics=smd_gd,
                ga=GaConfig(generations=20, constraint="tolerance_band", tolerance=1),
            )
        )
    return arms


def _v2_designs(metric: str = "frac_ctrl_exposed", ga: bool = False) -> list[DesignArm]:
    arms = [DesignArm(kind="benchmark", label="CR")]
    for w_balance in (0.25, 0.5, 0.75):
        w_interf = round(1.0 - w_balance, 2)
        metrics = [
            {"name": "max_mahalanobis", "params": {"exclude_salient": False}},
            {"name": metric, "params": {}},
        ]
        arms.append(
            DesignArm(
                kind="restricted",
                label=f"IGR-{w_balance:.2f}bal-{w_interf:.2f}int",
                metrics=metrics,
                weights=[w_balance, w_interf],
            )
        )
        if ga:
            arms.append(
                DesignArm(
                    kind="restricted",
                    label=f"IGRg-{w_balance:.2f}bal-{w_interf:.2f}int",
                    metrics=metrics,
                    weights=[w_balance, w_interf],
                    ga=GaConfig(generations=20),
                )
            )
    return arms


EXPERIMENT_PRESETS = {
    "vignette0-desk": lambda: ExperimentConfig(
        scenario={"kind": "multiarm", "n": 80, "k": 4, "effect_sizes": [0.0, 0.3, 0.6]},
        designs=[
            DesignArm(kind="benchmark", label="CR"),
            DesignArm(
                kind="restricted",
                label="IGR-SumMaxAbsSMD",
                metrics=[{"name": "sum_max_abs_smd", "params": {"exclude_salient": False}}],
            ),
            DesignArm(
                kind="restricted",
                label="IGR-MaxMahalanobis",
                metrics=[{"name": "max_mahalanobis", "params": {"exclude_salient": False}}],
            ),
        ],
        m_pool=5_000,
        m_accept=100,
        replicates=3,
        seed=11,
    ),
    "vignette1-desk": lambda: ExperimentConfig(
        scenario={"kind": "group_formation", "n": 120, "comps": [0.5, 0.3, 0.7], "group_size": 20, "effect_sizes": [0.3, 0.5, 0.1]},
        designs=_v1_designs(),
        m_pool=10_000,
        m_accept=200,
        replicates=3,
        seed=7,
    ),
    "vignette1-full": lambda: ExperimentConfig(
        scenario={"kind": "group_formation", "n": 120, "comps": [0.5, 0.3, 0.7], "group_size": 20, "effect_sizes": [0.3, 0.5, 0.1]},
        designs=_v1_designs(ga=True),
        m_pool=100_000,
        m_accept=500,
        replicates=5,
        seed=7,
    ),
    "vignette2-desk": lambda: ExperimentConfig(
        scenario={"kind": "interference", "n": 400, "n_schools": 20, "gamma": 0.5},
        designs=_v2_designs(),
        m_pool=10_000,
        m_accept=200,
        replicates=3,
        seed=13,
    ),
    "vignette2-full": lambda: ExperimentConfig(
        scenario={"kind": "interference", "n": 4000, "n_schools": 40, "gamma": 0.5},
        designs=_v2_designs(ga=True),
        m_pool=100_000,
        m_accept=500,
        replicates=5,
        seed=13,
    ),
    "vignette2-desk-euclid": lambda: ExperimentConfig(
        scenario={"kind": "interference", "n": 400, "n_schools": 20, "gamma": 0.5},
        designs=_v2_designs(metric="inv_min_euclidean"),
        m_pool=10_000,
        m_accept=200,
        replicates=3,
        seed=13,
    ),
}


def experiment_preset(name: str) -> ExperimentConfig:
    if name not in EXPERIMENT_PRESETS:
        raise ValidationError(
            f"unknown experiment preset {name!r}; known: {sorted(EXPERIMENT_PRESETS)}"
        )
    return EXPERIMENT_PRESETS[name]()
