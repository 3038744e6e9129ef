"""Command-line interface.

Workflow commands mirror the design protocol: enumerate a pool, score it,
restrict to an accepted design, optionally evolve the pool, diagnose,
pre-register (lock), draw the official randomization, and test outcomes.
`simulate` runs the bundled benchmark experiments; `serve` starts the local
HTTP workbench.

Every command takes `--config <json>` for structured options and `--seed`
where randomness is involved; file outputs land under `--out`.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import numpy as np

from . import io
from .bundle import load_bundle, preregister as bundle_preregister, record_draw, save_design, verify_bundle
from .diagnostics import diagnose as diagnose_design
from .fitness import FitnessConfig, RestrictionRule, _jsonable, add_mirrors, draw_official, restrict
from .genetic import GaConfig, evolve
from .inference import estimator_from_dict, fisher_test
from .metrics import ExposureSpec, MetricContext
from .pipeline import ExperimentConfig, experiment_preset, run_experiment
from .pools import dedup, enumerate_cluster, enumerate_complete, enumerate_group_formation
from .rng import RngSpec
from .types import Allocation, GroupDesign, ValidationError


def _load_config(config_path) -> dict:
    if not config_path:
        return {}
    with open(config_path) as fh:
        return json.load(fh)


def _context_from_options(covariates, clusters, network, coords, config) -> MetricContext:
    ctx_cfg = config.get("context", {})
    x = io.read_covariates(covariates) if covariates else None
    cmap = io.read_cluster_map(clusters) if clusters else None
    n_units = None
    if cmap is not None:
        n_units = cmap.n_units
    elif x is not None:
        n_units = x.n_units
    adjacency = io.read_edge_list(network, n=n_units) if network else None
    return MetricContext(
        covariates=x,
        cluster_map=cmap,
        adjacency=adjacency,
        coords=io.read_coords(coords) if coords else None,
        comps=ctx_cfg.get("comps"),
        exposure=ExposureSpec.from_dict(ctx_cfg["exposure"]) if ctx_cfg.get("exposure") else ExposureSpec(),
    )


def _echo_json(payload: dict):
    click.echo(json.dumps(_jsonable(payload), indent=2, sort_keys=True))


@click.group()
def main():
    """Inspection-guided randomization workbench."""


@main.command()
@click.option("--mechanism", type=click.Choice(["complete", "cluster", "group_formation"]), default="complete")
@click.option("--n", type=int, default=None, help="unit count (complete)")
@click.option("--k", type=int, default=2, help="number of arms")
@click.option("--m-pool", type=int, default=1000)
@click.option("--covariates", type=click.Path(exists=True), default=None)
@click.option("--clusters", type=click.Path(exists=True), default=None)
@click.option("--group-size", type=int, default=None)
@click.option("--comps", default=None, help="comma-separated compositions, e.g. 0.5,0.3,0.7")
@click.option("--no-dedup", is_flag=True, default=False)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--seed", type=int, default=0)
@click.option("--out", type=click.Path(), required=True)
def enumerate(mechanism, n, k, m_pool, covariates, clusters, group_size, comps, no_dedup, config_path, seed, out):
    """Enumerate a candidate allocation pool."""
    cfg = _load_config(config_path)
    mechanism = cfg.get("mechanism", mechanism)
    rng = RngSpec(cfg.get("seed", seed))
    m_pool = cfg.get("m_pool", m_pool)
    k = cfg.get("k", k)
    if mechanism == "complete":
        n = cfg.get("n", n)
        if n is None and covariates:
            n = io.read_covariates(covariates).n_units
        if n is None:
            raise click.UsageError("complete randomization needs --n or --covariates")
        pool = enumerate_complete(n, k, m_pool, rng)
    elif mechanism == "cluster":
        if not clusters:
            raise click.UsageError("cluster randomization needs --clusters")
        pool = enumerate_cluster(io.read_cluster_map(clusters), k, m_pool, rng)
    else:
        if not covariates:
            raise click.UsageError("group formation needs --covariates")
        comps_list = cfg.get("comps") or [float(c) for c in (comps or "").split(",") if c]
        group_size = cfg.get("group_size", group_size)
        if not comps_list or not group_size:
            raise click.UsageError("group formation needs --comps and --group-size")
        pool = enumerate_group_formation(
            io.read_covariates(covariates), comps_list, group_size, m_pool, rng
        )
    if not (no_dedup or cfg.get("no_dedup")):
        pool = dedup(pool)
    io.save_pool(pool, out)
    _echo_json({"pool": str(Path(out)), "n": len(pool), "level": pool.level, "k": pool.k})


@main.command()
@click.option("--pool", "pool_dir", type=click.Path(exists=True), required=True)
@click.option("--covariates", type=click.Path(exists=True), default=None)
@click.option("--clusters", type=click.Path(exists=True), default=None)
@click.option("--network", type=click.Path(exists=True), default=None)
@click.option("--coords", type=click.Path(exists=True), default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), required=True,
              help="JSON with a 'fitness' section (metrics, weights, aggregator) and optional 'context'")
@click.option("--out", type=click.Path(), required=True)
def score(pool_dir, covariates, clusters, network, coords, config_path, out):
    """Score a pool with the configured inspection metrics."""
    cfg = _load_config(config_path)
    fitness = FitnessConfig.from_dict(cfg["fitness"])
    ctx = _context_from_options(covariates, clusters, network, coords, cfg)
    pool = io.load_pool(pool_dir)
    matrix = fitness.score_metrics(pool, ctx)
    _, bounds = fitness.normalize(matrix)
    scores = fitness.aggregate_matrix(matrix, bounds=bounds)
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    header = ",".join(fitness.metric_names())
    np.savetxt(out / "metric_scores.csv", matrix, fmt="%.17g", delimiter=",", header=header, comments="")
    np.savetxt(out / "scores.csv", scores, fmt="%.17g", delimiter=",", header="fitness", comments="")
    io.write_json(_jsonable({"fitness": fitness.to_dict(), "bounds": bounds.tolist()}), out / "fitness.json")
    _echo_json({"scored": len(pool), "finite": int(np.isfinite(scores).sum()), "out": str(out)})


@main.command(name="restrict")
@click.option("--pool", "pool_dir", type=click.Path(exists=True), required=True)
@click.option("--scores", "scores_dir", type=click.Path(exists=True), required=True,
              help="directory produced by `score`")
@click.option("--m-accept", type=int, required=True)
@click.option("--rule", type=click.Choice(["threshold_percentile", "top_m"]), default="threshold_percentile")
@click.option("--mirrors/--no-mirrors", default=True)
@click.option("--mirror-group", type=click.Choice(["auto", "symmetric", "cyclic"]), default="auto")
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--out", type=click.Path(), required=True)
def restrict_cmd(pool_dir, scores_dir, m_accept, rule, mirrors, mirror_group, config_path, out):
    """Restrict a scored pool to the accepted design (saved unlocked)."""
    cfg = _load_config(config_path)
    pool = io.load_pool(pool_dir)
    scores_dir = Path(scores_dir)
    scores = np.loadtxt(scores_dir / "scores.csv", delimiter=",", skiprows=1, ndmin=1)
    metric_scores = np.loadtxt(scores_dir / "metric_scores.csv", delimiter=",", skiprows=1, ndmin=2)
    fitness = None
    fitness_file = scores_dir / "fitness.json"
    if fitness_file.exists():
        with open(fitness_file) as fh:
            fitness = FitnessConfig.from_dict(json.load(fh)["fitness"])
    rule_obj = RestrictionRule(cfg.get("rule", rule), cfg.get("m_accept", m_accept))
    design = restrict(pool, scores, rule_obj, fitness=fitness, metric_scores=metric_scores)
    if cfg.get("mirrors", mirrors):
        design = add_mirrors(design, mirror_group=cfg.get("mirror_group", mirror_group))
    save_design(design, out)
    _echo_json({"accepted": design.n_accepted, "pool": len(design.pool), "out": str(out)})


@main.command(name="evolve")
@click.option("--pool", "pool_dir", type=click.Path(exists=True), required=True)
@click.option("--covariates", type=click.Path(exists=True), default=None)
@click.option("--clusters", type=click.Path(exists=True), default=None)
@click.option("--network", type=click.Path(exists=True), default=None)
@click.option("--coords", type=click.Path(exists=True), default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), required=True,
              help="JSON with 'fitness' and optional 'ga' + 'context' sections")
@click.option("--seed", type=int, default=0)
@click.option("--out", type=click.Path(), required=True)
def evolve_cmd(pool_dir, covariates, clusters, network, coords, config_path, seed, out):
    """Refine a pool with the genetic search."""
    cfg = _load_config(config_path)
    fitness = FitnessConfig.from_dict(cfg["fitness"])
    ga = GaConfig.from_dict(cfg.get("ga") or {})
    ctx = _context_from_options(covariates, clusters, network, coords, cfg)
    pool = io.load_pool(pool_dir)
    evolved = evolve(pool, fitness, ctx, ga, RngSpec(cfg.get("seed", seed)))
    io.save_pool(evolved, out)
    trace = evolved.provenance.get("ga_trace", [])
    if trace:
        io.write_ga_trace(trace, Path(out) / "ga_trace.csv")
    _echo_json({"evolved": len(evolved), "generations": ga.generations, "out": str(out)})


@main.command()
@click.option("--design", "design_dir", type=click.Path(exists=True), required=True)
@click.option("--clusters", type=click.Path(exists=True), default=None)
@click.option("--out", type=click.Path(), default=None)
def diagnose(design_dir, clusters, out):
    """Diagnostics for a saved design: score spread, correlations, trade-offs."""
    design = load_bundle(design_dir)
    cmap = io.read_cluster_map(clusters) if clusters else None
    report = diagnose_design(design, cmap=cmap)
    payload = report.to_dict()
    if out:
        io.write_json(_jsonable(payload), Path(out))
    _echo_json(
        {
            "n_pool": payload["n_pool"],
            "n_accepted": payload["n_accepted"],
            "low_discrimination": payload["score_summary"]["low_discrimination"],
            "flags": payload["score_summary"]["flags"]
            + (payload["correlation"]["flags"] if payload["correlation"] else []),
            "out": out,
        }
    )


@main.command(name="preregister")
@click.option("--design", "design_dir", type=click.Path(exists=True), required=True)
@click.option("--out", type=click.Path(), required=True)
def preregister_cmd(design_dir, out):
    """Lock a saved design into a hash-verified bundle."""
    design = load_bundle(design_dir)
    bundle_preregister(design, out)
    _echo_json({"bundle": str(Path(out)), "digest": design.bundle_hash})


@main.command()
@click.option("--bundle", "bundle_dir", type=click.Path(exists=True), required=True)
@click.option("--replay", is_flag=True, default=False)
def verify(bundle_dir, replay):
    """Verify a bundle's digest, schema, and (optionally) seed replay."""
    report = verify_bundle(bundle_dir, replay=replay)
    _echo_json(report)
    sys.exit(0 if report["ok"] else 1)


@main.command()
@click.option("--bundle", "bundle_dir", type=click.Path(exists=True), required=True)
@click.option("--seed", type=int, required=True)
@click.option("--out", type=click.Path(), default=None)
def randomize(bundle_dir, seed, out):
    """Draw the official allocation from a locked bundle."""
    design = load_bundle(bundle_dir)
    alloc = draw_official(design, RngSpec(seed))
    record_draw(bundle_dir, design.audit[-1])
    if isinstance(alloc, GroupDesign):
        labels = alloc.unit_arms()
        payload = {"group_of": alloc.group_of.tolist(), "arm_of_group": alloc.arm_of_group.tolist()}
    else:
        labels = alloc.labels
        payload = {"labels": labels.tolist(), "level": alloc.level}
    if out:
        np.savetxt(out, np.asarray(labels, dtype=np.int64)[None, :], fmt="%d", delimiter=",")
    _echo_json({"drawn": payload, "audit": str(Path(bundle_dir) / "draws.jsonl")})


@main.command(name="test")
@click.option("--bundle", "bundle_dir", type=click.Path(exists=True), required=True)
@click.option("--outcomes", type=click.Path(exists=True), required=True, help="one-column CSV of observed outcomes")
@click.option("--observed", type=click.Path(exists=True), required=True, help="CSV row of the deployed allocation labels")
@click.option("--covariates", type=click.Path(exists=True), default=None)
@click.option("--clusters", type=click.Path(exists=True), default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None,
              help="JSON with an 'estimator' section")
@click.option("--out", type=click.Path(), default=None)
def test_cmd(bundle_dir, outcomes, observed, covariates, clusters, config_path, out):
    """Exact randomization test of the sharp null on observed outcomes."""
    cfg = _load_config(config_path)
    design = load_bundle(bundle_dir)
    y = np.loadtxt(outcomes, delimiter=",", skiprows=1 if _has_header(outcomes) else 0, ndmin=1)
    z_labels = np.loadtxt(observed, delimiter=",", dtype=np.int64, ndmin=1)
    from .types import GroupDesignPool

    if isinstance(design.pool, GroupDesignPool):
        arms = np.loadtxt(Path(observed).with_suffix(".arms.csv"), delimiter=",", dtype=np.int64, ndmin=1)
        z_obs = GroupDesign(z_labels, arms, k=design.pool.k)
    else:
        z_obs = Allocation(z_labels, k=design.pool.k, level=design.pool.level)
    estimator = estimator_from_dict(cfg.get("estimator", {"kind": "diff_in_means"}))
    cmap = io.read_cluster_map(clusters) if clusters else None
    x = io.read_covariates(covariates) if covariates else None
    result = fisher_test(design, y, z_obs, statistic=estimator, cmap=cmap, x=x)
    payload = result.to_dict()
    if out:
        io.write_json(_jsonable(payload), Path(out))
    _echo_json({"p_value": payload["p_value"], "observed": payload["observed"], "n_null": payload["n_null"]})


def _has_header(path) -> bool:
    with open(path) as fh:
        first = fh.readline().strip().split(",")[0]
    try:
        float(first)
        return False
    except ValueError:
        return True


@main.command()
@click.option("--preset", type=str, default=None)
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--seed", type=int, default=None, help="override the config seed")
@click.option("--replicates", type=int, default=None, help="override the replicate count")
@click.option("--out", type=click.Path(), required=True)
def simulate(preset, config_path, seed, replicates, out):
    """Run a benchmark experiment (preset or JSON config)."""
    if preset is None and config_path is None:
        raise click.UsageError("provide --preset or --config")
    cfg = experiment_preset(preset) if preset else ExperimentConfig.from_dict(_load_config(config_path))
    if seed is not None:
        cfg.seed = seed
    if replicates is not None:
        cfg.replicates = replicates
    table = run_experiment(cfg, progress=lambda msg: click.echo(f"  {msg}", err=True))
    paths = table.to_csv(out)
    io.write_json(_jsonable(cfg.to_dict()), Path(out) / "experiment_config.json")
    agg = table.aggregate()
    click.echo(agg.to_string(index=False, float_format=lambda v: f"{v:.3f}"))
    _echo_json({"out": {k: str(v) for k, v in paths.items()}, "failures": len(table.failures)})


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8008)
@click.option("--workdir", type=click.Path(), default=".igrand-sessions")
def serve(host, port, workdir):
    """Start the local HTTP workbench (serves the dashboard when built)."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(Path(workdir)), host=host, port=port)


if __name__ == "__main__":
    main()
