"""Local HTTP workbench driving the evaluate-adapt-lock-randomize loop.

Single-user, localhost service. Sessions hold uploaded data, the current
candidate pool, cached per-metric score vectors, and the current accepted
design. Every mutation is appended to the session's JSON event log, and a
session can be reconstructed by replaying that log (uploads are stored as
files next to it, so replay is exact). Long operations (enumeration,
evolution) run as background jobs with polling.

Restriction endpoints never see outcome data: outcomes enter only through
the post-lock test endpoint, which enforces the pre-registration ordering.
"""

from __future__ import annotations

import json
import shutil
import threading
import uuid
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional

import numpy as np
from fastapi import FastAPI, File, Form, HTTPException, UploadFile
from fastapi.responses import FileResponse
from pydantic import BaseModel, Field

from . import io
from .bundle import preregister, record_draw
from .diagnostics import diagnose
from .fitness import (
    FitnessConfig,
    RestrictionRule,
    _jsonable,
    add_mirrors,
    draw_official,
    restrict,
)
from .genetic import GaConfig, evolve
from .inference import estimator_from_dict, fisher_test
from .metrics import ExposureSpec, MetricContext, metric_from_dict
from .pools import dedup, enumerate_cluster, enumerate_complete, enumerate_group_formation
from .rng import RngSpec
from .types import Allocation, GroupDesign, GroupDesignPool, ValidationError


# ---------------------------------------------------------------------------
# Request models
# ---------------------------------------------------------------------------


class EnumerateRequest(BaseModel):
    mechanism: str = Field("complete", pattern="^(complete|cluster|group_formation)$")
    k: int = 2
    m_pool: int = Field(1000, ge=1)
    n: Optional[int] = None
    comps: Optional[list[float]] = None
    group_size: Optional[int] = None
    seed: int = 0
    stream: int = 0
    deduplicate: bool = True


class MetricsRequest(BaseModel):
    metrics: list[dict]
    comps: Optional[list[float]] = None
    exposure: Optional[dict] = None


class FitnessRequest(BaseModel):
    fitness: dict
    rule: dict
    mirrors: bool = True
    mirror_group: str = "auto"
    comps: Optional[list[float]] = None
    exposure: Optional[dict] = None


class EvolveRequest(BaseModel):
    fitness: dict
    ga: dict = Field(default_factory=dict)
    seed: int = 0
    comps: Optional[list[float]] = None
    exposure: Optional[dict] = None


class RandomizeRequest(BaseModel):
    seed: int


class TestRequest(BaseModel):
    outcomes: list[float]
    estimator: dict = Field(default_factory=lambda: {"kind": "diff_in_means"})
    observed: Optional[list[int]] = None  # defaults to the official draw
    observed_arms: Optional[list[int]] = None  # group designs: per-group arms


# ---------------------------------------------------------------------------
# Session state
# ---------------------------------------------------------------------------


class Session:
    def __init__(self, sid: str, root: Path):
        self.id = sid
        self.dir = root / sid
        self.dir.mkdir(parents=True, exist_ok=True)
        self.lock = threading.Lock()
        self.covariates = None
        self.cluster_map = None
        self.adjacency = None
        self.coords = None
        self.pool = None
        self.metric_cache: dict[str, np.ndarray] = {}
        self.pool_version = 0
        self.fitness = None
        self.rule = None
        self.design = None
        self.official_draw = None

    @property
    def locked(self) -> bool:
        return self.design is not None and self.design.locked

    # -- event log ---------------------------------------------------------

    def log_event(self, action: str, payload: dict):
        event = {"action": action, "payload": _jsonable(payload)}
        with open(self.dir / "events.jsonl", "a") as fh:
            fh.write(json.dumps(event, sort_keys=True) + "\n")

    def events(self) -> list[dict]:
        path = self.dir / "events.jsonl"
        if not path.exists():
            return []
        return [json.loads(line) for line in path.read_text().splitlines() if line.strip()]

    # -- context -----------------------------------------------------------

    def context(self, comps=None, exposure=None) -> MetricContext:
        return MetricContext(
            covariates=self.covariates,
            cluster_map=self.cluster_map,
            adjacency=self.adjacency,
            coords=self.coords,
            comps=comps,
            exposure=ExposureSpec.from_dict(exposure) if exposure else ExposureSpec(),
        )

    def metric_scores(self, specs: list[dict], comps=None, exposure=None):
        """Per-metric score vectors with (pool, metric) caching."""
        if self.pool is None:
            raise ValidationError("no pool enumerated yet")
        ctx = self.context(comps, exposure)
        columns, hits = [], []
        for spec in specs:
            metric = metric_from_dict(spec)
            key = f"v{self.pool_version}:" + json.dumps(
                {"metric": metric.to_dict(), "comps": comps, "exposure": exposure}, sort_keys=True
            )
            if key in self.metric_cache:
                hits.append(metric.name)
                columns.append(self.metric_cache[key])
            else:
                col = metric.score_pool(self.pool, ctx)
                self.metric_cache[key] = col
                columns.append(col)
        return np.column_stack(columns), hits

    def summary(self) -> dict:
        return {
            "id": self.id,
            "data": {
                "covariates": self.covariates is not None,
                "clusters": self.cluster_map is not None,
                "network": self.adjacency is not None,
                "coords": self.coords is not None,
            },
            "pool": None
            if self.pool is None
            else {"n": len(self.pool), "k": self.pool.k, "level": self.pool.level},
            "design": None
            if self.design is None
            else {
                "n_accepted": self.design.n_accepted,
                "locked": self.design.locked,
                "digest": self.design.bundle_hash,
            },
            "locked": self.locked,
            "official_draw": self.official_draw,
        }


# ---------------------------------------------------------------------------
# App factory
# ---------------------------------------------------------------------------


def create_app(workdir: Path | str = ".igrand-sessions", static_dir: Optional[Path] = None) -> FastAPI:
    """Build the service app. Sessions persist under ``workdir``.

    ``static_dir`` (or ``<package>/static`` if present) is served at ``/``
    so a built dashboard rides along with the API.
    """
    root = Path(workdir)
    root.mkdir(parents=True, exist_ok=True)
    app = FastAPI(title="igrand workbench", version="1")
    sessions: dict[str, Session] = {}
    jobs: dict[str, dict] = {}
    executor = ThreadPoolExecutor(max_workers=2)

    # -- helpers -------------------------------------------------------------

    def get_session(sid: str) -> Session:
        if sid not in sessions:
            if (root / sid / "events.jsonl").exists():
                sessions[sid] = replay_session(root, sid)
            else:
                raise HTTPException(status_code=404, detail=f"no session {sid}")
        return sessions[sid]

    def guard_unlocked(session: Session):
        if session.locked:
            raise HTTPException(
                status_code=409,
                detail="session is locked; only randomize/test are allowed after pre-registration",
            )

    def run_job(fn) -> str:
        jid = uuid.uuid4().hex[:12]
        jobs[jid] = {"status": "running", "result": None, "error": None}

        def _wrap():
            try:
                jobs[jid]["result"] = fn()
                jobs[jid]["status"] = "done"
            except (ValidationError, ValueError, KeyError) as exc:
                jobs[jid]["error"] = str(exc)
                jobs[jid]["status"] = "failed"

        executor.submit(_wrap)
        return jid

    def apply_enumerate(session: Session, req: EnumerateRequest):
        rng = RngSpec(req.seed, req.stream)
        if req.mechanism == "complete":
            n = req.n or (session.covariates.n_units if session.covariates else None)
            if n is None:
                raise ValidationError("complete randomization needs n or uploaded covariates")
            pool = enumerate_complete(n, req.k, req.m_pool, rng)
        elif req.mechanism == "cluster":
            if session.cluster_map is None:
                raise ValidationError("cluster randomization needs an uploaded cluster map")
            pool = enumerate_cluster(session.cluster_map, req.k, req.m_pool, rng)
        else:
            if session.covariates is None or not req.comps or not req.group_size:
                raise ValidationError("group formation needs covariates, comps, and group_size")
            pool = enumerate_group_formation(
                session.covariates, req.comps, req.group_size, req.m_pool, rng
            )
        if req.deduplicate:
            pool = dedup(pool)
        session.pool = pool
        session.pool_version += 1
        session.metric_cache.clear()
        session.design = None
        return {"n": len(pool), "k": pool.k, "level": pool.level}

    def apply_evolve(session: Session, req: EvolveRequest):
        if session.pool is None:
            raise ValidationError("no pool enumerated yet")
        fitness = FitnessConfig.from_dict(req.fitness)
        ga = GaConfig.from_dict(req.ga)
        ctx = session.context(req.comps, req.exposure)
        session.pool = evolve(session.pool, fitness, ctx, ga, RngSpec(req.seed))
        session.pool_version += 1
        session.metric_cache.clear()
        session.design = None
        return {
            "n": len(session.pool),
            "trace": session.pool.provenance.get("ga_trace", []),
        }

    def apply_fitness(session: Session, req: FitnessRequest):
        fitness = FitnessConfig.from_dict(req.fitness)
        rule = RestrictionRule.from_dict(req.rule)
        specs = [m.to_dict() for m in fitness.metrics]
        matrix, hits = session.metric_scores(specs, req.comps, req.exposure)
        _, bounds = fitness.normalize(matrix)
        scores = fitness.aggregate_matrix(matrix, bounds=bounds)
        design = restrict(session.pool, scores, rule, fitness=fitness, metric_scores=matrix)
        if req.mirrors:
            ctx = session.context(req.comps, req.exposure)
            design = add_mirrors(
                design,
                mirror_group=req.mirror_group,
                rescore=lambda p: fitness.aggregate_matrix(
                    fitness.score_metrics(p, ctx), bounds=bounds
                ),
            )
            if len(design.pool) > matrix.shape[0]:
                tail = design.pool.take(range(matrix.shape[0], len(design.pool)))
                matrix = np.vstack([matrix, fitness.score_metrics(tail, ctx)])
            design.metric_scores = matrix
        session.fitness = fitness
        session.rule = rule
        session.design = design
        return design, hits

    def apply_lock(session: Session):
        if session.design is None:
            raise ValidationError("nothing to lock: set fitness and restriction first")
        bundle_dir = session.dir / "bundle"
        if bundle_dir.exists():
            shutil.rmtree(bundle_dir)
        preregister(session.design, bundle_dir)
        return {"digest": session.design.bundle_hash, "bundle": str(bundle_dir)}

    def apply_randomize(session: Session, req: RandomizeRequest, record: bool = True):
        alloc = draw_official(session.design, RngSpec(req.seed))
        if record:
            record_draw(session.dir / "bundle", session.design.audit[-1])
        if isinstance(alloc, GroupDesign):
            drawn = {
                "group_of": alloc.group_of.tolist(),
                "arm_of_group": alloc.arm_of_group.tolist(),
                "unit_arms": alloc.unit_arms().tolist(),
            }
        else:
            drawn = {"labels": alloc.labels.tolist(), "level": alloc.level}
        session.official_draw = drawn
        return drawn

    # -- replay --------------------------------------------------------------

    def replay_session(root: Path, sid: str) -> Session:
        session = Session(sid, root)
        for event in session.events():
            action, payload = event["action"], event["payload"]
            if action == "upload":
                _ingest_file(session, payload["kind"], session.dir / payload["stored"], payload.get("sidecar"))
            elif action == "enumerate":
                apply_enumerate(session, EnumerateRequest(**payload))
            elif action == "evolve":
                apply_evolve(session, EvolveRequest(**payload))
            elif action == "fitness":
                apply_fitness(session, FitnessRequest(**payload))
            elif action == "lock":
                session.design.lock()  # digest match is checked against the stored bundle
            elif action == "randomize":
                apply_randomize(session, RandomizeRequest(**payload), record=False)
        return session

    app.state.replay_session = replay_session  # exposed for tests

    def _ingest_file(session: Session, kind: str, stored: Path, sidecar: Optional[dict]):
        if kind == "covariates":
            sidecar_path = None
            if sidecar:
                sidecar_path = stored.with_suffix(".config.json")
                sidecar_path.write_text(json.dumps(sidecar))
            session.covariates = io.read_covariates(stored, sidecar_path)
        elif kind == "clusters":
            session.cluster_map = io.read_cluster_map(stored)
        elif kind == "network":
            n = session.covariates.n_units if session.covariates else (
                session.cluster_map.n_units if session.cluster_map else None
            )
            session.adjacency = io.read_edge_list(stored, n=n)
        elif kind == "coords":
            session.coords = io.read_coords(stored)
        else:
            raise ValidationError(f"unknown upload kind {kind!r}")

    # -- endpoints -------------------------------------------------------------

    @app.exception_handler(ValidationError)
    async def _validation_handler(request, exc):
        from fastapi.responses import JSONResponse

        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.post("/sessions")
    def create_session():
        sid = uuid.uuid4().hex[:12]
        sessions[sid] = Session(sid, root)
        return {"id": sid}

    @app.get("/sessions")
    def list_sessions():
        on_disk = {p.name for p in root.iterdir() if (p / "events.jsonl").exists()}
        return {"sessions": sorted(set(sessions) | on_disk)}

    @app.get("/sessions/{sid}")
    def session_summary(sid: str):
        return get_session(sid).summary()

    @app.delete("/sessions/{sid}")
    def delete_session(sid: str):
        session = get_session(sid)
        sessions.pop(sid, None)
        shutil.rmtree(session.dir, ignore_errors=True)
        return {"deleted": sid}

    @app.post("/sessions/{sid}/data/{kind}")
    def upload(sid: str, kind: str, file: UploadFile = File(...), sidecar: Optional[str] = Form(None)):
        session = get_session(sid)
        guard_unlocked(session)
        if kind not in ("covariates", "clusters", "network", "coords"):
            raise HTTPException(status_code=404, detail=f"unknown data kind {kind!r}")
        with session.lock:
            stored = session.dir / f"{kind}.csv"
            stored.write_bytes(file.file.read())
            sidecar_dict = json.loads(sidecar) if sidecar else None
            _ingest_file(session, kind, stored, sidecar_dict)
            session.log_event("upload", {"kind": kind, "stored": stored.name, "sidecar": sidecar_dict})
        return {"stored": stored.name}

    @app.post("/sessions/{sid}/enumerate")
    def enumerate_pool(sid: str, req: EnumerateRequest):
        session = get_session(sid)
        guard_unlocked(session)

        def work():
            with session.lock:
                result = apply_enumerate(session, req)
                session.log_event("enumerate", req.model_dump())
                return result

        return {"job": run_job(work)}

    @app.post("/sessions/{sid}/evolve")
    def evolve_pool(sid: str, req: EvolveRequest):
        session = get_session(sid)
        guard_unlocked(session)

        def work():
            with session.lock:
                result = apply_evolve(session, req)
                session.log_event("evolve", req.model_dump())
                return {"n": result["n"]}

        return {"job": run_job(work)}

    @app.get("/sessions/{sid}/jobs/{jid}")
    def job_status(sid: str, jid: str):
        get_session(sid)
        if jid not in jobs:
            raise HTTPException(status_code=404, detail=f"no job {jid}")
        return jobs[jid]

    @app.post("/sessions/{sid}/metrics")
    def evaluate_metrics(sid: str, req: MetricsRequest):
        session = get_session(sid)
        guard_unlocked(session)
        with session.lock:
            matrix, hits = session.metric_scores(req.metrics, req.comps, req.exposure)
        names = [metric_from_dict(m).name for m in req.metrics]
        return {
            "metrics": names,
            "scores": {name: matrix[:, j].tolist() for j, name in enumerate(names)},
            "cache_hits": hits,
        }

    @app.post("/sessions/{sid}/fitness")
    def set_fitness(sid: str, req: FitnessRequest):
        session = get_session(sid)
        guard_unlocked(session)
        with session.lock:
            design, hits = apply_fitness(session, req)
            session.log_event("fitness", req.model_dump())
            report = diagnose(design, cmap=session.cluster_map)
        return {
            "n_pool": len(design.pool),
            "n_accepted": design.n_accepted,
            "accept_mask": design.accept_mask.tolist(),
            "threshold": design.threshold,
            "cache_hits": hits,
            "diagnostics": report.to_dict(),
        }

    @app.post("/sessions/{sid}/lock")
    def lock(sid: str):
        session = get_session(sid)
        guard_unlocked(session)
        with session.lock:
            result = apply_lock(session)
            session.log_event("lock", {})
        return result

    @app.get("/sessions/{sid}/bundle")
    def bundle_archive(sid: str):
        session = get_session(sid)
        if not session.locked:
            raise HTTPException(status_code=409, detail="lock the design before downloading the bundle")
        archive = session.dir / "bundle.zip"
        shutil.make_archive(str(archive.with_suffix("")), "zip", session.dir / "bundle")
        return FileResponse(archive, filename=f"igrand-bundle-{sid}.zip")

    @app.post("/sessions/{sid}/randomize")
    def randomize(sid: str, req: RandomizeRequest):
        session = get_session(sid)
        if not session.locked:
            raise HTTPException(status_code=409, detail="pre-register (lock) before randomizing")
        with session.lock:
            drawn = apply_randomize(session, req)
            session.log_event("randomize", req.model_dump())
        return {"drawn": drawn}

    @app.post("/sessions/{sid}/test")
    def run_test(sid: str, req: TestRequest):
        session = get_session(sid)
        if not session.locked:
            raise HTTPException(
                status_code=409, detail="outcomes are only accepted after pre-registration"
            )
        design = session.design
        if req.observed is not None:
            labels = np.asarray(req.observed, dtype=np.int64)
            if isinstance(design.pool, GroupDesignPool):
                if req.observed_arms is None:
                    raise ValidationError("group designs need observed_arms")
                z_obs = GroupDesign(labels, np.asarray(req.observed_arms), k=design.pool.k)
            else:
                z_obs = Allocation(labels, k=design.pool.k, level=design.pool.level)
        elif session.official_draw is not None:
            drawn = session.official_draw
            if "group_of" in drawn:
                z_obs = GroupDesign(drawn["group_of"], drawn["arm_of_group"], k=design.pool.k)
            else:
                z_obs = Allocation(drawn["labels"], k=design.pool.k, level=design.pool.level)
        else:
            raise ValidationError("no observed allocation: randomize first or pass one")
        result = fisher_test(
            design,
            np.asarray(req.outcomes, dtype=float),
            z_obs,
            statistic=estimator_from_dict(req.estimator),
            cmap=session.cluster_map,
            x=session.covariates,
        )
        session.log_event("test", {"estimator": req.estimator, "p_value": result.p_value})
        return result.to_dict()

    @app.get("/sessions/{sid}/events")
    def events(sid: str):
        return {"events": get_session(sid).events()}

    static = static_dir or Path(__file__).parent / "static"
    if static.exists():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static, html=True), name="dashboard")

    return app
