"""Pre-registration bundles: frozen, hash-verified design records.

A bundle is a directory holding the JSON manifest (fitness, rule, provenance,
digest) plus CSV matrices for the pool, scores, acceptance mask, and
probabilities. The SHA-256 digest covers the canonical serialization of
everything that defines the assignment mechanism; official draws are recorded
in a separate audit log so they never invalidate the digest.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__
from .fitness import AcceptedDesign, FitnessConfig, RestrictionRule, _jsonable
from .pools import enumerate_complete
from .rng import RngSpec
from .types import AllocationPool, GroupDesignPool, ValidationError

MANIFEST = "manifest.json"
AUDIT = "draws.jsonl"

_FLOAT_FMT = "%.17g"  # lossless float round-trip


def _write_int_csv(path: Path, array: np.ndarray):
    np.savetxt(path, np.asarray(array, dtype=np.int64), fmt="%d", delimiter=",")


def _read_int_csv(path: Path) -> np.ndarray:
    return np.loadtxt(path, dtype=np.int64, delimiter=",", ndmin=2)


def preregister(design: AcceptedDesign, path) -> Path:
    """Write the bundle and lock the design.

    Re-registering an already locked design is rejected: the protocol locks
    the mechanism exactly once, before outcomes exist.
    """
    if design.locked:
        raise ValidationError("design is already locked; re-registration is not allowed")
    design.lock()
    return _write_bundle(design, path)


def save_design(design: AcceptedDesign, path) -> Path:
    """Persist a design without locking it (digest recorded as null)."""
    return _write_bundle(design, path)


def _write_bundle(design: AcceptedDesign, path) -> Path:
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)

    pool = design.pool
    files: dict[str, str] = {}
    if isinstance(pool, GroupDesignPool):
        _write_int_csv(path / "group_of.csv", pool.group_of)
        _write_int_csv(path / "arm_of_group.csv", pool.arm_of_group)
        files["group_of"] = "group_of.csv"
        files["arm_of_group"] = "arm_of_group.csv"
    else:
        _write_int_csv(path / "allocations.csv", pool.labels)
        files["allocations"] = "allocations.csv"
    table = np.column_stack(
        [design.scores, design.accept_mask.astype(float), design.probabilities]
    )
    np.savetxt(
        path / "scores.csv",
        table,
        fmt=_FLOAT_FMT,
        delimiter=",",
        header="score,accepted,probability",
        comments="",
    )
    files["scores"] = "scores.csv"

    manifest = {
        "format": "igrand-bundle/1",
        "version": __version__,
        "created": datetime.now(timezone.utc).isoformat(),
        "digest": design.bundle_hash,
        "level": pool.level,
        "k": int(pool.k),
        "n_pool": len(pool),
        "n_accepted": design.n_accepted,
        "mirrors_added": design.mirrors_added,
        "threshold": design.threshold,
        "fitness": design.fitness.to_dict() if design.fitness else None,
        "rule": design.rule.to_dict() if design.rule else None,
        "provenance": _jsonable(design.provenance),
        "files": files,
    }
    with open(path / MANIFEST, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
    return path


def load_bundle(path) -> AcceptedDesign:
    """Reconstruct the locked design from a bundle, verifying its digest."""
    path = Path(path)
    with open(path / MANIFEST) as fh:
        manifest = json.load(fh)
    files = manifest["files"]
    k = int(manifest["k"])
    if "group_of" in files:
        pool = GroupDesignPool(
            _read_int_csv(path / files["group_of"]),
            _read_int_csv(path / files["arm_of_group"]),
            k=k,
            provenance=manifest.get("provenance") or {},
        )
    else:
        pool = AllocationPool(
            _read_int_csv(path / files["allocations"]),
            k=k,
            level=manifest["level"],
            provenance=manifest.get("provenance") or {},
        )
    table = np.loadtxt(path / files["scores"], delimiter=",", skiprows=1, ndmin=2)
    design = AcceptedDesign(
        pool=pool,
        scores=table[:, 0],
        accept_mask=table[:, 1] != 0.0,
        probabilities=table[:, 2],
        fitness=FitnessConfig.from_dict(manifest["fitness"]) if manifest.get("fitness") else None,
        rule=RestrictionRule.from_dict(manifest["rule"]) if manifest.get("rule") else None,
        mirrors_added=bool(manifest.get("mirrors_added", False)),
        threshold=manifest.get("threshold"),
        provenance=manifest.get("provenance") or {},
    )
    if manifest.get("digest") is None:
        return design  # saved unlocked; nothing to verify
    recomputed = design.compute_hash()
    if recomputed != manifest["digest"]:
        raise ValidationError(
            "bundle digest mismatch: the stored design does not reproduce its manifest digest"
        )
    design.bundle_hash = manifest["digest"]
    return design


def record_draw(path, draw_info: dict):
    """Append an official-draw record to the bundle's audit log."""
    with open(Path(path) / AUDIT, "a") as fh:
        fh.write(json.dumps(_jsonable(draw_info), sort_keys=True) + "\n")


def verify_bundle(path, replay: bool = False) -> dict:
    """Check a bundle: digest, schema, and optionally seed replay.

    Returns a report with one pass/fail entry per check. Replay is only
    supported for self-contained enumeration mechanisms (complete
    randomization); data-dependent mechanisms report a warning instead.
    """
    path = Path(path)
    report: dict = {"path": str(path), "checks": {}, "warnings": [], "ok": False}

    try:
        with open(path / MANIFEST) as fh:
            manifest = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        report["checks"]["manifest"] = f"fail: {exc}"
        return report
    report["checks"]["manifest"] = "pass"

    required = ("format", "version", "digest", "k", "files", "n_pool", "n_accepted")
    missing = [key for key in required if key not in manifest]
    report["checks"]["schema"] = "pass" if not missing else f"fail: missing {missing}"

    if manifest.get("version") != __version__:
        report["warnings"].append(
            f"bundle written by version {manifest.get('version')}, running {__version__}"
        )

    if manifest.get("digest") is None:
        report["checks"]["digest"] = "fail: design is saved but not locked (digest is null)"
        return report
    try:
        design = load_bundle(path)
        report["checks"]["digest"] = "pass"
    except (ValidationError, OSError, ValueError) as exc:
        report["checks"]["digest"] = f"fail: {exc}"
        report["ok"] = False
        return report

    if replay:
        report["checks"]["replay"] = _replay_check(design)

    report["ok"] = all(str(v) == "pass" for v in report["checks"].values())
    return report


def _replay_check(design: AcceptedDesign) -> str:
    prov = design.provenance or {}
    mechanism = prov.get("mechanism")
    if mechanism != "complete":
        return "pass (skipped: replay supported only for self-contained complete randomization)"
    try:
        params = prov["params"]
        rng = RngSpec.from_dict(prov["rng"])
        pool = enumerate_complete(params["n"], params["k"], params["m_pool"], rng)
    except (KeyError, ValidationError) as exc:
        return f"fail: cannot replay enumeration ({exc})"
    labels = design.pool.labels
    replayed = pool.labels
    if "dedup" in prov:
        _, first = np.unique(replayed, axis=0, return_index=True)
        replayed = replayed[np.sort(first)]
    n = min(len(replayed), len(labels))
    if np.array_equal(replayed[:n], labels[:n]):
        return "pass"
    return "fail: replayed enumeration differs from the stored pool"
