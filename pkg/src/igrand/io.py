"""CSV/JSON ingestion and export for the file-facing interfaces.

Covariates travel as a headered CSV plus an optional JSON sidecar declaring
the salient column, latent columns, and an id column to drop. Cluster maps
are two-column CSVs (unit_id, cluster_id); networks are edge lists.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from .types import ClusterMap, CovariateMatrix, ValidationError


def read_covariates(csv_path, sidecar_path=None) -> CovariateMatrix:
    """Load covariates from CSV (+ optional sidecar config).

    Sidecar keys: ``salient`` (column name), ``latent`` (list of column
    names), ``id_column`` (dropped before use). Without a sidecar, a file
    named ``<csv>.config.json`` next to the CSV is used when present.
    """
    csv_path = Path(csv_path)
    config: dict = {}
    if sidecar_path is None:
        default = csv_path.with_suffix(csv_path.suffix + ".config.json")
        if default.exists():
            sidecar_path = default
    if sidecar_path is not None:
        with open(sidecar_path) as fh:
            config = json.load(fh)
    frame = pd.read_csv(csv_path)
    id_column = config.get("id_column")
    if id_column:
        if id_column not in frame.columns:
            raise ValidationError(f"id column {id_column!r} not found in {csv_path}")
        frame = frame.drop(columns=[id_column])
    names = list(map(str, frame.columns))
    latent_names = set(config.get("latent") or [])
    unknown = latent_names - set(names)
    if unknown:
        raise ValidationError(f"latent columns not in CSV: {sorted(unknown)}")
    salient = config.get("salient")
    if salient is not None and salient not in names:
        raise ValidationError(f"salient column {salient!r} not in CSV")
    return CovariateMatrix(
        names=names,
        values=frame.to_numpy(dtype=float),
        latent=np.array([n in latent_names for n in names]),
        salient=salient,
    )


def write_covariates(x: CovariateMatrix, csv_path, sidecar: bool = True) -> Path:
    csv_path = Path(csv_path)
    pd.DataFrame(x.values, columns=x.names).to_csv(csv_path, index=False)
    if sidecar:
        config = {
            "salient": x.salient,
            "latent": [n for n, flag in zip(x.names, x.latent) if flag],
        }
        with open(csv_path.with_suffix(csv_path.suffix + ".config.json"), "w") as fh:
            json.dump(config, fh, indent=2)
    return csv_path


def read_cluster_map(csv_path) -> ClusterMap:
    """Two-column CSV (unit_id, cluster_id); units are sorted by id."""
    frame = pd.read_csv(csv_path)
    if frame.shape[1] < 2:
        raise ValidationError("cluster map CSV needs (unit_id, cluster_id) columns")
    frame = frame.sort_values(frame.columns[0])
    return ClusterMap(frame.iloc[:, 1].to_numpy(dtype=np.int64))


def write_cluster_map(cmap: ClusterMap, csv_path) -> Path:
    csv_path = Path(csv_path)
    pd.DataFrame(
        {"unit_id": np.arange(cmap.n_units), "cluster_id": cmap.unit_to_cluster}
    ).to_csv(csv_path, index=False)
    return csv_path


def read_edge_list(csv_path, n: Optional[int] = None) -> np.ndarray:
    """Edge-list CSV (source, target) to a symmetric adjacency matrix."""
    frame = pd.read_csv(csv_path)
    if frame.shape[1] < 2:
        raise ValidationError("edge list CSV needs (source, target) columns")
    src = frame.iloc[:, 0].to_numpy(dtype=np.int64)
    dst = frame.iloc[:, 1].to_numpy(dtype=np.int64)
    size = n if n is not None else (int(max(src.max(), dst.max())) + 1 if src.size else 0)
    adjacency = np.zeros((size, size), dtype=np.int8)
    adjacency[src, dst] = 1
    adjacency[dst, src] = 1
    np.fill_diagonal(adjacency, 0)
    return adjacency


def write_edge_list(adjacency: np.ndarray, csv_path) -> Path:
    csv_path = Path(csv_path)
    src, dst = np.nonzero(np.triu(adjacency, k=1))
    pd.DataFrame({"source": src, "target": dst}).to_csv(csv_path, index=False)
    return csv_path


def read_coords(csv_path) -> np.ndarray:
    frame = pd.read_csv(csv_path)
    if frame.shape[1] < 2:
        raise ValidationError("coordinates CSV needs two columns")
    return frame.iloc[:, :2].to_numpy(dtype=float)


def write_coords(coords: np.ndarray, csv_path, columns=("lat", "lon")) -> Path:
    csv_path = Path(csv_path)
    pd.DataFrame(np.asarray(coords, dtype=float), columns=list(columns)).to_csv(
        csv_path, index=False
    )
    return csv_path


def write_ga_trace(trace: list[dict], csv_path) -> Path:
    csv_path = Path(csv_path)
    pd.DataFrame(trace).to_csv(csv_path, index=False)
    return csv_path


def save_pool(pool, out_dir, prefix: str = "pool") -> Path:
    """Persist a pool as CSV matrices plus a JSON descriptor."""
    from .types import GroupDesignPool  # local import to avoid cycles in type hints

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    descriptor = {
        "k": int(pool.k),
        "level": pool.level,
        "n": len(pool),
        "provenance": pool.provenance,
    }
    if isinstance(pool, GroupDesignPool):
        descriptor["kind"] = "group"
        np.savetxt(out_dir / f"{prefix}_group_of.csv", pool.group_of, fmt="%d", delimiter=",")
        np.savetxt(
            out_dir / f"{prefix}_arm_of_group.csv", pool.arm_of_group, fmt="%d", delimiter=","
        )
    else:
        descriptor["kind"] = "allocation"
        np.savetxt(out_dir / f"{prefix}.csv", pool.labels, fmt="%d", delimiter=",")
    from .fitness import _jsonable

    write_json(_jsonable(descriptor), out_dir / f"{prefix}.json")
    return out_dir


def load_pool(out_dir, prefix: str = "pool"):
    from .types import AllocationPool, GroupDesignPool

    out_dir = Path(out_dir)
    with open(out_dir / f"{prefix}.json") as fh:
        descriptor = json.load(fh)
    k = int(descriptor["k"])
    provenance = descriptor.get("provenance") or {}
    if descriptor.get("kind") == "group":
        return GroupDesignPool(
            np.loadtxt(out_dir / f"{prefix}_group_of.csv", dtype=np.int64, delimiter=",", ndmin=2),
            np.loadtxt(
                out_dir / f"{prefix}_arm_of_group.csv", dtype=np.int64, delimiter=",", ndmin=2
            ),
            k=k,
            provenance=provenance,
        )
    return AllocationPool(
        np.loadtxt(out_dir / f"{prefix}.csv", dtype=np.int64, delimiter=",", ndmin=2),
        k=k,
        level=descriptor.get("level", "unit"),
        provenance=provenance,
    )


def write_json(payload: dict, path) -> Path:
    path = Path(path)
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
    return path
