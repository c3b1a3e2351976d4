"""Disk cache for decomposition matrices.

One JSON file per (l, degree), written in canonical form (sorted keys,
fixed entry order, compact separators) so identical content is identical
bytes.  Files carry a sha256 checksum of their own payload; anything that
fails parsing, schema shape, checksum or header match is rejected with
CacheIntegrityError and recomputed, never silently trusted.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
from pathlib import Path

from .partitions import Partition
from .fock import DecompositionMatrix, decomposition_matrix

CACHE_GENERATOR = "llt-v1"
ENV_CACHE_DIR = "TRUNKSYM_CACHE_DIR"


class CacheIntegrityError(RuntimeError):
    pass


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _payload_checksum(payload: dict) -> str:
    body = {k: v for k, v in payload.items() if k != "checksum"}
    return hashlib.sha256(canonical_json(body).encode("utf-8")).hexdigest()


def matrix_payload(mat: DecompositionMatrix) -> dict:
    row_index = {lam: i for i, lam in enumerate(mat.rows)}
    col_index = {mu: i for i, mu in enumerate(mat.cols)}
    entries = sorted(
        [row_index[lam], col_index[mu], val] for (lam, mu), val in mat.entries.items()
    )
    payload = {
        "generator": CACHE_GENERATOR,
        "l": mat.l,
        "degree": mat.degree,
        "rows": [list(lam) for lam in mat.rows],
        "cols": [list(mu) for mu in mat.cols],
        "entries": entries,
    }
    payload["checksum"] = _payload_checksum(payload)
    return payload


def matrix_from_payload(payload) -> DecompositionMatrix:
    if not isinstance(payload, dict):
        raise CacheIntegrityError("cache integrity: payload is not an object")
    required = {"generator", "l", "degree", "rows", "cols", "entries", "checksum"}
    if set(payload) != required:
        raise CacheIntegrityError("cache integrity: unexpected key set")
    if payload["generator"] != CACHE_GENERATOR:
        raise CacheIntegrityError(
            f"cache integrity: generator {payload['generator']!r} != {CACHE_GENERATOR!r}"
        )
    if payload["checksum"] != _payload_checksum(payload):
        raise CacheIntegrityError("cache integrity: checksum mismatch")
    try:
        rows = tuple(Partition(p) for p in payload["rows"])
        cols = tuple(Partition(p) for p in payload["cols"])
        entries = {}
        for ri, ci, val in payload["entries"]:
            if not isinstance(val, int) or val <= 0:
                raise ValueError(f"bad entry value {val!r}")
            entries[(rows[ri], cols[ci])] = val
        mat = DecompositionMatrix(
            l=int(payload["l"]),
            degree=int(payload["degree"]),
            rows=rows,
            cols=cols,
            entries=entries,
        )
    except (ValueError, TypeError, IndexError, KeyError) as exc:
        raise CacheIntegrityError(f"cache integrity: malformed payload ({exc})") from exc
    for mu in mat.cols:
        if mat.entries.get((mu, mu)) != 1:
            raise CacheIntegrityError("cache integrity: missing unit diagonal")
    return mat


def default_cache_dir() -> Path | None:
    env = os.environ.get(ENV_CACHE_DIR)
    return Path(env) if env else None


def cache_path(cache_dir, l: int, r: int) -> Path:
    return Path(cache_dir) / f"decomp-l{l}-r{r}.json"


def cache_put(cache_dir, mat: DecompositionMatrix) -> Path:
    path = cache_path(cache_dir, mat.l, mat.degree)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(canonical_json(matrix_payload(mat)) + "\n", encoding="utf-8")
    return path


def cache_get(cache_dir, l: int, r: int) -> DecompositionMatrix | None:
    """Read one cached matrix; None when absent, CacheIntegrityError when bad."""
    path = cache_path(cache_dir, l, r)
    if not path.exists():
        return None
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheIntegrityError(f"cache integrity: unreadable file ({exc})") from exc
    mat = matrix_from_payload(payload)
    if mat.l != l or mat.degree != r:
        raise CacheIntegrityError("cache integrity: header does not match file name")
    return mat


def _warn(message: str) -> None:
    print(message, file=sys.stderr)


def load_or_compute(
    l: int,
    r: int,
    cache_dir=None,
    force: bool = False,
    allow_large: bool = False,
    warn=None,
    progress=None,
) -> DecompositionMatrix:
    """Cache-backed matrix access; rejected caches are recomputed.

    An unusable cache directory degrades to in-memory computation with a
    warning on the diagnostic stream.
    """
    warn = warn or _warn
    directory = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    if directory is not None and not force:
        try:
            cached = cache_get(directory, l, r)
        except CacheIntegrityError as exc:
            warn(f"{exc}; recomputing")
            cached = None
        except OSError as exc:
            warn(f"cache directory unusable ({exc}); falling back to memory")
            directory = None
            cached = None
        if cached is not None:
            return cached
    mat = decomposition_matrix(r, l, allow_large=allow_large, progress=progress)
    if directory is not None:
        try:
            cache_put(directory, mat)
        except OSError as exc:
            warn(f"cache directory unusable ({exc}); result kept in memory only")
    return mat
