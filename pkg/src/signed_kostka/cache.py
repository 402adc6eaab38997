"""On-disk cache of registry entries.

One JSON file per ``(p, n)``.  Each entry stores the label, the idempotent as
a flat residue array (``null`` when the summand is the whole module), the
image basis, the vertex shape and the residue functional.  A sha256 digest
over the canonical payload guards against corruption; a version mismatch or
a bad digest means the caller rebuilds.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

import numpy as np
from filelock import FileLock

from . import rep_engine as re
from .combinatorics import RhoShape, labels
from .registry import Registry, RegistryEntry

log = logging.getLogger(__name__)

FORMAT_VERSION = 1
TABLOID_ORDER_VERSION = 1  # bump when the tabloid enumeration order changes
ENV_VAR = "SIGNED_KOSTKA_CACHE"


class CacheError(RuntimeError):
    pass


def cache_dir(flag: str | None = None) -> Path | None:
    """The flag wins over the environment variable; ``None`` disables caching."""
    path = flag or os.environ.get(ENV_VAR)
    return Path(path) if path else None


def cache_path(root: Path, p: int, n: int) -> Path:
    return Path(root) / f"registry-p{p}-n{n}-v{FORMAT_VERSION}.{TABLOID_ORDER_VERSION}.json"


def _canonical(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()


def digest(payload: dict) -> str:
    return hashlib.sha256(_canonical(payload)).hexdigest()


def _flat(a: np.ndarray | None):
    if a is None:
        return None
    return {"shape": list(a.shape), "data": [int(x) for x in a.ravel()]}


def _unflat(d):
    if d is None:
        return None
    return np.asarray(d["data"], dtype=np.int64).reshape(d["shape"])


def _entry_payload(E: RegistryEntry) -> dict:
    S = E.summand
    rows, cols, w = S.residue
    return {
        "label": [list(E.label[0]), list(E.label[1])],
        "dim": S.dim,
        "e": _flat(S.e),
        "image": _flat(S.B),
        "coimage": _flat(S.C),
        "vertex": list(E.vertex.mults),
        "end_dim": S.end_dim,
        "residue": [[int(x) for x in rows], [int(x) for x in cols], [int(x) for x in w]],
    }


def dump(registry: Registry, n: int) -> dict:
    entries = []
    for L in labels(n, registry.p):
        E = registry.get(L)
        re._residue_ready(E.summand)
        entries.append(_entry_payload(E))
    payload = {
        "format_version": FORMAT_VERSION,
        "tabloid_order_version": TABLOID_ORDER_VERSION,
        "p": registry.p,
        "n": n,
        "entries": entries,
    }
    return {"payload": payload, "digest": digest(payload)}


def save(registry: Registry, n: int, root: Path) -> Path:
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    path = cache_path(root, registry.p, n)
    doc = dump(registry, n)
    with FileLock(str(path) + ".lock"):
        tmp = path.with_suffix(".tmp")
        tmp.write_bytes(_canonical(doc))
        os.replace(tmp, path)
    return path


def read(path: Path) -> dict:
    """Parse and validate a cache file; raises ``CacheError`` on any problem."""
    try:
        doc = json.loads(Path(path).read_bytes())
        payload, dg = doc["payload"], doc["digest"]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CacheError(f"unreadable cache file {path}: {exc}") from exc
    if digest(payload) != dg:
        raise CacheError(f"digest mismatch in {path}")
    if payload.get("format_version") != FORMAT_VERSION or payload.get("tabloid_order_version") != TABLOID_ORDER_VERSION:
        raise CacheError(f"version mismatch in {path}")
    return payload


def install(registry: Registry, payload: dict) -> int:
    """Add the cached entries to ``registry``; returns how many were new."""
    if payload["p"] != registry.p:
        raise CacheError("cache prime does not match the registry")
    added = 0
    for d in payload["entries"]:
        label = (tuple(d["label"][0]), tuple(d["label"][1]))
        if label in registry.entries:
            continue
        M = registry.module(label)
        e = _unflat(d["e"])
        S = re.Summand(M, e, _unflat(d["image"]), _unflat(d["coimage"]), status="certified")
        S.end_dim = d["end_dim"]
        S.residue = tuple(np.asarray(x, dtype=np.int64) for x in d["residue"])
        S.label = f"Y{label}"
        if S.dim != d["dim"]:
            raise CacheError(f"dimension mismatch for {label}")
        registry.entries[label] = RegistryEntry(label, S, RhoShape(tuple(d["vertex"]), registry.p), "cache")
        added += 1
    return added


def load(registry: Registry, n: int, root: Path | None) -> bool:
    """Load cached entries of degree ``n`` if a valid file exists."""
    if root is None:
        return False
    path = cache_path(root, registry.p, n)
    if not path.exists():
        return False
    try:
        install(registry, read(path))
    except CacheError as exc:
        log.warning("%s; rebuilding", exc)
        return False
    return True
