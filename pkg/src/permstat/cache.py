"""On-disk cache of distribution rows.

One JSON file per (stat, n, method): ``{stat, n, method, coeffs}`` with the
coefficients as decimal strings, at ``<cache_dir>/<sha256>.json``.  Writes
go to a temp file in the same directory and are renamed into place.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .distribution import Distribution
from .stats import StatId, parse_stat

__all__ = ["key_for", "path_for", "load", "store", "to_record", "from_record"]


def key_for(stat: StatId | str, n: int, method: str) -> str:
    return hashlib.sha256(f"{stat}|{n}|{method}".encode()).hexdigest()


def path_for(cache_dir, stat, n: int, method: str) -> Path:
    return Path(cache_dir) / f"{key_for(stat, n, method)}.json"


def to_record(d: Distribution) -> dict:
    return {"stat": str(d.stat), "n": d.n, "method": d.method, "coeffs": [str(c) for c in d.coeffs]}


def from_record(rec: dict) -> Distribution:
    return Distribution(int(rec["n"]), parse_stat(rec["stat"]), tuple(int(c) for c in rec["coeffs"]),
                        rec["method"])


def load(cache_dir, stat, n: int, method: str) -> Distribution | None:
    p = path_for(cache_dir, stat, n, method)
    try:
        rec = json.loads(p.read_text())
    except (FileNotFoundError, json.JSONDecodeError):
        return None
    if rec.get("stat") != str(stat) or rec.get("n") != n or rec.get("method") != method:
        return None
    return from_record(rec)


def store(cache_dir, d: Distribution) -> Path:
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    target = path_for(cache_dir, d.stat, d.n, d.method)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(to_record(d), fh)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return target
