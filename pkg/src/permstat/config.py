"""Runtime configuration.

Read from ``permstat.toml`` (current directory, or the path in
``PERMSTAT_CONFIG``), then overridden by environment variables:

=========================  ===========================
``PERMSTAT_CAP``           enumeration_cap
``PERMSTAT_CACHE_DIR``     cache_dir
``PERMSTAT_PARALLELISM``   parallelism (integer or ``auto``)
=========================  ===========================
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

try:
    import tomllib
except ImportError:  # python < 3.11
    import tomli as tomllib

from .permutation import DEFAULT_CAP

__all__ = ["Config", "load_config", "ENV_CAP", "ENV_CACHE_DIR", "ENV_PARALLELISM", "ENV_CONFIG"]

ENV_CAP = "PERMSTAT_CAP"
ENV_CACHE_DIR = "PERMSTAT_CACHE_DIR"
ENV_PARALLELISM = "PERMSTAT_PARALLELISM"
ENV_CONFIG = "PERMSTAT_CONFIG"

FORMATS = ("csv", "json")


def _default_cache() -> Path:
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "permstat"


@dataclass
class Config:
    enumeration_cap: int = DEFAULT_CAP
    cache_dir: Path = field(default_factory=_default_cache)
    output_format: str = "csv"
    parallelism: int | str = 1

    def __post_init__(self):
        self.enumeration_cap = int(self.enumeration_cap)
        if self.enumeration_cap < 0:
            raise ValueError(f"enumeration_cap must be >= 0, got {self.enumeration_cap}")
        if self.output_format not in FORMATS:
            raise ValueError(f"output_format must be csv or json, got {self.output_format!r}")
        if self.parallelism != "auto":
            self.parallelism = int(self.parallelism)
            if self.parallelism < 1:
                raise ValueError("parallelism must be >= 1 or 'auto'")
        self.cache_dir = Path(self.cache_dir).expanduser()

    @property
    def workers(self) -> int:
        return (os.cpu_count() or 1) if self.parallelism == "auto" else self.parallelism


def load_config(path=None, env=None) -> Config:
    env = os.environ if env is None else env
    path = path or env.get(ENV_CONFIG) or "permstat.toml"
    values = {}
    p = Path(path)
    if p.is_file():
        with p.open("rb") as fh:
            data = tomllib.load(fh)
        values = {k: v for k, v in data.get("permstat", data).items()
                  if k in ("enumeration_cap", "cache_dir", "output_format", "parallelism")}
    if ENV_CAP in env:
        values["enumeration_cap"] = env[ENV_CAP]
    if ENV_CACHE_DIR in env:
        values["cache_dir"] = env[ENV_CACHE_DIR]
    if ENV_PARALLELISM in env:
        v = env[ENV_PARALLELISM].strip()
        values["parallelism"] = v if v == "auto" else int(v)
    return Config(**values)
