"""Permutations of [n] in one-line notation (1-based) and exhaustive S_n."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "CycleForm", "EnumerationCapExceeded", "default_cap",
    "enumerate_sn", "reverse", "inverse", "to_cycles", "from_cycles",
]

DEFAULT_CAP = 11


def default_cap() -> int:
    return int(os.environ.get("PERMSTAT_CAP", DEFAULT_CAP))


class EnumerationCapExceeded(ValueError):
    pass


def check_cap(n: int, cap: int | None = None) -> None:
    cap = default_cap() if cap is None else cap
    if n > cap:
        raise EnumerationCapExceeded(
            f"refusing to enumerate S_{n} ({factorial(n)} permutations): "
            f"enumeration cap is {cap}")


@dataclass(frozen=True)
class Permutation:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"not a permutation of [{len(entries)}]: {entries}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """``61437258`` (digits, n <= 9) or ``10,2,1,...``."""
        text = text.strip()
        try:
            if "," in text:
                vals = [int(t) for t in text.split(",") if t.strip()]
            else:
                vals = [int(c) for c in text]
        except ValueError:
            raise ValueError(f"cannot parse permutation {text!r}") from None
        return cls(tuple(vals))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __call__(self, i: int) -> int:
        """Value at 1-based position i."""
        return self.entries[i - 1]

    def __str__(self) -> str:
        if len(self.entries) <= 9:
            return "".join(str(v) for v in self.entries)
        return ",".join(str(v) for v in self.entries)


@dataclass(frozen=True)
class CycleForm:
    cycles: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        sep = "" if sum(len(c) for c in self.cycles) <= 9 else ","
        return "".join("(" + sep.join(str(v) for v in c) + ")" for c in self.cycles)


def _entries(sigma: Permutation | Sequence[int]) -> tuple[int, ...]:
    return sigma.entries if isinstance(sigma, Permutation) else tuple(sigma)


def enumerate_sn(n: int, cap: int | None = None,
                 prefix: Sequence[int] = ()) -> Iterator[Permutation]:
    """All of S_n in lexicographic order, or just those starting with ``prefix``."""
    check_cap(n, cap)
    prefix = tuple(prefix)
    rest = [v for v in range(1, n + 1) if v not in prefix]
    if len(rest) + len(prefix) != n:
        raise ValueError(f"prefix {prefix} is not a partial permutation of [{n}]")
    for tail in permutations(rest):
        yield Permutation(prefix + tail)


def reverse(sigma: Permutation) -> Permutation:
    return Permutation(_entries(sigma)[::-1])


def inverse(sigma: Permutation) -> Permutation:
    e = _entries(sigma)
    out = [0] * len(e)
    for i, v in enumerate(e, 1):
        out[v - 1] = i
    return Permutation(tuple(out))


def to_cycles(sigma: Permutation) -> CycleForm:
    """Canonical cycle form: largest element last in each cycle, cycles by
    increasing largest element."""
    e = _entries(sigma)
    seen = set()
    cycles = []
    for start in range(1, len(e) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = e[start - 1]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = e[v - 1]
        top = cyc.index(max(cyc))
        cycles.append(tuple(cyc[top + 1:] + cyc[:top + 1]))
    cycles.sort(key=lambda c: c[-1])
    return CycleForm(tuple(cycles))


def from_cycles(c: CycleForm | Iterable[Iterable[int]]) -> Permutation:
    cycles = [tuple(cyc) for cyc in (c.cycles if isinstance(c, CycleForm) else c)]
    flat = [v for cyc in cycles for v in cyc]
    n = len(flat)
    if any(len(cyc) == 0 for cyc in cycles) or sorted(flat) != list(range(1, n + 1)):
        raise ValueError(f"cycles do not partition [{n}]: {cycles}")
    out = [0] * n
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out[a - 1] = b
    return Permutation(tuple(out))
