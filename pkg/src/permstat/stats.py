"""Per-permutation statistics and the StatId naming scheme.

Family statistics take two sets ``X, Y``:

* ``des``   adjacent pairs with sigma_i > sigma_{i+1}, sigma_i in X, sigma_{i+1} in Y
* ``adj``   adjacent pairs with sigma_i in X, sigma_{i+1} in Y
* ``val``   positions i in X holding a value in Y
* ``exc``   positions i in X with sigma_i > i and sigma_i in Y
* ``gamma`` |{i in X : sigma_i in X} ∪ {i in Y : sigma_i in Y}|

``s1``..``s16`` are the sixteen parity statistics, each an alias of one
family instance; ``s17`` is the length of the longest run 1,2,...,i that
appears left to right; ``t1``..``t3`` split odd descent tops against
(odd,odd) adjacencies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .permutation import Permutation
from .setspec import ALL, EVEN, ODD, SetSpec, parse_setspec

__all__ = [
    "StatId", "Family", "Named", "TStat", "FAMILIES", "TABLE1", "TABLE1_GROUPS",
    "parse_stat", "resolve", "des", "adj", "val", "exc", "asc", "gamma", "s17",
    "t_stats", "evaluate",
]

FAMILIES = ("des", "adj", "val", "exc", "gamma")


class StatId:
    """Base for statistic identifiers; ``str()`` gives the CLI syntax."""


@dataclass(frozen=True)
class Family(StatId):
    kind: str
    x: SetSpec
    y: SetSpec

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise ValueError(f"unknown statistic family {self.kind!r}")

    def __str__(self) -> str:
        return f"{self.kind}:{self.x};{self.y}"


@dataclass(frozen=True)
class Named(StatId):
    index: int

    def __post_init__(self):
        if not 1 <= self.index <= 17:
            raise ValueError(f"named statistics are s1..s17, got s{self.index}")

    def __str__(self) -> str:
        return f"s{self.index}"


@dataclass(frozen=True)
class TStat(StatId):
    index: int

    def __post_init__(self):
        if self.index not in (1, 2, 3):
            raise ValueError(f"T statistics are t1..t3, got t{self.index}")

    def __str__(self) -> str:
        return f"t{self.index}"


TABLE1: dict[int, Family] = {
    1: Family("des", EVEN, ALL),
    2: Family("exc", ALL, EVEN),
    3: Family("val", EVEN, EVEN),
    4: Family("des", ALL, ODD),
    5: Family("exc", ODD, ALL),
    6: Family("val", ODD, EVEN),
    7: Family("val", EVEN, ODD),
    8: Family("adj", ODD, EVEN),
    9: Family("adj", EVEN, ODD),
    10: Family("des", ODD, ALL),
    11: Family("exc", ALL, ODD),
    12: Family("adj", ODD, ODD),
    13: Family("des", ALL, EVEN),
    14: Family("exc", EVEN, ALL),
    15: Family("val", ODD, ODD),
    16: Family("adj", EVEN, EVEN),
}

TABLE1_GROUPS: tuple[tuple[int, ...], ...] = (
    (1, 2, 3),
    (4, 5, 6, 7, 8, 9),
    (10, 11, 12),
    (13, 14),
    (15,),
    (16,),
)


def parse_stat(text: str) -> StatId:
    t = text.strip().lower()
    head, sep, body = t.partition(":")
    if sep:
        if head not in FAMILIES:
            raise ValueError(f"unknown statistic family {head!r} in {text!r}")
        xs, semi, ys = body.partition(";")
        if not semi:
            raise ValueError(f"expected {head}:X;Y, got {text!r}")
        return Family(head, parse_setspec(xs), parse_setspec(ys))
    if t[:1] == "s" and t[1:].isdigit():
        return Named(int(t[1:]))
    if t[:1] == "t" and t[1:].isdigit():
        return TStat(int(t[1:]))
    raise ValueError(f"unknown statistic {text!r}")


def resolve(stat: StatId) -> StatId:
    """Named s1..s16 become their family instance; everything else is unchanged."""
    if isinstance(stat, Named) and stat.index <= 16:
        return TABLE1[stat.index]
    return stat


def _e(sigma) -> Sequence[int]:
    return sigma.entries if isinstance(sigma, Permutation) else sigma


def des(sigma, X: SetSpec, Y: SetSpec) -> int:
    e = _e(sigma)
    return sum(1 for a, b in zip(e, e[1:]) if a > b and a in X and b in Y)


def asc(sigma, X: SetSpec, Y: SetSpec) -> int:
    e = _e(sigma)
    return sum(1 for a, b in zip(e, e[1:]) if a < b and a in X and b in Y)


def adj(sigma, X: SetSpec, Y: SetSpec) -> int:
    e = _e(sigma)
    return sum(1 for a, b in zip(e, e[1:]) if a in X and b in Y)


def val(sigma, X: SetSpec, Y: SetSpec) -> int:
    return sum(1 for i, v in enumerate(_e(sigma), 1) if i in X and v in Y)


def exc(sigma, X: SetSpec, Y: SetSpec) -> int:
    return sum(1 for i, v in enumerate(_e(sigma), 1) if v > i and i in X and v in Y)


def gamma(sigma, X: SetSpec, Y: SetSpec) -> int:
    # a union of position sets, so overlapping X, Y count a position once
    return sum(1 for i, v in enumerate(_e(sigma), 1)
               if (i in X and v in X) or (i in Y and v in Y))


def s17(sigma) -> int:
    e = _e(sigma)
    pos = {v: i for i, v in enumerate(e)}
    i = 0
    while i < len(e) and (i == 0 or pos[i + 1] > pos[i]):
        i += 1
    return i


def t_stats(sigma) -> tuple[int, int, int]:
    """(t1, t2, t3) over adjacent pairs.

    t1: odd-top descents whose bottom is even; t2: (odd,odd) ascents;
    t3: (odd,odd) descents.  An (odd,odd) descent always has an odd top, so
    t1 + t3 = s10 and t2 + t3 = s12.
    """
    t1 = t2 = t3 = 0
    e = _e(sigma)
    for a, b in zip(e, e[1:]):
        if a % 2 == 0:
            continue
        if b % 2:
            if a > b:
                t3 += 1
            else:
                t2 += 1
        elif a > b:
            t1 += 1
    return t1, t2, t3


_FAMILY_FN = {"des": des, "adj": adj, "val": val, "exc": exc, "gamma": gamma}


def evaluate(sigma, stat: StatId) -> int:
    stat = resolve(stat)
    if isinstance(stat, Family):
        return _FAMILY_FN[stat.kind](sigma, stat.x, stat.y)
    if isinstance(stat, Named):
        return s17(sigma)
    if isinstance(stat, TStat):
        return t_stats(sigma)[stat.index - 1]
    raise TypeError(f"not a statistic: {stat!r}")
