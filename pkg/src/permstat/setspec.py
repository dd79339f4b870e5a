"""Subsets of the positive integers used as position/value filters.

Every set is immutable and answers two questions: is ``m`` a member, and how
many members lie in ``[n] = {1, ..., n}``.  Textual syntax::

    all | even | odd | res:i,k | set:a,b,c | <spec>|<spec>|...

``res:i,k`` is ``{i + k*m : m >= 0}`` restricted to ``{1, 2, ...}``, so
``res:0,k`` is the positive multiples of ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SetSpec", "All", "Even", "Odd", "Residue", "Explicit", "Union",
    "ALL", "EVEN", "ODD", "EMPTY",
    "parse_setspec", "membership", "prefix_count", "alpha", "beta",
    "same_on", "disjoint_on", "NoConstruction",
    "derive_AB_for_adjacency", "derive_AB_for_value",
]


class SetSpec:
    """Base class; subclasses implement ``__contains__`` and ``count``."""

    def __contains__(self, m: int) -> bool:
        raise NotImplementedError

    def count(self, n: int) -> int:
        """|S ∩ [n]|."""
        return sum(1 for m in range(1, n + 1) if m in self)

    def mask(self, n: int) -> np.ndarray:
        """uint8 array ``a`` of length n+1 with ``a[m] = [m in S]``; ``a[0]`` is 0."""
        out = np.zeros(n + 1, dtype=np.uint8)
        for m in range(1, n + 1):
            if m in self:
                out[m] = 1
        return out

    def members(self, n: int) -> list[int]:
        return [m for m in range(1, n + 1) if m in self]

    def __or__(self, other: SetSpec) -> SetSpec:
        return Union.of(self, other)

    def __repr__(self) -> str:
        return f"SetSpec({str(self)!r})"


@dataclass(frozen=True, repr=False)
class All(SetSpec):
    def __contains__(self, m: int) -> bool:
        return m >= 1

    def count(self, n: int) -> int:
        return max(n, 0)

    def __str__(self) -> str:
        return "all"


@dataclass(frozen=True, repr=False)
class Residue(SetSpec):
    offset: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if self.offset < 0:
            raise ValueError(f"offset must be >= 0, got {self.offset}")

    @property
    def first(self) -> int:
        return self.offset if self.offset >= 1 else self.modulus

    def __contains__(self, m: int) -> bool:
        f = self.first
        return m >= f and (m - f) % self.modulus == 0

    def count(self, n: int) -> int:
        f = self.first
        if n < f:
            return 0
        return (n - f) // self.modulus + 1

    def __str__(self) -> str:
        return f"res:{self.offset},{self.modulus}"


@dataclass(frozen=True, repr=False)
class Even(Residue):
    offset: int = 2
    modulus: int = 2

    def __str__(self) -> str:
        return "even"


@dataclass(frozen=True, repr=False)
class Odd(Residue):
    offset: int = 1
    modulus: int = 2

    def __str__(self) -> str:
        return "odd"


@dataclass(frozen=True, repr=False)
class Explicit(SetSpec):
    elements: frozenset

    def __post_init__(self):
        bad = [e for e in self.elements if not isinstance(e, int) or e < 1]
        if bad:
            raise ValueError(f"explicit sets hold positive integers only, got {sorted(bad)}")

    @classmethod
    def of(cls, *elements: int) -> Explicit:
        return cls(frozenset(elements))

    def __contains__(self, m: int) -> bool:
        return m in self.elements

    def count(self, n: int) -> int:
        return sum(1 for e in self.elements if e <= n)

    def __str__(self) -> str:
        return "set:" + ",".join(str(e) for e in sorted(self.elements))


@dataclass(frozen=True, repr=False)
class Union(SetSpec):
    parts: tuple

    @classmethod
    def of(cls, *parts: SetSpec) -> SetSpec:
        flat: list[SetSpec] = []
        for p in parts:
            flat.extend(p.parts if isinstance(p, Union) else [p])
        if len(flat) == 1:
            return flat[0]
        return cls(tuple(flat))

    def __contains__(self, m: int) -> bool:
        return any(m in p for p in self.parts)

    def __str__(self) -> str:
        return "|".join(str(p) for p in self.parts)


ALL = All()
EVEN = Even()
ODD = Odd()
EMPTY = Explicit(frozenset())


def _parse_atom(tok: str) -> SetSpec:
    tok = tok.strip().lower()
    if tok == "all":
        return ALL
    if tok == "even":
        return EVEN
    if tok == "odd":
        return ODD
    head, sep, body = tok.partition(":")
    if sep and head == "res":
        try:
            i, k = (int(v) for v in body.split(","))
        except ValueError:
            raise ValueError(f"bad residue spec {tok!r}; expected res:i,k") from None
        return Residue(i, k)
    if sep and head == "set":
        body = body.strip()
        if not body:
            return EMPTY
        try:
            return Explicit(frozenset(int(v) for v in body.split(",")))
        except ValueError:
            raise ValueError(f"bad explicit set {tok!r}; expected set:a,b,c") from None
    raise ValueError(f"unknown set spec {tok!r}")


def parse_setspec(text: str) -> SetSpec:
    """Parse the textual syntax; ``|`` joins a union."""
    return Union.of(*(_parse_atom(t) for t in text.split("|")))


def membership(S: SetSpec, m: int) -> bool:
    return m in S


def prefix_count(S: SetSpec, n: int) -> int:
    return S.count(n)


def alpha(A: SetSpec, n: int, j: int) -> int:
    """Number of elements of {j+1, ..., n} outside A."""
    if not 1 <= j <= n:
        raise ValueError(f"need 1 <= j <= n, got j={j}, n={n}")
    return (n - j) - (A.count(n) - A.count(j))


def beta(A: SetSpec, n: int, j: int) -> int:
    """Number of elements of {1, ..., j-1} outside A."""
    if not 1 <= j <= n:
        raise ValueError(f"need 1 <= j <= n, got j={j}, n={n}")
    return (j - 1) - A.count(j - 1)


def same_on(a: SetSpec, b: SetSpec, n: int) -> bool:
    return all((m in a) == (m in b) for m in range(1, n + 1))


def disjoint_on(a: SetSpec, b: SetSpec, n: int) -> bool:
    return not any(m in a and m in b for m in range(1, n + 1))


# --- (A, B) constructions turning adjacency / place-value counts into descents ---

class NoConstruction(ValueError):
    """Raised when no known B exists for the requested (X, Y) pattern."""


def _as_residue(S: SetSpec) -> tuple[int, int] | None:
    """(normalized offset in 1..k, modulus) for a full residue class, else None."""
    if isinstance(S, Residue) and S.offset <= S.modulus:
        return S.first, S.modulus
    return None


def _residue(offset: int, k: int) -> SetSpec:
    # offset in 1..k+1; k+1 is the shifted class {k+1, 2k+1, ...} which omits 1
    if k == 2 and offset == 1:
        return ODD
    if k == 2 and offset == 2:
        return EVEN
    return Residue(offset, k)


def _residue_union(offsets: list[int], k: int) -> SetSpec:
    offs = sorted(set(offsets))
    if offs == list(range(1, k + 1)):
        return ALL
    return Union.of(*(_residue(o, k) for o in offs))


def _disjoint_pair(X: SetSpec, Y: SetSpec):
    rx, ry = _as_residue(X), _as_residue(Y)
    if rx is None or ry is None or rx[1] != ry[1] or rx[0] == ry[0]:
        return None
    k = rx[1]
    a = _residue_union([rx[0], ry[0]], k)
    # B is whichever class comes first inside each block of k consecutive integers
    b = _residue(min(rx[0], ry[0]), k)
    return a, b


def derive_AB_for_adjacency(X: SetSpec, Y: SetSpec) -> tuple[SetSpec, SetSpec]:
    """(A, B) with D^{A,B} = A^{X,Y} for residue-class patterns.

    Disjoint classes ``i+kN, j+kN``: A is their union and B the class whose
    offset (taken in 1..k) is smaller.  Equal classes ``X = Y = i+kN``:
    A = X and B = i+kN ∪ (i+1)+kN, which has 2·x_n elements in [n] whenever
    n+1 ∈ X.
    """
    pair = _disjoint_pair(X, Y)
    if pair is not None:
        return pair
    rx, ry = _as_residue(X), _as_residue(Y)
    if rx is not None and rx == ry:
        i, k = rx
        return _residue(i, k), _residue_union([i, i + 1], k)
    raise NoConstruction(f"no known (A,B) construction for adjacency pair ({X}, {Y})")


def derive_AB_for_value(X: SetSpec, Y: SetSpec) -> tuple[SetSpec, SetSpec]:
    """(A, B) with D^{A,B} = V^{X,Y} for residue-class patterns.

    Disjoint classes give the same pair as the adjacency case.  Equal classes
    ``X = Y = i+kN`` need 2·x_n + 1 elements of B in [n] whenever n+1 ∈ X;
    B = (i-1)+kN ∪ i+kN does this for offsets i >= 2.  With 1 ∈ X the
    condition already fails at n = 0, so no B exists.
    """
    pair = _disjoint_pair(X, Y)
    if pair is not None:
        return pair
    rx, ry = _as_residue(X), _as_residue(Y)
    if rx is not None and rx == ry:
        i, k = rx
        if i == 1:
            raise NoConstruction(
                f"no B exists for value pair ({X}, {Y}): 1 ∈ X∩Y forces |B ∩ [0]| = 1")
        return _residue(i, k), _residue_union([i - 1, i], k)
    raise NoConstruction(f"no known (A,B) construction for value pair ({X}, {Y})")
