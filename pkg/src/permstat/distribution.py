"""Distribution rows D, A, V, E and Gamma by three independent routes.

* brute force over S_n (:func:`dist_brute`, backed by :mod:`permstat._kernels`)
* insertion recurrences built bottom-up from the empty permutation
* closed forms: place-value formula, the X=X adjacency formula, the two
  alternating-sum descent formulas, and the gamma formula

All coefficients are Python ints.  A row for length n has n+1 entries,
indexed by statistic value 0..n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

import numpy as np

from . import _kernels
from .permutation import check_cap
from .setspec import EVEN, ODD, SetSpec, alpha, beta, same_on
from .stats import Family, Named, StatId, TStat, resolve

__all__ = [
    "Distribution", "Method", "NoClosedForm", "GammaHypothesisError", "POLYS",
    "binom", "lower", "joint_histogram", "dist_brute",
    "dist_D_recurrence", "dist_A_recurrence", "dist_V_recurrence", "insertion_shape",
    "dist_V_formula", "dist_AXX_formula", "dist_D_hr1", "dist_D_hr2", "hr1_terms", "hr2_terms",
    "dist_E", "dist_gamma_formula", "compute", "available_methods",
    "table1_formula",
]


class Method(str, enum.Enum):
    BRUTE = "brute"
    RECURRENCE = "rec"
    CLOSED_FORM = "formula"


class NoClosedForm(ValueError):
    """The requested (polynomial, sets, method) has no route."""


class GammaHypothesisError(ValueError):
    pass


POLYS = {"D": "des", "A": "adj", "V": "val", "E": "exc", "Gamma": "gamma"}


@dataclass(frozen=True)
class Distribution:
    n: int
    stat: StatId
    coeffs: tuple[int, ...]
    method: str = "brute"

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __getitem__(self, s: int) -> int:
        return self.coeffs[s] if 0 <= s < len(self.coeffs) else 0

    def total(self) -> int:
        return sum(self.coeffs)

    def row(self) -> list[int]:
        """Coefficients with trailing zeros dropped (at least one entry)."""
        r = list(self.coeffs)
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        return r


def binom(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _row(n: int) -> list[int]:
    return [0] * (n + 1)


# ---------------------------------------------------------------- brute force

def lower(stat: StatId, n: int) -> list[tuple[int, np.ndarray, np.ndarray]]:
    """Translate a statistic into kernel (code, xmask, ymask) triples."""
    stat = resolve(stat)
    empty = np.zeros(n + 1, dtype=np.uint8)
    if isinstance(stat, Family):
        code = {"des": _kernels.DES, "adj": _kernels.ADJ, "val": _kernels.VAL,
                "exc": _kernels.EXC, "gamma": _kernels.GAMMA}[stat.kind]
        return [(code, stat.x.mask(n), stat.y.mask(n))]
    if isinstance(stat, Named):
        return [(_kernels.S17, empty, empty)]
    if isinstance(stat, TStat):
        odd, even = ODD.mask(n), EVEN.mask(n)
        return [{1: (_kernels.DES, odd, even),
                 2: (_kernels.ASC, odd, odd),
                 3: (_kernels.DES, odd, odd)}[stat.index]]
    raise TypeError(f"not a statistic: {stat!r}")


def joint_histogram(stats, n: int, cap: int | None = None,
                    backend: str | None = None, workers: int = 1) -> np.ndarray:
    """int64 array of shape (n+1,)*len(stats) counting each value tuple over S_n."""
    check_cap(n, cap)
    triples = [t for s in stats for t in lower(s, n)]
    codes = [t[0] for t in triples]
    xm = np.stack([t[1] for t in triples])
    ym = np.stack([t[2] for t in triples])
    return _kernels.tabulate(n, codes, xm, ym, backend=backend, workers=workers)


@lru_cache(maxsize=4096)
def _brute_coeffs(stat: StatId, n: int, backend: str | None, workers: int) -> tuple[int, ...]:
    hist = joint_histogram([stat], n, cap=n, backend=backend, workers=workers)
    return tuple(int(c) for c in hist)


def dist_brute(stat: StatId, n: int, cap: int | None = None,
               backend: str | None = None, workers: int = 1) -> Distribution:
    check_cap(n, cap)
    return Distribution(n, stat, _brute_coeffs(stat, n, backend or _kernels.default_backend(), workers),
                        Method.BRUTE.value)


# ---------------------------------------------------------------- recurrences
# Each step grows a row for length m into a row for length m+1 by inserting
# m+1.  Two shapes occur: "lower" when no locus can add a pair and k loci
# remove one, and "raise" when c - k loci add a pair and none remove one.

def _step_lower(row: list[int], m: int) -> list[int]:
    new = _row(m + 1)
    for k in range(m + 2):
        a = (k + 1) * row[k + 1] if k + 1 <= m else 0
        b = (m + 1 - k) * row[k] if k <= m else 0
        new[k] = a + b
    return new


def _step_raise(row: list[int], m: int, c: int) -> list[int]:
    new = _row(m + 1)
    for k in range(m + 2):
        a = (c - (k - 1)) * row[k - 1] if 1 <= k <= m + 1 else 0
        b = (m + 1 - (c - k)) * row[k] if k <= m else 0
        new[k] = a + b
    return new


def insertion_shape(poly: str, X: SetSpec, Y: SetSpec, m: int) -> int | None:
    """Shape of the step from length m to m+1.

    None means "lower": for a permutation with statistic k, k loci remove a
    pair and the rest change nothing.  An integer c means "raise": c - k
    loci add a pair and the rest change nothing.  D inserts into gaps, A
    into gaps, V uses the I-insertion.
    """
    inx, iny = (m + 1) in X, (m + 1) in Y
    if poly == "D":
        return Y.count(m) if inx else None
    if poly not in ("A", "V"):
        raise ValueError(f"no insertion recurrence for {poly!r}")
    if not inx and not iny:
        return None
    if inx and iny:
        # the terminal I-locus adds one more pair for V
        return (poly == "V") + X.count(m) + Y.count(m)
    return Y.count(m) if inx else X.count(m)


def _run(poly: str, X: SetSpec, Y: SetSpec, n: int) -> list[int]:
    row = [1]
    for m in range(n):
        c = insertion_shape(poly, X, Y, m)
        row = _step_lower(row, m) if c is None else _step_raise(row, m, c)
    return row


def dist_D_recurrence(X: SetSpec, Y: SetSpec, n: int) -> Distribution:
    return Distribution(n, Family("des", X, Y), _run("D", X, Y, n), Method.RECURRENCE.value)


def dist_A_recurrence(X: SetSpec, Y: SetSpec, n: int) -> Distribution:
    return Distribution(n, Family("adj", X, Y), _run("A", X, Y, n), Method.RECURRENCE.value)


def dist_V_recurrence(X: SetSpec, Y: SetSpec, n: int) -> Distribution:
    return Distribution(n, Family("val", X, Y), _run("V", X, Y, n), Method.RECURRENCE.value)


# ---------------------------------------------------------------- closed forms

def dist_V_formula(X: SetSpec, Y: SetSpec, n: int) -> Distribution:
    x, y = X.count(n), Y.count(n)
    xc, yc = n - x, n - y
    row = _row(n)
    for k in range(min(x, y) + 1):
        row[k] = (factorial(k) * factorial(x - k) * factorial(xc)
                  * binom(x, k) * binom(y, k) * binom(yc, x - k))
    return Distribution(n, Family("val", X, Y), row, Method.CLOSED_FORM.value)


def dist_AXX_formula(X: SetSpec, n: int) -> Distribution:
    x = X.count(n)
    xc = n - x
    row = _row(n)
    for s in range(n + 1):
        # C(x-1, 0) with x = 0 is read as 1 so the empty set gives A_{n,0} = n!
        first = 1 if (x == 0 and s == 0) else binom(x - 1, s)
        row[s] = factorial(x) * factorial(xc) * first * binom(xc + 1, x - s)
    return Distribution(n, Family("adj", X, X), row, Method.CLOSED_FORM.value)


def _hr_prefactor(X: SetSpec, n: int):
    members = X.members(n)
    return members, n - len(members)


def hr1_terms(X: SetSpec, Y: SetSpec, n: int, s: int) -> list[int]:
    """Signed summands r = 0..s of the first descent formula, before the x^c! factor."""
    members, xc = _hr_prefactor(X, n)
    weights = [1 + alpha(X, n, x) + beta(Y, n, x) for x in members]
    out = []
    for r in range(s + 1):
        prod = 1
        for w in weights:
            prod *= w + r
        out.append((-1) ** (s - r) * binom(xc + r, r) * binom(n + 1, s - r) * prod)
    return out


def hr2_terms(X: SetSpec, Y: SetSpec, n: int, s: int) -> list[int]:
    """Signed summands r = 0..x-s of the second descent formula, before the x^c! factor."""
    members, xc = _hr_prefactor(X, n)
    x = len(members)
    # these factors can be zero or negative
    weights = [beta(X, n, m) - beta(Y, n, m) for m in members]
    out = []
    for r in range(x - s + 1):
        prod = 1
        for w in weights:
            prod *= w + r
        out.append((-1) ** (x - s - r) * binom(xc + r, r) * binom(n + 1, x - s - r) * prod)
    return out


def dist_D_hr1(X: SetSpec, Y: SetSpec, n: int) -> Distribution:
    xc = n - X.count(n)
    row = [factorial(xc) * sum(hr1_terms(X, Y, n, s)) for s in range(n + 1)]
    return Distribution(n, Family("des", X, Y), row, Method.CLOSED_FORM.value)


def dist_D_hr2(X: SetSpec, Y: SetSpec, n: int) -> Distribution:
    xc = n - X.count(n)
    row = [factorial(xc) * sum(hr2_terms(X, Y, n, s)) for s in range(n + 1)]
    return Distribution(n, Family("des", X, Y), row, Method.CLOSED_FORM.value)


def dist_E(X: SetSpec, Y: SetSpec, n: int, method: Method | str = Method.BRUTE,
           cap: int | None = None, formula: str = "hr1") -> Distribution:
    """E^{X,Y}; the non-brute routes use E^{X,Y} = D^{Y,X}."""
    method = Method(method)
    stat = Family("exc", X, Y)
    if method is Method.BRUTE:
        return dist_brute(stat, n, cap=cap)
    if method is Method.RECURRENCE:
        d = dist_D_recurrence(Y, X, n)
    else:
        d = (dist_D_hr1 if formula == "hr1" else dist_D_hr2)(Y, X, n)
    return Distribution(n, stat, d.coeffs, method.value)


def check_gamma_hypothesis(X: SetSpec, Y: SetSpec, n: int) -> None:
    for m in range(1, n + 1):
        inx, iny = m in X, m in Y
        if inx and iny:
            raise GammaHypothesisError(f"gamma formula needs X ∩ Y = ∅ on [{n}]; {m} is in both")
        if not inx and not iny:
            raise GammaHypothesisError(f"gamma formula needs X ∪ Y ⊇ [{n}]; {m} is in neither")


def dist_gamma_formula(X: SetSpec, Y: SetSpec, n: int) -> Distribution:
    check_gamma_hypothesis(X, Y, n)
    x, y = X.count(n), Y.count(n)
    row = _row(n)
    for k in range(x + 1):
        s = 2 * k + y - x
        if 0 <= s <= n:
            row[s] += factorial(x) * factorial(y) * binom(x, k) * binom(y, x - k)
    return Distribution(n, Family("gamma", X, Y), row, Method.CLOSED_FORM.value)


# ---------------------------------------------------------------- dispatch

def available_methods(poly: str, X: SetSpec, Y: SetSpec, n: int) -> list[str]:
    out = ["brute"]
    if poly in ("D", "A", "V", "E"):
        out.append("rec")
    if poly in ("D", "V", "E") or (poly == "A" and same_on(X, Y, n)):
        out.append("formula")
    if poly == "Gamma":
        try:
            check_gamma_hypothesis(X, Y, n)
            out.append("formula")
        except GammaHypothesisError:
            pass
    return out


def compute(poly: str, X: SetSpec, Y: SetSpec, n: int, method: Method | str,
            cap: int | None = None, formula: str = "hr1") -> Distribution:
    """One route for one polynomial.  Never falls back to another route."""
    if poly not in POLYS:
        raise ValueError(f"unknown polynomial {poly!r}; expected one of {', '.join(POLYS)}")
    method = Method(method)
    if method is Method.BRUTE:
        return dist_brute(Family(POLYS[poly], X, Y), n, cap=cap)
    if poly == "E":
        return dist_E(X, Y, n, method, formula=formula)
    if method is Method.RECURRENCE:
        if poly == "D":
            return dist_D_recurrence(X, Y, n)
        if poly == "A":
            return dist_A_recurrence(X, Y, n)
        if poly == "V":
            return dist_V_recurrence(X, Y, n)
        raise NoClosedForm(f"no recurrence for {poly}")
    if poly == "D":
        return (dist_D_hr1 if formula == "hr1" else dist_D_hr2)(X, Y, n)
    if poly == "V":
        return dist_V_formula(X, Y, n)
    if poly == "A":
        if not same_on(X, Y, n):
            raise NoClosedForm(f"no closed form for A^{{{X},{Y}}}: only X = Y is covered")
        return dist_AXX_formula(X, n)
    return dist_gamma_formula(X, Y, n)


# ---------------------------------------------------------------- parity groups

def _c(a: int, b: int) -> int:
    # C(-1, 0) = 1 at the empty edge, as in dist_AXX_formula
    return 1 if (a == -1 and b == 0) else binom(a, b)


_TABLE1_ROWS = {
    # group: (a_{2n,k}, a_{2n+1,k}) as functions of (n, k)
    0: (lambda n, k: (factorial(n) * binom(n, k)) ** 2,
        lambda n, k: factorial(n) * factorial(n + 1) * binom(n, k) * binom(n + 1, k + 1)),
    1: (lambda n, k: (factorial(n) * binom(n, k)) ** 2,
        lambda n, k: factorial(n) * factorial(n + 1) * binom(n, k) * binom(n + 1, k)),
    2: (lambda n, k: factorial(n) ** 2 * _c(n - 1, k) * binom(n + 1, k + 1),
        lambda n, k: factorial(n) * factorial(n + 1) * binom(n, k) * binom(n + 1, k)),
    3: (lambda n, k: factorial(n) ** 2 * _c(n - 1, k) * binom(n + 1, k + 1),
        lambda n, k: factorial(n) * factorial(n + 1) * binom(n, k) * binom(n + 1, k + 1)),
    4: (lambda n, k: (factorial(n) * binom(n, k)) ** 2,
        lambda n, k: factorial(n) * factorial(n + 1) * binom(n, k - 1) * binom(n + 1, k)),
    5: (lambda n, k: factorial(n) ** 2 * _c(n - 1, k) * binom(n + 1, k + 1),
        lambda n, k: factorial(n) * factorial(n + 1) * _c(n - 1, k) * binom(n + 2, k + 2)),
}


def table1_formula(group: int, m: int) -> tuple[int, ...]:
    """Row a_{m,0..m} of a parity group (0-based index into TABLE1_GROUPS)."""
    even, odd = _TABLE1_ROWS[group]
    f, n = (even, m // 2) if m % 2 == 0 else (odd, m // 2)
    return tuple(f(n, k) for k in range(m + 1))
