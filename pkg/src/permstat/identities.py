"""Exact checks of the residue-class identity families.

Each family compares two expressions for one coefficient at length
m = k*n + t:

* a product form coming from the place-value formula (cases 1, 2, 3, I, II)
  or the X=X adjacency formula (cases A, B), and
* an alternating sum coming from the first descent formula applied to a
  derived pair (A, B).

Cases 1-3 use X = i+kN, Y = j+kN with 1 <= i < j <= k-1; cases I, II, A, B
use X = Y = i+kN with 1 <= i <= k-1.

Every grid point carries:

``lhs``, ``rhs``      the displayed left and right sides, as printed
``theorem_lhs``       the product formula instantiated with the case's set sizes
``closed``            the closed form evaluated on the actual residue sets
``chain``             the first descent formula on (A, B) from
                      :func:`~permstat.setspec.derive_AB_for_value` /
                      :func:`~permstat.setspec.derive_AB_for_adjacency`
``oracle``            brute force over S_m, when m is within reach

A point is ``ok`` when ``theorem_lhs`` equals every independent value that is
available.  Disagreements of the printed sides are reported, not repaired.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import factorial, prod

from .distribution import binom, dist_AXX_formula, dist_brute, dist_D_hr1, dist_V_formula
from .setspec import NoConstruction, Residue, SetSpec, derive_AB_for_adjacency, derive_AB_for_value
from .stats import Family

__all__ = [
    "CASES", "IdentityId", "IdentityReport", "SweepSummary", "rising", "falling",
    "case_range", "verify_identity", "sweep", "sweep_all", "DEFAULT_GRID",
]

CASES = ("1", "2", "3", "I", "II", "A", "B")
PAIR_CASES = ("1", "2", "3")

DEFAULT_GRID = {"k": range(2, 6), "n": range(0, 5)}


def rising(a: int, n: int) -> int:
    """(a)_n = a (a+1) ... (a+n-1); (a)_0 = 1."""
    return prod(a + q for q in range(n))


def falling(a: int, n: int) -> int:
    """a (a-1) ... (a-n+1); 1 for n = 0."""
    return prod(a - q for q in range(n))


def _fact(a: int) -> int:
    # negative arguments only occur next to a binomial that is already 0
    return factorial(a) if a >= 0 else 0


def _binom_first(top: int, s: int) -> int:
    """C(x-1, s) as used by the X=X adjacency formula: C(-1, 0) is 1."""
    return 1 if (top == -1 and s == 0) else binom(top, s)


def case_range(case: str, i: int, j: int | None, k: int) -> range:
    """Legal remainders t for one case header."""
    return {
        "1": range(0, i),
        "2": range(i, j) if j is not None else range(0),
        "3": range(j, k) if j is not None else range(0),
        "I": range(0, i),
        "II": range(i, k),
        "A": range(0, i - 1),
        "B": range(i, k - 1),
    }[case]


_HEADERS = {
    "1": "0 <= t < i", "2": "i <= t < j", "3": "j <= t <= k-1",
    "I": "0 <= t < i", "II": "i <= t <= k-1", "A": "0 <= t < i-1", "B": "i <= t < k-1",
}


@dataclass(frozen=True)
class IdentityId:
    case: str
    k: int
    i: int
    t: int
    n: int
    s: int
    j: int | None = None

    def __post_init__(self):
        if self.case not in CASES:
            raise ValueError(f"unknown identity case {self.case!r}")
        if self.k < 2:
            raise ValueError(f"case {self.case}: modulus k must be >= 2, got {self.k}")
        if self.n < 0 or self.s < 0:
            raise ValueError(f"case {self.case}: n and s must be >= 0")
        if self.case in PAIR_CASES:
            if self.j is None or not 1 <= self.i < self.j <= self.k - 1:
                raise ValueError(f"case {self.case}: need 1 <= i < j <= k-1, "
                                 f"got i={self.i}, j={self.j}, k={self.k}")
        elif not 1 <= self.i <= self.k - 1:
            raise ValueError(f"case {self.case}: need 1 <= i <= k-1, got i={self.i}, k={self.k}")
        if self.t not in case_range(self.case, self.i, self.j, self.k):
            raise ValueError(f"case {self.case} requires m = kn+t with {_HEADERS[self.case]}; "
                             f"got t={self.t}, i={self.i}, j={self.j}, k={self.k}")

    @property
    def m(self) -> int:
        return self.k * self.n + self.t

    def sizes(self) -> tuple[int, int]:
        """(x_m, y_m) the case header asserts."""
        n = self.n
        return {"1": (n, n), "2": (n + 1, n), "3": (n + 1, n + 1), "I": (n, n),
                "II": (n + 1, n + 1), "A": (n, n), "B": (n + 1, n + 1)}[self.case]

    def sets(self) -> tuple[SetSpec, SetSpec]:
        X = Residue(self.i, self.k)
        return (X, Residue(self.j, self.k)) if self.case in PAIR_CASES else (X, X)


# ---------------------------------------------------------------- the displays

def _printed(idn: IdentityId) -> tuple[int, int]:
    k, n, t, s = idn.k, idn.n, idn.t, idn.s
    r_terms = range(s + 1)
    c = idn.case
    if c == "1":
        a, q = (k - 1) * n + t, (k - 2) * n + t
        lhs = binom(n, s) ** 2 * binom(a, n - s) * _fact(s) * _fact(n - s) * _fact(a)
        rhs = _fact(q) * sum((-1) ** (s - r) * binom(q + r, r) * binom(k * n + t + 1, s - r)
                             * rising(1 + r + q, n) ** 2 for r in r_terms)
    elif c == "2":
        a, q = (k - 1) * n + t, (k - 2) * n + t - 1
        lhs = binom(n + 1, s) * binom(n, s) * binom(a, n + 1 - s) * _fact(s) * _fact(n - s) * _fact(a - 1)
        rhs = _fact(q) * sum((-1) ** (s - r) * binom(q + r, r) * binom(k * n + t + 1, s - r)
                             * rising(r + q + 1, n + 1) * rising(r + q + 1, n) for r in r_terms)
    elif c == "3":
        a, q = (k - 1) * n + t - 1, (k - 2) * n + t - 1
        lhs = binom(n + 1, s) ** 2 * binom(a, n + 1 - s) * _fact(s) * _fact(n + 1 - s) * _fact(a)
        rhs = _fact(q) * sum((-1) ** (s - r) * binom(q + r, r) * binom(k * n + t + 1, s - r)
                             * rising(r + q, n + 1) ** 2 for r in r_terms)
    elif c == "I":
        a = (k - 1) * n + t
        lhs = binom(n, s) ** 2 * binom(a, n - s) * _fact(s) * _fact(n - s) * _fact(a)
        rhs = _fact(a) * sum((-1) ** (s - r) * binom(a + r, r) * binom(k * n + t + 1, s - r)
                             * falling(1 + r + a, n) for r in r_terms)
    elif c == "II":
        a = (k - 1) * n + t - 1
        lhs = binom(n + 1, s) ** 2 * binom(a, n + 1 - s) * _fact(s) * _fact(n + 1 - s) * _fact(a)
        rhs = _fact(a) * sum((-1) ** (s - r) * binom(a + r, r) * binom(k * n + t + 1, s - r)
                             * falling(r + a + 1, n + 1) for r in r_terms)
    elif c == "A":
        a = (k - 1) * n + t
        lhs = _fact(n) * _fact(a) * _binom_first(n - 1, s) * binom(a + 1, n - s)
        rhs = _fact(a) * sum((-1) ** (s - r) * binom(a + r, r) * binom(k * n + t + 1, s - r)
                             * falling(r + a, n) for r in r_terms)
    else:
        a = (k - 1) * n + t - 1
        lhs = _fact(n) * _fact(a) * binom(n + 1, s) * binom(a + 1, n + 1 - s)
        rhs = _fact(a) * sum((-1) ** (s - r) * binom(a + r, r) * binom(k * n + t + 1, s - r)
                             * falling(r + a, n + 1) for r in r_terms)
    return lhs, rhs


def _theorem_lhs(idn: IdentityId) -> int:
    """Product formula with the header's set sizes plugged in."""
    m, s = idn.m, idn.s
    x, y = idn.sizes()
    if idn.case in ("A", "B"):
        xc = m - x
        return _fact(x) * _fact(xc) * _binom_first(x - 1, s) * binom(xc + 1, x - s)
    if s > x:
        return 0
    xc, yc = m - x, m - y
    return _fact(s) * _fact(x - s) * _fact(xc) * binom(x, s) * binom(y, s) * binom(yc, x - s)


# ---------------------------------------------------------------- independent values

@lru_cache(maxsize=None)
def _closed_row(case_kind: str, X: SetSpec, Y: SetSpec, m: int) -> tuple[int, ...]:
    if case_kind == "adj":
        return dist_AXX_formula(X, m).coeffs
    return dist_V_formula(X, Y, m).coeffs


@lru_cache(maxsize=None)
def _chain_row(A: SetSpec, B: SetSpec, m: int) -> tuple[int, ...]:
    return dist_D_hr1(A, B, m).coeffs


def _kind(case: str) -> str:
    return "adj" if case in ("A", "B") else "val"


def _pick(row: tuple[int, ...], s: int) -> int:
    return row[s] if s < len(row) else 0


@dataclass
class IdentityReport:
    case: str
    k: int
    i: int
    j: int | None
    t: int
    n: int
    s: int
    lhs: int
    rhs: int
    equal: bool
    theorem_lhs: int
    closed: int
    chain: int | None
    oracle: int | None
    ok: bool
    printed_lhs_matches: bool
    printed_rhs_matches: bool

    @property
    def m(self) -> int:
        return self.k * self.n + self.t


def verify_identity(idn: IdentityId, reach: int = 9) -> IdentityReport:
    lhs, rhs = _printed(idn)
    theo = _theorem_lhs(idn)
    X, Y = idn.sets()
    m, s = idn.m, idn.s
    kind = _kind(idn.case)
    closed = _pick(_closed_row(kind, X, Y, m), s)
    try:
        A, B = derive_AB_for_adjacency(X, Y) if kind == "adj" else derive_AB_for_value(X, Y)
        chain = _pick(_chain_row(A, B, m), s)
    except NoConstruction:
        chain = None
    oracle = None
    if m <= reach:
        oracle = dist_brute(Family(kind, X, Y), m, cap=reach)[s]
    ok = theo == closed and chain in (None, theo) and oracle in (None, theo)
    return IdentityReport(idn.case, idn.k, idn.i, idn.j, idn.t, idn.n, s, lhs, rhs, lhs == rhs,
                          theo, closed, chain, oracle, ok, lhs == theo, rhs == theo)


# ---------------------------------------------------------------- sweeps

@dataclass
class SweepSummary:
    case: str
    points: int = 0
    failures: int = 0
    printed_equal: int = 0
    printed_lhs_mismatch: int = 0
    printed_rhs_mismatch: int = 0
    chain_checked: int = 0
    oracle_checked: int = 0
    first_failure: dict | None = None
    reports: list = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        d = asdict(self)
        d.pop("reports")
        d["passed"] = self.passed
        return d


def _points(case: str, grid: dict):
    for k in grid.get("k", DEFAULT_GRID["k"]):
        ivals = grid.get("i", range(1, k))
        for i in ivals:
            if not 1 <= i <= k - 1:
                continue
            jvals = [j for j in grid.get("j", range(i + 1, k)) if i < j <= k - 1] \
                if case in PAIR_CASES else [None]
            for j in jvals:
                for t in case_range(case, i, j, k):
                    if "t" in grid and t not in grid["t"]:
                        continue
                    for n in grid.get("n", DEFAULT_GRID["n"]):
                        x = IdentityId(case, k, i, t, n, 0, j).sizes()[0]
                        for s in grid.get("s", range(x + 1)):
                            yield IdentityId(case, k, i, t, n, s, j)


def sweep(case: str, grid: dict | None = None, reach: int = 9) -> SweepSummary:
    """Run :func:`verify_identity` on every legal point of ``grid``.

    ``grid`` maps parameter names (k, i, j, t, n, s) to iterables; missing
    k or n fall back to ``DEFAULT_GRID``, the rest to every legal value.
    An empty iterable for any parameter gives an empty sweep.
    """
    if case not in CASES:
        raise ValueError(f"unknown identity case {case!r}")
    summary = SweepSummary(case)
    for idn in _points(case, grid or {}):
        rep = verify_identity(idn, reach=reach)
        summary.reports.append(rep)
        summary.points += 1
        summary.printed_equal += rep.equal
        summary.printed_lhs_mismatch += not rep.printed_lhs_matches
        summary.printed_rhs_mismatch += not rep.printed_rhs_matches
        summary.chain_checked += rep.chain is not None
        summary.oracle_checked += rep.oracle is not None
        if not rep.ok:
            summary.failures += 1
            if summary.first_failure is None:
                summary.first_failure = asdict(rep)
    return summary


def sweep_all(grid: dict | None = None, reach: int = 9) -> dict[str, SweepSummary]:
    return {case: sweep(case, grid, reach) for case in CASES}


CSV_FIELDS = ("case", "k", "i", "j", "t", "n", "s", "lhs", "rhs", "equal")


def reports_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in reports:
        w.writerow([r.case, r.k, r.i, "" if r.j is None else r.j, r.t, r.n, r.s,
                    str(r.lhs), str(r.rhs), str(r.equal).lower()])
    return buf.getvalue()


def summaries_json(summaries: dict[str, SweepSummary]) -> str:
    return json.dumps({c: s.to_json() for c, s in summaries.items()}, indent=2, default=str)
