"""Verification suites shared by the CLI and the test suite.

Each suite returns a :class:`SuiteResult`.  ``failures`` are broken theorems
or identities; ``counterexamples`` are conjecture failures.  They are kept
apart because the CLI maps them to different exit codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import identities
from .conjectures import test_conjecture1, test_conjecture2, test_gamma_theorem
from .distribution import (
    GammaHypothesisError, Method, check_gamma_hypothesis, compute,
    dist_brute, dist_D_hr1, dist_D_hr2, dist_D_recurrence, table1_formula,
)
from .permutation import Permutation, enumerate_sn, to_cycles
from .setspec import (
    ALL, EVEN, ODD, Explicit, NoConstruction, Residue, derive_AB_for_adjacency,
    derive_AB_for_value, disjoint_on,
)
from .stats import TABLE1, TABLE1_GROUPS, Family, Named, evaluate
from .transforms import build_theta, foata, foata_inverse

__all__ = [
    "SuiteResult", "GRID", "SUITES", "run_suite",
    "suite_table1", "suite_engines", "suite_bijections", "suite_patterns",
    "suite_identities", "suite_gamma", "suite_conjectures",
]

GRID = (ALL, EVEN, ODD, Residue(1, 3), Residue(2, 3),
        Explicit.of(2, 3, 4, 6, 7, 9), Explicit.of(1, 4, 8))

TABLE1_EXAMPLE = Permutation.parse("215436")
TABLE1_PRINTED = (2, 1, 2, 2, 2, 1, 1, 2, 2, 1, 1, 1, 1, 0, 2, 0)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.counterexamples

    def check(self, ok: bool, what: str) -> bool:
        self.checks += 1
        if not ok:
            self.failures.append(what)
        return ok

    def merge(self, other: "SuiteResult") -> None:
        self.checks += other.checks
        self.failures += other.failures
        self.counterexamples += other.counterexamples
        self.notes += other.notes


def suite_table1(max_n: int = 8) -> SuiteResult:
    r = SuiteResult("table1")
    for idx, want in enumerate(TABLE1_PRINTED, 1):
        got = evaluate(TABLE1_EXAMPLE, Named(idx))
        r.check(got == want, f"S{idx}(215436) = {got}, printed {want}")
    for g, group in enumerate(TABLE1_GROUPS):
        for m in range(max_n + 1):
            want = table1_formula(g, m)
            for idx in group:
                got = dist_brute(TABLE1[idx], m, cap=max_n).coeffs
                r.check(got == want, f"S{idx} at n={m}: {got} != a_n,k row {want}")
    return r


def _agree(r: SuiteResult, label: str, rows: dict) -> None:
    vals = set(rows.values())
    r.check(len(vals) == 1, f"{label}: " + ", ".join(f"{k}={list(v)}" for k, v in rows.items()))


def suite_engines(max_n: int = 7) -> SuiteResult:
    """brute = recurrence = closed form for D, V, A^{X,X}, E and Gamma on GRID."""
    r = SuiteResult("engines")
    for X, Y in product(GRID, repeat=2):
        for n in range(max_n + 1):
            tag = f"({X}, {Y}, n={n})"
            b = lambda p: compute(p, X, Y, n, Method.BRUTE, cap=max_n).coeffs
            _agree(r, "D " + tag, {"brute": b("D"), "rec": dist_D_recurrence(X, Y, n).coeffs,
                                   "hr1": dist_D_hr1(X, Y, n).coeffs, "hr2": dist_D_hr2(X, Y, n).coeffs})
            _agree(r, "V " + tag, {"brute": b("V"), "rec": compute("V", X, Y, n, "rec").coeffs,
                                   "formula": compute("V", X, Y, n, "formula").coeffs})
            rows = {"brute": b("A"), "rec": compute("A", X, Y, n, "rec").coeffs}
            if X == Y:
                rows["formula"] = compute("A", X, Y, n, "formula").coeffs
            _agree(r, "A " + tag, rows)
            _agree(r, "E " + tag, {"brute": b("E"), "rec": compute("E", X, Y, n, "rec").coeffs,
                                   "hr1": compute("E", X, Y, n, "formula").coeffs,
                                   "hr2": compute("E", X, Y, n, "formula", formula="hr2").coeffs})
            try:
                check_gamma_hypothesis(X, Y, n)
            except GammaHypothesisError:
                continue
            _agree(r, "Gamma " + tag, {"brute": b("Gamma"), "formula": compute("Gamma", X, Y, n, "formula").coeffs})
    return r


def suite_bijections(max_n: int = 7) -> SuiteResult:
    """Foata example and round trip, reverse/inverse symmetries, V = A, Theta."""
    r = SuiteResult("bijections")
    w = Permutation.parse("61437258")
    r.check(str(foata(w)) == "43612758", f"foata(61437258) = {foata(w)}")
    r.check(str(to_cycles(w)) == "(34)(216)(57)(8)", f"cycles of 61437258 = {to_cycles(w)}")
    r.check(str(foata_inverse(Permutation.parse("43612758"))) == "61437258", "foata inverse of 43612758")
    top = min(max_n, 7)
    for n in range(top + 1):
        images = set()
        for p in enumerate_sn(n):
            q = foata(p)
            images.add(q)
            if foata_inverse(q) != p:
                r.check(False, f"foata round trip fails at {p}")
        r.check(len(images) == max(1, _fact(n)), f"foata not bijective on S_{n}")
    for X, Y in product(GRID, repeat=2):
        for n in range(max_n + 1):
            A, V = dist_brute(Family("adj", X, Y), n), dist_brute(Family("val", X, Y), n)
            r.check(A.coeffs == dist_brute(Family("adj", Y, X), n).coeffs, f"A symmetry ({X},{Y},{n})")
            r.check(V.coeffs == dist_brute(Family("val", Y, X), n).coeffs, f"V symmetry ({X},{Y},{n})")
            if disjoint_on(X, Y, n):
                r.check(A.coeffs == V.coeffs, f"V = A fails for ({X},{Y},n={n})")
                if n <= top:
                    t = build_theta(n, X, Y, cap=top)
                    r.check(t.is_bijection() and t.transports(), f"Theta_{n} for ({X},{Y})")
    return r


def _fact(n: int) -> int:
    out = 1
    for q in range(2, n + 1):
        out *= q
    return out


PATTERN_MODULI = (2, 3, 4, 5)


def suite_patterns(max_n: int = 8) -> SuiteResult:
    """D^{A,B} = A^{X,Y} and D^{A,B} = V^{X,Y} with (A,B) derived from (X,Y)."""
    r = SuiteResult("patterns")
    for k in PATTERN_MODULI:
        for i, j in product(range(1, k + 1), repeat=2):
            X, Y = Residue(i, k), Residue(j, k)
            for kind, derive in (("adj", derive_AB_for_adjacency), ("val", derive_AB_for_value)):
                try:
                    A, B = derive(X, Y)
                except NoConstruction as exc:
                    r.notes.append(str(exc))
                    continue
                for n in range(max_n + 1):
                    d = dist_D_recurrence(A, B, n).coeffs
                    want = dist_brute(Family(kind, X, Y), n, cap=max_n).coeffs
                    r.check(d == want, f"D^{{{A},{B}}} != {kind}({X},{Y}) at n={n}")
    return r


def suite_identities(grid: dict | None = None) -> SuiteResult:
    r = SuiteResult("identities")
    for case, s in identities.sweep_all(grid).items():
        r.checks += s.points
        if s.failures:
            r.failures.append(f"case {case}: {s.failures} failures, first {s.first_failure}")
        r.notes.append(f"case {case}: {s.points} points, theorem form ok at all, "
                       f"oracle {s.oracle_checked}, chain {s.chain_checked}, "
                       f"printed lhs differs {s.printed_lhs_mismatch}, "
                       f"printed rhs differs {s.printed_rhs_mismatch}"
                       if not s.failures else f"case {case}: FAILED")
    return r


def suite_gamma(max_n: int = 8) -> SuiteResult:
    r = SuiteResult("gamma")
    for X, Y in product(GRID + (Residue(1, 2), Residue(2, 2)), repeat=2):
        for n in range(max_n + 1):
            try:
                res = test_gamma_theorem(X, Y, n, cap=max_n)
            except GammaHypothesisError:
                continue
            r.check(res["holds"], f"gamma theorem ({X},{Y},n={n}): {res}")
    return r


def suite_conjectures(max_n: int = 8, workers: int = 1) -> SuiteResult:
    r = SuiteResult("conjectures")
    for n in range(1, max_n + 1):
        for test in (test_conjecture1, test_conjecture2):
            res = test(n, cap=max_n, workers=workers)
            r.checks += 1
            if not res.holds:
                r.counterexamples.append(res.to_json())
    if r.passed:
        r.notes.append(f"verified up to {max_n}")
    return r


SUITES = {
    "table1": suite_table1,
    "engines": suite_engines,
    "bijections": suite_bijections,
    "patterns": suite_patterns,
    "identities": lambda max_n=None: suite_identities(),
    "gamma": suite_gamma,
    "conjectures": suite_conjectures,
}

DEFAULT_MAX_N = {"table1": 8, "engines": 7, "bijections": 7, "patterns": 8,
                 "identities": None, "gamma": 8, "conjectures": 8}


def run_suite(name: str, max_n: int | None = None) -> SuiteResult:
    if name == "all":
        out = SuiteResult("all")
        for key in SUITES:
            out.merge(run_suite(key, max_n))
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}, all")
    fn = SUITES[name]
    if name == "identities":
        return fn()
    return fn(DEFAULT_MAX_N[name] if max_n is None else max_n)
