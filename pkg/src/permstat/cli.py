"""``permstat`` command line.

Exit codes: 0 pass, 1 theorem or identity failure (or bad input),
2 conjecture counterexample.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import cache, identities
from .config import load_config
from .conjectures import gamma_jump_demo, test_conjecture1, test_conjecture2
from .distribution import POLYS, Method, available_methods, compute
from .permutation import Permutation, to_cycles
from .setspec import parse_setspec
from .stats import Family, evaluate, parse_stat
from .transforms import NotDisjoint, build_theta, foata, foata_inverse
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_COUNTEREXAMPLE = 0, 1, 2


class UsageError(Exception):
    pass


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad permutation {text!r}: {exc}") from None


def _set(text: str):
    try:
        return parse_setspec(text)
    except ValueError as exc:
        raise UsageError(f"bad set {text!r}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, default=str)


# ------------------------------------------------------------------ commands

def cmd_stat(args, cfg, out) -> int:
    sigma = _perm(args.perm)
    try:
        stat = parse_stat(args.stat)
    except ValueError as exc:
        raise UsageError(f"bad statistic {args.stat!r}: {exc}") from None
    print(evaluate(sigma, stat), file=out)
    return EXIT_OK


def _cached(cfg, poly, X, Y, n, method, formula, use_cache):
    d = None
    tag = method if method != "formula" or poly not in ("D", "E") else f"formula-{formula}"
    key = Family(POLYS[poly], X, Y)
    if use_cache:
        d = cache.load(cfg.cache_dir, key, n, tag)
    if d is None:
        d = compute(poly, X, Y, n, method, cap=cfg.enumeration_cap, formula=formula)
        if use_cache:
            cache.store(cfg.cache_dir, replace(d, method=tag))
    return d


def cmd_dist(args, cfg, out) -> int:
    X, Y = _set(args.x), _set(args.y)
    n = args.n
    if args.method == "all":
        methods = available_methods(args.poly, X, Y, n)
        if args.poly in ("D", "E"):
            methods = [m for m in methods if m != "formula"] + ["formula-hr1", "formula-hr2"]
    else:
        methods = [args.method]
    rows = {}
    for m in methods:
        base, _, formula = m.partition("-")
        d = _cached(cfg, args.poly, X, Y, n, base, formula or args.formula, args.cache)
        rows[m] = d.row()
    agree = len({tuple(r) for r in rows.values()}) == 1
    if cfg.output_format == "json":
        print(_dump({"poly": args.poly, "x": str(X), "y": str(Y), "n": n,
                     "rows": {m: [str(c) for c in r] for m, r in rows.items()},
                     "verdict": "agree" if agree else "disagree"}), file=out)
    else:
        for m, r in rows.items():
            print(f"{m}: {r}" if len(rows) > 1 else str(r), file=out)
        if len(rows) > 1:
            print(f"verdict: {'agree' if agree else 'disagree'}", file=out)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args, cfg, out) -> int:
    res = run_suite(args.suite, args.max_n)
    for line in res.notes:
        print(line, file=out)
    for line in res.failures:
        print(f"FAIL {line}", file=out)
    for cx in res.counterexamples:
        print(f"COUNTEREXAMPLE {_dump(cx)}", file=out)
    print(f"{args.suite}: {res.checks} checks, {len(res.failures)} failures, "
          f"{len(res.counterexamples)} counterexamples -> {'pass' if res.passed else 'FAIL'}", file=out)
    if res.failures:
        return EXIT_FAIL
    return EXIT_COUNTEREXAMPLE if res.counterexamples else EXIT_OK


def cmd_foata(args, cfg, out) -> int:
    sigma = _perm(args.perm)
    if args.invert:
        image = foata_inverse(sigma)
        if args.trace:
            print(f"cycles: {to_cycles(image)}", file=out)
    else:
        image = foata(sigma)
        if args.trace:
            print(f"cycles: {to_cycles(sigma)}", file=out)
    print(image, file=out)
    return EXIT_OK


def cmd_theta(args, cfg, out) -> int:
    X, Y = _set(args.x), _set(args.y)
    try:
        table = build_theta(args.n, X, Y, cap=cfg.enumeration_cap)
    except NotDisjoint as exc:
        raise UsageError(f"{exc} (the adj-to-val bijection requires X ∩ Y = ∅)") from None
    ok = table.is_bijection() and table.transports()
    if cfg.output_format == "json":
        print(_dump({"n": args.n, "x": str(X), "y": str(Y), "bijection": table.is_bijection(),
                     "rows": [[str(s), str(t), a, b] for s, t, a, b in table.rows()]}), file=out)
    else:
        for line in table.csv_lines():
            print(line, file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_gamma_demo(args, cfg, out) -> int:
    X, Y = _set(args.x), _set(args.y)
    found = gamma_jump_demo(args.n, X, Y, cap=cfg.enumeration_cap)
    if cfg.output_format == "json":
        print(_dump([{"sigma": str(s), "i": i, "before": b, "after": a} for s, i, b, a in found]), file=out)
    else:
        print("sigma,i,before,after", file=out)
        for s, i, b, a in found:
            print(f"{s},{i},{b},{a}", file=out)
    return EXIT_OK


def cmd_conjectures(args, cfg, out) -> int:
    tests = {"1": [test_conjecture1], "2": [test_conjecture2],
             "both": [test_conjecture1, test_conjecture2]}[args.which]
    reports, bad = [], []
    for n in range(1, args.max_n + 1):
        for t in tests:
            res = t(n, cap=cfg.enumeration_cap, workers=cfg.workers)
            reports.append(res.to_json())
            if not res.holds:
                bad.append(res.to_json())
    if cfg.output_format == "json":
        print(_dump(reports), file=out)
    else:
        for rep in reports:
            print(f"conjecture {rep['conjecture']} n={rep['n']} ({rep['even_odd_split']}): "
                  f"{'holds' if rep['holds'] else 'FAILS'} table_sizes={rep['table_sizes']}", file=out)
    for rep in bad:
        print(f"COUNTEREXAMPLE {_dump(rep)}", file=out)
    if bad:
        return EXIT_COUNTEREXAMPLE
    print(f"verified up to {args.max_n}", file=out)
    return EXIT_OK


def cmd_identities(args, cfg, out) -> int:
    grid = dict(identities.DEFAULT_GRID)
    for name in ("k", "n", "i", "j", "t", "s"):
        v = getattr(args, name)
        if v is not None:
            grid[name] = v
    cases = identities.CASES if args.case == "all" else (args.case,)
    summaries = {c: identities.sweep(c, grid) for c in cases}
    if cfg.output_format == "json":
        print(identities.summaries_json(summaries), file=out)
    else:
        print(identities.reports_csv(r for s in summaries.values() for r in s.reports), end="", file=out)
    return EXIT_OK if all(s.passed for s in summaries.values()) else EXIT_FAIL


# ------------------------------------------------------------------ parser

def _ints(text: str) -> list[int]:
    if "-" in text.strip("-") and "," not in text:
        lo, hi = text.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(t) for t in text.split(",") if t]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permstat", description="(X,Y)-permutation statistics toolkit")
    p.add_argument("--config", help="path to a permstat.toml file")
    p.add_argument("--format", choices=("csv", "json"), help="override output_format")
    p.add_argument("--cap", type=int, help="override enumeration_cap")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stat", help="evaluate one statistic on one permutation")
    s.add_argument("--perm", required=True)
    s.add_argument("--stat", required=True)
    s.set_defaults(func=cmd_stat)

    s = sub.add_parser("dist", help="distribution polynomial coefficients")
    s.add_argument("--poly", required=True, choices=tuple(POLYS))
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.add_argument("--n", required=True, type=int)
    s.add_argument("--method", default="brute", choices=[m.value for m in Method] + ["all"])
    s.add_argument("--formula", default="hr1", choices=("hr1", "hr2"), help="closed form for D and E")
    s.add_argument("--cache", action="store_true", help="read and write the on-disk cache")
    s.set_defaults(func=cmd_dist)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("--suite", default="all", choices=tuple(SUITES) + ("all",))
    s.add_argument("--max-n", type=int, default=None)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("foata", help="Foata's first transformation")
    s.add_argument("--perm", required=True)
    s.add_argument("--invert", action="store_true")
    s.add_argument("--trace", action="store_true", help="also print the cycle form")
    s.set_defaults(func=cmd_foata)

    s = sub.add_parser("theta", help="dump the adj-to-val bijection as CSV")
    s.add_argument("--n", required=True, type=int)
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("gamma-demo", help="insertions where gamma jumps by 2")
    s.add_argument("--n", required=True, type=int)
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s.set_defaults(func=cmd_gamma_demo)

    s = sub.add_parser("conjectures", help="exhaustive tests of Conjectures 1 and 2")
    s.add_argument("--max-n", type=int, default=8)
    s.add_argument("--which", choices=("1", "2", "both"), default="both")
    s.set_defaults(func=cmd_conjectures)

    s = sub.add_parser("identities", help="residue-class identity sweep")
    s.add_argument("--case", default="all", choices=identities.CASES + ("all",))
    for name in ("k", "n", "i", "j", "t", "s"):
        s.add_argument(f"--{name}", type=_ints, default=None, help="list like 2,3 or range like 0-4")
    s.set_defaults(func=cmd_identities)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.format:
            cfg.output_format = args.format
        if args.cap is not None:
            cfg.enumeration_cap = args.cap
        if getattr(args, "max_n", None) is not None and args.max_n > cfg.enumeration_cap:
            raise UsageError(f"--max-n {args.max_n} exceeds enumeration cap {cfg.enumeration_cap}")
        return args.func(args, cfg, out)
    except (UsageError, ValueError) as exc:
        # NoClosedForm, GammaHypothesisError, EnumerationCapExceeded and bad
        # identity parameters are all ValueErrors
        print(f"permstat: error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
