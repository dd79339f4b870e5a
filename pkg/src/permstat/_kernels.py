"""Exhaustive tabulation of statistic tuples over S_n.

Two interchangeable backends:

* ``numba``  a compiled loop walking each prefix block in lexicographic order
  with an in-place next-permutation step; nothing is materialized.
* ``numpy``  materializes each prefix block as an int8 array and evaluates
  every statistic column-wise.

``PERMSTAT_NUMBA=0`` selects numpy; numpy is also used when numba is not
importable.  Both return the same int64 histogram, bit for bit.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

import numpy as np

try:
    import numba
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

# statistic codes understood by both backends
DES, ADJ, VAL, EXC, GAMMA, S17, ASC = range(7)

BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    if numba is None or os.environ.get("PERMSTAT_NUMBA", "1").strip().lower() in ("0", "false", "no", "off"):
        return "numpy"
    return "numba"


# --------------------------------------------------------------------- numba

@njit(cache=True, nogil=True)
def _value_nb(p, pos, n, code, xm, ym):
    c = 0
    if code == DES or code == ADJ or code == ASC:
        for i in range(n - 1):
            a = p[i]
            b = p[i + 1]
            if xm[a] and ym[b]:
                if code == ADJ or (code == DES and a > b) or (code == ASC and a < b):
                    c += 1
    elif code == VAL:
        for i in range(n):
            if xm[i + 1] and ym[p[i]]:
                c += 1
    elif code == EXC:
        for i in range(n):
            if p[i] > i + 1 and xm[i + 1] and ym[p[i]]:
                c += 1
    elif code == GAMMA:
        for i in range(n):
            v = p[i]
            if (xm[i + 1] and xm[v]) or (ym[i + 1] and ym[v]):
                c += 1
    elif code == S17:
        c = 1
        while c < n and pos[c + 1] > pos[c]:
            c += 1
    return c


@njit(cache=True, nogil=True)
def _tabulate_block_nb(n, first, codes, xm, ym):
    k = codes.shape[0]
    radix = n + 1
    size = 1
    for _ in range(k):
        size *= radix
    hist = np.zeros(size, dtype=np.int64)
    p = np.empty(n, dtype=np.int64)
    pos = np.zeros(n + 1, dtype=np.int64)
    p[0] = first
    j = 1
    for v in range(1, n + 1):
        if v != first:
            p[j] = v
            j += 1
    while True:
        for i in range(n):
            pos[p[i]] = i
        idx = 0
        for s in range(k):
            idx = idx * radix + _value_nb(p, pos, n, codes[s], xm[s], ym[s])
        hist[idx] += 1
        # next permutation of p[1:]
        i = n - 2
        while i >= 1 and p[i] >= p[i + 1]:
            i -= 1
        if i < 1:
            break
        j = n - 1
        while p[j] <= p[i]:
            j -= 1
        t = p[i]
        p[i] = p[j]
        p[j] = t
        lo = i + 1
        hi = n - 1
        while lo < hi:
            t = p[lo]
            p[lo] = p[hi]
            p[hi] = t
            lo += 1
            hi -= 1
    return hist


# --------------------------------------------------------------------- numpy

@lru_cache(maxsize=4)
def lex_perms(m: int) -> np.ndarray:
    """All permutations of range(m) in lexicographic order, shape (m!, m)."""
    out = np.zeros((1, 0), dtype=np.int8)
    for size in range(1, m + 1):
        prev = out
        blocks = []
        for v in range(size):
            tail = prev + (prev >= v)
            blocks.append(np.hstack([np.full((prev.shape[0], 1), v, dtype=np.int8), tail]))
        out = np.vstack(blocks).astype(np.int8)
    out.setflags(write=False)
    return out


def _values_np(P, code, xm, ym):
    n = P.shape[1]
    xm = xm.astype(bool)
    ym = ym.astype(bool)
    if code in (DES, ADJ, ASC):
        a, b = P[:, :-1], P[:, 1:]
        hit = xm[a] & ym[b]
        if code == DES:
            hit &= a > b
        elif code == ASC:
            hit &= a < b
        return hit.sum(axis=1)
    positions = np.arange(1, n + 1)
    if code == VAL:
        return (xm[positions] & ym[P]).sum(axis=1)
    if code == EXC:
        return ((P > positions) & xm[positions] & ym[P]).sum(axis=1)
    if code == GAMMA:
        return ((xm[positions] & xm[P]) | (ym[positions] & ym[P])).sum(axis=1)
    if code == S17:
        where = np.argsort(P, axis=1)
        rising = where[:, 1:] > where[:, :-1]
        return np.cumprod(rising, axis=1).sum(axis=1) + 1
    raise ValueError(f"unknown statistic code {code}")


def _tabulate_block_np(n, first, codes, xm, ym):
    rest = np.array([v for v in range(1, n + 1) if v != first], dtype=np.int8)
    tail = rest[lex_perms(n - 1)]
    P = np.hstack([np.full((tail.shape[0], 1), first, dtype=np.int8), tail]).astype(np.int64)
    radix = n + 1
    idx = np.zeros(P.shape[0], dtype=np.int64)
    for s in range(len(codes)):
        idx = idx * radix + _values_np(P, int(codes[s]), xm[s], ym[s])
    return np.bincount(idx, minlength=radix ** len(codes)).astype(np.int64)


# ------------------------------------------------------------------ driver

def tabulate(n: int, codes, xmasks, ymasks, backend: str | None = None,
             workers: int = 1) -> np.ndarray:
    """Joint histogram of statistic tuples over S_n.

    ``codes`` has one entry per statistic; ``xmasks``/``ymasks`` are uint8
    arrays of shape (k, n+1).  Returns an int64 array of shape (n+1,)*k.
    S_n is split by first entry; blocks are summed, so the result does not
    depend on ``workers``.
    """
    backend = backend or default_backend()
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    codes = np.asarray(codes, dtype=np.int64)
    k = codes.shape[0]
    shape = (n + 1,) * k
    if n == 0:
        hist = np.zeros(shape, dtype=np.int64)
        hist[(0,) * k] = 1
        return hist
    xm = np.ascontiguousarray(xmasks, dtype=np.uint8).reshape(k, n + 1)
    ym = np.ascontiguousarray(ymasks, dtype=np.uint8).reshape(k, n + 1)
    block = _tabulate_block_nb if backend == "numba" else _tabulate_block_np

    def run(first):
        return block(n, first, codes, xm, ym)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(run, range(1, n + 1)))
    else:
        parts = [run(first) for first in range(1, n + 1)]
    return np.sum(parts, axis=0).reshape(shape)
