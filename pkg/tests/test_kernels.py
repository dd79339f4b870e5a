import numpy as np
import pytest

from permstat import _kernels
from permstat.distribution import joint_histogram, lower
from permstat.setspec import ALL, EVEN, ODD, Explicit, Residue
from permstat.stats import Family, Named, TStat

STATS = [Family(k, X, Y) for k in ("des", "adj", "val", "exc", "gamma")
         for X, Y in ((ALL, ALL), (EVEN, ODD), (Residue(1, 3), Explicit.of(2, 4, 5)))]
STATS += [Named(17), TStat(1), TStat(2), TStat(3)]


def test_lex_perms():
    P = _kernels.lex_perms(3)
    assert P.tolist() == [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]


@pytest.mark.parametrize("n", range(0, 8))
def test_backends_agree(n):
    for s in STATS:
        a = joint_histogram([s], n, backend="numba")
        b = joint_histogram([s], n, backend="numpy")
        assert a.dtype == b.dtype == np.int64
        assert np.array_equal(a, b), s


def test_joint_backends_and_workers_agree():
    stats = [Named(10), Named(12), Named(17)]
    ref = joint_histogram(stats, 7, backend="numpy")
    for backend in ("numba", "numpy"):
        for workers in (1, 3):
            assert np.array_equal(joint_histogram(stats, 7, backend=backend, workers=workers), ref)


def test_env_flag_selects_numpy(monkeypatch):
    monkeypatch.setenv("PERMSTAT_NUMBA", "0")
    assert _kernels.default_backend() == "numpy"
    monkeypatch.setenv("PERMSTAT_NUMBA", "1")
    assert _kernels.default_backend() == ("numba" if _kernels.numba is not None else "numpy")


def test_unknown_backend():
    with pytest.raises(ValueError):
        joint_histogram([Named(1)], 3, backend="cuda")


def test_lower_tstats():
    codes = [lower(TStat(i), 4)[0][0] for i in (1, 2, 3)]
    assert codes == [_kernels.DES, _kernels.ASC, _kernels.DES]
