from collections import Counter
from math import factorial

import pytest

from permstat import conjectures as cj
from permstat.distribution import GammaHypothesisError, dist_brute
from permstat.setspec import ALL, EVEN, ODD, Residue
from permstat.stats import Family, Named

S10, S12, S17 = Named(10), Named(12), Named(17)


def test_joint_dist_examples():
    assert cj.joint_dist(1, (S10, S12, S17)).counts == Counter({(0, 0, 1): 1})
    assert cj.joint_dist(2, (S17,)).counts == Counter({(2,): 1, (1,): 1})


@pytest.mark.parametrize("n", range(0, 9))
def test_joint_marginals(n):
    jd = cj.joint_dist(n, (S10, S12, S17))
    assert jd.total() == factorial(n)
    assert jd.marginal(0) == list(dist_brute(Family("des", ODD, ALL), n).coeffs)
    assert jd.marginal(1) == list(dist_brute(Named(12), n).coeffs)


@pytest.mark.parametrize("n", range(1, 9))
def test_conjectures_hold(n):
    r1, r2 = cj.test_conjecture1(n), cj.test_conjecture2(n)
    assert r1.holds and r1.witness is None
    assert r2.holds and r2.details["implies_conjecture1"]
    rep = r2.to_json()
    assert set(rep) >= {"n", "holds", "witness", "table_sizes", "even_odd_split"}
    assert rep["even_odd_split"] == ("even" if n % 2 == 0 else "odd")


@pytest.mark.parametrize("n", range(1, 7))
def test_direct_path_agrees(n):
    for stats in (cj.CONJ1[0], cj.CONJ2[0]):
        assert cj.joint_dist(n, stats).counts == cj.joint_dist_direct(n, stats).counts
    assert cj.test_conjecture1(n, direct=True).holds


def test_counterexample_is_reported_not_raised(monkeypatch):
    # break the symmetry on purpose: compare S10 with S4 instead of S12
    monkeypatch.setattr(cj, "CONJ1", ((S10, Named(4), S17), (Named(4), S10, S17)))
    res = cj._test("1", cj.CONJ1, 4, None, False, None, 1)[0]
    assert not res.holds and res.witness is not None


def test_gamma_theorem():
    for n in range(9):
        assert cj.test_gamma_theorem(EVEN, ODD, n)["holds"]
        assert cj.test_gamma_theorem(Residue(1, 2), Residue(2, 2), n)["holds"]
    with pytest.raises(GammaHypothesisError):
        cj.test_gamma_theorem(ODD, ODD, 3)


def test_gamma_jump_demo():
    assert cj.gamma_jump_demo(4, ODD, EVEN) == []
    X = ODD | Residue(4, 4)
    for n in (3, 7):
        found = cj.gamma_jump_demo(n, X, EVEN)
        assert found
        assert all(after == before + 2 for _, _, before, after in found)
    for n in range(3, 6):
        assert cj.max_gamma_jump(n, X, EVEN) <= 2


@pytest.mark.parametrize("n", [9, 10])
def test_conjectures_beyond_acceptance_range(n):
    assert cj.test_conjecture1(n, cap=10, workers=2).holds
    assert cj.test_conjecture2(n, cap=10, workers=2).holds
