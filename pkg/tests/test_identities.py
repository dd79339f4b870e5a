import json

import pytest

from permstat.identities import (
    CASES, IdentityId, case_range, falling, reports_csv, rising, summaries_json, sweep, sweep_all,
    verify_identity,
)


def test_factorials():
    assert rising(3, 0) == 1 and rising(2, 3) == 24 and rising(-1, 3) == 0
    assert falling(5, 0) == 1 and falling(5, 3) == 60 and falling(2, 4) == 0


def test_case1_s0_single_term():
    from math import comb, factorial
    for k in (3, 4, 5):
        for n in range(4):
            idn = IdentityId("1", k, 1, 0, n, 0, j=2)
            r = verify_identity(idn)
            a = (k - 1) * n
            assert r.lhs == comb(a, n) * factorial(n) * factorial(a)
            assert r.lhs == r.rhs == r.theorem_lhs and r.ok


@pytest.mark.parametrize("args, header", [
    (("1", 4, 1, 2, 0, 0, 2), "0 <= t < i"),
    (("2", 4, 1, 0, 0, 0, 2), "i <= t < j"),
    (("II", 4, 2, 0, 0, 0), "i <= t <= k-1"),
    (("A", 4, 2, 1, 0, 0), "0 <= t < i-1"),
])
def test_out_of_range_names_header(args, header):
    with pytest.raises(ValueError, match=header.replace("+", r"\+")):
        IdentityId(*args)


def test_offset_zero_rejected():
    with pytest.raises(ValueError, match="1 <= i"):
        IdentityId("3", 2, 0, 1, 1, 0, j=1)


def test_empty_grid_and_filters():
    assert sweep("1", {"k": []}).points == 0
    # every t offered lies outside i <= t < j
    assert sweep("2", {"k": [4], "i": [1], "j": [3], "t": [0, 3]}).points == 0


def test_point_fields():
    r = verify_identity(IdentityId("2", 3, 1, 1, 1, 0, j=2))
    assert (r.lhs, r.rhs) == (6, 12)
    assert r.theorem_lhs == r.closed == r.chain == r.oracle == 12
    assert r.ok and not r.printed_lhs_matches and r.printed_rhs_matches


def test_case_i_offset_one_has_no_chain():
    r = verify_identity(IdentityId("I", 3, 1, 0, 2, 1))
    assert r.chain is None and r.ok


def test_sweep_all_default_grid():
    res = sweep_all()
    assert set(res) == set(CASES)
    for case, s in res.items():
        assert s.points > 0 and s.passed, (case, s.first_failure)
    assert res["1"].printed_equal == res["1"].points
    assert res["3"].printed_rhs_mismatch > 0


def test_outputs():
    s = sweep("B", {"k": [4], "n": [0, 1]})
    text = reports_csv(s.reports)
    lines = text.splitlines()
    assert lines[0] == "case,k,i,j,t,n,s,lhs,rhs,equal"
    assert len(lines) == s.points + 1
    data = json.loads(summaries_json({"B": s}))
    assert data["B"]["passed"] is True and "reports" not in data["B"]


def test_case_ranges():
    assert list(case_range("3", 1, 2, 4)) == [2, 3]
    assert list(case_range("B", 2, None, 5)) == [2, 3]
