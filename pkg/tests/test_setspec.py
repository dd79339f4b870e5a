import pytest

from permstat.setspec import (
    ALL, EMPTY, EVEN, ODD, Explicit, NoConstruction, Residue, Union, alpha, beta,
    derive_AB_for_adjacency, derive_AB_for_value, disjoint_on, membership, parse_setspec,
    prefix_count, same_on,
)

X = Explicit.of(2, 3, 4, 6, 7, 9)
Y = Explicit.of(1, 4, 8)


def test_membership():
    assert membership(EVEN, 4)
    assert membership(Residue(1, 4), 9)
    assert not membership(Residue(1, 4), 4)
    assert not membership(X, 5)
    assert 0 not in ALL


@pytest.mark.parametrize("S, n, want", [(EVEN, 7, 3), (X, 6, 4), (Residue(1, 3), 10, 4), (EMPTY, 5, 0), (ALL, 0, 0)])
def test_prefix_count(S, n, want):
    assert prefix_count(S, n) == want
    assert S.count(n) == sum(1 for m in range(1, n + 1) if m in S)


def test_alpha_beta_example_table():
    assert alpha(X, 6, 2) == 1
    assert alpha(X, 6, 6) == 0
    assert alpha(ALL, 9, 5) == 0
    assert beta(Y, 6, 6) == 3
    assert beta(X, 6, 4) == 1
    assert beta(ALL, 9, 9) == 0


@pytest.mark.parametrize("text, want", [
    ("all", ALL), ("even", EVEN), ("odd", ODD), ("res:1,2", ODD), ("res:2,2", EVEN),
    ("set:2,3,4,6,7,9", X), ("set:", EMPTY),
])
def test_parse_setspec(text, want):
    assert same_on(parse_setspec(text), want, 30)


def test_parse_union_and_roundtrip():
    u = parse_setspec("res:1,3|res:2,3")
    assert list(u.members(7)) == [1, 2, 4, 5, 7]
    for S in (ALL, EVEN, ODD, Residue(2, 5), X, EMPTY, u):
        assert same_on(parse_setspec(str(S)), S, 40)


@pytest.mark.parametrize("bad", ["evens", "res:1", "res:a,b", "set:1,x", "res:1,0"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_setspec(bad)


def test_mask():
    m = ODD.mask(5)
    assert list(m) == [0, 1, 0, 1, 0, 1]


def test_disjoint_on():
    assert disjoint_on(ODD, EVEN, 10)
    assert not disjoint_on(X, Y, 6)
    assert disjoint_on(Residue(2, 3), Y, 7) and not disjoint_on(Residue(2, 3), Y, 8)


def test_derive_table1_instances():
    assert derive_AB_for_adjacency(ODD, ODD) == (ODD, ALL)
    assert derive_AB_for_adjacency(ODD, EVEN) == (ALL, ODD)
    assert derive_AB_for_value(EVEN, EVEN) == (EVEN, ALL)


def test_derive_residue_pair():
    A, B = derive_AB_for_adjacency(Residue(1, 3), Residue(2, 3))
    assert same_on(A, Union.of(Residue(1, 3), Residue(2, 3)), 30)
    assert B == Residue(1, 3)
    assert derive_AB_for_value(Residue(1, 3), Residue(2, 3)) == (A, B)


def test_derive_equal_classes_use_corrected_sets():
    A, B = derive_AB_for_value(Residue(2, 5), Residue(2, 5))
    assert A == Residue(2, 5)
    assert list(B.members(12)) == [1, 2, 6, 7, 11, 12]
    A, B = derive_AB_for_adjacency(Residue(2, 5), Residue(2, 5))
    assert list(B.members(12)) == [2, 3, 7, 8, 12]


def test_derive_no_construction():
    with pytest.raises(NoConstruction):
        derive_AB_for_value(ODD, ODD)
    with pytest.raises(NoConstruction):
        derive_AB_for_adjacency(X, Y)
