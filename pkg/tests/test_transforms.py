from math import factorial

import pytest

from permstat.permutation import Permutation, enumerate_sn
from permstat.setspec import ALL, EMPTY, EVEN, ODD, Explicit, Residue
from permstat.stats import adj, val
from permstat.transforms import (
    DOWN, SAME, UP, NotDisjoint, build_theta, foata, foata_inverse, foata_trace, insert_I,
    insert_max, label_adjacency_slots, label_value_slots,
)


def P(s):
    return Permutation.parse(s)


def test_foata_examples():
    assert foata(P("61437258")) == P("43612758")
    assert foata_inverse(P("43612758")) == P("61437258")
    assert foata(Permutation.identity(5)) == Permutation.identity(5)
    assert foata_inverse(Permutation.identity(5)) == Permutation.identity(5)
    cycles, image = foata_trace(P("61437258"))
    assert str(cycles) == "(34)(216)(57)(8)" and str(image) == "43612758"


def test_insert_examples():
    assert insert_I(P("14253"), 1) == P("642531")
    assert insert_I(P("14253"), 2) == P("16253" + "4")
    assert insert_I(P("14253"), 6) == P("142536")
    assert insert_max(P("213"), 0) == P("4213")
    with pytest.raises(ValueError):
        insert_I(P("12"), 4)
    with pytest.raises(ValueError):
        insert_max(P("12"), 3)


def test_adjacency_labels_example():
    lab = label_adjacency_slots(P("14325"), EVEN, ODD)
    assert lab.labels == (3, 4, 1, 5, 2, 6)
    assert lab.kind == "gap" and lab.loci == tuple(range(6))


def test_adjacency_labels_unchanged_slots():
    lab = label_adjacency_slots(Permutation.identity(4), Explicit.of(9), ODD)
    assert lab.labels == (1, 2, 3, 4, 5)
    assert set(lab.effects) == {SAME}


def test_value_labels_example():
    lab = label_value_slots(P("14253"), ODD, EVEN)
    assert lab.labels == (2, 3, 1, 4, 5, 6)
    assert lab.loci[-1] == 6
    assert lab.locus_for(2, matching=False) == 1
    assert insert_I(P("14253"), lab.locus_for(2, matching=False)) == P("642531")


def test_effects_match_direct_insertion():
    for X, Y in ((ODD, EVEN), (EVEN, ODD), (Residue(1, 3), Residue(2, 3)), (ALL, EMPTY)):
        for n in range(6):
            for p in enumerate_sn(n):
                if all(not (m in X and m in Y) for m in range(1, n + 2)):
                    a = label_adjacency_slots(p, X, Y)
                    assert list(a.effects) == [adj(insert_max(p, g), X, Y) - adj(p, X, Y) for g in a.loci]
                    v = label_value_slots(p, X, Y)
                    assert list(v.effects) == [val(insert_I(p, i), X, Y) - val(p, X, Y) for i in v.loci]


def test_matching_labels_put_changes_first():
    lab = label_adjacency_slots(P("14325"), EVEN, ODD)
    m = lab.matching_labels()
    changed = [m[j] for j, f in enumerate(lab.effects) if f != SAME]
    assert sorted(changed) == list(range(1, len(changed) + 1))
    assert sorted(m) == list(range(1, 7))


def test_labels_need_disjoint_sets():
    with pytest.raises(NotDisjoint):
        label_adjacency_slots(P("123"), ODD, ODD)
    with pytest.raises(NotDisjoint):
        build_theta(4, ODD, ODD)


@pytest.mark.parametrize("n", range(8))
def test_theta_odd_even(n):
    t = build_theta(n, ODD, EVEN)
    assert len(t) == factorial(n)
    assert t.is_bijection() and t.transports()


def test_theta_small():
    assert list(build_theta(1, ODD, EVEN).csv_lines()) == ["1,1,0,0"]
    assert len(list(build_theta(4, ODD, EVEN).csv_lines())) == 24
    t = build_theta(5, Residue(1, 3), Residue(2, 3))
    assert t.is_bijection() and t.transports()
    assert isinstance(t[P("12345")], Permutation)


def test_effect_constants():
    assert (UP, DOWN, SAME) == (1, -1, 0)


def test_theta_pairs_have_matching_slot_classes():
    t = build_theta(5, ODD, EVEN)
    for s, th in t.forward.items():
        a = label_adjacency_slots(s, ODD, EVEN)
        v = label_value_slots(th, ODD, EVEN)
        assert a.changing() == v.changing()
