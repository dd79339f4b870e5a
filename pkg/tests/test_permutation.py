import pytest

from permstat.permutation import (
    CycleForm, EnumerationCapExceeded, Permutation, enumerate_sn, from_cycles, inverse,
    reverse, to_cycles,
)


def P(s):
    return Permutation.parse(s)


def test_enumerate():
    assert list(enumerate_sn(0)) == [Permutation(())]
    perms = list(enumerate_sn(3))
    assert len(perms) == 6 and str(perms[0]) == "123" and str(perms[-1]) == "321"
    assert sum(1 for _ in enumerate_sn(6)) == 720


def test_cap():
    with pytest.raises(EnumerationCapExceeded):
        next(iter(enumerate_sn(12)))
    with pytest.raises(EnumerationCapExceeded):
        next(iter(enumerate_sn(5, cap=4)))


def test_env_cap(monkeypatch):
    monkeypatch.setenv("PERMSTAT_CAP", "3")
    with pytest.raises(EnumerationCapExceeded):
        next(iter(enumerate_sn(4)))


def test_reverse_inverse():
    assert reverse(P("215436")) == P("634512")
    assert reverse(Permutation(())) == Permutation(())
    assert inverse(P("215436")) == P("215436")
    assert inverse(P("231")) == P("312")
    assert inverse(Permutation.identity(4)) == Permutation.identity(4)


def test_from_cycles_rejects_partial_cover():
    with pytest.raises(ValueError):
        from_cycles([[2, 1, 6], [3, 4]])


def test_cycles():
    assert str(to_cycles(P("61437258"))) == "(34)(216)(57)(8)"
    assert str(to_cycles(Permutation.identity(3))) == "(1)(2)(3)"
    assert from_cycles(to_cycles(P("61437258"))) == P("61437258")
    assert from_cycles([[2, 1, 6], [3, 4], [5]]) == from_cycles(CycleForm(((4, 3), (5,), (1, 6, 2))))


@pytest.mark.parametrize("bad", ["1123", "0", "124", "a12"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Permutation.parse(bad)


def test_long_permutations_use_commas():
    p = Permutation.parse("10,1,2,3,4,5,6,7,8,9")
    assert p(1) == 10
    assert str(p) == "10,1,2,3,4,5,6,7,8,9"
