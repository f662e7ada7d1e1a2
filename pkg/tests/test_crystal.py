import pytest
from hypothesis import given, settings, strategies as st

from qweight.crystal import (BoxTensor, UnsupportedRegion, crystal_e, crystal_f, energy, enumerate_highest,
                             is_classical_highest, iter_tensors, letter_key, local_H, parse_letter)
from qweight.roots import ParameterError

CAP = 4
RANK = CAP + 1
letters = st.sampled_from([x for i in range(1, CAP + 1) for x in (i, -i)])
tensors = st.lists(letters, min_size=1, max_size=6).map(BoxTensor.from_word)


def alpha(i, length):
    v = [0] * length
    v[i - 1], v[i] = 1, -1
    return tuple(v)


def test_letter_order():
    order = sorted([-1, 3, -3, 1, 2, -2], key=letter_key)
    assert order == [1, 2, 3, -3, -2, -1]
    assert parse_letter("~2") == -2 and parse_letter("3") == 3
    with pytest.raises(ParameterError):
        parse_letter("0")


def test_parse_and_serialise():
    t = BoxTensor.parse("~1 x 1 x 1")
    assert t.letters == (-1, 1, 1)
    assert t.word == (1, 1, -1)
    assert t.to_json() == [1, 1, -1]
    assert BoxTensor.from_word(t.to_json()) == t
    assert t.weight(3) == (1, 0, 0)


def test_local_energy_table():
    assert local_H(-1, 1) == 2
    assert local_H(2, 1) == 1
    assert local_H(1, 1) == 0
    assert local_H(1, 2) == 0
    assert local_H(1, 1, strict=False) == 1


@settings(max_examples=1000, deadline=None)
@given(tensors, st.integers(1, CAP))
def test_crystal_axioms(t, i):
    n = len(t.weight(RANK))
    f = crystal_f(i, t, RANK)
    if f is not None:
        assert crystal_e(i, f, RANK) == t
        assert tuple(a - b for a, b in zip(t.weight(RANK), f.weight(RANK))) == alpha(i, n)
        assert energy(f) == energy(t)
    e = crystal_e(i, t, RANK)
    if e is not None:
        assert crystal_f(i, e, RANK) == t
        assert tuple(a - b for a, b in zip(e.weight(RANK), t.weight(RANK))) == alpha(i, n)
        assert energy(e) == energy(t)


@settings(max_examples=200, deadline=None)
@given(tensors)
def test_highest_means_partition_prefixes(t):
    # highest weight <=> every prefix of the word has partition column lengths
    ok = True
    cur = [0] * CAP
    for x in t.word:
        cur[abs(x) - 1] += 1 if x > 0 else -1
        if any(cur[k] < cur[k + 1] for k in range(CAP - 1)) or cur[-1] < 0:
            ok = False
    assert is_classical_highest(t, RANK) == ok


def test_inert_top_operator_and_unsupported():
    t = BoxTensor.from_word([1, 2])
    assert crystal_e(3, t, 3) is None and crystal_f(3, t, 3) is None
    with pytest.raises(UnsupportedRegion):
        crystal_f(2, t, 2)
    with pytest.raises(ParameterError):
        is_classical_highest(t, 2)


def test_example_elements():
    found = enumerate_highest(3, (1, 0, 0), 3)
    got = {str(t): (energy(t), t.max_index) for t in found}
    assert got == {"1̅ ⊗ 1 ⊗ 1": (2, 1), "1 ⊗ 1̅ ⊗ 1": (4, 1), "2̅ ⊗ 2 ⊗ 1": (3, 2)}
    # 112 is a lattice word: 2 x 1 x 1 is highest
    assert is_classical_highest(BoxTensor.parse("2 x 1 x 1"), 3)
    assert not is_classical_highest(BoxTensor.parse("1 x 1 x 2"), 3)


@pytest.mark.parametrize("n,cap", [(2, 2), (3, 2), (4, 2)])
def test_enumerate_highest_matches_filter(n, cap):
    for weight in [(0, 0), (1, 0), (2, 0), (1, 1), (2, 1)]:
        want = {t for t in iter_tensors(n, cap) if t.weight(cap) == weight and is_classical_highest(t, cap + 1)}
        assert set(enumerate_highest(n, weight, cap)) == want


def test_energy_negative_control():
    # the non-strict local energy does not reproduce the worked example
    found = enumerate_highest(3, (1, 0, 0), 3)
    assert sorted(energy(t, strict=False) for t in found) != [2, 3, 4]
