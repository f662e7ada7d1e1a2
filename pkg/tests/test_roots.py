import pytest
from hypothesis import given, strategies as st

from qweight.roots import (GL_A, STANDARD, LengthFunction, ParameterError, Partition, partitions_in_box,
                           partitions_of, positive_roots, symmetric_group, weyl_group)


def test_partition_normalises_and_validates():
    assert Partition((2, 1, 0, 0)).parts == (2, 1)
    assert Partition.parse("") == Partition()
    assert Partition.parse("2,2,1").size == 5
    with pytest.raises(ParameterError):
        Partition((1, 2))
    with pytest.raises(ParameterError):
        Partition.parse("2,x")
    with pytest.raises(ParameterError):
        Partition((1, -1))


def test_partition_ops():
    lam = Partition((3, 1))
    assert lam.transpose() == Partition((2, 1, 1))
    assert lam.padded(4) == (3, 1, 0, 0)
    assert lam.shifted(2, 3) == Partition((5, 3, 2))
    assert lam.contains(Partition((2, 1)))
    assert not lam.contains(Partition((1, 1, 1)))


@given(st.integers(0, 9))
def test_partition_counts(m):
    ps = list(partitions_of(m))
    assert len(ps) == len(set(ps))
    assert all(p.size == m for p in ps)
    assert all(p.transpose().transpose() == p for p in ps)
    # transposition is a bijection on partitions of m
    assert {p.transpose() for p in ps} == set(ps)


def test_partitions_in_box():
    # binomial(rows + cols, rows)
    assert len(partitions_in_box(3, 2)) == 10
    assert len(partitions_in_box(2, 3)) == 10


@pytest.mark.parametrize("t,n,count", [("A", 3, 3), ("B", 3, 9), ("C", 3, 9), ("D", 3, 6), ("C", 2, 4), ("B", 1, 1)])
def test_positive_root_counts(t, n, count):
    assert len(positive_roots(t, n).positive) == count


@pytest.mark.parametrize("t,n,order", [("A", 3, 6), ("B", 2, 8), ("C", 3, 48), ("D", 3, 24), ("D", 4, 192)])
def test_weyl_group_orders(t, n, order):
    g = list(weyl_group(t, n))
    assert len(g) == order
    assert sum(w.sign for w in g) == 0


@pytest.mark.parametrize("t,n", [("A", 3), ("B", 3), ("C", 3), ("D", 3), ("C", 2), ("D", 4)])
def test_root_system_structure(t, n):
    rs = positive_roots(t, n)
    assert all(rs.height(a) >= 1 for a in rs.positive)
    # rho is half the sum of positive roots
    total = [sum(a[i] for a in rs.positive) for i in range(n)]
    if t == "A":
        # gl_n convention: equal up to adding a constant vector
        assert len({x - y for x, y in zip(rs.rho2, total)}) == 1
    else:
        assert list(rs.rho2) == total
    # rho pairs to 1 with every simple coroot
    for i in range(len(rs.simple_roots)):
        assert sum(x * y for x, y in zip(rs.rho2, rs.simple_coroots[i])) == 2
    assert len(rs.longest_word) == len(rs.positive)
    # every Weyl element permutes the roots up to sign
    roots = set(rs.positive) | {tuple(-x for x in a) for a in rs.positive}
    for w in weyl_group(t, n):
        assert {w.act(a) for a in roots} == roots
        assert w.inverse().act(w.act((1,) * n)) == (1,) * n


def test_sign_is_determinant():
    for w in weyl_group("C", 3):
        m = [[0] * 3 for _ in range(3)]
        for j in range(3):
            e = [0, 0, 0]
            e[j] = 1
            for i, x in enumerate(w.act(e)):
                m[i][j] = x
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        assert det == w.sign
    assert all(w.is_permutation for w in symmetric_group(3))


def test_length_functions():
    rs = positive_roots("C", 2)
    assert [STANDARD(a) for a in rs.positive] == [1] * 4
    assert sorted(GL_A(a) for a in rs.positive) == [0, 0, 0, 1]
    assert LengthFunction.parse("glA") is GL_A
    with pytest.raises(ParameterError):
        LengthFunction.parse("nope")


@pytest.mark.parametrize("t,n", [("E", 3), ("C", 0), ("D", 1)])
def test_bad_root_system(t, n):
    with pytest.raises(ParameterError):
        positive_roots(t, n)
