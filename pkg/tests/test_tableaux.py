import pytest

from qweight.crystal import energy, enumerate_highest
from qweight.kostant import kl_poly
from qweight.poly import ONE, QPolynomial
from qweight.roots import ParameterError, Partition, partitions_of
from qweight.tableaux import charge, is_semistandard, kostka_foulkes, reading_word, ssyt, tensor_to_tableau


def q_int(k):
    return QPolynomial([1] * k)


def hook_formula(lam):
    """K_{lam, 1^n}(q) = q^{n(lam')} [n]_q! / prod_cells [hook]_q."""
    lam = Partition(lam)
    n = lam.size
    num = ONE
    for k in range(1, n + 1):
        num = num * q_int(k)
    den = ONE
    conj = lam.transpose()
    for i, row in enumerate(lam.parts):
        for j in range(row):
            den = den * q_int(row - j - 1 + conj.part(j) - i - 1 + 1)
    # exact division of integer polynomials with constant term 1
    quo = []
    rest = list(num.coeffs)
    d = den.coeffs
    for k in range(len(rest) - len(d) + 1):
        c = rest[k]
        quo.append(c)
        for m, x in enumerate(d):
            rest[k + m] -= c * x
    assert not any(rest)
    shift = sum(i * p for i, p in enumerate(conj.parts))
    return QPolynomial(quo).shift(shift)


def test_charge_small_words():
    assert charge([1]) == 0
    # reading words of the one-row and one-column tableaux
    assert charge([1, 2]) == 1
    assert charge([2, 1]) == 0
    assert charge([2, 1, 1]) == 0
    assert charge([1, 1, 2]) == 1
    with pytest.raises(ParameterError):
        charge([2, 2, 1])


def test_ssyt_counts():
    # Kostka numbers K_{(2,1),(1,1,1)} = 2 and K_{(3,2),(2,2,1)} = 2
    assert len(list(ssyt((2, 1), (1, 1, 1)))) == 2
    assert len(list(ssyt((3, 2), (2, 2, 1)))) == 2
    assert all(is_semistandard(T) for T in ssyt((3, 2, 1), (2, 2, 1, 1)))
    assert reading_word(((1, 1), (2,))) == (2, 1, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_foulkes_standard_content(n):
    for lam in partitions_of(n):
        assert kostka_foulkes(lam, (1,) * n) == hook_formula(lam), lam


def test_kostka_foulkes_basics():
    assert kostka_foulkes((2, 1), (1, 1, 1)) == QPolynomial([0, 1, 1])
    for m in range(1, 6):
        for lam in partitions_of(m):
            assert kostka_foulkes(lam, lam) == ONE
    assert kostka_foulkes((1, 1), (2,)).is_zero()
    assert kostka_foulkes((2,), (1,)).is_zero()


@pytest.mark.parametrize("n", range(1, 5))
def test_type_a_kl_is_kostka_foulkes(n):
    for m in range(0, 7):
        parts = list(partitions_of(m, max_length=n))
        for lam in parts:
            for mu in parts:
                assert kl_poly("A", n, lam, mu) == kostka_foulkes(lam, mu), (lam, mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_energy_is_charge(n):
    for shape in partitions_of(n):
        for t in enumerate_highest(n, shape.padded(n), n, positive_only=True):
            T = tensor_to_tableau(t)
            assert energy(t) == charge(reading_word(T))


def test_tensor_to_tableau_shape():
    from qweight.crystal import BoxTensor
    t = BoxTensor.from_word([1, 1, 2])
    # recording rows (1,2) and (3,); transposed
    assert tensor_to_tableau(t) == ((1, 3), (2,))
    with pytest.raises(ParameterError):
        tensor_to_tableau(BoxTensor.from_word([1, -1]))
