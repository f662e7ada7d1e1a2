import pytest
from hypothesis import given, strategies as st

from qweight.poly import ONE, Q, ZERO, QPolynomial

coeffs = st.lists(st.integers(-5, 5), max_size=6)


def test_trailing_zeros_trimmed():
    assert QPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPolynomial([0, 0]) == ZERO


def test_str_and_json():
    p = QPolynomial([0, 0, 1, 0, 1])
    assert str(p) == "q^2 + q^4"
    assert str(QPolynomial([1, -2])) == "1 - 2*q"
    assert p.to_json() == {"coeffs": [0, 0, 1, 0, 1]}
    assert QPolynomial.from_json(p.to_json()) == p


def test_shift_and_truncate():
    p = Q * Q + 3
    assert p.shift(1) == QPolynomial([0, 3, 0, 1])
    assert p.truncate(1) == QPolynomial([3])
    assert Q.shift(-1) == ONE
    with pytest.raises(ValueError):
        ONE.shift(-1)


def test_eval_and_sign():
    p = QPolynomial([1, 1, 1])
    assert p(1) == 3 and p(2) == 7
    assert p.is_nonnegative()
    assert not (p - Q * 2).is_nonnegative()


@given(coeffs, coeffs, coeffs)
def test_ring_axioms(a, b, c):
    a, b, c = QPolynomial(a), QPolynomial(b), QPolynomial(c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == ZERO
    assert hash(a * ONE) == hash(a)


@given(coeffs, st.integers(-3, 3))
def test_evaluation_is_homomorphism(a, x):
    p = QPolynomial(a)
    assert (p * p)(x) == p(x) ** 2
    assert (p + 1)(x) == p(x) + 1
