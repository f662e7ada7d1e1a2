"""Dense integer polynomials in a single variable ``q``."""

from __future__ import annotations

from typing import Iterable, Mapping


class QPolynomial:
    """Immutable polynomial in ``q`` with Python-int coefficients.

    Coefficients are stored densely from exponent 0 with trailing zeros
    stripped, so two equal polynomials always have equal ``coeffs``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> QPolynomial:
        if not terms:
            return cls()
        if min(terms) < 0:
            raise ValueError("negative exponent")
        c = [0] * (max(terms) + 1)
        for e, v in terms.items():
            c[e] += v
        return cls(c)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> QPolynomial:
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def terms(self) -> dict[int, int]:
        return {e: v for e, v in enumerate(self._c) if v}

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self._c)

    def __call__(self, q: int) -> int:
        acc = 0
        for v in reversed(self._c):
            acc = acc * q + v
        return acc

    def truncate(self, max_degree: int) -> QPolynomial:
        return QPolynomial(self._c[: max_degree + 1])

    def shift(self, k: int) -> QPolynomial:
        """Multiply by ``q**k``."""
        if k < 0:
            if any(self._c[:-k]):
                raise ValueError("shift would create negative exponents")
            return QPolynomial(self._c[-k:])
        if not self._c:
            return self
        return QPolynomial((0,) * k + self._c)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return QPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-v for v in self._c)

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial(v * other for v in self._c)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if not self._c or not other._c:
            return QPolynomial()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"QPolynomial({list(self._c)})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in enumerate(self._c):
            if not v:
                continue
            if e == 0:
                mono = str(abs(v))
            else:
                base = "q" if e == 1 else f"q^{e}"
                mono = base if abs(v) == 1 else f"{abs(v)}*{base}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        s = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            s += f" {sign} {mono}"
        return s

    def to_json(self) -> dict:
        return {"coeffs": list(self._c)}

    @classmethod
    def from_json(cls, obj) -> QPolynomial:
        if isinstance(obj, dict):
            obj = obj["coeffs"]
        return cls(obj)


ZERO = QPolynomial()
ONE = QPolynomial([1])
Q = QPolynomial([0, 1])
