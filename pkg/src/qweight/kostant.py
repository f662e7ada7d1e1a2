"""q-analogue of Kostant's partition function and Lusztig's q-weight multiplicities.

The multiplicity is computed as the alternating sum

    KL(lam, mu; q) = sum_w sign(w) * P_q(w(lam + rho) - mu - rho)

over the Weyl group (or over S_n for the stable version), where
``P_q(beta)`` sums ``q**(sum c_a L(a))`` over all ways of writing ``beta``
as a nonnegative integer combination of positive roots.
"""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

from .poly import ZERO, QPolynomial
from .roots import (
    GL_A,
    STANDARD,
    LengthFunction,
    ParameterError,
    Partition,
    RootSystem,
    positive_roots,
    symmetric_group,
    weyl_group,
)

__all__ = [
    "QKostant",
    "q_kostant",
    "kl_poly",
    "stable_kl_poly",
    "rect_complement",
    "mu_norm",
    "STANDARD",
    "GL_A",
]


class QKostant:
    """Memoized q-Kostant partition function for one (root system, L) pair.

    Roots are consumed in the fixed order of ``rs.positive``; the cache key
    is ``(beta, index of the first unused root)``.  Before recursing, each
    coordinate is checked against the sign pattern of the roots still
    available, which kills most unreachable states immediately.
    """

    def __init__(self, rs: RootSystem, L: LengthFunction = STANDARD):
        self.rs = rs
        self.L = L
        self.roots = rs.positive
        self.lengths = tuple(L(a) for a in self.roots)
        self.heights = tuple(rs.height(a) for a in self.roots)
        n, N = rs.rank, len(self.roots)
        # sign constraint per coordinate for the suffix roots[k:]
        #   0: coordinate must be zero, 1: >= 0, -1: <= 0, None: free
        self._constraints = []
        for k in range(N + 1):
            cons = []
            for c in range(n):
                vals = {a[c] for a in self.roots[k:]}
                if vals <= {0}:
                    cons.append((c, 0))
                elif min(vals) >= 0:
                    cons.append((c, 1))
                elif max(vals) <= 0:
                    cons.append((c, -1))
            self._constraints.append(tuple(cons))
        self._memo: dict = {}
        self._lock = threading.Lock()
        self.evaluations = 0

    def _feasible(self, beta, k) -> bool:
        for c, kind in self._constraints[k]:
            x = beta[c]
            if kind == 0:
                if x:
                    return False
            elif kind == 1:
                if x < 0:
                    return False
            elif x > 0:
                return False
        return True

    def _rec(self, beta: tuple, k: int) -> tuple:
        key = (beta, k)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if k == len(self.roots):
            res = (1,) if not any(beta) else ()
        else:
            res = self._sum(beta, k)
        with self._lock:
            self._memo.setdefault(key, res)
        return res

    def _sum(self, beta, k):
        alpha, L, h = self.roots[k], self.lengths[k], self.heights[k]
        acc: list[int] = []
        cur = beta
        c = 0
        hb = self.rs.height(beta)
        while hb >= 0:
            if self._feasible(cur, k + 1):
                sub = self._rec(cur, k + 1)
                if sub:
                    off = c * L
                    need = off + len(sub)
                    if len(acc) < need:
                        acc.extend([0] * (need - len(acc)))
                    for e, v in enumerate(sub):
                        acc[off + e] += v
            cur = tuple(x - a for x, a in zip(cur, alpha))
            hb -= h
            c += 1
        while acc and acc[-1] == 0:
            acc.pop()
        return tuple(acc)

    def __call__(self, beta: Sequence[int]) -> QPolynomial:
        beta = tuple(int(x) for x in beta)
        if len(beta) != self.rs.rank:
            raise ParameterError(f"weight {beta} has wrong length for rank {self.rs.rank}")
        self.evaluations += 1
        if self.rs.height(beta) < 0 or not self._feasible(beta, 0):
            return ZERO
        return QPolynomial(self._rec(beta, 0))


_ENGINES: dict = {}
_ENGINES_LOCK = threading.Lock()


def engine(rs: RootSystem, L: LengthFunction = STANDARD) -> QKostant:
    key = (rs.type, rs.rank, L.name)
    eng = _ENGINES.get(key)
    if eng is None:
        with _ENGINES_LOCK:
            eng = _ENGINES.setdefault(key, QKostant(rs, L))
    return eng


def q_kostant(beta: Sequence[int], roots: RootSystem, L: LengthFunction = STANDARD) -> QPolynomial:
    return engine(roots, L)(beta)


def _as_weight(x, n: int, what: str) -> tuple:
    if isinstance(x, Partition):
        if x.length > n:
            raise ParameterError(f"{what}={x} is longer than rank {n}")
        return x.padded(n)
    v = tuple(int(t) for t in x)
    if len(v) > n:
        raise ParameterError(f"{what}={v} is longer than rank {n}")
    return v + (0,) * (n - len(v))


def _alternating_sum(rs, lam, mu, L, group: Iterable) -> QPolynomial:
    lam = _as_weight(lam, rs.rank, "lambda")
    mu = _as_weight(mu, rs.rank, "mu")
    for v, name in ((lam, "lambda"), (mu, "mu")):
        if not rs.is_dominant(v):
            raise ParameterError(f"{name}={v} is not dominant for {rs.type}{rs.rank}")
    P = engine(rs, L)
    top = tuple(2 * a + r for a, r in zip(lam, rs.rho2))
    shift = tuple(2 * b + r for b, r in zip(mu, rs.rho2))
    total = ZERO
    for w in group:
        twice = tuple(x - y for x, y in zip(w.act(top), shift))
        beta = tuple(x // 2 for x in twice)
        term = P(beta)
        if term:
            total = total + term if w.sign > 0 else total - term
    return total


def kl_poly(type_: str, rank: int, lam, mu, L: LengthFunction = STANDARD) -> QPolynomial:
    """Lusztig q-weight multiplicity deformed by the length function ``L``.

    >>> str(kl_poly("C", 3, Partition((1, 1)), Partition()))
    'q^2 + q^4'
    """
    rs = positive_roots(type_, rank)
    return _alternating_sum(rs, lam, mu, L, weyl_group(rs.type, rank))


def stable_kl_poly(type_: str, rank: int, lam, mu, L: LengthFunction = STANDARD) -> QPolynomial:
    """The alternating sum restricted to the symmetric group inside W."""
    rs = positive_roots(type_, rank)
    return _alternating_sum(rs, lam, mu, L, symmetric_group(rank))


def rect_complement(lam: Partition, g: int, n: int) -> Partition:
    """Complement of ``lam`` in the ``n`` x ``g`` rectangle, rotated by 180 degrees."""
    lam = Partition(lam)
    if g < 0 or lam.length > n or lam.columns > g:
        raise ParameterError(f"{lam} does not fit in the {n}x{g} rectangle")
    p = lam.padded(n)
    return Partition(g - p[n - 1 - i] for i in range(n))


def mu_norm(mu: Partition) -> int:
    """sum_i (i-1) mu_i."""
    return sum(i * x for i, x in enumerate(Partition(mu).parts))


def weight_multiplicity(type_: str, rank: int, lam, mu) -> int:
    """Classical multiplicity of ``mu`` in V(lam), via the q=1 alternating sum."""
    return kl_poly(type_, rank, lam, mu)(1)


def cache_clear() -> None:
    _ENGINES.clear()

