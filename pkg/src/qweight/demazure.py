"""Truncated Demazure-operator evaluation of ``D_{w0}(e^lam * prod 1/(1 - q^L(a) e^a))``.

The expansion is ``sum_nu KL(nu, lam) chi^nu``: the weight fed into the
operator is the lower index of the multiplicity.

The product is expanded with an auxiliary grading ``u`` counting how many
roots were used.  For ``L >= 1`` the q-degree bounds ``u``; when ``L``
vanishes on some root the q-truncated series has infinite coefficients
and a cap on ``u`` is required.  Demazure operators act weight by weight
and never touch either grading, so truncation is exact degree by degree.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable

from .kostant import kl_poly
from .poly import ZERO, QPolynomial
from .roots import STANDARD, LengthFunction, ParameterError, Partition, RootSystem, partitions_in_box, positive_roots

DEFAULT_QMAX = 8


class FormalCharacter:
    """Finite map weight -> QPolynomial, truncated above q-degree ``qmax``."""

    def __init__(self, terms=None, qmax: int = DEFAULT_QMAX):
        self.qmax = qmax
        self.terms: dict[tuple, QPolynomial] = {}
        for wt, p in (terms or {}).items():
            self.add(wt, p)

    def add(self, weight, poly: QPolynomial) -> None:
        poly = QPolynomial(poly.coeffs[: self.qmax + 1])
        if not poly:
            return
        weight = tuple(weight)
        new = self.terms.get(weight, ZERO) + poly
        if new:
            self.terms[weight] = new
        else:
            self.terms.pop(weight, None)

    def add_scaled(self, other: FormalCharacter, coeff: QPolynomial) -> None:
        for wt, p in other.terms.items():
            self.add(wt, p * coeff)

    def __getitem__(self, weight) -> QPolynomial:
        return self.terms.get(tuple(weight), ZERO)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.qmax == other.qmax and self.terms == other.terms

    def __sub__(self, other: FormalCharacter) -> FormalCharacter:
        out = FormalCharacter(self.terms, min(self.qmax, other.qmax))
        for wt, p in other.terms.items():
            out.add(wt, -p)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"FormalCharacter({len(self.terms)} weights, qmax={self.qmax})"


def demazure_monomial(rs: RootSystem, i: int, weight: tuple) -> list[tuple[tuple, int]]:
    """``D_i e^weight`` as a list of (weight, coefficient)."""
    m = rs.pair(weight, i)
    alpha = rs.simple_roots[i]
    if m >= 0:
        ks, sign = range(0, -m - 1, -1), 1
    elif m == -1:
        return []
    else:
        ks, sign = range(1, -m), -1
    return [(tuple(x + k * a for x, a in zip(weight, alpha)), sign) for k in ks]


def _apply_word(rs: RootSystem, graded: dict, word: Iterable[int]) -> dict:
    # graded: weight -> {grade: coeff}
    for i in reversed(tuple(word)):
        out: dict = defaultdict(lambda: defaultdict(int))
        for wt, gr in graded.items():
            for nw, s in demazure_monomial(rs, i, wt):
                bucket = out[nw]
                for g, c in gr.items():
                    bucket[g] += s * c
        graded = {}
        for wt, gr in out.items():
            gr = {g: c for g, c in gr.items() if c}
            if gr:
                graded[wt] = gr
    return graded


def weyl_character(type_: str, rank: int, lam) -> dict[tuple, int]:
    """``chi^lam = D_{w0} e^lam`` as weight -> multiplicity."""
    rs = positive_roots(type_, rank)
    lam = Partition(lam).padded(rank) if not isinstance(lam, tuple) else lam
    graded = _apply_word(rs, {tuple(lam): {0: 1}}, rs.longest_word)
    return {wt: gr[0] for wt, gr in graded.items()}


def _expand_product(rs: RootSystem, lam: tuple, L: LengthFunction, qmax: int, umax: int) -> dict:
    """e^lam * prod_a sum_c q^{c L(a)} u^c e^{c a}, truncated at q <= qmax, u <= umax."""
    cur = {lam: {(0, 0): 1}}
    for a in rs.positive:
        La = L(a)
        nxt: dict = defaultdict(lambda: defaultdict(int))
        for wt, gr in cur.items():
            for (qd, ud), c in gr.items():
                k = 0
                w = wt
                while qd + k * La <= qmax and ud + k <= umax:
                    nxt[w][(qd + k * La, ud + k)] += c
                    w = tuple(x + y for x, y in zip(w, a))
                    k += 1
        cur = {wt: dict(gr) for wt, gr in nxt.items()}
    return cur


def _root_cap(rs: RootSystem, L: LengthFunction, qmax: int, umax: int | None) -> int:
    min_len = min(L(a) for a in rs.positive)
    if min_len >= 1:
        cap = qmax // min_len
        return cap if umax is None else min(cap, umax)
    if umax is None:
        raise ParameterError(
            f"length function {L.name} vanishes on some roots; the q-truncated "
            "series is infinite, pass a root-count cap umax")
    return umax


def demazure_kl_check(type_: str, rank: int, lam, L: LengthFunction = STANDARD,
                      qmax: int = DEFAULT_QMAX, umax: int | None = None) -> FormalCharacter:
    """``D_{w0}(e^lam prod 1/(1 - q^L(a) e^a))`` truncated at q-degree ``qmax``.

    The result expands as ``sum_nu KL(nu, lam) chi^nu`` with ``lam`` as the
    *lower* index.  When ``L`` is zero on some root the q-truncated series
    has infinite coefficients, so a cap ``umax`` on the number of roots
    used must be given; otherwise the cap is implied by ``qmax``.
    """
    if qmax < 0:
        raise ParameterError("qmax must be >= 0")
    rs = positive_roots(type_, rank)
    lam = Partition(lam).padded(rank)
    cap = _root_cap(rs, L, qmax, umax)
    series = _expand_product(rs, lam, L, qmax, cap)
    bound = max(lam, default=0) + cap * max(max(abs(x) for x in a) for a in rs.positive)
    assert all(max(map(abs, wt)) <= bound for wt in series)
    word = rs.longest_word
    assert len(word) == len(rs.positive)
    graded = _apply_word(rs, series, word)
    fc = FormalCharacter(qmax=qmax)
    for wt, gr in graded.items():
        assert max(map(abs, wt)) <= bound, "weight escaped the support bound"
        terms: dict[int, int] = defaultdict(int)
        for (qd, _), c in gr.items():
            terms[qd] += c
        fc.add(wt, QPolynomial.from_dict(terms))
    return fc


def _root_graded(L: LengthFunction, M: int) -> LengthFunction:
    # q^a u^b  <->  t^(a + M b); decoding is unique while a < M
    return LengthFunction(f"{L.name}+{M}u", lambda a: L(a) + M)


def _candidates(rs: RootSystem, lam: tuple, cap: int) -> list[tuple]:
    """Dominant ``nu`` whose alternating sum can use at most ``cap`` roots."""
    reach = cap * max(max(abs(x) for x in a) for a in rs.positive)
    top = max(lam, default=0) + reach
    n = rs.rank
    if rs.type == "A":
        # gl_n weights above lam may go negative; the coordinate sum is fixed
        out = []
        for p in partitions_in_box(n, 2 * top):
            v = tuple(x - top for x in p.padded(n))
            if sum(v) == sum(lam):
                out.append(v)
        return sorted(out)
    out = []
    for p in partitions_in_box(n, top):
        v = p.padded(n)
        out.append(v)
        if rs.type == "D" and v[-1] > 0:
            out.append(v[:-1] + (-v[-1],))
    return sorted(out)


def kl_character_sum(type_: str, rank: int, lam, L: LengthFunction = STANDARD,
                     qmax: int = DEFAULT_QMAX, umax: int | None = None) -> tuple[FormalCharacter, dict]:
    """``sum_nu KL(nu, lam) chi^nu`` truncated like :func:`demazure_kl_check`.

    Returns the character and the table ``nu -> truncated KL(nu, lam)``.
    If ``L`` vanishes somewhere, the KL polynomials are taken root-count
    graded (through an encoded length function) and only decompositions
    with at most ``umax`` roots are kept.
    """
    rs = positive_roots(type_, rank)
    lam_w = Partition(lam).padded(rank)
    cap = _root_cap(rs, L, qmax, umax)
    graded = min(L(a) for a in rs.positive) == 0
    if graded:
        M = cap * max(L(a) for a in rs.positive) + 1
        LM = _root_graded(L, M)
    fc = FormalCharacter(qmax=qmax)
    table = {}
    for nu in _candidates(rs, lam_w, cap):
        if graded:
            raw = kl_poly(rs.type, rank, nu, lam_w, LM)
            terms: dict[int, int] = defaultdict(int)
            for e, c in raw.terms().items():
                b, a = divmod(e, M)
                if b <= cap and a <= qmax:
                    terms[a] += c
            p = QPolynomial.from_dict(terms)
        else:
            p = kl_poly(rs.type, rank, nu, lam_w, L).truncate(qmax)
        if not p:
            continue
        table[nu] = p
        for wt, m in weyl_character(rs.type, rank, nu).items():
            fc.add(wt, p * m)
    return fc, table


def character_expansion(fc: FormalCharacter, type_: str, rank: int) -> dict[tuple, QPolynomial]:
    """Peel off irreducible characters, highest dominant weight first."""
    rs = positive_roots(type_, rank)
    rest = FormalCharacter(fc.terms, fc.qmax)
    out = {}
    while not rest.is_zero():
        dom = [wt for wt in rest.terms if rs.is_dominant(wt)]
        if not dom:
            raise ValueError("not a combination of irreducible characters")
        top = max(dom, key=lambda wt: (rs.height(wt), wt))
        c = rest[top]
        out[top] = c
        chi = weyl_character(rs.type, rank, top)
        for wt, m in chi.items():
            rest.add(wt, -(c * m))
    return out
