"""Semistandard tableaux, the charge statistic and Kostka-Foulkes polynomials."""

from __future__ import annotations

from typing import Iterator, Sequence

from .crystal import BoxTensor
from .poly import QPolynomial
from .roots import ParameterError, Partition

Tableau = tuple  # tuple of rows, each a tuple of ints (English notation)


def is_semistandard(T: Tableau) -> bool:
    for r, row in enumerate(T):
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if r and any(T[r - 1][j] >= row[j] for j in range(len(row))):
            return False
    return True


def reading_word(T: Tableau) -> tuple[int, ...]:
    """Rows from bottom to top, each read left to right."""
    return tuple(x for row in reversed(T) for x in row)


def ssyt(shape, content: Sequence[int]) -> Iterator[Tableau]:
    """Semistandard tableaux of ``shape`` with ``content[i]`` copies of ``i + 1``.

    Filled one letter at a time: the cells holding letter k form a
    horizontal strip added to the shape occupied by smaller letters.
    """
    shape = Partition(shape)
    content = tuple(content)
    if sum(content) != shape.size:
        return

    def strips(inner: tuple, k: int):
        # outer with outer/inner a horizontal strip of k cells, inside shape
        rows = len(shape)
        inner = inner + (0,) * (rows - len(inner))

        def rec(r, left, acc):
            if r == rows:
                if left == 0:
                    yield tuple(acc)
                return
            hi = shape.part(r) if r == 0 else min(shape.part(r), inner[r - 1])
            for x in range(inner[r], hi + 1):
                if x - inner[r] <= left:
                    yield from rec(r + 1, left - (x - inner[r]), acc + [x])

        yield from rec(0, k, [])

    def rec(i, inner, fill):
        if i == len(content):
            yield tuple(tuple(row) for row in fill if row)
            return
        for outer in strips(inner, content[i]):
            new = [list(row) for row in fill]
            for r, (a, b) in enumerate(zip(inner + (0,) * len(outer), outer)):
                new[r].extend([i + 1] * (b - a))
            yield from rec(i + 1, outer, new)

    yield from rec(0, (), [[] for _ in range(len(shape))])


def _standard_charge(word: Sequence[int]) -> int:
    pos = {x: p for p, x in enumerate(word)}
    idx = total = 0
    for r in range(2, len(word) + 1):
        if pos[r] > pos[r - 1]:
            idx += 1
        total += idx
    return total


def charge(word: Sequence[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content.

    Standard subwords are extracted by scanning leftward, cyclically, for
    1, 2, 3, ...; the charge is the sum over subwords of the standard
    charge, where the index goes up by one each time the next letter sits
    to the right of the previous one.
    """
    word = list(word)
    counts = [word.count(k) for k in range(1, max(word, default=0) + 1)]
    if any(counts[k] < counts[k + 1] for k in range(len(counts) - 1)):
        raise ParameterError("charge needs partition content")
    alive = [True] * len(word)
    total = 0
    while any(alive):
        picked = []
        p = len(word)
        k = 1
        while True:
            # scan leftward from p - 1, wrapping once
            found = None
            for step in range(1, len(word) + 1):
                j = (p - step) % len(word)
                if alive[j] and word[j] == k:
                    found = j
                    break
            if found is None:
                break
            picked.append(found)
            p = found
            k += 1
        for j in picked:
            alive[j] = False
        sub = [word[j] for j in sorted(picked)]
        total += _standard_charge(sub)
    return total


def kostka_foulkes(lam, mu) -> QPolynomial:
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return QPolynomial()
    terms: dict[int, int] = {}
    for T in ssyt(lam, mu.parts):
        c = charge(reading_word(T))
        terms[c] = terms.get(c, 0) + 1
    return QPolynomial.from_dict(terms)


def tensor_to_tableau(t: BoxTensor) -> Tableau:
    """All-positive highest-weight tensor -> standard tableau.

    Row ``i`` of the recording tableau lists the positions (in the word
    ``a_1 ... a_n``) carrying letter ``i``; that tableau has the tensor
    weight as shape.  Its transpose is returned, whose shape is the
    partition whose column lengths give the weight.
    """
    if not t.is_positive():
        raise ParameterError("tensor has barred letters")
    rows: dict[int, list[int]] = {}
    for p, x in enumerate(t.word, start=1):
        rows.setdefault(x, []).append(p)
    rec = [rows.get(i, []) for i in range(1, max(rows, default=0) + 1)]
    if not rec:
        return ()
    width = len(rec[0])
    return tuple(tuple(row[j] for row in rec if j < len(row)) for j in range(width))
