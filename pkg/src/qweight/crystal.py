"""Single-box tensors of the type B letter crystal.

A letter is a signed integer: ``i`` for the unbarred letter and ``-i`` for
its barred partner.  The zero letter of the vector representation is never
stored.  Letters are ordered

    1 < 2 < ... < G < -G < ... < -1

A :class:`BoxTensor` keeps its factors in display order
``a_n (x) ... (x) a_1``; ``a_1`` is the rightmost factor and the *word*
of the tensor is ``a_1 a_2 ... a_n``.  Raising and lowering operators use
the bracket rule on that word: letters an ``f_i`` can act on open a
bracket, letters an ``e_i`` can act on close one, and only unmatched
brackets count.  With this reading the highest-weight words are exactly
the words whose prefixes keep the column-length vector a partition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .roots import ParameterError


class UnsupportedRegion(RuntimeError):
    """Operator would pass through the zero letter, which is not modelled."""


def letter_key(x: int) -> tuple[int, int]:
    """Sort key realising 1 < 2 < ... < -2 < -1."""
    if x == 0:
        raise ParameterError("the zero letter is not supported")
    return (0, x) if x > 0 else (1, x)


def letter_str(x: int) -> str:
    return str(x) if x > 0 else f"{-x}̅"


def parse_letter(text: str) -> int:
    text = text.strip()
    if text.endswith("̅"):
        return -int(text[:-1])
    if text.startswith("~"):
        return -int(text[1:])
    x = int(text)
    if x == 0:
        raise ParameterError("the zero letter is not supported")
    return x


@dataclass(frozen=True)
class BoxTensor:
    letters: tuple[int, ...]  # (a_n, ..., a_1)

    def __post_init__(self):
        if any(x == 0 for x in self.letters):
            raise ParameterError("the zero letter is not supported")

    @classmethod
    def from_word(cls, word: Iterable[int]) -> BoxTensor:
        """Build from ``a_1, a_2, ..., a_n`` (rightmost factor first)."""
        return cls(tuple(reversed(tuple(word))))

    @classmethod
    def parse(cls, text: str) -> BoxTensor:
        """Parse ``"-1 x 1 x 1"`` or ``"~1⊗1⊗1"`` in display order."""
        if not text.strip():
            return cls(())
        parts = text.replace("⊗", "x").split("x")
        return cls(tuple(parse_letter(p) for p in parts))

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(reversed(self.letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ⊗ ".join(letter_str(x) for x in self.letters) if self.letters else "()"

    @property
    def max_index(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    def weight(self, length: int | None = None) -> tuple[int, ...]:
        """Coordinate i counts unbarred i minus barred i."""
        if length is None:
            length = self.max_index
        v = [0] * length
        for x in self.letters:
            if abs(x) > length:
                raise ParameterError(f"letter {letter_str(x)} outside weight length {length}")
            v[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(v)

    def to_json(self) -> list[int]:
        return list(self.word)

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)


def _brackets(word: Sequence[int], i: int):
    """Unmatched closing and opening positions for operator index ``i``."""
    closing, opening = [], []
    for pos, x in enumerate(word):
        if x == i or x == -(i + 1):
            opening.append(pos)
        elif x == i + 1 or x == -i:
            if opening:
                opening.pop()
            else:
                closing.append(pos)
    return closing, opening


def _check_op(i: int, t: BoxTensor, rank: int) -> bool:
    """True when the operator is inert (i = rank, no letter near the zero letter)."""
    if not 1 <= i <= rank:
        raise ParameterError(f"operator index {i} outside 1..{rank}")
    if t.max_index > rank:
        raise ParameterError(f"letter index {t.max_index} exceeds rank {rank}")
    if i == rank:
        if any(abs(x) == rank for x in t.letters):
            raise UnsupportedRegion(f"e/f_{rank} would involve the zero letter")
        return True
    return False


def crystal_e(i: int, t: BoxTensor, rank: int) -> BoxTensor | None:
    if _check_op(i, t, rank):
        return None
    word = list(t.word)
    closing, _ = _brackets(word, i)
    if not closing:
        return None
    pos = closing[-1]
    word[pos] = i if word[pos] == i + 1 else -(i + 1)
    return BoxTensor.from_word(word)


def crystal_f(i: int, t: BoxTensor, rank: int) -> BoxTensor | None:
    if _check_op(i, t, rank):
        return None
    word = list(t.word)
    _, opening = _brackets(word, i)
    if not opening:
        return None
    pos = opening[0]
    word[pos] = i + 1 if word[pos] == i else -i
    return BoxTensor.from_word(word)


def is_classical_highest(t: BoxTensor, rank: int) -> bool:
    if rank < t.max_index + 1:
        raise ParameterError(f"rank {rank} must exceed the largest letter index {t.max_index}")
    return all(crystal_e(i, t, rank) is None for i in range(1, rank + 1))


def local_H(b: int, a: int, strict: bool = True) -> int:
    """Local energy of the pair ``b (x) a``.

    ``strict=False`` gives the variant where equal letters score 1; it is
    kept only as a negative control.
    """
    if b == -1 and a == 1:
        return 2
    kb, ka = letter_key(b), letter_key(a)
    if kb > ka or (not strict and kb == ka):
        return 1
    return 0


def energy(t: BoxTensor, strict: bool = True) -> int:
    """sum_{i=1}^{n-1} (n - i) H(a_{i+1}, a_i)."""
    a = t.word
    n = len(a)
    return sum((n - i) * local_H(a[i], a[i - 1], strict) for i in range(1, n))


def _letters(cap: int, positive_only: bool) -> list[int]:
    pos = list(range(1, cap + 1))
    return pos if positive_only else pos + [-x for x in range(cap, 0, -1)]


def iter_tensors(n: int, cap: int, positive_only: bool = False) -> Iterator[BoxTensor]:
    for word in itertools.product(_letters(cap, positive_only), repeat=n):
        yield BoxTensor.from_word(word)


def enumerate_highest(n: int, target_weight: Sequence[int], letter_cap: int,
                      positive_only: bool = False) -> list[BoxTensor]:
    """Classical highest-weight box tensors of length ``n`` and given weight.

    Searches every word over letters of index <= ``letter_cap`` (pruning
    only on whether the weight is still reachable) and keeps those killed
    by all raising operators of rank ``letter_cap + 1``.
    """
    target = tuple(target_weight)
    if any(target[letter_cap:]):
        return []
    target = (target + (0,) * letter_cap)[:letter_cap]
    letters = _letters(letter_cap, positive_only)
    rank = letter_cap + 1
    found = []

    def rec(word, cur):
        left = n - len(word)
        gap = sum(abs(x - y) for x, y in zip(target, cur))
        if gap > left or (left - gap) % 2:
            return
        if not left:
            t = BoxTensor.from_word(word)
            if is_classical_highest(t, rank):
                found.append(t)
            return
        for x in letters:
            k = abs(x) - 1
            nxt = list(cur)
            nxt[k] += 1 if x > 0 else -1
            word.append(x)
            rec(word, nxt)
            word.pop()

    rec([], [0] * letter_cap)
    return sorted(found, key=lambda t: tuple(letter_key(x) for x in t.word))
