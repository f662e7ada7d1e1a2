"""Partitions, classical root systems and their Weyl groups.

Weights are integer tuples in the epsilon basis.  Type A_{n-1} is embedded
in rank ``n`` (roots e_i - e_j), so all four families share one ambient
lattice Z^n.  The Weyl group of B/C is the hyperoctahedral group of signed
permutations; D keeps only an even number of sign flips.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

Weight = tuple  # tuple[int, ...]

TYPES = ("A", "B", "C", "D")


class ParameterError(ValueError):
    """Invalid type, rank, partition or other caller-supplied parameter."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            parts = parts.parts
        p = [int(x) for x in parts]
        while p and p[-1] == 0:
            p.pop()
        if any(x < 0 for x in p):
            raise ParameterError(f"negative part in {tuple(p)}")
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ParameterError(f"{tuple(p)} is not weakly decreasing")
        object.__setattr__(self, "parts", tuple(p))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"2,2,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(x) for x in text.split(","))
        except ValueError as exc:
            raise ParameterError(f"malformed partition {text!r}: {exc}") from None

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self):
        return f"Partition({self.parts})"

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def columns(self) -> int:
        """Number of columns of the Young diagram (the first part)."""
        return self.parts[0] if self.parts else 0

    def part(self, i: int) -> int:
        """0-indexed part, zero beyond the length."""
        return self.parts[i] if i < len(self.parts) else 0

    def transpose(self) -> Partition:
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def contains(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self.parts, other.parts))

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self.parts) > n:
            raise ParameterError(f"{self} has more than {n} parts")
        return self.parts + (0,) * (n - len(self.parts))

    def shifted(self, k: int, n: int) -> Partition:
        """Add ``k`` to each of the first ``n`` coordinates."""
        return Partition(x + k for x in self.padded(n))


def partitions_of(m: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """Partitions of ``m`` in reverse lexicographic order."""
    if max_part is None:
        max_part = m

    def rec(rest, cap, length):
        if rest == 0:
            yield ()
            return
        if max_length is not None and length >= max_length:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, length + 1):
                yield (first,) + tail

    for p in rec(m, max_part, 0):
        yield Partition(p)


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions fitting inside ``rows`` x ``cols``, sorted."""
    out = []
    for p in itertools.combinations_with_replacement(range(cols + 1), rows):
        out.append(Partition(sorted(p, reverse=True)))
    return sorted(set(out))


@dataclass(frozen=True)
class LengthFunction:
    """Integer q-exponent attached to each positive root."""

    name: str
    func: Callable[[Weight], int] = field(compare=False, hash=False)

    def __call__(self, root: Weight) -> int:
        v = self.func(root)
        if v < 0 or int(v) != v:
            raise ParameterError(f"length function {self.name} gave {v!r} on {root}")
        return int(v)

    @classmethod
    def parse(cls, name: str) -> LengthFunction:
        key = name.strip().lower().replace("_", "")
        if key in ("standard", "std"):
            return STANDARD
        if key in ("gla", "gl", "gln"):
            return GL_A
        raise ParameterError(f"unknown length function {name!r}")


def is_type_a_root(root: Weight) -> bool:
    """True for e_i - e_j with i < j."""
    nz = [x for x in root if x]
    return len(nz) == 2 and sorted(nz) == [-1, 1] and root.index(1) < root.index(-1)


STANDARD = LengthFunction("standard", lambda root: 1)
GL_A = LengthFunction("glA", lambda root: 1 if is_type_a_root(root) else 0)


def _unit(n, i, c=1):
    v = [0] * n
    v[i] = c
    return v


@dataclass(frozen=True)
class RootSystem:
    type: str
    rank: int
    positive: tuple[Weight, ...]
    rho2: Weight  # twice rho; rho itself is half-integral for type B

    @property
    def rho(self) -> tuple:
        if all(x % 2 == 0 for x in self.rho2):
            return tuple(x // 2 for x in self.rho2)
        return tuple(Fraction(x, 2) for x in self.rho2)

    @cached_property
    def height_vector(self) -> Weight:
        """Strictly dominant integer functional (n, n-1, ..., 1).

        Positive on every positive root of every family, with value >= 1.
        """
        return tuple(range(self.rank, 0, -1))

    def height(self, v: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.height_vector, v))

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        n, t = self.rank, self.type
        out = []
        for i in range(n - 1):
            v = [0] * n
            v[i], v[i + 1] = 1, -1
            out.append(tuple(v))
        if t == "B":
            out.append(tuple(_unit(n, n - 1)))
        elif t == "C":
            out.append(tuple(_unit(n, n - 1, 2)))
        elif t == "D":
            v = [0] * n
            v[n - 2] = v[n - 1] = 1
            out.append(tuple(v))
        return tuple(out)

    @cached_property
    def simple_coroots(self) -> tuple[Weight, ...]:
        out = []
        for a in self.simple_roots:
            norm = sum(x * x for x in a)
            out.append(tuple(2 * x // norm for x in a))
        return tuple(out)

    def pair(self, v: Sequence[int], i: int) -> int:
        """<v, alpha_i^vee> for the i-th simple coroot (0-indexed)."""
        return sum(a * b for a, b in zip(v, self.simple_coroots[i]))

    def reflect(self, v: Sequence[int], i: int) -> Weight:
        m = self.pair(v, i)
        return tuple(x - m * a for x, a in zip(v, self.simple_roots[i]))

    def is_dominant(self, v: Sequence[int]) -> bool:
        return all(self.pair(v, i) >= 0 for i in range(len(self.simple_roots)))

    @cached_property
    def longest_word(self) -> tuple[int, ...]:
        """A reduced word for w0 (0-indexed simple reflections).

        Reflects the strictly dominant height vector through any simple
        wall it is still on the positive side of; every step raises the
        length by one and the walk ends at w0 applied to that vector.
        """
        x = self.height_vector
        word = []
        while True:
            for i in range(len(self.simple_roots)):
                if self.pair(x, i) > 0:
                    x = self.reflect(x, i)
                    word.append(i)
                    break
            else:
                break
        assert len(word) == len(self.positive), "word for w0 is not reduced"
        return tuple(reversed(word))

    def weyl_group(self) -> Iterator[GroupElement]:
        return weyl_group(self.type, self.rank)


def _check(type_: str, rank: int) -> str:
    t = str(type_).upper()
    if t not in TYPES:
        raise ParameterError(f"unsupported root type {type_!r}")
    if not isinstance(rank, int) or rank < 1:
        raise ParameterError(f"rank must be a positive integer, got {rank!r}")
    if t == "D" and rank < 2:
        raise ParameterError("type D needs rank >= 2")
    return t


_ROOT_CACHE: dict = {}


def positive_roots(type_: str, rank: int) -> RootSystem:
    t = _check(type_, rank)
    key = (t, rank)
    if key in _ROOT_CACHE:
        return _ROOT_CACHE[key]
    n = rank
    keyed = []
    for i in range(n):
        if t == "B":
            keyed.append(((i, i, 0), tuple(_unit(n, i))))
        elif t == "C":
            keyed.append(((i, i, 0), tuple(_unit(n, i, 2))))
        for j in range(i + 1, n):
            minus = [0] * n
            minus[i], minus[j] = 1, -1
            keyed.append(((i, j, 0), tuple(minus)))
            if t != "A":
                plus = [0] * n
                plus[i] = plus[j] = 1
                keyed.append(((i, j, 1), tuple(plus)))
    keyed.sort()
    roots = tuple(r for _, r in keyed)
    rho2 = tuple(sum(r[k] for r in roots) for k in range(n))
    if t == "A":
        # the half-sum is (n-1)/2 - k; shift to (n-1, ..., 0)
        rho2 = tuple(2 * (n - 1 - k) for k in range(n))
    rs = RootSystem(t, n, roots, rho2)
    _ROOT_CACHE[key] = rs
    return rs


@dataclass(frozen=True)
class GroupElement:
    """Signed permutation: ``(w.v)[perm[j]] = signs[perm[j]] * v[j]``."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @cached_property
    def sign(self) -> int:
        """Determinant of the signed permutation matrix, i.e. (-1)^length."""
        s = 1
        seen = [False] * len(self.perm)
        for start in range(len(self.perm)):
            if seen[start]:
                continue
            j, cyc = start, 0
            while not seen[j]:
                seen[j] = True
                j = self.perm[j]
                cyc += 1
            if cyc % 2 == 0:
                s = -s
        for x in self.signs:
            s *= x
        return s

    @property
    def is_permutation(self) -> bool:
        return all(x == 1 for x in self.signs)

    def act(self, v: Sequence) -> tuple:
        out = [0] * len(v)
        for j, x in enumerate(v):
            i = self.perm[j]
            out[i] = self.signs[i] * x
        return tuple(out)

    def inverse(self) -> GroupElement:
        n = len(self.perm)
        inv = [0] * n
        for j, i in enumerate(self.perm):
            inv[i] = j
        signs = [0] * n
        for j, i in enumerate(self.perm):
            signs[j] = self.signs[i]
        return GroupElement(tuple(inv), tuple(signs))


def weyl_group(type_: str, rank: int) -> Iterator[GroupElement]:
    """Each Weyl group element exactly once, deterministic order."""
    t = _check(type_, rank)
    n = rank
    if t == "A":
        sign_vectors = [(1,) * n]
    else:
        sign_vectors = [s for s in itertools.product((1, -1), repeat=n)
                        if t != "D" or s.count(-1) % 2 == 0]
    for perm in itertools.permutations(range(n)):
        for s in sign_vectors:
            yield GroupElement(perm, s)


def symmetric_group(rank: int) -> Iterator[GroupElement]:
    for perm in itertools.permutations(range(rank)):
        yield GroupElement(perm, (1,) * rank)


def dominant_weights(rs: RootSystem, max_height: int) -> list[Weight]:
    """Dominant integral weights ``v`` with ``height(v) <= max_height``.

    For B and C these are partitions, for A partitions as well (the
    caller filters by size), for D the last coordinate may be negative.
    """
    n = rs.rank
    out = []
    for m in range(0, max_height + 1):
        for p in partitions_of(m, max_length=n):
            v = p.padded(n)
            if rs.height(v) > max_height:
                continue
            out.append(v)
            if rs.type == "D" and v[-1] > 0:
                out.append(v[:-1] + (-v[-1],))
    return sorted(set(out))
