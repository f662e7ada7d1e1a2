"""Semistandard oscillating tableaux and their images in column tensors.

An oscillating horizontal strip is a triple (alpha, beta, gamma) with
beta/alpha and beta/gamma horizontal strips; its size is
``2|beta| - |alpha| - |gamma|``.  An SSOT chains such strips from the empty
partition: the gamma of one step is the alpha of the next.

Each strip becomes a column holding ``i`` for every cell of beta/alpha in
column ``i`` and ``-i`` (barred) for every cell of beta/gamma in column
``i``.  Step 1 is the rightmost tensor factor.  Because a letter ``i``
lengthens column ``i`` of the running shape and ``-i`` shortens it, the
weight of the image is the vector of column lengths of the final shape,
i.e. its transpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .crystal import BoxTensor, energy, enumerate_highest
from .poly import QPolynomial
from .roots import ParameterError, Partition


class StripError(ValueError):
    """Triple of partitions that is not an oscillating horizontal strip."""


def horizontal_strip_violation(outer: Partition, inner: Partition) -> str | None:
    """Why ``outer/inner`` is not a horizontal strip, or None if it is."""
    if not outer.contains(inner):
        return f"{inner} is not contained in {outer}"
    for r in range(1, outer.length):
        # row r of outer may not reach under a cell of outer/inner in row r-1
        if outer.part(r) > inner.part(r - 1):
            return (f"{outer}/{inner} has two cells in column {inner.part(r - 1) + 1}")
    return None


@dataclass(frozen=True)
class OscHStrip:
    alpha: Partition
    beta: Partition
    gamma: Partition

    @property
    def size(self) -> int:
        return 2 * self.beta.size - self.alpha.size - self.gamma.size

    def to_json(self) -> list[list[int]]:
        return [list(self.alpha.parts), list(self.beta.parts), list(self.gamma.parts)]


def validate_strip(alpha, beta, gamma) -> OscHStrip:
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    for inner, name in ((alpha, "beta/alpha"), (gamma, "beta/gamma")):
        why = horizontal_strip_violation(beta, inner)
        if why:
            raise StripError(f"{name}: {why}")
    return OscHStrip(alpha, beta, gamma)


def _strip_columns(outer: Partition, inner: Partition) -> list[int]:
    return [j + 1 for r in range(outer.length) for j in range(inner.part(r), outer.part(r))]


@dataclass(frozen=True)
class Column:
    unbarred: frozenset
    barred: frozenset

    @property
    def height(self) -> int:
        return len(self.unbarred) + len(self.barred)

    @property
    def max_index(self) -> int:
        return max(self.unbarred | self.barred, default=0)

    def letters(self) -> list[int]:
        """Entries top to bottom: unbarred ascending, then barred descending index."""
        return sorted(self.unbarred) + [-i for i in sorted(self.barred, reverse=True)]

    def to_json(self) -> list[int]:
        return self.letters()


def strip_to_column(s: OscHStrip) -> Column:
    return Column(frozenset(_strip_columns(s.beta, s.alpha)),
                  frozenset(_strip_columns(s.beta, s.gamma)))


@dataclass(frozen=True)
class SSOT:
    steps: tuple[OscHStrip, ...]

    def __post_init__(self):
        prev = Partition()
        for s in self.steps:
            if s.alpha != prev:
                raise StripError(f"step starts at {s.alpha}, expected {prev}")
            prev = s.gamma

    @property
    def shape(self) -> Partition:
        return self.steps[-1].gamma if self.steps else Partition()

    @property
    def weight(self) -> tuple[int, ...]:
        return tuple(s.size for s in self.steps)

    def chain(self) -> list[Partition]:
        """nu^0, nu^1, ..., nu^l."""
        return [Partition()] + [s.gamma for s in self.steps]

    def to_json(self) -> list:
        return [s.to_json() for s in self.steps]

    @classmethod
    def from_json(cls, obj) -> SSOT:
        return cls(tuple(validate_strip(*triple) for triple in obj))

    @classmethod
    def from_chain(cls, chain: Sequence[Sequence[int]]) -> SSOT:
        """From a chain of partitions when every step is a single box."""
        parts = [Partition(p) for p in chain]
        if parts[0] != Partition():
            raise StripError("chain must start at the empty partition")
        steps = []
        for a, g in zip(parts, parts[1:]):
            beta = a if a.contains(g) else g
            steps.append(validate_strip(a, beta, g))
        return cls(tuple(steps))


def epsilon_C(T: SSOT) -> int:
    return max((max(s.beta.columns, s.gamma.columns) for s in T.steps), default=0)


def ssot_to_tensor(T: SSOT) -> list[Column]:
    """Columns in display order; the first step is the rightmost factor."""
    return [strip_to_column(s) for s in reversed(T.steps)]


def as_box_tensor(columns: Sequence[Column]) -> BoxTensor:
    letters = []
    for c in columns:
        if c.height != 1:
            raise ParameterError("not a single-box tensor")
        letters.extend(c.letters())
    return BoxTensor(tuple(letters))


def _grow(alpha: Partition, cap: int) -> Iterator[Partition]:
    """beta containing alpha with beta/alpha a horizontal strip, at most ``cap`` columns."""
    a = alpha.parts + (0,)
    ranges = []
    for r in range(len(a)):
        hi = cap if r == 0 else a[r - 1]
        ranges.append(range(a[r], max(a[r], hi) + 1))

    def rec(r, acc):
        if r == len(ranges):
            yield Partition(acc)
            return
        for x in ranges[r]:
            yield from rec(r + 1, acc + [x])

    if alpha.columns > cap:
        return
    yield from rec(0, [])


def _shrink(beta: Partition) -> Iterator[Partition]:
    """gamma inside beta with beta/gamma a horizontal strip."""
    b = beta.parts

    def rec(r, acc):
        if r == len(b):
            yield Partition(acc)
            return
        lo = b[r + 1] if r + 1 < len(b) else 0
        for x in range(lo, b[r] + 1):
            yield from rec(r + 1, acc + [x])

    yield from rec(0, [])


def strips_from(alpha: Partition, size: int, cap: int) -> Iterator[OscHStrip]:
    for beta in _grow(alpha, cap):
        up = beta.size - alpha.size
        down = size - up
        if down < 0 or down > beta.size:
            continue
        for gamma in _shrink(beta):
            if beta.size - gamma.size == down:
                yield OscHStrip(alpha, beta, gamma)


def ssot_enumerate(shape, weight: Sequence[int], g_cap: int) -> list[SSOT]:
    """All SSOTs of the given final shape and strip sizes with epsilon_C <= g_cap."""
    shape = Partition(shape)
    weight = tuple(int(x) for x in weight)
    if g_cap < 0 or any(x < 0 for x in weight):
        raise ParameterError("g_cap and strip sizes must be nonnegative")
    suffix = [0] * (len(weight) + 1)
    for t in range(len(weight) - 1, -1, -1):
        suffix[t] = suffix[t + 1] + weight[t]
    out = []

    def rec(t, nu, steps):
        if t == len(weight):
            if nu == shape:
                out.append(SSOT(tuple(steps)))
            return
        for s in strips_from(nu, weight[t], g_cap):
            gap = abs(shape.size - s.gamma.size)
            if gap > suffix[t + 1] or (suffix[t + 1] - gap) % 2:
                continue
            steps.append(s)
            rec(t + 1, s.gamma, steps)
            steps.pop()

    if shape.columns <= g_cap:
        rec(0, Partition(), [])
    out.sort(key=lambda T: [(s.beta.parts, s.gamma.parts) for s in T.steps], reverse=True)
    return out


def _box_weight(shape: Partition, cap: int) -> tuple[int, ...]:
    return Partition(shape).transpose().padded(cap)


def x_polynomial_boxcase(shape, n: int, g_cap: int) -> QPolynomial:
    """sum of q^energy over highest-weight box tensors of length ``n``.

    The tensors are those of weight ``shape`` transposed (column lengths)
    with letter indices at most ``g_cap``.
    """
    shape = Partition(shape)
    if shape.columns > g_cap:
        return QPolynomial()
    terms: dict[int, int] = {}
    for t in enumerate_highest(n, _box_weight(shape, g_cap), g_cap):
        e = energy(t)
        terms[e] = terms.get(e, 0) + 1
    return QPolynomial.from_dict(terms)


def x_polynomial_via_ssot(shape, n: int, g_cap: int) -> QPolynomial:
    """Same sum, reached through SSOT enumeration and the strip-to-column map."""
    terms: dict[int, int] = {}
    for T in ssot_enumerate(shape, (1,) * n, g_cap):
        e = energy(as_box_tensor(ssot_to_tensor(T)))
        terms[e] = terms.get(e, 0) + 1
    return QPolynomial.from_dict(terms)


def box_pipelines(shape, n: int, g_cap: int) -> tuple[set, set]:
    """Tensor sets from the SSOT route and the crystal route, for comparison."""
    shape = Partition(shape)
    via_ssot = {as_box_tensor(ssot_to_tensor(T)) for T in ssot_enumerate(shape, (1,) * n, g_cap)}
    if shape.columns > g_cap:
        return via_ssot, set()
    via_crystal = set(enumerate_highest(n, _box_weight(shape, g_cap), g_cap))
    return via_ssot, via_crystal
