"""Integer partitions and the box statistics used throughout the package.

Boxes are 1-indexed ``(row, column)`` pairs.  The rectangle written ``e x f``
is the partition with ``f`` rows of length ``e``; see :func:`rectangle`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod
from typing import Iterator

from .errors import DomainError

Box = tuple[int, int]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise DomainError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise DomainError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (1-indexed), zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def boxes(self) -> Iterator[Box]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def contains(self, other) -> bool:
        """True when the diagram of ``other`` sits inside this one."""
        other = Partition(other)
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


@lru_cache(maxsize=None)
def _conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def conjugate(lam) -> Partition:
    return Partition(_conjugate(tuple(Partition(lam))))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise DomainError(f"{self.inner!r} is not contained in {self.outer!r}")

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def boxes(self) -> Iterator[Box]:
        for i, row in enumerate(self.outer, start=1):
            for j in range(self.inner.part(i) + 1, row + 1):
                yield (i, j)

    def conjugate(self) -> SkewShape:
        return SkewShape(conjugate(self.outer), conjugate(self.inner))


def hook_length(lam, box: Box) -> int:
    lam = Partition(lam)
    i, j = box
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise DomainError(f"box {box} is not in {lam!r}")
    return lam[i - 1] + conjugate(lam)[j - 1] - i - j + 1


@lru_cache(maxsize=None)
def _hook_product(parts: tuple[int, ...]) -> int:
    conj = _conjugate(parts)
    return prod(
        parts[i - 1] + conj[j - 1] - i - j + 1
        for i, row in enumerate(parts, start=1)
        for j in range(1, row + 1)
    )


def hook_product(lam) -> int:
    """Product of all hook lengths; ``h(())`` is 1."""
    return _hook_product(tuple(Partition(lam)))


def content(box: Box) -> int:
    i, j = box
    return j - i


def content_poly(rho, a):
    """``(a|rho)``: the product of ``a + c(box)`` over the boxes of ``rho``.

    ``a`` may be a number or any ring element supporting ``+ int`` and ``*``
    (a :class:`~tensorchern.polyring.BivarPoly`, for instance).
    """
    result = 1
    for box in Partition(rho).boxes():
        result = (a + content(box)) * result
    return result


def falling_factorial(a, k: int):
    """``a (a-1) ... (a-k+1)``, i.e. the content polynomial of a single column."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    result = 1
    for t in range(k):
        result = (a - t) * result
    return result


def skew_content_poly(shape: SkewShape, a):
    result = 1
    for box in shape.boxes():
        result = (a + content(box)) * result
    return result


def rectangle(e: int, f: int) -> Partition:
    """The rectangle ``e x f``: ``f`` rows, each of length ``e``."""
    if e < 0 or f < 0:
        raise DomainError("rectangle sides must be nonnegative")
    return Partition([e] * f) if e else EMPTY


def fits(lam, rows: int, cols: int) -> bool:
    lam = Partition(lam)
    return len(lam) <= rows and lam.part(1) <= cols


def rectangle_complement(lam, e: int, f: int) -> Partition:
    """The partition ``(e - lam*_f, ..., e - lam*_1)``.

    ``lam`` must fit in ``e`` rows and ``f`` columns; the result fits in the
    rectangle ``(e^f)``.
    """
    lam = Partition(lam)
    if not fits(lam, e, f):
        raise DomainError(f"{lam!r} does not fit in {e} rows x {f} columns")
    conj = conjugate(lam)
    return Partition([e - conj.part(k) for k in range(f, 0, -1)])


def inner_rectangle_complement(nu) -> Partition:
    """Complement of ``nu`` in its bounding rectangle (``nu_1`` columns, ``l(nu)`` rows)."""
    nu = Partition(nu)
    if not nu:
        return EMPTY
    return Partition([nu[0] - p for p in reversed(nu)])


def remove_vertical_strips(mu) -> set[Partition]:
    """All ``theta`` with ``mu / theta`` a vertical strip, ``theta = mu`` included."""
    mu = Partition(mu)
    out = set()
    for drops in product((0, 1), repeat=len(mu)):
        parts = [p - d for p, d in zip(mu, drops)]
        if all(b <= a for a, b in zip(parts, parts[1:])):
            out.add(Partition(parts))
    return out


@lru_cache(maxsize=None)
def _partitions_of(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """Partitions of ``n`` in lexicographically descending order."""
    return [Partition(p) for p in _partitions_of(n, n)]


def partitions_up_to_weight(n: int) -> list[Partition]:
    """All partitions of weight at most ``n``, graded then lex descending."""
    return [p for k in range(n + 1) for p in partitions_of(k)]


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """Partitions fitting in ``rows`` rows and ``cols`` columns."""
    return [p for p in partitions_up_to_weight(rows * cols) if fits(p, rows, cols)]


def subpartitions(rho, weight: int | None = None) -> Iterator[Partition]:
    """Partitions contained in ``rho``, optionally of a fixed weight."""
    rho = Partition(rho)
    n = len(rho)

    def rec(i, cap, left, acc):
        if i == n:
            if left is None or left == 0:
                yield Partition(acc)
            return
        hi = min(rho[i], cap)
        if left is not None:
            # the remaining rows can absorb at most hi per row
            if left > hi * (n - i):
                return
            hi = min(hi, left)
        for v in range(hi, -1, -1):
            yield from rec(i + 1, v, None if left is None else left - v, acc + [v])

    yield from rec(0, rho.part(1), weight, [])


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1"``, ``"[3, 1]"``, ``""`` or ``"0"``.

    Parts must already be weakly decreasing; they are never re-sorted.
    """
    text = text.strip()
    if text.startswith("["):
        try:
            parts = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"bad partition {text!r}: {exc}") from None
        if not isinstance(parts, list) or not all(isinstance(p, int) for p in parts):
            raise DomainError(f"bad partition {text!r}")
    elif text in ("", "0"):
        parts = []
    else:
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError:
            raise DomainError(f"bad partition {text!r}") from None
    if any(p <= 0 for p in parts):
        raise DomainError(f"partition parts must be positive: {text!r}")
    return Partition(parts)


def format_partition(lam) -> str:
    return ",".join(str(p) for p in Partition(lam))
