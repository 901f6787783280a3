"""Exact partition arithmetic.

A :class:`Partition` is an immutable, weakly decreasing tuple of positive
integers.  Zero parts are dropped on construction, so the empty tuple is the
unique partition of 0.

Two binary operations are used throughout the package and are easy to mix up:

* :func:`psum` adds partitions part by part (after zero padding);
* :func:`concat` takes the multiset union of the parts.

They are exchanged by :func:`transpose`:
``transpose(concat(a, b)) == psum(transpose(a), transpose(b))``.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from collections.abc import Iterable, Iterator
from itertools import accumulate, zip_longest

__all__ = [
    "Dominance",
    "Partition",
    "PartitionSet",
    "SizeMismatch",
    "concat",
    "dominance",
    "leq",
    "parse_partition",
    "partitions_of",
    "psum",
    "set_leq",
    "string_interval",
    "transpose",
]


class SizeMismatch(ValueError):
    """Two partitions of different sizes were compared."""


def _as_int(p) -> int:
    if isinstance(p, bool) or int(p) != p:
        raise TypeError(f"partition parts must be integers, got {p!r}")
    return int(p)


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    The constructor accepts any iterable of non-negative integers, sorts it in
    decreasing order and removes zeros::

        >>> Partition([1, 3, 0, 2])
        Partition([3, 2, 1])
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        parts = list(parts)
        if not all(type(p) is int for p in parts):
            parts = [_as_int(p) for p in parts]
        if parts and min(parts) < 0:
            raise ValueError(f"partition parts must be non-negative, got {min(parts)}")
        cleaned = [p for p in parts if p]
        cleaned.sort(reverse=True)
        return super().__new__(cls, cleaned)

    @classmethod
    def _trusted(cls, parts: list[int]) -> "Partition":
        # caller guarantees positive ints in decreasing order
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def multiplicity(self, part: int) -> int:
        return self.count(part)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def prefix_sums(self) -> list[int]:
        return list(accumulate(self))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"


_PARTITION_RE = re.compile(r"^\s*\[\s*(\d+\s*(,\s*\d+\s*)*)?\]\s*$")


def parse_partition(text: str) -> Partition:
    """Parse the bracket format ``"[5,3,1]"``; ``"[]"`` is the empty partition."""
    if not _PARTITION_RE.match(text):
        raise ValueError(f"malformed partition text: {text!r}")
    body = text.strip()[1:-1].strip()
    if not body:
        return Partition()
    parts = [int(tok) for tok in body.split(",")]
    if any(b > a for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition parts must be weakly decreasing: {text!r}")
    return Partition(parts)


def transpose(p: Iterable[int]) -> Partition:
    p = Partition(p)
    if not p:
        return p
    out = []
    n = len(p)
    for j in range(p[0]):
        while p[n - 1] <= j:
            n -= 1
        out.append(n)
    return Partition._trusted(out)


def psum(*parts: Iterable[int]) -> Partition:
    """Part-by-part sum of any number of partitions (zero padded)."""
    ps = [Partition(p) for p in parts]
    return Partition._trusted([sum(col) for col in zip_longest(*ps, fillvalue=0)])


def concat(*parts: Iterable[int]) -> Partition:
    """Multiset union of the parts of any number of partitions."""
    out: list[int] = []
    for p in parts:
        out.extend(Partition(p))
    return Partition(out)


def string_interval(alpha: int) -> Partition:
    """The string ``(alpha, alpha-2, ..., 2 or 1)``; empty when ``alpha <= 0``."""
    if alpha <= 0:
        return Partition()
    return Partition(range(alpha, 0, -2))


class Dominance(enum.Enum):
    EQUAL = "equal"
    LEQ = "leq"
    GEQ = "geq"
    INCOMPARABLE = "incomparable"


def dominance(a: Iterable[int], b: Iterable[int]) -> Dominance:
    """Compare two partitions of the same size in the dominance order."""
    a, b = Partition(a), Partition(b)
    if a.size != b.size:
        raise SizeMismatch(f"cannot compare {a} (size {a.size}) with {b} (size {b.size})")
    if a == b:
        return Dominance.EQUAL
    below = above = True
    sa = sb = 0
    for x, y in zip_longest(a, b, fillvalue=0):
        sa += x
        sb += y
        if sa > sb:
            below = False
        elif sa < sb:
            above = False
        if not (below or above):
            return Dominance.INCOMPARABLE
    return Dominance.LEQ if below else Dominance.GEQ


def leq(a: Iterable[int], b: Iterable[int]) -> bool:
    """``a <= b`` in the dominance order (sizes must agree)."""
    return dominance(a, b) in (Dominance.LEQ, Dominance.EQUAL)


class PartitionSet(frozenset):
    """Finite set of equal-size partitions, iterated in lexicographically
    descending order."""

    def __new__(cls, elements: Iterable[Iterable[int]] = ()) -> "PartitionSet":
        elems = [Partition(e) for e in elements]
        sizes = {e.size for e in elems}
        if len(sizes) > 1:
            raise SizeMismatch(f"partition set mixes sizes {sorted(sizes)}")
        return super().__new__(cls, elems)

    @property
    def size(self) -> int | None:
        """Common size of the elements, or None for the empty set."""
        for e in self:
            return e.size
        return None

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(frozenset.__iter__(self), reverse=True))

    def __repr__(self) -> str:
        return "PartitionSet([" + ", ".join(str(p) for p in self) + "])"


def set_leq(s1: Iterable[Iterable[int]], s2: Iterable[Iterable[int]]) -> bool:
    """True iff every element of ``s1`` lies below some element of ``s2``."""
    s1, s2 = PartitionSet(s1), PartitionSet(s2)
    if s1.size is not None and s2.size is not None and s1.size != s2.size:
        raise SizeMismatch(f"partition sets of sizes {s1.size} and {s2.size}")
    return all(any(leq(a, b) for b in s2) for a in s1)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in lexicographically descending order."""
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n

    def rec(remaining: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(prefix)
            return
        for first in range(min(cap, remaining), 0, -1):
            prefix.append(first)
            yield from rec(remaining - first, first, prefix)
            prefix.pop()

    yield from rec(n, max_part, [])
