"""Nilpotent orbits of classical Lie algebras at the level of partitions.

Orbits of ``gl(n)``, ``so(2n+1)``, ``sp(2n)`` and ``so(2n)`` are labelled by
Jordan types.  In the orthogonal cases every even part must occur with even
multiplicity, in the symplectic case every odd part.  Very even orbits of
``so(2n)`` are not distinguished: one partition, one orbit.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

from .partitions import (
    Partition,
    PartitionSet,
    partitions_of,
    psum,
    transpose,
)

__all__ = [
    "ENUMERATION_BOUND",
    "InvalidOrbit",
    "NilpotentOrbit",
    "OrbitKind",
    "collapse",
    "dual",
    "dual_b_to_c_alternative",
    "dual_kind",
    "enumerate_orbits",
    "induce_gl_sp",
    "is_valid",
    "orbit",
    "parity_classes",
]

ENUMERATION_BOUND = 40


class InvalidOrbit(ValueError):
    pass


@dataclass(frozen=True, order=True)
class OrbitKind:
    """Classical type letter plus rank."""

    letter: str
    rank: int

    def __post_init__(self):
        if self.letter not in ("A", "B", "C", "D"):
            raise ValueError(f"unknown classical type {self.letter!r}")
        if self.rank < 0:
            raise ValueError(f"negative rank {self.rank}")

    @property
    def boxes(self) -> int:
        if self.letter == "A":
            return self.rank
        if self.letter == "B":
            return 2 * self.rank + 1
        return 2 * self.rank

    def __str__(self) -> str:
        return f"{self.letter}{self.rank}"

    @classmethod
    def A(cls, n: int) -> "OrbitKind":
        return cls("A", n)

    @classmethod
    def B(cls, n: int) -> "OrbitKind":
        return cls("B", n)

    @classmethod
    def C(cls, n: int) -> "OrbitKind":
        return cls("C", n)

    @classmethod
    def D(cls, n: int) -> "OrbitKind":
        return cls("D", n)


def _bad_parity(letter: str) -> int | None:
    # parts of this parity need even multiplicity
    return {"A": None, "B": 0, "C": 1, "D": 0}[letter]


def _parity_ok(letter: str, p: Partition) -> bool:
    bad = _bad_parity(letter)
    if bad is None:
        return True
    return all(mult % 2 == 0 for part, mult in p.multiplicities().items() if part % 2 == bad)


def is_valid(kind: OrbitKind, p: Iterable[int]) -> bool:
    p = Partition(p)
    return p.size == kind.boxes and _parity_ok(kind.letter, p)


def parity_classes(p: Iterable[int]) -> list[str]:
    """Which of ``"orthogonal"``/``"symplectic"`` parity rules ``p`` satisfies."""
    p = Partition(p)
    out = []
    if _parity_ok("B", p):
        out.append("orthogonal")
    if _parity_ok("C", p):
        out.append("symplectic")
    return out


@dataclass(frozen=True)
class NilpotentOrbit:
    kind: OrbitKind
    partition: Partition

    def __post_init__(self):
        object.__setattr__(self, "partition", Partition(self.partition))
        if not is_valid(self.kind, self.partition):
            raise InvalidOrbit(f"{self.partition} is not an orbit of type {self.kind}")

    def __str__(self) -> str:
        return f"{self.kind}:{self.partition}"


def orbit(kind: OrbitKind, p: Iterable[int]) -> NilpotentOrbit:
    return NilpotentOrbit(kind, Partition(p))


def _collapse_parts(letter: str, p: Partition) -> Partition:
    bad = _bad_parity(letter)
    parts = list(p)
    while True:
        counts = Partition(parts).multiplicities()
        offenders = [q for q, m in counts.items() if q % 2 == bad and m % 2]
        if not offenders:
            return Partition(parts)
        q = max(offenders)
        last = len(parts) - 1 - parts[::-1].index(q)
        parts[last] -= 1
        j = last + 1
        while j < len(parts) and parts[j] >= q - 1:
            j += 1
        if j == len(parts):
            parts.append(1)
        else:
            parts[j] += 1
        parts = [x for x in parts if x]


def collapse(kind: OrbitKind, p: Iterable[int]) -> Partition:
    """Largest partition of the given type dominated by ``p``.

    Repeatedly take the largest part ``q`` of the wrong parity that occurs an
    odd number of times, lower its last occurrence by one and raise the first
    later part smaller than ``q - 1`` by one.
    """
    p = Partition(p)
    if kind.letter == "A":
        raise ValueError("collapse is only defined for types B, C and D")
    if p.size != kind.boxes:
        raise InvalidOrbit(f"{p} has size {p.size}, type {kind} needs {kind.boxes}")
    return _collapse_parts(kind.letter, p)


def _lower_smallest(p: Partition) -> Partition:
    if not p:
        raise InvalidOrbit("cannot lower a part of the empty partition")
    return Partition(list(p[:-1]) + [p[-1] - 1])


def _raise_largest(p: Partition) -> Partition:
    if not p:
        return Partition([1])
    return Partition([p[0] + 1] + list(p[1:]))


_DUAL_LETTER = {"A": "A", "B": "C", "C": "B", "D": "D"}


def dual_kind(kind: OrbitKind) -> OrbitKind:
    return OrbitKind(_DUAL_LETTER[kind.letter], kind.rank)


def dual(source: OrbitKind, p: Iterable[int]) -> NilpotentOrbit:
    """Order-reversing duality from orbits of ``source`` to orbits of the dual
    algebra (B <-> C, D -> D, A -> A)."""
    p = Partition(p)
    if not is_valid(source, p):
        raise InvalidOrbit(f"{p} is not an orbit of type {source}")
    target = dual_kind(source)
    t = transpose(p)
    if source.letter == "A":
        q = t
    elif source.letter == "B":
        q = _collapse_parts("C", _lower_smallest(t))
    elif source.letter == "C":
        q = _collapse_parts("B", _raise_largest(t))
    else:
        q = _collapse_parts("D", t)
    return NilpotentOrbit(target, q)


def dual_b_to_c_alternative(p: Iterable[int]) -> Partition:
    """Second recipe for the B -> C duality: lower the smallest part,
    C-collapse, then transpose."""
    p = Partition(p)
    return transpose(_collapse_parts("C", _lower_smallest(p)))


def induce_gl_sp(s: Iterable[int], q: Iterable[int], n: int) -> Partition:
    """Induce the orbit ``(s, q)`` of ``gl(n-m) x sp(2m)`` to ``sp(2n)``.

    Each part of ``s`` is doubled and added to ``q`` part by part, then the
    result is C-collapsed.
    """
    s, q = Partition(s), Partition(q)
    if q.size % 2 or not is_valid(OrbitKind.C(q.size // 2), q):
        raise InvalidOrbit(f"{q} is not a symplectic partition")
    if 2 * s.size + q.size != 2 * n:
        raise InvalidOrbit(
            f"sizes do not add up: 2*|{s}| + |{q}| = {2 * s.size + q.size} != {2 * n}"
        )
    return _collapse_parts("C", psum(s, s, q))


@functools.lru_cache(maxsize=None)
def _enumerate(kind: OrbitKind) -> PartitionSet:
    return PartitionSet(p for p in partitions_of(kind.boxes) if _parity_ok(kind.letter, p))


def enumerate_orbits(kind: OrbitKind, bound: int = ENUMERATION_BOUND) -> PartitionSet:
    """All orbits of the given type; iteration is lexicographically descending."""
    if kind.boxes > bound:
        raise ValueError(
            f"type {kind} needs {kind.boxes} boxes, above the enumeration bound {bound}"
        )
    return _enumerate(kind)
