"""Springer correspondence (trivial local systems) and j-induction on
staircase representations of classical Weyl groups.

This module is an independent route to the wavefront partitions of finite
cuspidal representations.  It never calls the closed-form formulas in
:mod:`wfbound.wavefront`; the two are compared in the test suite and by
``wfbound oracle --sweep``.

Irreducible representations of ``W(B_n) = W(C_n)`` are bipartitions
``(left, right)`` with ``|left| + |right| = n``; the trivial representation is
``((n), ())`` and the sign representation ``((), (1^n))``.  For ``W(D_n)`` the
pair is unordered and stored with ``left >= right``.

The Springer map from orbits to bipartitions goes through symbols: list the
parts in increasing order (padded with a zero to the right parity of length),
add ``0, 1, 2, ...``, split the result by parity, halve, and subtract
``0, 1, 2, ...`` again from each half.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .orbits import InvalidOrbit, NilpotentOrbit, OrbitKind, is_valid
from .partitions import Partition, psum

__all__ = [
    "Bipartition",
    "NotInImage",
    "StaircasePiece",
    "b_pair",
    "d_pair",
    "j_induce",
    "oracle_wavefront_factor",
    "springer_bipartition",
    "springer_orbit",
    "staircase",
    "unitary",
]


class NotInImage(ValueError):
    """Bipartition is not attached to any orbit with the trivial local system."""


@dataclass(frozen=True)
class Bipartition:
    left: Partition
    right: Partition
    weyl_type: str

    def __post_init__(self):
        if self.weyl_type not in ("B", "C", "D"):
            raise ValueError(f"unknown Weyl group type {self.weyl_type!r}")
        left, right = Partition(self.left), Partition(self.right)
        if self.weyl_type == "D" and tuple(right) > tuple(left):
            left, right = right, left
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @property
    def rank(self) -> int:
        return self.left.size + self.right.size

    def __str__(self) -> str:
        return f"{self.left}x{self.right}"


def staircase(m: int, step: int = 1) -> Partition:
    """``(m*step, (m-1)*step, ..., step)``."""
    return Partition(j * step for j in range(m, 0, -1))


@dataclass(frozen=True)
class StaircasePiece:
    """One factor of the subgroup from which a cuspidal-unipotent datum is
    j-induced.

    ``unitary`` carries ``k`` and ``m``; ``b_pair`` and ``d_pair`` carry ``m``.
    """

    flavor: str
    m: int
    k: int = 1

    def __post_init__(self):
        if self.flavor not in ("unitary", "b_pair", "d_pair"):
            raise ValueError(f"unknown staircase flavor {self.flavor!r}")
        if self.m < 0 or self.k < 1:
            raise ValueError(f"bad staircase parameters m={self.m}, k={self.k}")

    def bipartition_parts(self) -> tuple[Partition, Partition]:
        m, k = self.m, self.k
        if self.flavor == "b_pair":
            return staircase(m), staircase(m)
        if self.flavor == "d_pair":
            return staircase(m), staircase(m - 1)
        # the two alternating halves of (mk, (m-1)k, ..., k); the half holding mk goes left
        top = Partition(j * k for j in range(m, 0, -2))
        rest = Partition(j * k for j in range(m - 1, 0, -2))
        return top, rest

    @property
    def rank(self) -> int:
        left, right = self.bipartition_parts()
        return left.size + right.size

    def __str__(self) -> str:
        if self.flavor == "unitary":
            return f"unitary:{self.k}:{self.m}"
        return f"{self.flavor}:{self.m}"


def unitary(k: int, m: int) -> StaircasePiece:
    return StaircasePiece("unitary", m, k)


def b_pair(m: int) -> StaircasePiece:
    return StaircasePiece("b_pair", m)


def d_pair(m: int) -> StaircasePiece:
    return StaircasePiece("d_pair", m)


def j_induce(pieces: Sequence[StaircasePiece], weyl_type: str, rank: int) -> Bipartition:
    """j-induce a product of staircase representations to ``W_rank``.

    On these inputs j-induction adds the left halves part by part and the
    right halves part by part.
    """
    total = sum(p.rank for p in pieces)
    if total != rank:
        raise ValueError(f"pieces have total rank {total}, target rank is {rank}")
    halves = [p.bipartition_parts() for p in pieces]
    left = psum(*(h[0] for h in halves))
    right = psum(*(h[1] for h in halves))
    return Bipartition(left, right, weyl_type)


# Symbol layout per type: (parity of padded length, parity feeding `left`)
_LAYOUT = {"C": (1, 0), "B": (1, 1), "D": (0, 1)}


def _strictly(seq: Sequence[int]) -> list[int]:
    return [x + i for i, x in enumerate(seq)]


def _unshift(seq: Sequence[int]) -> Partition:
    return Partition(x - i for i, x in enumerate(seq))


def springer_bipartition(kind: OrbitKind, p: Iterable[int]) -> Bipartition:
    """Weyl group representation attached to the orbit with trivial local
    system."""
    p = Partition(p)
    if kind.letter not in _LAYOUT:
        raise ValueError(f"Springer map implemented for types B, C, D, not {kind}")
    if not is_valid(kind, p):
        raise InvalidOrbit(f"{p} is not an orbit of type {kind}")
    length_parity, left_parity = _LAYOUT[kind.letter]
    parts = sorted(p)
    if len(parts) % 2 != length_parity:
        parts.insert(0, 0)
    shifted = _strictly(parts)
    left = [x // 2 for x in shifted if x % 2 == left_parity]
    right = [x // 2 for x in shifted if x % 2 != left_parity]
    return Bipartition(_unshift(left), _unshift(right), kind.letter)


def _orbit_kind_for(b: Bipartition) -> OrbitKind:
    return OrbitKind(b.weyl_type, b.rank)


def _candidate(b_left: Partition, b_right: Partition, letter: str) -> Partition:
    length_parity, left_parity = _LAYOUT[letter]
    # left gets `extra` more entries than right: 1 for B/C, 0 for D
    extra = 1 if length_parity else 0
    k = max(len(b_left) - extra, len(b_right), 0)
    left = [0] * (k + extra - len(b_left)) + sorted(b_left)
    right = [0] * (k - len(b_right)) + sorted(b_right)
    values = [2 * x + left_parity for x in _strictly(left)]
    values += [2 * x + (1 - left_parity) for x in _strictly(right)]
    values.sort()
    return _unshift(values)


def springer_orbit(b: Bipartition) -> NilpotentOrbit:
    """Orbit whose Springer representation (trivial local system) is ``b``.

    Raises :class:`NotInImage` when ``b`` only occurs with a non-trivial local
    system.
    """
    kind = _orbit_kind_for(b)
    orders = [(b.left, b.right)]
    if b.weyl_type == "D" and b.left != b.right:
        orders.append((b.right, b.left))
    found = set()
    for left, right in orders:
        p = _candidate(left, right, b.weyl_type)
        if is_valid(kind, p) and springer_bipartition(kind, p) == b:
            found.add(p)
    if not found:
        raise NotInImage(
            f"{b} (type {b.weyl_type}{b.rank}) is not a Springer representation "
            "for the trivial local system"
        )
    if len(found) > 1:
        raise AssertionError(f"{b} reached from several orbits {sorted(found)}")
    return NilpotentOrbit(kind, found.pop())


def oracle_wavefront_factor(
    pieces: Sequence[StaircasePiece], weyl_type: str, rank: int
) -> Partition:
    """Kawanaka wavefront partition of a finite cuspidal representation,
    computed as Springer(j-induction(pieces))."""
    return springer_orbit(j_induce(pieces, weyl_type, rank)).partition
