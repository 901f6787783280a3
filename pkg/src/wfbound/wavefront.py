"""Geometric wavefront sets of depth-zero supercuspidal representations.

Each finite cuspidal factor contributes one partition.  Unitary pieces give
staircases ``(2mk, 2(m-1)k, ..., 2k)``, the eigenvalues ``+1``/``-1`` give two
strings, and the contributions of one factor are added part by part.  For
orthogonal factors the part-by-part sum can fail the parity rule; it is then
replaced by its collapse, which is what the Springer oracle produces.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

from .langlands import (
    FactorDatum,
    SupercuspidalDatum,
    group_algebra_kind,
    validate_datum,
)
from .orbits import OrbitKind, collapse, is_valid
from .partitions import Partition, concat, psum, string_interval
from .springer import StaircasePiece, b_pair, d_pair, oracle_wavefront_factor, staircase, unitary

__all__ = [
    "METHODS",
    "OracleVerdict",
    "WavefrontResult",
    "degree_one_part",
    "factor_pieces",
    "factor_unitary",
    "factor_weyl_type",
    "oracle_factor",
    "unitary_part",
    "wf_factor",
    "wf_total",
]

METHODS = ("per-factor", "mu-sum")

_WEYL = {"SpFinite": "C", "SOoddFinite": "B", "SOevenFinite": "D", "UFinite": "A"}


class OracleVerdict(str, Enum):
    YES = "yes"
    NO = "no"
    NOT_RUN = "not-run"


def factor_weyl_type(f: FactorDatum) -> str:
    return _WEYL[f.kind]


def degree_one_part(f: FactorDatum) -> Partition:
    p, q = f.m_plus, f.m_minus
    if f.kind == "SpFinite":
        tail = 2 * (p - q) if p >= q else 2 * (q - p - 1)
        return concat(string_interval(2 * (p + q)), string_interval(tail))
    if f.kind == "SOoddFinite":
        return concat(string_interval(2 * (p + q) + 1), string_interval(2 * abs(p - q) - 1))
    if f.kind == "SOevenFinite":
        return concat(string_interval(2 * (p + q) - 1), string_interval(2 * abs(p - q) - 1))
    return Partition()


def factor_unitary(d: SupercuspidalDatum, i: int) -> list[tuple[int, int, int]]:
    """``(k, m, count)`` of the unitary pieces present on factor ``i``."""
    return [(u.k, u.m(i), u.count) for u in d.unitary if u.m(i)]


def unitary_part(pieces: Sequence[tuple[int, int, int]]) -> Partition:
    """Part-by-part sum of the staircases ``(2mk, ..., 4k, 2k)``, each taken
    ``count`` times."""
    stairs = []
    for k, m, count in pieces:
        stairs += [staircase(m, 2 * k)] * count
    return psum(*stairs)


def _factor_kind(f: FactorDatum, size: int) -> OrbitKind:
    letter = factor_weyl_type(f)
    if letter == "A":
        return OrbitKind.A(size)
    return OrbitKind(letter, size // 2)


def wf_factor(f: FactorDatum, pieces: Sequence[tuple[int, int, int]] = ()) -> Partition:
    """Wavefront partition of one finite cuspidal factor.

    ``pieces`` lists ``(k, m, count)`` for the unitary pieces with ``m > 0``
    on this factor.
    """
    p = psum(degree_one_part(f), unitary_part(pieces))
    kind = _factor_kind(f, p.size)
    if kind.letter in ("B", "D") and not is_valid(kind, p):
        return collapse(kind, p)
    return p


def factor_pieces(f: FactorDatum, pieces: Sequence[tuple[int, int, int]] = ()) -> list[StaircasePiece]:
    """Staircase pieces whose j-induction gives the factor's Weyl group
    representation."""
    out = []
    for k, m, count in pieces:
        out += [unitary(k, m)] * count
    if f.kind == "SpFinite":
        out += [b_pair(f.m_plus), d_pair(f.m_minus)]
    elif f.kind == "SOoddFinite":
        out += [b_pair(f.m_plus), b_pair(f.m_minus)]
    elif f.kind == "SOevenFinite":
        out += [d_pair(f.m_plus), d_pair(f.m_minus)]
    return [p for p in out if p.rank]


def oracle_factor(f: FactorDatum, pieces: Sequence[tuple[int, int, int]] = ()) -> Partition | None:
    """Springer(j-induction) route to the factor's wavefront partition.

    Returns None for unitary factors, where no oracle is implemented.
    """
    letter = factor_weyl_type(f)
    if letter == "A":
        return None
    staircases = factor_pieces(f, pieces)
    rank = sum(p.rank for p in staircases)
    return oracle_wavefront_factor(staircases, letter, rank)


@dataclass(frozen=True)
class WavefrontResult:
    per_factor: tuple[Partition, Partition]
    combined: Partition
    method: str
    mu_sum: Partition
    agrees: bool
    oracle: OracleVerdict = OracleVerdict.NOT_RUN
    oracle_factors: tuple = field(default=(None, None))

    @property
    def per_factor_concat(self) -> Partition:
        return concat(*self.per_factor)


def _mu_sum(d: SupercuspidalDatum, kind: OrbitKind) -> Partition:
    mu_pm = concat(*(degree_one_part(f) for f in d.factors))
    mu_uni = concat(*(unitary_part(factor_unitary(d, i)) for i in range(2)))
    total = psum(mu_pm, mu_uni)
    if kind.letter in ("B", "C", "D") and not is_valid(kind, total):
        return collapse(kind, total)
    return total


def wf_total(d: SupercuspidalDatum, method: str = "per-factor", oracle: bool = False) -> WavefrontResult:
    """Wavefront partition of the supercuspidal with datum ``d``.

    Both combination rules are always computed; ``method`` picks which one
    becomes ``combined``.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    validate_datum(d)
    kind = group_algebra_kind(d.group)
    pieces = [factor_unitary(d, i) for i in range(2)]
    per_factor = tuple(wf_factor(f, pieces[i]) for i, f in enumerate(d.factors))
    per_concat = concat(*per_factor)
    mu = _mu_sum(d, kind)
    combined = per_concat if method == "per-factor" else mu
    if combined.size != kind.boxes:
        raise AssertionError(f"wavefront {combined} has size {combined.size}, {kind} needs {kind.boxes}")
    verdict = OracleVerdict.NOT_RUN
    oracle_parts: tuple = (None, None)
    if oracle:
        oracle_parts = tuple(oracle_factor(f, pieces[i]) for i, f in enumerate(d.factors))
        checked = [(o, w) for o, w in zip(oracle_parts, per_factor) if o is not None]
        if checked:
            ok = all(o == w for o, w in checked)
            verdict = OracleVerdict.YES if ok else OracleVerdict.NO
    return WavefrontResult(per_factor, combined, method, mu, per_concat == mu, verdict, oracle_parts)
