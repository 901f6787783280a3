"""Cuspidal data of depth-zero supercuspidal representations of classical
groups, and the string construction of their nilpotent Langlands parameter.

A depth-zero supercuspidal is compactly induced from a cuspidal
representation ``tau1 x tau2`` of a parahoric reductive quotient with two
classical factors.  Each ``tau_i`` is recorded by integers

* ``m_plus``, ``m_minus`` for the eigenvalues ``+1`` and ``-1``,
* one :class:`UnitaryPiece` per class of polynomials of degree ``2k`` with
  multiplicities ``(m1^2 + m1)/2`` on the first factor and ``(m2^2 + m2)/2``
  on the second.

Everything below is bookkeeping on these integers; no field ``F_q`` appears.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .orbits import InvalidOrbit, NilpotentOrbit, OrbitKind, is_valid
from .partitions import Partition, concat, string_interval

__all__ = [
    "DatumError",
    "FactorDatum",
    "GroupSpec",
    "SupercuspidalDatum",
    "UnitaryPiece",
    "ValidatedDatum",
    "build_param",
    "datum_from_json",
    "datum_to_json",
    "dual_algebra_kind",
    "group_algebra_kind",
    "langlands_strings",
    "validate_datum",
]

FACTOR_KINDS = ("SpFinite", "SOoddFinite", "SOevenFinite", "UFinite")
GROUP_KINDS = ("Sp", "SOodd", "SOeven", "UUnramified", "URamified")


class DatumError(ValueError):
    """A cuspidal datum violates one of the dimension identities."""


def tri(m: int) -> int:
    return m * (m + 1) // 2


@dataclass(frozen=True, order=True)
class UnitaryPiece:
    """``count`` distinct polynomials of degree ``2k`` sharing the
    parameters ``m1`` (first factor) and ``m2`` (second factor)."""

    k: int
    m1: int
    m2: int
    count: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise DatumError(f"unitary piece needs k >= 1, got {self.k}")
        if self.m1 < 0 or self.m2 < 0:
            raise DatumError(f"negative parameters in {self}")
        if self.m1 + self.m2 < 1:
            raise DatumError("unitary piece with m1 = m2 = 0 carries nothing")
        if self.count < 1:
            raise DatumError(f"unitary piece needs count >= 1, got {self.count}")

    def m(self, factor: int) -> int:
        return self.m1 if factor == 0 else self.m2

    def half_dim(self, factor: int) -> int:
        """Contribution ``count * k * (m^2 + m)/2`` to half of ``dim V``."""
        return self.count * self.k * tri(self.m(factor))


@dataclass(frozen=True, order=True)
class FactorDatum:
    """The degree-one part of one finite cuspidal factor.

    ``an`` is the dimension of the anisotropic part for orthogonal factors:
    always 1 for ``SOoddFinite``, 0 or 2 for ``SOevenFinite``.
    """

    kind: str
    m_plus: int = 0
    m_minus: int = 0
    an: int | None = None

    def __post_init__(self):
        if self.kind not in FACTOR_KINDS:
            raise DatumError(f"unknown factor kind {self.kind!r}")
        if self.m_plus < 0 or self.m_minus < 0:
            raise DatumError(f"negative m_plus/m_minus in {self}")
        an = self.an
        if self.kind == "SOoddFinite":
            if an not in (None, 1):
                raise DatumError(f"SOoddFinite has anisotropic dimension 1, got {an}")
            an = 1
        elif self.kind == "SOevenFinite":
            if an not in (0, 2):
                raise DatumError(f"SOevenFinite needs an in {{0, 2}}, got {an}")
        elif an is not None:
            raise DatumError(f"{self.kind} takes no anisotropic dimension")
        if self.kind == "UFinite" and (self.m_plus or self.m_minus):
            raise DatumError("unitary factors carry no m_plus/m_minus")
        object.__setattr__(self, "an", an)

    @property
    def is_orthogonal(self) -> bool:
        return self.kind in ("SOoddFinite", "SOevenFinite")

    def degree_one_dim(self) -> int:
        """``a_+ + a_-``: multiplicity of ``x -+ 1`` in the characteristic
        polynomial."""
        p, q = self.m_plus, self.m_minus
        if self.kind == "SpFinite":
            return 2 * (p * p + p) + 1 + 2 * q * q
        if self.kind == "SOoddFinite":
            return 2 * (p * p + p) + 2 * (q * q + q)
        if self.kind == "SOevenFinite":
            return 2 * p * p + 2 * q * q
        return 0

    def is_empty(self) -> bool:
        return self.m_plus == 0 and self.m_minus == 0


@dataclass(frozen=True)
class GroupSpec:
    """The p-adic group: ``Sp(2n)``, ``SO(2n+1)``, ``SO(2n)``, or a unitary
    group ``U(N)``.  ``n`` is the rank for Sp/SO and ``N`` for unitary."""

    kind: str
    n: int
    order: str | None = None

    def __post_init__(self):
        if self.kind not in GROUP_KINDS:
            raise DatumError(f"unknown group kind {self.kind!r}")
        if self.n < 0:
            raise DatumError(f"negative rank {self.n}")
        if self.kind == "URamified":
            if self.order not in (None, "sp-first", "so-first"):
                raise DatumError(f"ramified order must be sp-first or so-first, got {self.order!r}")
        elif self.order is not None:
            raise DatumError("factor order is only meaningful for ramified unitary groups")


@dataclass(frozen=True)
class SupercuspidalDatum:
    group: GroupSpec
    factors: tuple[FactorDatum, FactorDatum]
    unitary: tuple[UnitaryPiece, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "unitary", tuple(sorted(self.unitary)))
        if len(self.factors) != 2:
            raise DatumError(f"expected two factors, got {len(self.factors)}")
        keys = [(u.k, u.m1, u.m2) for u in self.unitary]
        if len(keys) != len(set(keys)):
            raise DatumError("unitary pieces with equal (k, m1, m2) must be merged via count")

    def swapped(self) -> "SupercuspidalDatum":
        group = self.group
        if group.kind == "URamified" and group.order is not None:
            flipped = "so-first" if group.order == "sp-first" else "sp-first"
            group = GroupSpec(group.kind, group.n, flipped)
        return SupercuspidalDatum(
            group,
            (self.factors[1], self.factors[0]),
            tuple(UnitaryPiece(u.k, u.m2, u.m1, u.count) for u in self.unitary),
        )

    @property
    def is_hyperspecial(self) -> bool:
        """Second factor is the trivial group: no content at all."""
        f2 = self.factors[1]
        return (
            f2.is_empty()
            and f2.an in (None, 0)
            and f2.kind in ("SpFinite", "SOevenFinite", "UFinite")
            and all(u.m2 == 0 for u in self.unitary)
        )


@dataclass(frozen=True)
class ValidatedDatum:
    datum: SupercuspidalDatum
    ranks: tuple[int, int]
    dims: tuple[int, int] = field(default=(0, 0))


def _factor_dim(d: SupercuspidalDatum, i: int) -> int:
    f = d.factors[i]
    return f.degree_one_dim() + 2 * sum(u.half_dim(i) for u in d.unitary)


def _factor_rank(f: FactorDatum, dim_v: int, i: int) -> int:
    """Rank ``n_i`` of factor ``i`` from ``dim V_i``, the dimension of the
    dual group's defining representation."""
    where = f"factor {i + 1} ({f.kind})"
    if f.kind == "SpFinite":
        # dim V = 2 n + 1; Sigma k (m^2+m)/2 + (m_+^2 + m_+) + m_-^2 = n
        return (dim_v - 1) // 2
    if f.kind == "SOoddFinite":
        return dim_v // 2
    if f.kind == "SOevenFinite":
        if dim_v < f.an:
            raise DatumError(
                f"{where}: dim V = 2 n + an fails, dim V = {dim_v} < an = {f.an}"
            )
        return (dim_v - f.an) // 2
    return dim_v


def _quadratic_dim(f: FactorDatum, n_i: int) -> int:
    return 2 * n_i + f.an


_FACTOR_RULES = {
    "Sp": ({"SpFinite"}, {"SpFinite"}),
    "SOodd": ({"SOoddFinite", "SOevenFinite"}, {"SOoddFinite", "SOevenFinite"}),
    "SOeven": ({"SOoddFinite", "SOevenFinite"}, {"SOoddFinite", "SOevenFinite"}),
    "UUnramified": ({"UFinite"}, {"UFinite"}),
    "URamified": (
        {"SpFinite", "SOoddFinite", "SOevenFinite"},
        {"SpFinite", "SOoddFinite", "SOevenFinite"},
    ),
}


def ramified_order(d: SupercuspidalDatum) -> str:
    kinds = [f.kind for f in d.factors]
    if kinds[0] == "SpFinite" and kinds[1] != "SpFinite":
        return "sp-first"
    if kinds[1] == "SpFinite" and kinds[0] != "SpFinite":
        return "so-first"
    raise DatumError(f"ramified unitary needs one Sp and one SO factor, got {kinds}")


def validate_datum(d: SupercuspidalDatum) -> ValidatedDatum:
    """Derive the factor ranks ``(n1, n2)`` and check them against the group.

    Raises :class:`DatumError` naming the identity that fails.
    """
    g = d.group
    allowed = _FACTOR_RULES[g.kind]
    for i, f in enumerate(d.factors):
        if f.kind not in allowed[i]:
            raise DatumError(f"factor {i + 1} of kind {f.kind} does not fit a {g.kind} group")
    dims = tuple(_factor_dim(d, i) for i in range(2))
    ranks = tuple(_factor_rank(f, dims[i], i) for i, f in enumerate(d.factors))
    f1, f2 = d.factors

    if g.kind == "Sp":
        total, expected = ranks[0] + ranks[1], g.n
        equation = "n1 + n2 = n"
    elif g.kind == "SOodd":
        if sorted([f1.an % 2, f2.an % 2]) != [0, 1]:
            raise DatumError("SO(2n+1) needs exactly one factor with odd anisotropic part")
        total = _quadratic_dim(f1, ranks[0]) + _quadratic_dim(f2, ranks[1])
        expected, equation = 2 * g.n + 1, "dim Q1 + dim Q2 = 2n + 1"
    elif g.kind == "SOeven":
        if f1.an % 2 != f2.an % 2:
            raise DatumError("SO(2n) needs anisotropic parts of equal parity")
        total = _quadratic_dim(f1, ranks[0]) + _quadratic_dim(f2, ranks[1])
        expected, equation = 2 * g.n, "dim Q1 + dim Q2 = 2n"
    elif g.kind == "UUnramified":
        total, expected = dims[0] + dims[1], g.n
        equation = "N1 + N2 = N"
    else:
        order = ramified_order(d)
        if g.order is not None and g.order != order:
            raise DatumError(f"declared order {g.order} but factors are {order}")
        sp_i = 0 if order == "sp-first" else 1
        so = d.factors[1 - sp_i]
        total = 2 * ranks[sp_i] + _quadratic_dim(so, ranks[1 - sp_i])
        expected, equation = g.n, "2 n_sp + dim Q_so = N"
    if total != expected:
        raise DatumError(f"{equation} fails: got {total}, expected {expected}")
    return ValidatedDatum(d, ranks, dims)


def dual_algebra_kind(g: GroupSpec) -> OrbitKind:
    """Type of the Lie algebra in which the Langlands parameter lives."""
    return {
        "Sp": OrbitKind.B,
        "SOodd": OrbitKind.C,
        "SOeven": OrbitKind.D,
        "UUnramified": OrbitKind.A,
        "URamified": OrbitKind.A,
    }[g.kind](g.n)


def group_algebra_kind(g: GroupSpec) -> OrbitKind:
    """Type of the group's own Lie algebra, where wavefront sets live."""
    return {
        "Sp": OrbitKind.C,
        "SOodd": OrbitKind.B,
        "SOeven": OrbitKind.D,
        "UUnramified": OrbitKind.A,
        "URamified": OrbitKind.A,
    }[g.kind](g.n)


def _pair_strings(x: int, y: int, rule: str) -> list[Partition]:
    """The two strings attached to one eigenvalue; ``x`` and ``y`` are the
    first- and second-factor parameters."""
    s = x + y
    if rule == "odd+1":
        return [string_interval(2 * s + 1), string_interval(2 * abs(x - y) - 1)]
    if rule == "odd-1":
        return [string_interval(2 * s - 1), string_interval(2 * abs(x - y) - 1)]
    if rule == "even+":
        return [string_interval(2 * s), string_interval(abs(2 * (x - y) + 1) - 1)]
    if rule == "even-":
        return [string_interval(2 * s), string_interval(abs(2 * (x - y) - 1) - 1)]
    raise ValueError(rule)


def langlands_strings(d: SupercuspidalDatum) -> list[Partition]:
    """Every string appended by the construction, in order."""
    strings: list[Partition] = []
    for u in d.unitary:
        copies = 2 * u.k * u.count
        strings += [string_interval(u.m1 + u.m2)] * copies
        strings += [string_interval(abs(u.m1 - u.m2) - 1)] * copies
    g = d.group
    f1, f2 = d.factors
    if g.kind == "UUnramified":
        return strings
    if g.kind == "Sp":
        rules = ("odd+1", "odd-1")
        first, second = f1, f2
    elif g.kind in ("SOodd", "SOeven"):
        first, second = f1, f2
        if first.an % 2 == 0 and second.an == 1:
            first, second = second, first
        if first.an == 1 and second.an % 2 == 0:
            rules = ("even+", "even+")
        elif first.an == 1:
            rules = ("odd+1", "odd+1")
        else:
            rules = ("odd-1", "odd-1")
    else:
        if ramified_order(d) == "sp-first":
            first, second = f1, f2
        else:
            first, second = f2, f1
        if second.an == 1:
            rules = ("odd+1", "even-")
        else:
            rules = ("even+", "odd-1")
    strings += _pair_strings(first.m_plus, second.m_plus, rules[0])
    strings += _pair_strings(first.m_minus, second.m_minus, rules[1])
    return strings


def build_param(d: SupercuspidalDatum) -> NilpotentOrbit:
    """Nilpotent Langlands parameter of the supercuspidal with datum ``d``."""
    validate_datum(d)
    p = concat(*langlands_strings(d))
    kind = dual_algebra_kind(d.group)
    if not is_valid(kind, p):
        raise InvalidOrbit(f"parameter {p} is not an orbit of type {kind}")
    return NilpotentOrbit(kind, p)


# JSON -----------------------------------------------------------------------


def datum_to_json(d: SupercuspidalDatum) -> dict[str, Any]:
    group: dict[str, Any] = {"kind": d.group.kind, "n": d.group.n}
    if d.group.order is not None:
        group["order"] = d.group.order
    factors = []
    for f in d.factors:
        entry: dict[str, Any] = {"kind": f.kind, "m_plus": f.m_plus, "m_minus": f.m_minus}
        if f.is_orthogonal:
            entry["an"] = f.an
        factors.append(entry)
    unitary = [{"k": u.k, "m1": u.m1, "m2": u.m2, "count": u.count} for u in d.unitary]
    return {"group": group, "factors": factors, "unitary": unitary}


def _require(obj: dict, key: str, typ=int, default=None):
    if key not in obj:
        if default is not None:
            return default
        raise DatumError(f"missing field {key!r}")
    value = obj[key]
    if typ is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise DatumError(f"field {key!r} must be an integer, got {value!r}")
    if typ is str and not isinstance(value, str):
        raise DatumError(f"field {key!r} must be a string, got {value!r}")
    return value


def datum_from_json(obj: dict[str, Any] | str) -> SupercuspidalDatum:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict):
        raise DatumError("datum must be a JSON object")
    g = obj.get("group")
    if not isinstance(g, dict):
        raise DatumError("missing object 'group'")
    group = GroupSpec(_require(g, "kind", str), _require(g, "n"), g.get("order"))
    raw_factors = obj.get("factors")
    if not isinstance(raw_factors, list):
        raise DatumError("'factors' must be a list of two objects")
    factors = []
    for f in raw_factors:
        if not isinstance(f, dict):
            raise DatumError("each factor must be an object")
        factors.append(
            FactorDatum(
                _require(f, "kind", str),
                _require(f, "m_plus", default=0),
                _require(f, "m_minus", default=0),
                f.get("an"),
            )
        )
    raw_unitary = obj.get("unitary", [])
    if not isinstance(raw_unitary, list):
        raise DatumError("'unitary' must be a list of objects")
    unitary = []
    for u in raw_unitary:
        if not isinstance(u, dict):
            raise DatumError("each unitary piece must be an object")
        unitary.append(
            UnitaryPiece(
                _require(u, "k"),
                _require(u, "m1", default=0),
                _require(u, "m2", default=0),
                _require(u, "count", default=1),
            )
        )
    return SupercuspidalDatum(group, tuple(factors), tuple(unitary))
