"""Exhaustive check of the bound ``WF(pi) <= d(O_pi)`` over cuspidal data.

For every datum up to a rank bound the Langlands partition, its dual, and the
wavefront partition are computed and compared in the dominance order.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any

from .langlands import (
    FactorDatum,
    GroupSpec,
    SupercuspidalDatum,
    UnitaryPiece,
    build_param,
    datum_to_json,
    group_algebra_kind,
    tri,
    validate_datum,
    DatumError,
)
from .orbits import OrbitKind, collapse, dual
from .partitions import Dominance, Partition, concat, dominance, psum
from .wavefront import OracleVerdict, wf_total

__all__ = [
    "DEFAULT_RANK_BOUND",
    "ConjectureReport",
    "PipelineError",
    "check_datum",
    "enumerate_data",
    "group_rank",
    "run_verification",
    "single_shared_piece",
    "sp_block_bound",
    "summarize",
]

DEFAULT_RANK_BOUND = 12

_GROUP_ALIASES = {
    "sp": "Sp",
    "soodd": "SOodd",
    "so-odd": "SOodd",
    "soeven": "SOeven",
    "so-even": "SOeven",
    "u": "UUnramified",
    "uunramified": "UUnramified",
    "u-unramified": "UUnramified",
    "uramified": "URamified",
    "u-ramified": "URamified",
}


def group_kind_name(name: str) -> str:
    key = name.replace("_", "-").lower()
    if key in _GROUP_ALIASES:
        return _GROUP_ALIASES[key]
    for kind in _GROUP_ALIASES.values():
        if kind.lower() == key:
            return kind
    raise ValueError(f"unknown group kind {name!r}")


class PipelineError(RuntimeError):
    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"{stage}: {cause}")
        self.stage = stage
        self.cause = cause


@dataclass
class ConjectureReport:
    datum: SupercuspidalDatum
    langlands: Partition
    dual_of_langlands: Partition
    wavefront: Partition
    dominance_holds: bool
    equality: bool
    hyperspecial: bool
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {
            "datum": datum_to_json(self.datum),
            "langlands": str(self.langlands),
            "dual_of_langlands": str(self.dual_of_langlands),
            "wavefront": str(self.wavefront),
            "dominance_holds": self.dominance_holds,
            "equality": self.equality,
            "hyperspecial": self.hyperspecial,
            "notes": list(self.notes),
        }


def check_datum(
    d: SupercuspidalDatum,
    method: str = "per-factor",
    oracle: bool = False,
    reference_wavefront: Partition | None = None,
) -> ConjectureReport:
    """Run the full pipeline on one datum.

    ``reference_wavefront`` is an externally supplied value to compare against;
    a mismatch is recorded as a note, never raised.
    """
    try:
        validate_datum(d)
    except DatumError as e:
        raise PipelineError("validate", e) from e
    try:
        param = build_param(d)
    except ValueError as e:
        raise PipelineError("langlands", e) from e
    try:
        d_param = dual(param.kind, param.partition)
    except ValueError as e:
        raise PipelineError("dual", e) from e
    try:
        wf = wf_total(d, method=method, oracle=oracle)
    except ValueError as e:
        raise PipelineError("wavefront", e) from e
    kind = group_algebra_kind(d.group)
    if d_param.kind != kind:
        raise PipelineError("dual", ValueError(f"dual lands in {d_param.kind}, expected {kind}"))
    rel = dominance(wf.combined, d_param.partition)
    notes = []
    if not wf.agrees:
        notes.append(f"mu-sum {wf.mu_sum} differs from per-factor {wf.per_factor_concat}")
    if wf.oracle is OracleVerdict.NO:
        notes.append(f"oracle {list(map(str, wf.oracle_factors))} differs from per-factor {list(map(str, wf.per_factor))}")
    if reference_wavefront is not None and Partition(reference_wavefront) != wf.combined:
        notes.append(f"reference wavefront {Partition(reference_wavefront)} differs from computed {wf.combined}")
    return ConjectureReport(
        datum=d,
        langlands=param.partition,
        dual_of_langlands=d_param.partition,
        wavefront=wf.combined,
        dominance_holds=rel in (Dominance.LEQ, Dominance.EQUAL),
        equality=rel is Dominance.EQUAL,
        hyperspecial=d.is_hyperspecial,
        notes=notes,
    )


def single_shared_piece(d: SupercuspidalDatum) -> bool:
    """One polynomial, present on both factors, and nothing else."""
    if any(not f.is_empty() for f in d.factors):
        return False
    if len(d.unitary) != 1:
        return False
    u = d.unitary[0]
    return u.count == 1 and u.m1 > 0 and u.m2 > 0


def _gamma_plus_big(a: int) -> Partition:
    return Partition([2 * a + 1] + [x for j in range(a, 0, -1) for x in (2 * j - 1, 2 * j - 1)])


def _gamma_plus_small(a: int) -> Partition:
    return Partition(x for j in range(a, 0, -1) for x in (2 * j, 2 * j))


def _gamma_minus_big(b: int) -> Partition:
    if b == 0:
        return Partition()
    return Partition([2 * b] + [x for j in range(b - 1, 0, -1) for x in (2 * j, 2 * j)])


def _gamma_minus_small(b: int) -> Partition:
    return Partition(x for j in range(b, 0, -1) for x in (2 * j - 1, 2 * j - 1))


def sp_block_bound(d: SupercuspidalDatum) -> tuple[Partition, Partition]:
    """Lower bound for the transposed Langlands partition of an Sp datum
    without unitary pieces, and its collapse.

    The transpose splits as ``gamma_+ + gamma_-`` with each gamma a union of
    a big and a small block; pairing the blocks (big with big if the larger
    ``m_+`` and larger ``m_-`` sit on the same factor, big with small
    otherwise) gives a partition below it.  Returns that union and the
    C-collapse of the union with its smallest part lowered.
    """
    if d.group.kind != "Sp" or d.unitary:
        raise ValueError("block bound is defined for Sp data without unitary pieces")
    f1, f2 = d.factors
    mp = sorted([f1.m_plus, f2.m_plus], reverse=True)
    mm = sorted([f1.m_minus, f2.m_minus], reverse=True)
    gp_big, gp_small = _gamma_plus_big(mp[0]), _gamma_plus_small(mp[1])
    gm_big, gm_small = _gamma_minus_big(mm[0]), _gamma_minus_small(mm[1])
    plus_first = f1.m_plus >= f2.m_plus
    minus_first = f1.m_minus >= f2.m_minus
    if plus_first == minus_first:
        union = concat(psum(gp_big, gm_big), psum(gp_small, gm_small))
    else:
        union = concat(psum(gp_big, gm_small), psum(gp_small, gm_big))
    lowered = Partition(list(union[:-1]) + [union[-1] - 1])
    return union, collapse(OrbitKind.C(lowered.size // 2), lowered)


# enumeration ----------------------------------------------------------------


def group_rank(d: SupercuspidalDatum) -> int:
    """Rank (or ``N`` for unitary groups) implied by the factor data."""
    uni = [sum(u.half_dim(i) for u in d.unitary) for i in range(2)]
    dims = [f.degree_one_dim() + 2 * uni[i] for i, f in enumerate(d.factors)]
    kind = d.group.kind
    quad = [dims[i] + (1 if f.kind == "SOoddFinite" else 0) for i, f in enumerate(d.factors)]
    if kind == "Sp":
        return (dims[0] - 1) // 2 + (dims[1] - 1) // 2
    if kind == "SOodd":
        return (quad[0] + quad[1] - 1) // 2
    if kind == "SOeven":
        return (quad[0] + quad[1]) // 2
    if kind == "UUnramified":
        return dims[0] + dims[1]
    sp_i = 0 if d.factors[0].kind == "SpFinite" else 1
    return dims[sp_i] - 1 + quad[1 - sp_i]


def _deg1_options(kind: str, budget: int) -> list[tuple[FactorDatum, int]]:
    """Degree-one factor data with their cost in the group's rank unit."""
    out = []
    for p in range(budget + 2):
        for q in range(budget + 2):
            if kind == "SpFinite":
                cost = p * p + p + q * q
                if cost <= budget:
                    out.append((FactorDatum(kind, p, q), cost))
            elif kind == "SOoddFinite":
                cost = p * p + p + q * q + q
                if cost <= budget:
                    out.append((FactorDatum(kind, p, q, 1), cost))
            elif kind == "SOevenFinite":
                cost = p * p + q * q
                if cost <= budget:
                    for an in (0, 2):
                        out.append((FactorDatum(kind, p, q, an), cost))
    if kind == "UFinite":
        out.append((FactorDatum(kind), 0))
    return out


def _atoms(budget: int, scale: int) -> list[tuple[int, int, int, int]]:
    """(k, m1, m2, cost) for one polynomial; cost is ``scale * k * (T(m1) + T(m2))``."""
    out = []
    k = 1
    while scale * k <= budget:
        for m1 in range(budget + 1):
            for m2 in range(budget + 1):
                if m1 + m2 == 0:
                    continue
                cost = scale * k * (tri(m1) + tri(m2))
                if cost <= budget:
                    out.append((k, m1, m2, cost))
        k += 1
    return out


def _unitary_multisets(atoms, budget: int, start: int = 0) -> Iterator[tuple[tuple[UnitaryPiece, ...], int]]:
    yield (), 0
    for idx in range(start, len(atoms)):
        k, m1, m2, cost = atoms[idx]
        count = 1
        while count * cost <= budget:
            for rest, used in _unitary_multisets(atoms, budget - count * cost, idx + 1):
                yield (UnitaryPiece(k, m1, m2, count),) + rest, count * cost + used
            count += 1


# factor kinds per group kind, with a unit conversion for degree-one costs
def _factor_kind_pairs(group_kind: str) -> list[tuple[str, str]]:
    if group_kind == "Sp":
        return [("SpFinite", "SpFinite")]
    if group_kind == "SOodd":
        return [("SOoddFinite", "SOevenFinite"), ("SOevenFinite", "SOoddFinite")]
    if group_kind == "SOeven":
        return [("SOevenFinite", "SOevenFinite"), ("SOoddFinite", "SOoddFinite")]
    if group_kind == "UUnramified":
        return [("UFinite", "UFinite")]
    return [
        ("SpFinite", "SOoddFinite"),
        ("SpFinite", "SOevenFinite"),
        ("SOoddFinite", "SpFinite"),
        ("SOevenFinite", "SpFinite"),
    ]


# rank unit per group: unitary pieces cost `scale * k * (T1 + T2)`
_UNITARY_SCALE = {"Sp": 1, "SOodd": 1, "SOeven": 1, "UUnramified": 2, "URamified": 2}
_DEG1_SCALE = {"Sp": 1, "SOodd": 1, "SOeven": 1, "UUnramified": 1, "URamified": 2}


def _canonical_key(d: SupercuspidalDatum) -> tuple:
    return (
        tuple((f.m_plus, f.m_minus) for f in d.factors),
        tuple((u.k, u.m1, u.m2, u.count) for u in d.unitary),
    )


def _keep_sp(d: SupercuspidalDatum) -> bool:
    """Keep one representative per factor swap: larger n1, then larger key."""
    s = d.swapped()
    vd, vs = validate_datum(d), validate_datum(s)
    if vd.ranks != vs.ranks:
        return vd.ranks[0] > vd.ranks[1]
    return _canonical_key(d) >= _canonical_key(s)


def enumerate_data(
    group_kind: str, max_rank: int, bound: int = DEFAULT_RANK_BOUND
) -> list[SupercuspidalDatum]:
    """Every datum of the given group kind with group rank (``N`` for unitary
    groups) between 1 and ``max_rank``, in a deterministic order.

    Sp data are listed once per factor swap; SO and ramified unitary data keep
    both factor orders, since the string rules are not symmetric there.
    """
    group_kind = group_kind_name(group_kind)
    if max_rank < 0:
        raise ValueError(f"max_rank must be non-negative, got {max_rank}")
    if group_kind in ("UUnramified", "URamified"):
        # unitary groups are sized by N, about twice the rank
        bound = 2 * bound + 1
    if max_rank > bound:
        raise ValueError(f"max_rank {max_rank} exceeds the enumeration bound {bound}")
    uscale = _UNITARY_SCALE[group_kind]
    dscale = _DEG1_SCALE[group_kind]
    # summed costs never exceed the group rank, so they prune safely
    budget = max_rank
    multisets = list(_unitary_multisets(_atoms(budget, uscale), budget))
    seen = set()
    out = []
    for k1, k2 in _factor_kind_pairs(group_kind):
        opts1 = _deg1_options(k1, budget)
        opts2 = _deg1_options(k2, budget)
        for f1, c1 in opts1:
            if dscale * c1 > budget:
                continue
            for f2, c2 in opts2:
                if dscale * (c1 + c2) > budget:
                    continue
                for pieces, cu in multisets:
                    if dscale * (c1 + c2) + cu > budget:
                        continue
                    if group_kind == "UUnramified" and not pieces:
                        continue
                    d = _make(group_kind, f1, f2, pieces)
                    if d is None:
                        continue
                    n = group_rank(d)
                    if not 1 <= n <= max_rank:
                        continue
                    d = SupercuspidalDatum(GroupSpec(d.group.kind, n, d.group.order), d.factors, d.unitary)
                    try:
                        validate_datum(d)
                    except DatumError:
                        continue
                    if group_kind == "Sp" and not _keep_sp(d):
                        continue
                    key = _sort_key(d)
                    if key in seen:
                        continue
                    seen.add(key)
                    out.append(d)
    out.sort(key=_sort_key)
    return out


def _make(group_kind: str, f1: FactorDatum, f2: FactorDatum, pieces) -> SupercuspidalDatum | None:
    order = None
    if group_kind == "URamified":
        order = "sp-first" if f1.kind == "SpFinite" else "so-first"
    try:
        return SupercuspidalDatum(GroupSpec(group_kind, 0, order), (f1, f2), pieces)
    except DatumError:
        return None


def _sort_key(d: SupercuspidalDatum) -> tuple:
    return (
        d.group.n,
        d.group.order or "",
        tuple((f.kind, f.m_plus, f.m_minus, f.an if f.an is not None else -1) for f in d.factors),
        tuple((u.k, u.m1, u.m2, u.count) for u in d.unitary),
    )


def summarize(reports: Iterable[ConjectureReport]) -> dict[str, Any]:
    stats: Counter = Counter()
    failures = []
    divergences = []
    for r in reports:
        stats["count"] += 1
        stats["equal" if r.equality else "strict"] += int(r.dominance_holds)
        if r.hyperspecial:
            stats["hyperspecial"] += 1
            stats["hyperspecial_equal"] += int(r.equality)
        if single_shared_piece(r.datum):
            stats["single_shared_piece"] += 1
            stats["single_shared_piece_equal"] += int(r.equality)
        if not r.dominance_holds:
            failures.append((_sort_key(r.datum), r.to_json()))
        if r.notes:
            divergences.append((_sort_key(r.datum), r.to_json()))
    count = stats.pop("count", 0)
    equality_stats = {
        key: stats.get(key, 0)
        for key in (
            "equal",
            "strict",
            "hyperspecial",
            "hyperspecial_equal",
            "single_shared_piece",
            "single_shared_piece_equal",
        )
    }
    return {
        "count": count,
        # sorted by datum so the summary does not depend on evaluation order
        "dominance_failures": [j for _, j in sorted(failures, key=lambda t: t[0])],
        "equality_stats": equality_stats,
        "divergences": [j for _, j in sorted(divergences, key=lambda t: t[0])],
    }


def run_verification(
    group_kind: str,
    max_rank: int,
    hyperspecial_only: bool = False,
    method: str = "per-factor",
    oracle: bool = False,
) -> dict[str, Any]:
    """Check every enumerated datum; failures and divergences are returned as
    data, sorted by datum."""
    data = enumerate_data(group_kind, max_rank)
    if hyperspecial_only:
        data = [d for d in data if d.is_hyperspecial]
    summary = summarize(check_datum(d, method=method, oracle=oracle) for d in data)
    summary["group"] = group_kind_name(group_kind)
    summary["max_rank"] = max_rank
    return summary
