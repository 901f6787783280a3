"""Acceptance suite: each criterion is a function returning a
:class:`CriterionResult`.  Used by ``wfbound selftest`` and by the test suite.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product

from .g2 import verify_g2
from .langlands import FactorDatum, GroupSpec, SupercuspidalDatum, UnitaryPiece
from .orbits import OrbitKind, collapse, dual, dual_b_to_c_alternative, dual_kind, enumerate_orbits
from .partitions import (
    Dominance,
    Partition,
    concat,
    dominance,
    leq,
    partitions_of,
    psum,
    string_interval,
    transpose,
)
from .springer import oracle_wavefront_factor, staircase, unitary
from .verifier import check_datum, run_verification, sp_block_bound
from .wavefront import oracle_factor, wf_factor


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        limit = f" (limit {self.limit:g}s)" if self.limit else ""
        return f"[{status}] criterion {self.number}: {self.title}: {self.detail} [{self.seconds:.2f}s{limit}]"


def _timed(number: int, title: str, limit: float | None, fn) -> CriterionResult:
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed > limit:
        ok = False
        detail += f"; exceeded time limit {limit:g}s"
    return CriterionResult(number, title, ok, detail, elapsed, limit)


# 1 ---------------------------------------------------------------------------


def random_partition(rng: random.Random, max_part: int = 30, max_len: int = 30) -> Partition:
    length = rng.randint(0, max_len)
    return Partition(rng.randint(1, max_part) for _ in range(length))


def raise_box(rng: random.Random, p: Partition, moves: int) -> Partition:
    """A partition dominating ``p``: move boxes from lower rows to higher rows."""
    parts = list(p)
    for _ in range(moves):
        if len(parts) < 2:
            break
        i, j = sorted(rng.sample(range(len(parts)), 2))
        if parts[j] == 0:
            continue
        parts[i] += 1
        parts[j] -= 1
        parts.sort(reverse=True)
    return Partition(parts)


def partition_law_violations(seed: int = 0, samples: int = 10_000) -> list[str]:
    rng = random.Random(seed)
    bad = []
    for n in range(samples):
        a = random_partition(rng)
        b = raise_box(rng, a, rng.randint(0, 6))
        a2 = random_partition(rng)
        b2 = raise_box(rng, a2, rng.randint(0, 6))
        c, e = random_partition(rng), random_partition(rng)
        if not leq(transpose(b), transpose(a)):
            bad.append(f"#{n} law 1: {a} <= {b}")
        if not leq(concat(a, a2), concat(b, b2)):
            bad.append(f"#{n} law 2: {a},{a2} vs {b},{b2}")
        if transpose(concat(a, c)) != psum(transpose(a), transpose(c)):
            bad.append(f"#{n} law 3: {a},{c}")
        if not leq(concat(psum(a, a2), psum(c, e)), psum(concat(a, c), concat(a2, e))):
            bad.append(f"#{n} law 4: {a},{a2},{c},{e}")
        if not leq(psum(a, c), psum(b, c)):
            bad.append(f"#{n} law 5: {a} <= {b}, {c}")
    return bad


def criterion_1(seed: int = 0) -> CriterionResult:
    def run():
        bad = partition_law_violations(seed)
        return not bad, f"10000 seeded tuples (seed {seed}), {len(bad)} violations"

    return _timed(1, "partition laws", 5, run)


# 2 ---------------------------------------------------------------------------


def _kinds_for_size(n: int) -> list[OrbitKind]:
    if n % 2:
        return [OrbitKind.B(n // 2)]
    return [OrbitKind.C(n // 2), OrbitKind.D(n // 2)]


def collapse_mismatches(max_size: int = 16) -> tuple[int, list[str]]:
    checked = 0
    bad = []
    for n in range(1, max_size + 1):
        for kind in _kinds_for_size(n):
            orbits = list(enumerate_orbits(kind))
            for p in partitions_of(n):
                below = [q for q in orbits if leq(q, p)]
                maxima = [q for q in below if not any(r != q and leq(q, r) for r in below)]
                checked += 1
                if len(maxima) != 1 or collapse(kind, p) != maxima[0]:
                    bad.append(f"{kind} {p}: greedy {collapse(kind, p)}, maxima {maxima}")
    return checked, bad


def criterion_2() -> CriterionResult:
    def run():
        checked, bad = collapse_mismatches()
        return not bad, f"{checked} (partition, kind) pairs, {len(bad)} mismatches"

    return _timed(2, "collapse vs brute force", 30, run)


# 3 ---------------------------------------------------------------------------


def duality_problems(max_b_size: int = 15, max_rank: int = 6) -> tuple[int, list[str]]:
    bad = []
    checked = 0
    for n in range(1, max_b_size + 1, 2):
        for p in enumerate_orbits(OrbitKind.B(n // 2)):
            checked += 1
            if dual(OrbitKind.B(n // 2), p).partition != dual_b_to_c_alternative(p):
                bad.append(f"two recipes differ on {p}")
    for letter, rank in product("ABCD", range(1, max_rank + 1)):
        kind = OrbitKind(letter, rank)
        orbits = list(enumerate_orbits(kind))
        image = {p: dual(kind, p).partition for p in orbits}
        target = dual_kind(kind)
        for p in orbits:
            checked += 1
            q = image[p]
            back = dual(target, q).partition
            if dual(kind, back).partition != q:
                bad.append(f"{kind} {p}: d d d != d")
            for r in orbits:
                if leq(p, r) and not leq(image[r], q):
                    bad.append(f"{kind}: {p} <= {r} but duals not reversed")
        regular, zero = orbits[0], orbits[-1]
        t_orbits = list(enumerate_orbits(target))
        if image[regular] != t_orbits[-1] or image[zero] != t_orbits[0]:
            bad.append(f"{kind}: regular/zero not exchanged")
    return checked, bad


def criterion_3() -> CriterionResult:
    def run():
        checked, bad = duality_problems()
        return not bad, f"{checked} checks, {len(bad)} problems"

    return _timed(3, "duality coherence", 10, run)


# 4 ---------------------------------------------------------------------------


def springer_sweep_problems() -> tuple[int, list[str]]:
    bad = []
    checked = 0
    for m, k in product(range(1, 7), range(1, 5)):
        piece = unitary(k, m)
        got = oracle_wavefront_factor([piece], "C", piece.rank)
        checked += 1
        if got != staircase(m, 2 * k):
            bad.append(f"unitary k={k} m={m}: oracle {got}")
    for a, b in product(range(7), range(7)):
        for f in (
            FactorDatum("SpFinite", a, b),
            FactorDatum("SOoddFinite", a, b),
            FactorDatum("SOevenFinite", a, b, 0),
        ):
            checked += 1
            if oracle_factor(f) != wf_factor(f):
                bad.append(f"{f.kind} ({a},{b}): oracle {oracle_factor(f)}, closed form {wf_factor(f)}")
    return checked, bad


def criterion_4() -> CriterionResult:
    def run():
        checked, bad = springer_sweep_problems()
        return not bad, f"{checked} cases, {len(bad)} mismatches"

    return _timed(4, "Springer oracle sweep", 10, run)


# 5 ---------------------------------------------------------------------------


def criterion_5() -> CriterionResult:
    def run():
        s = run_verification("Sp", 10)
        eq = s["equality_stats"]
        ok = (
            not s["dominance_failures"]
            and eq["hyperspecial"] == eq["hyperspecial_equal"]
            and eq["single_shared_piece"] == eq["single_shared_piece_equal"]
            and eq["hyperspecial"] > 0
            and eq["single_shared_piece"] > 0
        )
        return ok, (
            f"{s['count']} data, {len(s['dominance_failures'])} dominance failures, "
            f"hyperspecial equal {eq['hyperspecial_equal']}/{eq['hyperspecial']}, "
            f"single shared piece equal {eq['single_shared_piece_equal']}/{eq['single_shared_piece']}"
        )

    return _timed(5, "Sp pipeline n <= 10", 60, run)


# 6, 7, 8 ---------------------------------------------------------------------


def sp_datum(a1: int, b1: int, a2: int, b2: int, unitary_pieces=()) -> SupercuspidalDatum:
    """Sp datum with ``(m_+, m_-) = (a1, b1)`` and ``(a2, b2)``; the rank is derived."""
    from .verifier import group_rank

    draft = SupercuspidalDatum(
        GroupSpec("Sp", 0),
        (FactorDatum("SpFinite", a1, b1), FactorDatum("SpFinite", a2, b2)),
        tuple(unitary_pieces),
    )
    return SupercuspidalDatum(GroupSpec("Sp", group_rank(draft)), draft.factors, draft.unitary)


SECOND_EXAMPLE_COLLAPSE = Partition(
    [22, 22, 20, 20, 18, 18, 16, 16, 14, 14, 12, 12, 10, 10, 10, 8, 8, 8, 6, 6, 6, 4, 4, 4, 2, 2, 2, 2]
)
SECOND_EXAMPLE_UNION = Partition(
    [22, 22, 20, 20, 18, 18, 16, 16, 14, 14, 12, 12, 11, 10, 9, 9, 8, 7, 7, 6, 5, 5, 4, 3, 3, 2, 2, 1, 1]
)
FIRST_EXAMPLE_PRINTED = concat(*(string_interval(x) for x in (26, 18, 6, 6)))


def criterion_6() -> CriterionResult:
    def run():
        d = sp_datum(8, 3, 6, 5)
        r = check_datum(d)
        langlands = concat(*(string_interval(x) for x in (29, 3, 15, 3)))
        wavefront = concat(*(string_interval(x) for x in (22, 22, 10, 2)))
        union, collapsed = sp_block_bound(d)
        checks = {
            "rank 148": d.group.n == 148,
            "langlands": r.langlands == langlands,
            "wavefront": r.wavefront == wavefront,
            "union": union == SECOND_EXAMPLE_UNION,
            "collapse (28 parts)": collapsed == SECOND_EXAMPLE_COLLAPSE and len(collapsed) == 28,
            "dominance": r.dominance_holds,
        }
        failed = [k for k, v in checks.items() if not v]
        return not failed, "all of " + ", ".join(checks) if not failed else "failed: " + ", ".join(failed)

    return _timed(6, "second example end to end", None, run)


def criterion_7() -> CriterionResult:
    def run():
        d = sp_datum(8, 5, 6, 2)
        r = check_datum(d, reference_wavefront=FIRST_EXAMPLE_PRINTED)
        expected = concat(*(string_interval(x) for x in (26, 16, 8, 6)))
        note = [n for n in r.notes if n.startswith("reference wavefront")]
        ok = r.wavefront == expected and len(note) == 1
        return ok, f"wavefront {r.wavefront}; divergence note: {note[0] if note else 'missing'}"

    return _timed(7, "first example consistency", None, run)


def criterion_8() -> CriterionResult:
    def run():
        d = sp_datum(0, 0, 0, 0, [UnitaryPiece(1, 1, 0), UnitaryPiece(1, 0, 1)])
        r = check_datum(d)
        ok = (
            r.wavefront == Partition([2, 2])
            and r.dual_of_langlands == Partition([4])
            and dominance(r.wavefront, r.dual_of_langlands) is Dominance.LEQ
        )
        return ok, f"wavefront {r.wavefront}, dual {r.dual_of_langlands}"

    return _timed(8, "strict inequality witness", None, run)


# 9 ---------------------------------------------------------------------------

RAMIFIED_MAX_N = 17


def criterion_9() -> CriterionResult:
    def run():
        parts = []
        ok = True
        for kind, bound in (("SOodd", 8), ("SOeven", 8), ("URamified", RAMIFIED_MAX_N)):
            s = run_verification(kind, bound)
            ok &= not s["dominance_failures"] and s["count"] > 0
            parts.append(f"{kind}<={bound}: {s['count']} data, {len(s['dominance_failures'])} failures")
        return ok, "; ".join(parts)

    return _timed(9, "SO and ramified unitary pipelines", 60, run)


# 10, 11 ----------------------------------------------------------------------


def criterion_10() -> CriterionResult:
    def run():
        results = verify_g2()
        ok = all(r.passed for r in results)
        return ok, ", ".join(f"({r.name}) {'pass' if r.passed else 'FAIL'}" for r in results)

    return _timed(10, "G2 tables", None, run)


def transpose_problems(max_size: int = 12) -> tuple[int, list[str]]:
    bad = []
    checked = 0
    for n in range(max_size + 1):
        parts = list(partitions_of(n))
        for p in parts:
            checked += 1
            if transpose(transpose(p)) != p:
                bad.append(f"transpose not an involution on {p}")
            for q in parts:
                if leq(p, q) and not leq(transpose(q), transpose(p)):
                    bad.append(f"{p} <= {q} not reversed")
    return checked, bad


def criterion_11() -> CriterionResult:
    def run():
        checked, bad = transpose_problems()
        return not bad, f"{checked} partitions, {len(bad)} problems"

    return _timed(11, "GL transpose duality", None, run)


CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
)


def run_all(seed: int = 0) -> list[CriterionResult]:
    out = []
    for c in CRITERIA:
        out.append(c(seed) if c is criterion_1 else c())
    return out
