import itertools

import pytest

from wfbound.langlands import FactorDatum, GroupSpec, SupercuspidalDatum, UnitaryPiece, group_algebra_kind
from wfbound.orbits import is_valid
from wfbound.partitions import Partition, concat, psum, string_interval
from wfbound.springer import staircase
from wfbound.verifier import enumerate_data, group_rank
from wfbound.wavefront import (
    OracleVerdict,
    degree_one_part,
    factor_unitary,
    oracle_factor,
    wf_factor,
    wf_total,
)


def S(*alphas):
    return concat(*(string_interval(a) for a in alphas))


def sp(a1, b1, a2=0, b2=0, unitary=()):
    factors = (FactorDatum("SpFinite", a1, b1), FactorDatum("SpFinite", a2, b2))
    n = group_rank(SupercuspidalDatum(GroupSpec("Sp", 0), factors, tuple(unitary)))
    return SupercuspidalDatum(GroupSpec("Sp", n), factors, tuple(unitary))


def test_wf_factor_examples():
    assert wf_factor(FactorDatum("SpFinite", 8, 5)) == S(26, 6)
    assert wf_factor(FactorDatum("SpFinite", 0, 1)) == (2,)
    assert wf_factor(FactorDatum("SpFinite"), [(1, 2, 1)]) == (4, 2)
    assert wf_factor(FactorDatum("SOoddFinite", 1, 0)) == (3, 1, 1)


def test_wf_factor_collapses_invalid_orthogonal_sums():
    # the part-by-part sum breaks the parity rule; the oracle returns the collapse
    cases = [
        (FactorDatum("SOoddFinite"), (1, 2, 1), (5, 2), (5, 1, 1)),
        (FactorDatum("SOoddFinite"), (1, 3, 1), (7, 4, 2), (7, 3, 3)),
        (FactorDatum("SOevenFinite", an=0), (1, 1, 1), (2,), (1, 1)),
        (FactorDatum("SOevenFinite", an=0), (1, 2, 1), (4, 2), (3, 3)),
    ]
    for f, piece, raw, expected in cases:
        assert psum(degree_one_part(f), staircase(piece[1], 2 * piece[0])) == raw
        assert wf_factor(f, [piece]) == expected
        assert oracle_factor(f, [piece]) == expected


def test_wf_total_examples():
    r = wf_total(sp(8, 3, 6, 5))
    assert r.combined == S(22, 22, 10, 2)
    assert r.per_factor == (S(22, 10), S(22, 2))
    assert wf_total(sp(1, 0)).combined == (2, 2)
    assert wf_total(sp(0, 0, unitary=[UnitaryPiece(1, 1, 0)])).combined == (2,)


def test_first_example_wavefront():
    r = wf_total(sp(8, 5, 6, 2))
    assert r.combined == S(26, 16, 8, 6)
    assert r.combined.size == 2 * 143


def test_unknown_method():
    with pytest.raises(ValueError):
        wf_total(sp(1, 0), method="average")


def test_prop_pure_unitary_case():
    pieces = [UnitaryPiece(1, 2, 1), UnitaryPiece(2, 1, 3, count=2)]
    d = sp(0, 0, unitary=pieces)
    expected = []
    for i in range(2):
        stairs = []
        for u in pieces:
            stairs += [staircase(u.m(i), 2 * u.k)] * u.count
        expected.append(psum(*stairs))
    assert wf_total(d).combined == concat(*expected)


@pytest.mark.parametrize("group, max_rank", [("Sp", 8), ("SOodd", 6), ("SOeven", 6), ("URamified", 9), ("UUnramified", 8)])
def test_result_invariants(group, max_rank):
    for d in enumerate_data(group, max_rank):
        r = wf_total(d)
        kind = group_algebra_kind(d.group)
        assert r.combined == r.per_factor_concat
        assert r.combined.size == kind.boxes
        assert is_valid(kind, r.combined)
        mu = wf_total(d, method="mu-sum")
        assert mu.combined == r.mu_sum
        assert is_valid(kind, mu.combined)


def _one_sided(d):
    busy = [bool(degree_one_part(f)) or bool(factor_unitary(d, i)) for i, f in enumerate(d.factors)]
    return sum(busy) <= 1


@pytest.mark.parametrize("group, max_rank", [("Sp", 8), ("SOodd", 6), ("SOeven", 6)])
def test_methods_agree_when_content_sits_on_one_factor(group, max_rank):
    for d in enumerate_data(group, max_rank):
        if _one_sided(d):
            assert wf_total(d).agrees


def test_methods_can_diverge():
    # degree-one content on one factor, a unitary piece on the other
    d = sp(1, 0, 0, 0, unitary=[UnitaryPiece(1, 0, 1)])
    r = wf_total(d)
    assert r.per_factor == ((2, 2), (2,))
    assert r.mu_sum == (4, 2)
    assert not r.agrees


def test_oracle_agrees_on_factor_grid():
    kinds = [
        FactorDatum("SpFinite", p, q)
        for p, q in itertools.product(range(5), repeat=2)
    ] + [
        FactorDatum("SOoddFinite", p, q)
        for p, q in itertools.product(range(5), repeat=2)
    ] + [
        FactorDatum("SOevenFinite", p, q, an=0)
        for p, q in itertools.product(range(5), repeat=2)
    ]
    for f in kinds:
        assert oracle_factor(f) == wf_factor(f)
        for k, m in itertools.product(range(1, 5), range(1, 7)):
            if m * k > 12:
                continue
            assert oracle_factor(f, [(k, m, 1)]) == wf_factor(f, [(k, m, 1)])
    assert oracle_factor(FactorDatum("UFinite")) is None


@pytest.mark.parametrize("group, max_rank", [("Sp", 6), ("SOodd", 5), ("SOeven", 5), ("URamified", 8)])
def test_oracle_verdicts(group, max_rank):
    for d in enumerate_data(group, max_rank):
        assert wf_total(d, oracle=True).oracle is OracleVerdict.YES


def test_oracle_not_run_for_unitary_groups():
    for d in enumerate_data("UUnramified", 4):
        r = wf_total(d, oracle=True)
        assert r.oracle is OracleVerdict.NOT_RUN
        assert r.oracle_factors == (None, None)
    assert wf_total(sp(1, 0)).oracle is OracleVerdict.NOT_RUN


def test_degree_one_parts():
    assert degree_one_part(FactorDatum("SpFinite", 2, 3)) == S(10, 0)
    assert degree_one_part(FactorDatum("SpFinite", 1, 3)) == S(8, 2)
    assert degree_one_part(FactorDatum("SOoddFinite", 2, 0)) == S(5, 3)
    assert degree_one_part(FactorDatum("SOevenFinite", 2, 1, an=0)) == S(5, 1)
    assert degree_one_part(FactorDatum("UFinite")) == Partition()
