import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wfbound.partitions import (
    Dominance,
    Partition,
    PartitionSet,
    SizeMismatch,
    concat,
    dominance,
    leq,
    parse_partition,
    partitions_of,
    psum,
    set_leq,
    string_interval,
    transpose,
)

partitions = st.lists(st.integers(min_value=0, max_value=30), max_size=30).map(Partition)


def test_normalization():
    assert Partition([1, 0, 3, 2, 0]) == (3, 2, 1)
    assert Partition([0, 0]) == Partition()
    assert Partition().size == 0
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_text_format_round_trip():
    assert str(Partition([5, 3, 1])) == "[5,3,1]"
    assert str(Partition()) == "[]"
    assert parse_partition(" [ 3, 2 ,1 ]") == (3, 2, 1)
    assert parse_partition("[4,0]") == (4,)
    assert parse_partition("[]") == ()
    for bad in ("5,3,1", "[5,-3]", "[a]", "[1,,2]", "", "[1,3,2]"):
        with pytest.raises(ValueError):
            parse_partition(bad)


@pytest.mark.parametrize(
    "p, expected",
    [((5, 3, 1), (3, 2, 2, 1, 1)), ((), ()), ((2, 2, 1, 1), (4, 2))],
)
def test_transpose_examples(p, expected):
    assert transpose(p) == expected


def test_sum_examples():
    assert psum((3, 2, 1), (2, 1)) == (5, 3, 1)
    a = (17, 15, 15, 13, 13, 11, 11, 9, 9, 7, 7, 5, 5, 3, 3, 1, 1)
    b = (10, 8, 8, 6, 6, 4, 4, 2, 2)
    assert psum(a, b) == (27, 23, 23, 19, 19, 15, 15, 11, 11, 7, 7, 5, 5, 3, 3, 1, 1)
    assert psum(a, ()) == a


def test_concat_examples():
    assert concat((3, 1), (2, 2)) == (3, 2, 2, 1)
    strings = [string_interval(x) for x in (26, 18, 6, 6)]
    assert concat(*strings) == (
        26, 24, 22, 20, 18, 18, 16, 16, 14, 14, 12, 12, 10, 10,
        8, 8, 6, 6, 6, 6, 4, 4, 4, 4, 2, 2, 2, 2,
    )
    assert concat((4, 1), ()) == (4, 1)


def test_dominance_examples():
    assert dominance((2, 2), (3, 1)) is Dominance.LEQ
    assert dominance((1, 1, 1, 1), (4,)) is Dominance.LEQ
    assert dominance((4,), (1, 1, 1, 1)) is Dominance.GEQ
    assert dominance((2, 2, 2), (3, 1, 1, 1)) is Dominance.INCOMPARABLE
    assert dominance((3, 1), (3, 1)) is Dominance.EQUAL


def test_dominance_rejects_size_mismatch():
    with pytest.raises(SizeMismatch):
        dominance((2,), (1,))
    with pytest.raises(SizeMismatch):
        set_leq([(2,)], [(3,)])


@pytest.mark.parametrize(
    "alpha, expected",
    [(5, (5, 3, 1)), (6, (6, 4, 2)), (0, ()), (-1, ()), (1, (1,)), (2, (2,))],
)
def test_string_interval(alpha, expected):
    assert string_interval(alpha) == expected


def test_string_interval_sizes():
    for alpha in range(0, 60):
        expected = (alpha * alpha + 2 * alpha) // 4 if alpha % 2 == 0 else (alpha + 1) ** 2 // 4
        assert string_interval(alpha).size == expected


def test_set_leq_examples():
    assert set_leq([(2, 2)], [(4,)])
    assert set_leq([(2, 2, 2), (3, 1, 1, 1)], [(4, 2)])
    assert not set_leq([(4,)], [(2, 2)])


def test_partition_set_is_canonical():
    s = PartitionSet([(2, 2), (4,), (3, 1), (2, 2)])
    assert list(s) == [(4,), (3, 1), (2, 2)]
    with pytest.raises(SizeMismatch):
        PartitionSet([(2,), (1,)])


def test_partitions_of_counts():
    # p(n) for n = 0..12
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    assert [sum(1 for _ in partitions_of(n)) for n in range(13)] == counts


def test_dominance_is_partial_order():
    for n in range(0, 10):
        ps = list(partitions_of(n))
        for a in ps:
            assert leq(a, a)
            for b in ps:
                if a != b and leq(a, b):
                    assert not leq(b, a)
                    for c in ps:
                        if leq(b, c):
                            assert leq(a, c)


@settings(max_examples=300, deadline=None)
@given(partitions)
def test_transpose_involution(p):
    t = transpose(p)
    assert transpose(t) == p
    assert t.size == p.size


@settings(max_examples=300, deadline=None)
@given(partitions, partitions)
def test_transpose_exchanges_sum_and_concat(a, b):
    assert transpose(concat(a, b)) == psum(transpose(a), transpose(b))
    assert transpose(psum(a, b)) == concat(transpose(a), transpose(b))


@settings(max_examples=300, deadline=None)
@given(partitions, partitions, partitions, partitions)
def test_four_partition_inequality(a1, b1, a2, b2):
    assert leq(concat(psum(a1, a2), psum(b1, b2)), psum(concat(a1, b1), concat(a2, b2)))


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=9), st.data())
def test_order_laws_on_equal_sizes(n, data):
    ps = list(partitions_of(n))
    a, b = data.draw(st.sampled_from(ps)), data.draw(st.sampled_from(ps))
    c = data.draw(partitions)
    if leq(a, b):
        assert leq(transpose(b), transpose(a))
        assert leq(psum(a, c), psum(b, c))
        assert leq(concat(a, c), concat(b, c))


@settings(max_examples=200, deadline=None)
@given(partitions, partitions, partitions)
def test_sum_and_concat_algebra(a, b, c):
    assert concat(a, b) == concat(b, a)
    assert concat(concat(a, b), c) == concat(a, concat(b, c))
    assert psum(a, b) == psum(b, a)
    assert psum(a, b).size == a.size + b.size
    assert concat(a, b).size == a.size + b.size
