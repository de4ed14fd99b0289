import itertools

import pytest
from hypothesis import given, strategies as st

from nilcomm.partitions import (
    Partition,
    almost_rect,
    conjugate,
    count_partitions,
    dominance_leq,
    enumerate_partitions,
    is_almost_rectangular,
    is_stable,
    min_ar_cover,
    parse,
    partition_rank,
    partitions_with_parts,
    render,
    stable_partitions,
)

from .conftest import partitions_up_to
from . import oracles

parts_lists = st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=8)


def test_partition_normalizes_and_validates():
    assert Partition([1, 3, 1]) == (3, 1, 1)
    p = Partition([2, 2, 1])
    assert p.n == 5 and p.t == 3
    with pytest.raises(ValueError):
        Partition([3, 0])
    with pytest.raises(ValueError):
        Partition([-1])
    with pytest.raises(ValueError):
        Partition([])


@given(parts_lists)
def test_conjugate_involution(xs):
    p = Partition(xs)
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).n == p.n
    # first part of the conjugate is the number of parts
    assert conjugate(p)[0] == p.t


@given(parts_lists)
def test_parse_render_roundtrip(xs):
    p = Partition(xs)
    assert parse(render(p)) == p


def test_parse_forms():
    assert parse("4,2,1") == (4, 2, 1)
    assert parse("(2^3,1^2)") == (2, 2, 2, 1, 1)
    assert parse(" 5 ") == (5,)
    with pytest.raises(ValueError):
        parse("")
    with pytest.raises(ValueError):
        parse("2,x")
    with pytest.raises(ValueError):
        parse("3^0")


def test_enumeration_reverse_lex_and_count():
    for n in range(1, 13):
        ps = list(enumerate_partitions(n))
        assert ps[0] == (n,)
        assert ps[-1] == (1,) * n
        assert ps == sorted(ps, reverse=True)
        assert len(ps) == len(set(ps)) == count_partitions(n)
        assert count_partitions(n) == oracles.euler_partition_count(n)
        assert all(p.n == n for p in ps)


def test_partitions_with_parts_matches_filter():
    for n in range(1, 11):
        whole = list(enumerate_partitions(n))
        for t in range(1, n + 1):
            sub = list(partitions_with_parts(n, t))
            assert sub == [p for p in whole if p.t == t]


def test_almost_rect_basics():
    assert almost_rect(11, 3) == (4, 4, 3)
    assert almost_rect(12, 4) == (3, 3, 3, 3)
    assert almost_rect(5, 5) == (1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        almost_rect(3, 4)
    with pytest.raises(ValueError):
        almost_rect(3, 0)


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=1, max_value=60))
def test_almost_rect_is_the_unique_ar_shape(n, t):
    if t > n:
        return
    p = almost_rect(n, t)
    assert p.n == n and p.t == t
    assert p[0] - p[-1] <= 1
    assert is_almost_rectangular(p)
    # uniqueness among t-part partitions of n
    assert sum(1 for q in partitions_with_parts(n, t) if is_almost_rectangular(q)) == 1


def test_dominance_is_a_partial_order():
    ps = list(enumerate_partitions(7))
    for p in ps:
        assert dominance_leq(p, p)
    for p, q in itertools.permutations(ps, 2):
        if dominance_leq(p, q) and dominance_leq(q, p):
            assert p == q
    for p, q, r in itertools.product(ps, repeat=3):
        if dominance_leq(p, q) and dominance_leq(q, r):
            assert dominance_leq(p, r)


def test_dominance_extremes_and_conjugate_antitone():
    for n in range(2, 9):
        top, bottom = Partition([n]), Partition([1] * n)
        for p in enumerate_partitions(n):
            assert dominance_leq(p, top)
            assert dominance_leq(bottom, p)
        for p, q in itertools.combinations(enumerate_partitions(n), 2):
            assert dominance_leq(p, q) == dominance_leq(conjugate(q), conjugate(p))
    with pytest.raises(ValueError):
        dominance_leq(Partition([2, 1]), Partition([4]))


def test_min_ar_cover_against_oracles():
    for p in partitions_up_to(12):
        got = min_ar_cover(p)
        assert got == oracles.segment_min_ar(tuple(p))
        if p.t <= 7:
            assert got == oracles.setpart_min_ar(tuple(p))
        assert (got == 1) == is_almost_rectangular(p)


def test_stability_is_gap_two():
    for p in partitions_up_to(12):
        gaps_ok = all(p[i] - p[i + 1] >= 2 for i in range(p.t - 1))
        assert is_stable(p) == gaps_ok
        assert partition_rank(p) == p.n - p.t


def test_stable_partitions_generator():
    for n in range(1, 13):
        for first in range(1, n + 1):
            for count in range(1, n + 1):
                got = set(stable_partitions(n, first, count))
                want = {
                    p
                    for p in enumerate_partitions(n)
                    if is_stable(p) and p[0] == first and p.t == count
                }
                assert got == want
