import warnings

import pytest

from nilcomm.commutant import dmap
from nilcomm.dinverse import (
    FiberCountFinding,
    dinv,
    dinv_diff2,
    dinv_n11,
    dinv_two_part,
    dmap_all,
    explore_q1,
    explore_q2,
    fiber_json,
    lemma1_structure,
    minimal_rank_check,
)
from nilcomm.partitions import (
    Partition,
    count_partitions,
    dominance_leq,
    enumerate_partitions,
    is_stable,
    partition_rank,
)


def P(*xs):
    return Partition(xs)


def test_table_is_complete_and_consistent():
    t = dmap_all(9)
    assert len(t.entries) == count_partitions(9)
    for lam, res in t.entries.items():
        assert res.d == dmap(lam).d
    counts = t.method_counts()
    assert sum(counts.values()) == count_partitions(9)


def test_fibers_partition_the_whole_set():
    for n in (6, 8, 10):
        t = dmap_all(n)
        images = {res.d for res in t.entries.values()}
        union = set()
        for mu in images:
            f = t.fiber(mu)
            assert not (union & f)
            union |= f
        assert union == set(enumerate_partitions(n))
        for mu in images:
            assert is_stable(mu)
            assert mu in t.fiber(mu)


def test_dinv_matches_table_fibers():
    for n in (7, 9):
        t = dmap_all(n)
        for mu in {res.d for res in t.entries.values()}:
            assert dinv(mu) == t.fiber(mu)
    # non-stable image has an empty fiber
    assert dinv(P(3, 2)) == set()


def test_worked_fiber():
    f = dinv(P(6, 2))
    assert f == {
        P(6, 2),
        P(6, 1, 1),
        P(4, 2, 2),
        P(4, 2, 1, 1),
        P(4, 1, 1, 1, 1),
        P(3, 3, 1, 1),
    }
    minimal = {
        p
        for p in f
        if not any(q != p and dominance_leq(q, p) for q in f)
    }
    assert minimal == {P(3, 3, 1, 1), P(4, 1, 1, 1, 1)}


def test_dinv_diff2_examples_and_brute():
    assert dinv_diff2(6, 1) == {P(6, 4), P(6, 2, 2), P(6, 2, 1, 1), P(6, 1, 1, 1, 1)}
    for mu, k in [(4, 1), (5, 1), (5, 2), (6, 2), (7, 1), (7, 3)]:
        head = tuple(mu - 2 * i for i in range(k + 1))
        target = P(*head)
        n = target.n
        table = dmap_all(n)
        assert dinv_diff2(mu, k) == table.fiber(target)
        assert len(dinv_diff2(mu, k)) == mu - 2 * k
    with pytest.raises(ValueError):
        dinv_diff2(4, 0)
    with pytest.raises(ValueError):
        dinv_diff2(4, 2)


def test_dinv_two_part_counts_and_sets():
    for r in (2, 3, 4):
        for mu in range(r + 1, 9):
            if mu - r < 1:
                continue
            got = dinv_two_part(mu, r)
            assert len(got) == (r - 1) * (mu - r)
            assert got == dmap_all(2 * mu - r).fiber(P(mu, mu - r))
    with pytest.raises(ValueError):
        dinv_two_part(5, 1)
    with pytest.raises(ValueError):
        dinv_two_part(5, 5)


def test_dinv_two_part_r5_brute():
    # the gap-5 fallback matches the stated count here, so no finding is filed
    with warnings.catch_warnings():
        warnings.simplefilter("error", FiberCountFinding)
        for mu in (6, 7, 8):
            got = dinv_two_part(mu, 5)
            assert len(got) == 4 * (mu - 5)
            assert got == dmap_all(2 * mu - 5).fiber(P(mu, mu - 5))


def test_dinv_n11_closed_form():
    for n in range(4, 13):
        assert dinv_n11(n) == dinv(P(n - 1, 1))
    assert P(3, 3, 1) in dinv_n11(7)
    assert P(6, 1) in dinv_n11(7)


def test_lemma1_structure_contains_fibers():
    for mu, r in [(5, 2), (6, 3), (7, 4), (7, 5), (8, 2)]:
        allowed = set(lemma1_structure(mu, r))
        fiber = dmap_all(2 * mu - r).fiber(P(mu, mu - r))
        assert fiber <= allowed


def test_minimal_rank_uniqueness():
    assert minimal_rank_check(2, 4)
    assert minimal_rank_check(1, 2)
    assert minimal_rank_check(4, 3)
    # and the claimed minimum really is in the fiber with minimal rank
    mu, r = 4, 3
    fiber = dinv(P(mu + r, mu))
    best = min(partition_rank(p) for p in fiber)
    winners = {p for p in fiber if partition_rank(p) == best}
    assert winners == {P(mu + 2, *([1] * (mu + r - 2)))}


def test_fiber_json_shape():
    d = fiber_json(P(4, 1))
    assert d["mu"] == [4, 1]
    assert d["size"] == len(d["fiber"])
    assert [4, 1] in d["fiber"]
    assert set(d["methods"]) <= {"formula", "monte-carlo"}


def test_explore_q1_report():
    rep = explore_q1(7, 5)
    assert rep.size == len(rep.fiber)
    assert rep.conjectured == (5 - 1) * (7 - 5)
    assert rep.matches == (rep.size == rep.conjectured)
    assert rep.n == 2 * 7 - 5
    with pytest.raises(ValueError):
        explore_q1(7, 4)
    with pytest.raises(ValueError):
        explore_q1(5, 5)


def test_explore_q2_report():
    rep = explore_q2(P(4, 2))
    assert rep.holds and rep.in_fiber
    assert rep.conjectured in dinv(P(4, 2))
    assert partition_rank(rep.conjectured) == rep.min_rank
    rep = explore_q2(P(5, 3, 1))
    assert rep.holds
    with pytest.raises(ValueError):
        explore_q2(P(3, 2))
