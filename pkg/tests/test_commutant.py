from nilcomm.commutant import (
    commutant_basis,
    dmap,
    dmap_idempotence_check,
    dmap_index,
    sample_jordan,
    sample_nilpotent_commuting,
)
from nilcomm._rng import derive
from nilcomm.exactla import ExactMatrix, build_jordan, jordan_type, rank
from nilcomm.partitions import (
    Partition,
    dominance_leq,
    is_almost_rectangular,
    is_stable,
    min_ar_cover,
)

from .conftest import partitions_up_to
from . import oracles


def test_basis_dimension_matches_centralizer():
    for p in partitions_up_to(7):
        basis = commutant_basis(p)
        assert basis.dim == oracles.centralizer_dim_formula(p)
        assert basis.dim == oracles.kron_commutant_nullity(p)
        assert len(basis.gens) == basis.dim


def test_basis_generators_commute_and_are_independent():
    for p in [Partition([3, 1]), Partition([2, 2, 1]), Partition([4, 2])]:
        cb = commutant_basis(p)
        j = build_jordan(p)
        n = p.n
        dense = cb.basis
        for g in dense:
            assert g @ j == j @ g
        flat = ExactMatrix(
            [[g[r, c] for r in range(n) for c in range(n)] for g in dense]
        )
        assert rank(flat) == cb.dim == len(dense)


def test_samples_commute_and_are_nilpotent():
    for p in [Partition([3, 2]), Partition([2, 2, 2]), Partition([5, 3, 1])]:
        j = build_jordan(p)
        for i in range(10):
            s = sample_nilpotent_commuting(p, derive(3, i))
            assert s.matrix @ j == j @ s.matrix
            assert jordan_type(s.matrix) == s.jordan
            assert s.lam == p
    # seeded determinism
    a = sample_nilpotent_commuting(Partition([4, 2]), 123)
    b = sample_nilpotent_commuting(Partition([4, 2]), 123)
    assert a.matrix == b.matrix
    assert sample_jordan(Partition([4, 2]), 123) == a.jordan


def test_sampled_types_never_beat_the_image():
    for p in partitions_up_to(7):
        d = dmap(p).d
        for i in range(12):
            assert dominance_leq(sample_jordan(p, derive(17, p.n, i)), d)


def test_dmap_formula_routes():
    r = dmap(Partition([2, 2, 1]))
    assert r.d == (5,) and r.method == "formula-r1" and r.trials_used == 0
    r = dmap(Partition([3, 1, 1]))
    assert r.d == (4, 1) and r.method == "formula-r2"
    r = dmap(Partition([5, 3, 3, 2]))
    assert r.method.startswith("formula")
    stable = Partition([6, 4, 1])
    r = dmap(stable)
    assert r.d == stable
    assert r.index_check and r.parts_check


def test_dmap_known_values():
    assert dmap(Partition([3, 1, 1])).d == (4, 1)
    assert dmap(Partition([2, 1, 1])).d == (4,)
    assert dmap(Partition([6, 2])).d == (6, 2)
    assert dmap(Partition([4, 4, 3])).d == (11,)
    assert dmap(Partition([5, 5, 1])).d == (10, 1)


def test_dmap_ar_shapes_collapse():
    for p in partitions_up_to(12):
        if is_almost_rectangular(p):
            assert dmap(p).d == (p.n,)


def test_dmap_mc_agrees_with_formulas():
    for p in partitions_up_to(7):
        fast = dmap(p)
        slow = dmap(p, trials=48, force_mc=True, seed=2)
        assert fast.d == slow.d
        assert slow.method == "monte-carlo"


def test_dmap_index_matches_first_part():
    for p in partitions_up_to(10):
        assert dmap_index(p) == dmap(p).d[0]


def test_dmap_part_count_is_cover_size():
    for p in partitions_up_to(10):
        assert dmap(p).d.t == min_ar_cover(p)


def test_idempotence_and_stability_checker():
    for p in partitions_up_to(9):
        assert dmap_idempotence_check(p)
        d = dmap(p).d
        assert is_stable(d)
        assert (dmap(p).d == p) == is_stable(p)


def test_image_dominates_input():
    # the host itself commutes with its Jordan matrix, so the generic type
    # can only sit higher in the dominance order
    for p in partitions_up_to(9):
        assert dominance_leq(p, dmap(p).d)
