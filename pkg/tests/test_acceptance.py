"""Runs the twelve acceptance suites once and reports one line per criterion.

The heavy lifting (sample pools, fiber tables, constructed witnesses) is
shared across suites through verify.run_all, so the whole module stays well
under the runtime budget.
"""

import pytest

from nilcomm import verify


@pytest.fixture(scope="session")
def results():
    out = verify.run_all()
    assert len(out) == 12
    return {r.criterion: r for r in out}


def _report(results, k):
    r = results[k]
    print(f"\n{r.line()}")
    assert r.passed, r.line()
    assert r.checked > 0


def test_criterion_01_squarezero_partners(results):
    _report(results, 1)
    # one check per (shape, rank) cell: sum of p(n) * (floor(n/2)+1) for n <= 10
    assert results[1].checked == 663


def test_criterion_02_two_column_images(results):
    _report(results, 2)


def test_criterion_03_antidiagonal_types(results):
    _report(results, 3)
    assert "a/b/c" in results[3].detail


def test_criterion_04_block_rank_formulas(results):
    _report(results, 4)


def test_criterion_05_two_part_realizability(results):
    _report(results, 5)
    # the negative side draws 10^4 samples per two-part shape, 25 shapes for n <= 10
    assert results[5].checked >= 250000


def test_criterion_06_staircase_fibers(results):
    _report(results, 6)


def test_criterion_07_two_part_fibers(results):
    _report(results, 7)


def test_criterion_08_worked_fiber(results):
    _report(results, 8)


def test_criterion_09_worked_image(results):
    _report(results, 9)


def test_criterion_10_idempotence_stability(results):
    _report(results, 10)


def test_criterion_11_constraint_soundness(results):
    _report(results, 11)


def test_criterion_12_rank_minimal_uniqueness(results):
    _report(results, 12)
