import pytest

from ayrep.groups import Permutation, identity, partitions
from ayrep.tableaux import (
    SkewShape,
    enumerate_standard,
    is_column_tableau,
    is_row_tableau,
)
from ayrep.tops import (
    column_tableau_check,
    is_top_brute,
    maximal_elements_of_cell,
    top_elements,
)


def test_is_top_brute_examples():
    assert is_top_brute(identity(4))
    assert is_top_brute(Permutation((1, 3, 2)))
    assert not is_top_brute(Permutation((2, 1, 3)))
    assert not is_top_brute(Permutation((2, 3, 1)))


def test_top_elements_small():
    r2 = top_elements(2)
    assert r2.oracle == frozenset({identity(2)})
    assert r2.p_n == 2
    assert r2.distinct_candidates == 1
    assert r2.oracle_matches_down

    r3 = top_elements(3)
    assert r3.oracle == frozenset({identity(3), Permutation((1, 3, 2))})
    assert r3.oracle_matches_down
    assert not r3.oracle_matches_up  # bottom-to-top reading disagrees


def test_candidate_for_three_two():
    report = top_elements(5)
    row = next(r for r in report.rows if r.lam == (3, 2))
    assert row.maximum == Permutation((1, 4, 2, 5, 3))
    assert row.interval_size == 5
    assert row.down_matches_maximum
    assert not row.up_matches_maximum
    assert row.is_interval
    assert row.irreducible


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_row_cells_are_intervals_with_column_maximum(n):
    for lam in partitions(n):
        assert column_tableau_check(lam)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_other_fillings_have_two_maximal_elements(n):
    for lam in partitions(n):
        shape = SkewShape(lam)
        for q in enumerate_standard(shape):
            if is_row_tableau(q) or is_column_tableau(q):
                assert len(maximal_elements_of_cell(q)) == 1
            else:
                assert len(maximal_elements_of_cell(q)) >= 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_oracle_equals_candidates(n):
    report = top_elements(n)
    assert report.oracle_matches_down
    assert report.distinct_candidates == (report.p_n if n == 1 else report.p_n - 1)
