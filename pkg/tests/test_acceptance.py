"""Acceptance criteria, one test per criterion, exact tolerances pinned.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.
"""

from ayrep.verify import (
    bn_suite,
    cells_suite,
    convexity_suite,
    coxeter_suite,
    flat_suite,
    induction_suite,
    minimal_suite,
    regular_suite,
    specht_suite,
    tops_suite,
)


def _report(num, description, result):
    print(f"[{'PASS' if result.ok else 'FAIL'}] criterion {num}: {description}")
    for line in result.details:
        print(f"    {line}")
    for ce in result.counterexamples[:10]:
        print(f"    counterexample: {ce}")
    assert result.ok, f"criterion {num} failed: {result.counterexamples[:3]}"


def test_criterion_01_coxeter_relations():
    _report(
        1,
        "involutions and braid relations, exact for seminormal and within 1e-9 "
        "for orthogonal-float, all skew shapes n<=5 plus a sampled set at n=6",
        coxeter_suite(n_max=5, include_sample_6=True, tol=1e-9),
    )


def test_criterion_02_cell_tableau_bijection():
    _report(
        2,
        "cell sizes equal standard-filling counts with verified relabel "
        "bijection, all skew shapes n<=6",
        cells_suite(n_max=6),
    )


def test_criterion_03_regular_representation():
    _report(
        3,
        "fully generic integer functionals (f_i = 3^i) give the exact regular "
        "character for n<=5",
        regular_suite(n_max=5),
    )


def test_criterion_04_flat_invariance():
    _report(
        4,
        ">=10 flats, >=3 generic integer functionals each, every base element: "
        "identical exact character tables",
        flat_suite(points_needed=3, span=6),
    )


def test_criterion_05_specht_identification():
    _report(
        5,
        "built characters equal the border-strip oracle on all classes for all "
        "skew shapes n<=5; all irreducibles realized; dimension identity n<=6",
        specht_suite(n_max=5, dim_sum_max=6),
    )


def test_criterion_06_minimal_cell_characterization():
    _report(
        6,
        "minimal-cell recognizer agrees with brute-force translated cells, n<=4",
        minimal_suite(n_max=4, seed=0),
    )


def test_criterion_07_induction():
    _report(
        7,
        "induced matrices match classically induced characters for all parabolic "
        "subsets and straight shapes n<=5; shuffle sizes match the product formula",
        induction_suite(n_max=5),
    )


def test_criterion_08_signed_group():
    _report(
        8,
        "signed-group forms pass all relations including the order-4 braid, match "
        "the classical pair form entrywise, satisfy the dimension identity, and "
        "are irreducible by exact norm, n<=4",
        bn_suite(n_max=4, tol=1e-9),
    )


def test_criterion_09_top_elements():
    _report(
        9,
        "oracle top set equals the column-reading candidates for n<=5 with the "
        "reading-convention report; every interval carries an irreducible",
        tops_suite(n_max=5),
    )


def test_criterion_10_convexity_and_genericity():
    _report(
        10,
        "descent cells from coordinates in [-3,3] are convex for n<=5; the two "
        "genericity tests agree exhaustively for n<=4 in [-2,2]",
        convexity_suite(n_max=5, coord_bound=3, equiv_n_max=4, equiv_bound=2),
    )
