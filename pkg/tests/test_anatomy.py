import itertools

import pytest

from hookpart.anatomy import (
    anatomy_factors,
    anatomy_gf,
    corner_count_brute,
    corner_placements,
    min_degree,
    proof_chain,
    verify_anatomy,
)
from hookpart.partitions import conjugate, partitions_of
from hookpart.qseries import gauss_binomial, lemma_rhs, make_monomial


def test_gf_goldens():
    assert anatomy_gf(0, 0, 0, 0, 3).coeffs == (0, 1, 0, 0)
    assert anatomy_gf(0, 0, 0, 1, 3).coeffs == (0, 0, 1, 1)
    assert anatomy_gf(1, 1, 0, 0, 4).coeffs == (0, 0, 0, 1, 1)


def test_factors_are_the_named_pieces():
    factors = anatomy_factors(2, 3, 1, 4, 30)
    assert factors.corner_box == make_monomial(1 * 4, 30)
    assert factors.above_arm == make_monomial(3 * 1, 30)
    assert factors.left_of_leg == make_monomial(4 * 4, 30)
    assert factors.hook_cells == make_monomial(6, 30)
    assert factors.inside_hook == gauss_binomial(2, 3, 30)
    # the two free regions are bounded-rows enumerators
    assert factors.upper_right.coeffs[:3] == (1, 1, 1)  # at most 1 row
    assert factors.lower_left.coefficient(0) == 1


def test_rejects_negative_parameters():
    with pytest.raises(ValueError):
        anatomy_gf(-1, 0, 0, 0, 5)
    with pytest.raises(ValueError):
        corner_count_brute(0, 0, 0, -2, 5)


def test_brute_goldens():
    assert corner_count_brute(0, 0, 0, 0, 1) == 1  # only (1)
    assert corner_count_brute(0, 0, 0, 1, 3) == 1  # only (2,1)
    assert corner_count_brute(1, 1, 0, 0, 4) == 1  # only (2,2)
    assert corner_count_brute(0, 0, 0, 0, 0) == 0  # no cells at all


def slow_corner_count(c, d, i, j, n):
    """Second oracle: scan whole-diagram statistics instead of one cell."""
    row, col = i + 1, j + 1
    hits = 0
    for parts in partitions_of(n):
        if len(parts) < row or parts[row - 1] < col:
            continue
        conj = conjugate(parts)
        if parts[row - 1] - col == c and conj[col - 1] - row == d:
            hits += 1
    return hits


@pytest.mark.parametrize("c,d", list(itertools.product(range(3), repeat=2)))
def test_gf_matches_brute(c, d):
    for i, j in itertools.product(range(3), repeat=2):
        series = anatomy_gf(c, d, i, j, 14)
        for n in range(15):
            expected = corner_count_brute(c, d, i, j, n)
            assert expected == slow_corner_count(c, d, i, j, n)
            assert series.coefficient(n) == expected, (c, d, i, j, n)


def test_gf_symmetric_under_transposition():
    for c, d, i, j in itertools.product(range(3), repeat=4):
        assert anatomy_gf(c, d, i, j, 12) == anatomy_gf(d, c, j, i, 12)
        for n in range(10):
            assert corner_count_brute(c, d, i, j, n) == corner_count_brute(d, c, j, i, n)


def test_min_degree_and_placements():
    assert min_degree(0, 0, 0, 0) == 1
    assert min_degree(1, 2, 3, 4) == 4 + 12 + 3 * 2 + 4 * 3
    placements = list(corner_placements(0, 0, 3))
    assert (0, 0) in placements and (0, 2) in placements
    assert all(min_degree(0, 0, i, j) <= 3 for i, j in placements)
    # first weight where each placement can appear is its min degree
    for i, j in placements:
        series = anatomy_gf(0, 0, i, j, 10)
        first = next(e for e, coeff in enumerate(series.coeffs) if coeff)
        assert first == min_degree(0, 0, i, j)


@pytest.mark.parametrize("c,d", [(0, 0), (1, 0), (0, 2), (2, 2)])
def test_verify_anatomy_passes(c, d):
    report = verify_anatomy(c, d, 12, 15)
    assert report.passed, report


def test_verify_anatomy_trivial_and_errors():
    assert verify_anatomy(0, 0, 0, 10).passed
    with pytest.raises(ValueError):
        verify_anatomy(0, 0, 20, 10)


@pytest.mark.parametrize("c,d", [(0, 0), (1, 0), (0, 1), (3, 2), (2, 3)])
def test_proof_chain_passes(c, d):
    report = proof_chain(c, d, 35)
    assert report.passed, report


def test_proof_chain_zero_order():
    # every stage truncates to the zero series when c+d+1 > order
    assert proof_chain(0, 0, 0).passed
    assert lemma_rhs(0, 0, 0).is_zero()
