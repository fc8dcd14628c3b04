import pytest

from hookpart.partitions import cells, count_partitions, partitions_of
from hookpart.qseries import lemma_rhs
from hookpart.statistics import (
    PairMultiset,
    build_pair_multiset,
    count_pair,
    stat_polynomial,
    verify_fact3,
    verify_fact4,
    verify_identity1,
    verify_lemma,
    verify_theorem1,
)

# --- independent oracle: per-cell tallies via the slow cell iterator ------


def slow_pair_counts(n, which):
    counts = {}
    for parts in partitions_of(n):
        for _, stats in cells(parts):
            key = (stats.arm, stats.leg) if which == "arm-leg" else (stats.arm, stats.left)
            counts[key] = counts.get(key, 0) + 1
    return counts


def slow_stat_poly(n, which):
    poly = {}
    for parts in partitions_of(n):
        for _, stats in cells(parts):
            e = stats.hook if which == "hook" else stats.part
            poly[e] = poly.get(e, 0) + 1
    return poly


# --- pair multisets --------------------------------------------------------


def test_multiset_goldens_n2():
    expected = {(0, 0): 2, (0, 1): 1, (1, 0): 1}
    assert dict(build_pair_multiset(2, "arm-leg").counts) == expected
    assert dict(build_pair_multiset(2, "arm-left").counts) == expected


def test_multiset_empty_at_zero():
    for stat in ("arm-leg", "arm-left"):
        pm = build_pair_multiset(0, stat)
        assert dict(pm.counts) == {} and pm.total == 0


@pytest.mark.parametrize("n", range(13))
@pytest.mark.parametrize("stat", ["arm-leg", "arm-left"])
def test_multiset_matches_slow_oracle(n, stat):
    assert dict(build_pair_multiset(n, stat).counts) == slow_pair_counts(n, stat)


@pytest.mark.parametrize("n", range(16))
def test_multiset_total_and_no_zero_entries(n):
    for stat in ("arm-leg", "arm-left"):
        pm = build_pair_multiset(n, stat)
        assert pm.total == n * count_partitions(n)
        assert all(count > 0 for count in pm.counts.values())


def test_multiset_totals_full_scale():
    # both fillings distribute n * p(n) cells, all the way to n = 40
    for n in range(41):
        expected = n * count_partitions(n)
        assert build_pair_multiset(n, "arm-leg").total == expected
        assert build_pair_multiset(n, "arm-left").total == expected


def test_multiset_rejects_bad_stat():
    with pytest.raises(ValueError):
        build_pair_multiset(3, "hook")


def test_pair_multiset_equality_semantics():
    a = PairMultiset(counts={(0, 0): 1})
    b = PairMultiset(counts={(0, 0): 1})
    c = PairMultiset(counts={(0, 0): 2})
    assert a == b and a != c


# --- the multiset identity --------------------------------------------------


@pytest.mark.parametrize("n", range(21))
def test_theorem1_passes(n):
    report = verify_theorem1(n)
    assert report.passed, report


@pytest.mark.parametrize("n", range(13))
def test_arm_leg_multiset_symmetric(n):
    # conjugation swaps arm and leg, so (c,d) and (d,c) counts agree
    pm = build_pair_multiset(n, "arm-leg")
    for (c, d), count in pm.counts.items():
        assert pm.count(d, c) == count


# --- stat polynomials --------------------------------------------------------


def test_stat_polynomial_goldens():
    assert stat_polynomial(1, "hook") == {1: 1}
    # hooks: (3) -> {3,2,1}, (2,1) -> {3,1,1}, (1,1,1) -> {3,2,1}
    assert stat_polynomial(3, "hook") == {1: 4, 2: 2, 3: 3}
    assert stat_polynomial(3, "part") == {1: 4, 2: 2, 3: 3}
    assert stat_polynomial(0, "hook") == {}


@pytest.mark.parametrize("n", range(13))
def test_stat_polynomial_matches_slow_oracle(n):
    assert stat_polynomial(n, "hook") == slow_stat_poly(n, "hook")
    assert stat_polynomial(n, "part") == slow_stat_poly(n, "part")


@pytest.mark.parametrize("n", range(21))
def test_identity1_passes(n):
    report = verify_identity1(n)
    assert report.passed, report


def test_stat_polynomial_rejects_bad_stat():
    with pytest.raises(ValueError):
        stat_polynomial(3, "arm-leg")


# --- pair counts vs closed form ----------------------------------------------


def test_count_pair_goldens():
    assert count_pair(3, 0, 0, "arm-leg") == 4
    assert count_pair(3, 1, 0, "arm-left") == 1
    assert count_pair(3, 5, 5, "arm-leg") == 0
    assert count_pair(3, 5, 5, "arm-left") == 0


def test_verify_lemma_goldens():
    report = verify_lemma(0, 0, "arm-left", 3, 10)
    assert report.passed
    assert [count_pair(n, 0, 0, "arm-left") for n in range(4)] == [0, 1, 2, 4]
    assert verify_lemma(1, 0, "arm-leg", 3, 10).passed
    assert verify_lemma(0, 1, "arm-leg", 3, 10).passed
    # the closed form depends only on c+d
    assert [count_pair(n, 0, 1, "arm-leg") for n in range(4)] == [
        lemma_rhs(1, 0, 10).coefficient(n) for n in range(4)
    ]


def test_verify_lemma_rejects_bad_range():
    with pytest.raises(ValueError):
        verify_lemma(2, 2, "arm-leg", 50, 40)


@pytest.mark.parametrize("stat", ["arm-leg", "arm-left"])
@pytest.mark.parametrize("c,d", [(0, 0), (1, 0), (0, 2), (2, 1), (3, 3)])
def test_verify_lemma_midscale(c, d, stat):
    assert verify_lemma(c, d, stat, 20, 20).passed


# --- box and bounded-part facts ------------------------------------------------


@pytest.mark.parametrize("m,n", [(0, 7), (2, 2), (4, 3), (1, 6), (5, 5)])
def test_fact3_passes(m, n):
    report = verify_fact3(m, n)
    assert report.passed, report


@pytest.mark.parametrize("m,order", [(0, 5), (2, 4), (3, 15), (6, 20)])
def test_fact4_passes(m, order):
    report = verify_fact4(m, order)
    assert report.passed, report


def test_fact4_bounded_golden():
    # parts <= 2: 1/((1-q)(1-q^2)) starts 1,1,2,2,3
    from hookpart.qseries import q_pochhammer

    series = q_pochhammer(1, 2, 4).invert()
    assert series.coeffs == (1, 1, 2, 2, 3)
    assert verify_fact4(2, 4).passed
