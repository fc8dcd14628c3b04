"""Acceptance suite: every identity this package exists to check, at full
desk scale, with zero tolerance (all arithmetic is exact integers).

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL
line per criterion.
"""

import functools
import itertools
import time

from hookpart import anatomy, cli, explorer, statistics
from hookpart.partitions import cells, count_partitions, partitions_of
from hookpart.qseries import (
    euler_inv,
    gauss_binomial,
    make_monomial,
    one,
    verify_fact1,
    verify_fact2,
)


def criterion(number, description):
    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            started = time.time()
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"FAIL criterion {number}: {description}")
                raise
            print(
                f"PASS criterion {number}: {description} [{time.time() - started:.1f}s]"
            )

        return inner

    return wrap


@criterion(1, "arm-leg and arm-left pair multisets coincide for all n <= 40")
def test_criterion_01_theorem1(tmp_path):
    out = tmp_path / "theorem1.txt"
    started = time.time()
    code = cli.run(["verify", "theorem1", "--n-max", "40", "--out", str(out)])
    elapsed = time.time() - started
    assert code == 0
    assert out.read_text().strip().endswith("ok (41 checks)")
    assert elapsed < 60, f"full sweep took {elapsed:.1f}s"


@criterion(2, "hook and part polynomials identical for all n <= 40")
def test_criterion_02_identity1(tmp_path):
    out = tmp_path / "identity1.txt"
    code = cli.run(["verify", "identity1", "--n-max", "40", "--out", str(out)])
    assert code == 0
    assert out.read_text().strip().endswith("ok (41 checks)")


@criterion(3, "pair counts match the closed-form series for c+d <= 8, n <= 40")
def test_criterion_03_lemmas():
    for c in range(9):
        for d in range(9 - c):
            for stat in statistics.PAIR_STATS:
                report = statistics.verify_lemma(c, d, stat, 40, 40)
                assert report.passed, report


@criterion(4, "series facts 1 and 2 hold for a <= 6, 1 <= k <= 4 at order 60")
def test_criterion_04_facts_1_2():
    for a in range(7):
        for k in range(1, 5):
            report = verify_fact1(a, k, 60)
            assert report.passed, report
    for k in range(1, 5):
        report = verify_fact2(k, 60)
        assert report.passed, report


@criterion(5, "box enumerator: brute = closed for m,n <= 6; recurrence for m,n <= 10")
def test_criterion_05_fact3():
    for m in range(7):
        for n in range(7):
            report = statistics.verify_fact3(m, n)
            assert report.passed, report
    for m in range(11):
        for n in range(11):
            order = m * n
            closed = gauss_binomial(m, n, order)
            if m == 0 or n == 0:
                assert closed == one(order), (m, n)
            else:
                stepped = make_monomial(n, order) * gauss_binomial(
                    m - 1, n, order
                ) + gauss_binomial(m, n - 1, order)
                assert closed == stepped, (m, n)


@criterion(6, "bounded-part counts match 1/(q)_m for m <= 6, n <= 40, plus conjugation")
def test_criterion_06_fact4():
    for m in range(7):
        report = statistics.verify_fact4(m, 40)
        assert report.passed, report


@criterion(7, "marked-hook series match brute corner counts (c,d,i,j <= 3, n <= 25)")
def test_criterion_07_anatomy():
    n_max = 25
    # independent oracle: one sweep tallying every cell by its four corner
    # coordinates (arm, leg, row-1, col-1), capped at 3 each
    table = {}
    for n in range(n_max + 1):
        for parts in partitions_of(n):
            for (row, col), stats in cells(parts):
                if stats.arm <= 3 and stats.leg <= 3 and row <= 4 and col <= 4:
                    key = (stats.arm, stats.leg, row - 1, col - 1)
                    per_n = table.setdefault(key, [0] * (n_max + 1))
                    per_n[n] += 1
    zeros = [0] * (n_max + 1)
    for c, d, i, j in itertools.product(range(4), repeat=4):
        series = anatomy.anatomy_gf(c, d, i, j, n_max)
        expected = table.get((c, d, i, j), zeros)
        assert list(series.coeffs) == expected, (c, d, i, j)
    # spot-check the one-call brute counter against the sweep
    for c, d, i, j in itertools.product(range(2), repeat=4):
        for n in (0, 5, 9):
            assert anatomy.corner_count_brute(c, d, i, j, n) == table.get(
                (c, d, i, j), zeros
            )[n]
    # corner sums reproduce the arm-leg pair counts
    for c in range(4):
        for d in range(4):
            report = anatomy.verify_anatomy(c, d, n_max, n_max)
            assert report.passed, report


@criterion(8, "five-stage derivation chain agrees for c,d <= 4 at order 50")
def test_criterion_08_proof_chain():
    for c in range(5):
        for d in range(5):
            report = anatomy.proof_chain(c, d, 50)
            assert report.passed, report


@criterion(9, "canonical matchings verify for n <= 15 and are fully deterministic")
def test_criterion_09_explorer(capsys):
    for n in range(16):
        matching = explorer.canonical_matching(n)
        report = explorer.verify_matching(matching)
        assert report.passed, report
        assert matching == explorer.canonical_matching(n)
    # byte-identical CLI output across runs and parallelism settings
    outputs = []
    for jobs in ("1", "2", "1"):
        cli.run(["match", "--n", "9", "--format", "csv", "--jobs", jobs])
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] == outputs[2]


@criterion(10, "series, recurrence, and enumeration partition counts all agree, n <= 40")
def test_criterion_10_triangulation():
    series = euler_inv(40)
    for n in range(41):
        enumerated = sum(1 for _ in partitions_of(n))
        assert series.coefficient(n) == count_partitions(n) == enumerated, n
