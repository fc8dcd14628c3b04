"""Cell-statistic multisets over all partitions of n, and their verifiers.

Filling every cell of every partition of n with its (arm, leg) pair gives
one multiset of pairs; filling with (arm, left) gives another.  These two
multisets coincide for every n -- that is the identity this package
checks, refines, and realizes by explicit matchings.  Collapsing the
pairs through c+d+1 recovers the coarser statement that hook lengths and
part lengths are equidistributed over the cells.

Pair multisets are stored sparsely as count maps; totals grow as
n * p(n), so flattened lists are never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from hookpart.partitions import box_gf_brute, conjugate, partitions_of
from hookpart.qseries import (
    VerifyReport,
    compare_series,
    gauss_binomial,
    lemma_rhs,
    make_monomial,
    one,
    q_pochhammer,
)

PAIR_STATS = ("arm-leg", "arm-left")
CELL_STATS = ("hook", "part")


@dataclass(frozen=True, eq=False)
class PairMultiset:
    """Sparse multiset of (c, d) statistic pairs with a cached total size."""

    counts: Mapping[tuple[int, int], int]
    total: int = field(default=-1)

    def __post_init__(self) -> None:
        if self.total < 0:
            object.__setattr__(self, "total", sum(self.counts.values()))

    def count(self, c: int, d: int) -> int:
        return self.counts.get((c, d), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairMultiset):
            return NotImplemented
        return dict(self.counts) == dict(other.counts)


def _check_pair_stat(stat: str) -> None:
    if stat not in PAIR_STATS:
        raise ValueError(f"stat must be one of {PAIR_STATS}, got {stat!r}")


@lru_cache(maxsize=None)
def _pair_multisets(n: int) -> tuple[PairMultiset, PairMultiset]:
    """One sweep over all cells of all partitions of n, tallying both fillings."""
    width = n
    arm_leg = [0] * (width * width)
    arm_left = [0] * (width * width)
    for parts in partitions_of(n):
        if not parts:
            continue
        conj = conjugate(parts)
        for i, length in enumerate(parts):
            row = i + 1
            base = (length - 1) * width
            for j in range(length):
                arm_scaled = base - j * width
                arm_leg[arm_scaled + conj[j] - row] += 1
                arm_left[arm_scaled + j] += 1
    out = []
    for flat in (arm_leg, arm_left):
        counts = {}
        for idx, cnt in enumerate(flat):
            if cnt:
                counts[divmod(idx, width)] = cnt
        out.append(PairMultiset(counts=counts))
    return out[0], out[1]


def build_pair_multiset(n: int, stat: str) -> PairMultiset:
    """The multiset of (arm, leg) or (arm, left) pairs over all cells of
    all partitions of n.

    ``stat`` selects the filling: "arm-leg" or "arm-left".
    """
    _check_pair_stat(stat)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    pair = _pair_multisets(n)
    return pair[0] if stat == "arm-leg" else pair[1]


def verify_theorem1(n: int) -> VerifyReport:
    """Check that the arm-leg and arm-left pair multisets of n coincide.

    On failure, reports the lexicographically smallest differing (c, d).
    """
    context = f"theorem1(n={n})"
    arm_leg, arm_left = _pair_multisets(n)
    if arm_leg == arm_left:
        return VerifyReport.success(context)
    keys = sorted(set(arm_leg.counts) | set(arm_left.counts))
    for key in keys:
        lhs = arm_leg.counts.get(key, 0)
        rhs = arm_left.counts.get(key, 0)
        if lhs != rhs:
            return VerifyReport.failure(context, where=key, expected=lhs, actual=rhs)
    raise AssertionError("multisets compared unequal but no differing key found")


@lru_cache(maxsize=None)
def _stat_polys(n: int) -> tuple[dict[int, int], dict[int, int]]:
    """Hook-exponent and part-exponent tallies over all cells, one sweep."""
    hooks = [0] * (n + 1)
    parts_tally = [0] * (n + 1)
    for parts in partitions_of(n):
        if not parts:
            continue
        conj = conjugate(parts)
        for i, length in enumerate(parts):
            row = i + 1
            for j in range(length):
                hooks[length - j + conj[j] - row] += 1
            # each of the row's cells contributes the same part exponent
            parts_tally[length] += length
    hook_poly = {e: c for e, c in enumerate(hooks) if c}
    part_poly = {e: c for e, c in enumerate(parts_tally) if c}
    return hook_poly, part_poly


def stat_polynomial(n: int, stat: str) -> dict[int, int]:
    """Sum of x^(statistic) over every cell of every partition of n.

    ``stat`` is "hook" or "part"; the result maps each statistic value to
    its number of occurrences (a polynomial in a marker variable x).
    """
    if stat not in CELL_STATS:
        raise ValueError(f"stat must be one of {CELL_STATS}, got {stat!r}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    pair = _stat_polys(n)
    return dict(pair[0] if stat == "hook" else pair[1])


def _poly_from_pairs(multiset: PairMultiset) -> dict[int, int]:
    """Collapse a pair multiset through (c, d) -> c + d + 1."""
    poly: dict[int, int] = {}
    for (c, d), cnt in multiset.counts.items():
        e = c + d + 1
        poly[e] = poly.get(e, 0) + cnt
    return poly


def verify_identity1(n: int) -> VerifyReport:
    """Check that hook and part exponent tallies agree for weight n.

    Also checks that each polynomial is the c+d+1 collapse of its pair
    multiset (hook from arm-leg, part from arm-left), which is what makes
    the pair-multiset identity a refinement of this one.
    """
    context = f"identity1(n={n})"
    hook_poly, part_poly = _stat_polys(n)
    exponents = sorted(set(hook_poly) | set(part_poly))
    for e in exponents:
        lhs = hook_poly.get(e, 0)
        rhs = part_poly.get(e, 0)
        if lhs != rhs:
            return VerifyReport.failure(context, where=e, expected=lhs, actual=rhs)
    arm_leg, arm_left = _pair_multisets(n)
    for label, poly, collapsed in (
        ("hook-from-arm-leg", hook_poly, _poly_from_pairs(arm_leg)),
        ("part-from-arm-left", part_poly, _poly_from_pairs(arm_left)),
    ):
        for e in sorted(set(poly) | set(collapsed)):
            lhs = poly.get(e, 0)
            rhs = collapsed.get(e, 0)
            if lhs != rhs:
                return VerifyReport.failure(
                    context, where=(label, e), expected=lhs, actual=rhs
                )
    return VerifyReport.success(context)


def count_pair(n: int, c: int, d: int, stat: str) -> int:
    """How many times the pair (c, d) occurs in the chosen filling of n."""
    return build_pair_multiset(n, stat).count(c, d)


def verify_lemma(c: int, d: int, stat: str, n_max: int, order: int) -> VerifyReport:
    """Check brute pair counts against the closed-form series.

    For every 0 <= n <= n_max, the count of (c, d) in the chosen filling
    must equal the coefficient of q^n in
    q^(c+d+1) / ((1 - q^(c+d+1)) (q)_inf).
    """
    _check_pair_stat(stat)
    if n_max > order:
        raise ValueError(f"n_max ({n_max}) must not exceed the series order ({order})")
    context = f"lemma(c={c}, d={d}, stat={stat}, n_max={n_max})"
    rhs = lemma_rhs(c, d, order)
    for n in range(n_max + 1):
        expected = rhs.coefficient(n)
        actual = count_pair(n, c, d, stat)
        if expected != actual:
            return VerifyReport.failure(context, where=n, expected=expected, actual=actual)
    return VerifyReport.success(context)


def verify_fact3(m: int, n: int) -> VerifyReport:
    """Check the m-by-n box enumerator two ways.

    Brute enumeration of box-bounded partitions must match the Gaussian
    binomial, and the corner recurrence
    F(m,n) = q^n F(m-1,n) + F(m,n-1)  (F with a zero side is 1)
    must hold coefficient-wise at order m*n.
    """
    context = f"fact3(m={m}, n={n})"
    order = m * n
    closed = gauss_binomial(m, n, order)
    report = compare_series(context + " [brute vs closed]", box_gf_brute(m, n), closed)
    if not report.passed:
        return report
    if m == 0 or n == 0:
        recurrence = one(order)
    else:
        recurrence = make_monomial(n, order) * gauss_binomial(m - 1, n, order) + gauss_binomial(
            m, n - 1, order
        )
    report = compare_series(context + " [recurrence]", recurrence, closed)
    if not report.passed:
        return report
    return VerifyReport.success(context)


def verify_fact4(m: int, order: int) -> VerifyReport:
    """Check the parts-bounded-by-m enumerator against 1/(q)_m.

    For each n <= order, the number of partitions of n with every part
    <= m (found by enumeration) must match the series coefficient, and by
    transposition the same number must count partitions with at most m
    parts.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    context = f"fact4(m={m}, order={order})"
    series = q_pochhammer(1, m, order).invert()
    for n in range(order + 1):
        bounded_part = 0
        bounded_len = 0
        for parts in partitions_of(n):
            if not parts or parts[0] <= m:
                bounded_part += 1
            if len(parts) <= m:
                bounded_len += 1
        expected = series.coefficient(n)
        if bounded_part != expected:
            return VerifyReport.failure(
                context, where=("parts<=m", n), expected=expected, actual=bounded_part
            )
        if bounded_len != bounded_part:
            return VerifyReport.failure(
                context, where=("conjugate", n), expected=bounded_part, actual=bounded_len
            )
    return VerifyReport.success(context)
