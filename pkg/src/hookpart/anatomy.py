"""Hook-marked Ferrers diagrams: the seven-factor decomposition.

Fix a target arm length c and leg length d, and mark one hook with those
lengths whose corner sits at cell (i+1, j+1).  Every diagram carrying
such a mark splits into seven independent regions, and the weight
enumerator of the whole family is the product of seven series, one per
region.  Summing the product over all corner placements (i, j) recovers
the generating function for the (c, d) count in the arm-leg filling,
whose closed form is q^(c+d+1) / ((1 - q^(c+d+1)) (q)_inf).

``proof_chain`` re-derives that closed form numerically: the double sum
over corners is collapsed step by step (inner sum first, then the outer
one), each stage evaluated by its own code path, and all five stages are
compared coefficient-wise.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple

from hookpart import statistics
from hookpart.partitions import partitions_of
from hookpart.qseries import (
    QSeries,
    VerifyReport,
    gauss_binomial,
    lemma_rhs,
    make_monomial,
    one,
    q_pochhammer,
    zero,
)


class AnatomyFactors(NamedTuple):
    """The seven regions of a diagram with a marked (c, d)-hook at (i+1, j+1).

    corner_box   -- the fully occupied i-by-j rectangle left of and above
                    the corner: q^(i*j)
    above_arm    -- the full i-by-(c+1) rectangle above the arm: q^((c+1)*i)
    left_of_leg  -- the full (d+1)-by-j rectangle left of the leg: q^((d+1)*j)
    upper_right  -- free diagram with at most i rows beyond the arm: 1/(q)_i
    lower_left   -- free diagram with at most j columns below the leg: 1/(q)_j
    hook_cells   -- the marked hook itself: q^(c+d+1)
    inside_hook  -- free diagram boxed inside the hook: the c-by-d Gaussian
                    binomial
    """

    corner_box: QSeries
    above_arm: QSeries
    left_of_leg: QSeries
    upper_right: QSeries
    lower_left: QSeries
    hook_cells: QSeries
    inside_hook: QSeries


def _check_corner_args(c: int, d: int, i: int, j: int) -> None:
    if min(c, d, i, j) < 0:
        raise ValueError(f"anatomy parameters must be nonnegative, got {(c, d, i, j)}")


@lru_cache(maxsize=None)
def _at_most_parts_inv(m: int, order: int) -> QSeries:
    """1/(q)_m: free diagrams with at most m rows (or parts <= m)."""
    return q_pochhammer(1, m, order).invert()


def anatomy_factors(c: int, d: int, i: int, j: int, order: int) -> AnatomyFactors:
    _check_corner_args(c, d, i, j)
    return AnatomyFactors(
        corner_box=make_monomial(i * j, order),
        above_arm=make_monomial((c + 1) * i, order),
        left_of_leg=make_monomial((d + 1) * j, order),
        upper_right=_at_most_parts_inv(i, order),
        lower_left=_at_most_parts_inv(j, order),
        hook_cells=make_monomial(c + d + 1, order),
        inside_hook=gauss_binomial(c, d, order),
    )


def anatomy_gf(c: int, d: int, i: int, j: int, order: int) -> QSeries:
    """Weight enumerator of diagrams with a marked (c, d)-hook cornered at
    (i+1, j+1): the product of the seven region series."""
    factors = anatomy_factors(c, d, i, j, order)
    result = factors.corner_box
    for factor in factors[1:]:
        result = result * factor
    return result


def min_degree(c: int, d: int, i: int, j: int) -> int:
    """Smallest weight of any diagram with that marked hook: the mandatory
    rectangles plus the hook itself."""
    return c + d + 1 + i * j + i * (c + 1) + j * (d + 1)


def corner_count_brute(c: int, d: int, i: int, j: int, n: int) -> int:
    """Number of partitions of n whose cell (i+1, j+1) exists and carries
    arm exactly c and leg exactly d, by exhaustive enumeration."""
    _check_corner_args(c, d, i, j)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    row, col = i + 1, j + 1
    count = 0
    for parts in partitions_of(n):
        if len(parts) < row or parts[row - 1] - col != c:
            continue
        leg = sum(1 for r in range(row, len(parts)) if parts[r] >= col)
        if leg == d:
            count += 1
    return count


def _corner_sweep(c: int, d: int, n_max: int) -> dict[tuple[int, int], list[int]]:
    """Brute counts for every corner at once: one enumeration pass per n,
    tallying each cell with arm c and leg d into its (i, j) bucket."""
    table: dict[tuple[int, int], list[int]] = {}
    for n in range(n_max + 1):
        for parts in partitions_of(n):
            if not parts:
                continue
            nrows = len(parts)
            for r, length in enumerate(parts):
                col = length - c
                if col < 1:
                    continue
                leg = sum(1 for rr in range(r + 1, nrows) if parts[rr] >= col)
                if leg == d:
                    per_n = table.setdefault((r, col - 1), [0] * (n_max + 1))
                    per_n[n] += 1
    return table


def corner_placements(c: int, d: int, n_max: int) -> Iterator[tuple[int, int]]:
    """All (i, j) whose marked-hook family can contribute weight <= n_max."""
    i = 0
    while min_degree(c, d, i, 0) <= n_max:
        j = 0
        while min_degree(c, d, i, j) <= n_max:
            yield i, j
            j += 1
        i += 1


def verify_anatomy(c: int, d: int, n_max: int, order: int) -> VerifyReport:
    """Check the decomposition against exhaustive enumeration.

    (a) For every corner (i, j) reachable within weight n_max, the series
        coefficients of ``anatomy_gf`` must equal the brute counts for all
        n <= n_max.
    (b) Summed over all corners, the coefficients must reproduce the
        (c, d) count of the arm-leg filling for all n <= n_max.
    """
    _check_corner_args(c, d, 0, 0)
    if n_max > order:
        raise ValueError(f"n_max ({n_max}) must not exceed the series order ({order})")
    context = f"anatomy(c={c}, d={d}, n_max={n_max})"
    brute = _corner_sweep(c, d, n_max)
    placements = list(corner_placements(c, d, n_max))
    stray = sorted(set(brute) - set(placements))
    if stray:
        i, j = stray[0]
        return VerifyReport.failure(
            context,
            where=("corner-beyond-min-degree", i, j),
            expected=0,
            actual=sum(brute[(i, j)]),
        )
    summed = [0] * (n_max + 1)
    for i, j in placements:
        series = anatomy_gf(c, d, i, j, order)
        counts = brute.get((i, j), [0] * (n_max + 1))
        for n in range(n_max + 1):
            coeff = series.coefficient(n)
            if coeff != counts[n]:
                return VerifyReport.failure(
                    context, where=("corner", i, j, n), expected=counts[n], actual=coeff
                )
            summed[n] += coeff
    for n in range(n_max + 1):
        expected = statistics.count_pair(n, c, d, "arm-leg")
        if summed[n] != expected:
            return VerifyReport.failure(
                context, where=("corner-sum", n), expected=expected, actual=summed[n]
            )
    return VerifyReport.success(context)


# ---------------------------------------------------------------------------
# The derivation chain: five structurally independent evaluations.
# ---------------------------------------------------------------------------


def _euler_prefix(c: int, d: int, order: int) -> QSeries:
    """q^(c+d+1) / (q)_inf, common head of the late chain stages."""
    return make_monomial(c + d + 1, order) * q_pochhammer(1, None, order).invert()


def _chain_stage0(c: int, d: int, order: int) -> QSeries:
    """The raw double sum over corner placements (i, j).

    (q)_{c+d} / ((q)_c (q)_d) * q^(c+d+1)
        * sum_{i,j} q^(ij + i(c+1) + j(d+1)) / ((q)_i (q)_j)
    with the quotient prefactor evaluated literally (not via the box
    recurrence), and each term kept iff its minimal degree fits.
    """
    prefactor = (
        q_pochhammer(1, c + d, order)
        * q_pochhammer(1, c, order).invert()
        * q_pochhammer(1, d, order).invert()
        * make_monomial(c + d + 1, order)
    )
    base = c + d + 1
    total = zero(order)
    i = 0
    while base + i * (c + 1) <= order:
        j = 0
        while base + i * j + i * (c + 1) + j * (d + 1) <= order:
            total = total + (
                make_monomial(i * j + i * (c + 1) + j * (d + 1), order)
                * _at_most_parts_inv(i, order)
                * _at_most_parts_inv(j, order)
            )
            j += 1
        i += 1
    return prefactor * total


def _chain_stage1(c: int, d: int, order: int) -> QSeries:
    """After collapsing the inner sum over j:

    same prefactor * sum_i q^(i(c+1)) / ((q)_i (q^(d+i+1))_inf).
    """
    prefactor = (
        q_pochhammer(1, c + d, order)
        * q_pochhammer(1, c, order).invert()
        * q_pochhammer(1, d, order).invert()
        * make_monomial(c + d + 1, order)
    )
    base = c + d + 1
    total = zero(order)
    i = 0
    while base + i * (c + 1) <= order:
        total = total + (
            make_monomial(i * (c + 1), order)
            * _at_most_parts_inv(i, order)
            * q_pochhammer(d + i + 1, None, order).invert()
        )
        i += 1
    return prefactor * total


def _chain_stage2(c: int, d: int, order: int) -> QSeries:
    """Rearranged single sum with the Euler factor pulled out:

    q^(c+d+1)/(q)_inf * (q)_{c+d}/(q)_c
        * sum_i q^(i(c+1)) (q)_{i+d} / ((q)_d (q)_i)
    where the summand quotient is evaluated literally.
    """
    prefactor = (
        _euler_prefix(c, d, order)
        * q_pochhammer(1, c + d, order)
        * q_pochhammer(1, c, order).invert()
    )
    base = c + d + 1
    total = zero(order)
    i = 0
    while base + i * (c + 1) <= order:
        total = total + (
            make_monomial(i * (c + 1), order)
            * q_pochhammer(1, i + d, order)
            * q_pochhammer(1, d, order).invert()
            * _at_most_parts_inv(i, order)
        )
        i += 1
    return prefactor * total


def _chain_stage3(c: int, d: int, order: int) -> QSeries:
    """After collapsing the outer sum:

    q^(c+d+1)/(q)_inf * (q)_{c+d} / ((q)_c (q^(c+1))_{d+1}).
    """
    return (
        _euler_prefix(c, d, order)
        * q_pochhammer(1, c + d, order)
        * q_pochhammer(1, c, order).invert()
        * q_pochhammer(c + 1, d + 1, order).invert()
    )


def _chain_stage4(c: int, d: int, order: int) -> QSeries:
    """The closed form after telescoping: q^(c+d+1)/((1-q^(c+d+1)) (q)_inf)."""
    repeat = (one(order) - make_monomial(c + d + 1, order)).invert()
    return _euler_prefix(c, d, order) * repeat


_CHAIN_STAGES = (_chain_stage0, _chain_stage1, _chain_stage2, _chain_stage3, _chain_stage4)


def proof_chain(c: int, d: int, order: int) -> VerifyReport:
    """Evaluate all five stages of the derivation independently and compare.

    Reports the first failing adjacent equality (stage k vs stage k+1) at
    the smallest failing exponent, and finally checks that the last stage
    matches ``qseries.lemma_rhs``.
    """
    _check_corner_args(c, d, 0, 0)
    context = f"proof_chain(c={c}, d={d}, order={order})"
    stages = [stage(c, d, order) for stage in _CHAIN_STAGES]
    for k in range(len(stages) - 1):
        lhs, rhs = stages[k], stages[k + 1]
        for e in range(order + 1):
            if lhs.coeffs[e] != rhs.coeffs[e]:
                return VerifyReport.failure(
                    context,
                    where=(f"stage{k}=stage{k + 1}", e),
                    expected=lhs.coeffs[e],
                    actual=rhs.coeffs[e],
                )
    closed = lemma_rhs(c, d, order)
    for e in range(order + 1):
        if stages[-1].coeffs[e] != closed.coeffs[e]:
            return VerifyReport.failure(
                context,
                where=("stage4=closed-form", e),
                expected=closed.coeffs[e],
                actual=stages[-1].coeffs[e],
            )
    return VerifyReport.success(context)
