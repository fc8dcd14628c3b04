"""Integer partitions and their per-cell statistics.

A partition is represented as a plain tuple of weakly decreasing positive
ints; the empty tuple is the unique partition of 0.  Cells are addressed
as 1-based ``(row, col)`` pairs, matching the usual matrix-style drawing
of a Ferrers diagram (row 1 on top, left-justified).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple

from hookpart.qseries import QSeries

Partition = tuple  # weakly decreasing positive ints
Cell = tuple       # (row, col), both 1-based


class CellStats(NamedTuple):
    """The five statistics of one cell in a Ferrers diagram.

    arm   -- cells strictly to the right in the same row
    leg   -- cells strictly below in the same column
    left  -- cells strictly to the left in the same row
    hook  -- arm + leg + 1
    part  -- arm + left + 1, which equals the length of the cell's row
    """

    arm: int
    leg: int
    left: int
    hook: int
    part: int


def partitions_of(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every partition of ``n`` exactly once, largest-first.

    The order is descending lexicographic on the parts sequence, e.g. for
    n=4: (4,), (3,1), (2,2), (2,1,1), (1,1,1,1).  This fixed order is what
    gives partition indices their meaning elsewhere in the package.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield ()
        return
    a = [n]
    while True:
        yield tuple(a)
        # Find the rightmost part > 1; everything after it is a run of 1s.
        j = len(a) - 1
        while j >= 0 and a[j] == 1:
            j -= 1
        if j < 0:
            return
        # Shrink that part by one and re-pack the freed weight greedily.
        v = a[j] - 1
        rem = a[j] + (len(a) - 1 - j)
        del a[j:]
        q, r = divmod(rem, v)
        a.extend([v] * q)
        if r:
            a.append(r)


@lru_cache(maxsize=None)
def count_partitions(n: int) -> int:
    """Number of partitions of ``n``.

    Computed by the bounded-largest-part recurrence (a coin-change style
    table), deliberately independent of both ``partitions_of`` and the
    series engine so the three can cross-check each other.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose the Ferrers diagram: column lengths become the parts."""
    if not parts:
        return ()
    counts = [0] * (parts[0] + 1)
    for length in parts:
        counts[length] += 1
    out = []
    run = 0
    for threshold in range(parts[0], 0, -1):
        run += counts[threshold]
        out.append(run)
    # out is (#parts >= parts[0], ..., #parts >= 1); the conjugate lists
    # column lengths largest-first, i.e. the same values reversed.
    out.reverse()
    return tuple(out)


def cell_stats(parts: tuple[int, ...], cell: tuple[int, int]) -> CellStats:
    """Statistics of the cell ``(row, col)`` of the partition ``parts``.

    With 1-based indices and row length L = parts[row-1]:

        arm  = L - col           (cells to the right)
        leg  = #{rows r > row with parts[r-1] >= col}
        left = col - 1           (cells to the left)

    Raises IndexError if the cell lies outside the diagram.
    """
    row, col = cell
    if row < 1 or row > len(parts):
        raise IndexError(f"row {row} out of range for partition {parts}")
    length = parts[row - 1]
    if col < 1 or col > length:
        raise IndexError(f"cell {cell} outside partition {parts}")
    arm = length - col
    leg = sum(1 for r in range(row, len(parts)) if parts[r] >= col)
    left = col - 1
    return CellStats(arm=arm, leg=leg, left=left, hook=arm + leg + 1, part=length)


def cells(parts: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], CellStats]]:
    """All cells of ``parts`` in row-major order, with their statistics."""
    if not parts:
        return
    conj = conjugate(parts)
    for i, length in enumerate(parts):
        row = i + 1
        for col in range(1, length + 1):
            arm = length - col
            leg = conj[col - 1] - row
            yield (row, col), CellStats(
                arm=arm, leg=leg, left=col - 1, hook=arm + leg + 1, part=length
            )


def box_partitions(rows: int, width: int) -> Iterator[tuple[int, ...]]:
    """Yield every partition with at most ``rows`` parts, each <= ``width``."""

    def rec(remaining_rows: int, cap: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if remaining_rows == 0 or cap == 0:
            return
        for first in range(cap, 0, -1):
            for rest in rec(remaining_rows - 1, first):
                yield (first,) + rest

    return rec(rows, width)


def box_gf_brute(m: int, n: int) -> QSeries:
    """Weight enumerator of partitions fitting in an m-row by n-column box.

    Counts by direct enumeration; the result is a QSeries of order m*n
    whose coefficient at q^e is the number of such partitions of weight e.
    This is the brute-force twin of ``qseries.gauss_binomial``.
    """
    if m < 0 or n < 0:
        raise ValueError("box dimensions must be nonnegative")
    coeffs = [0] * (m * n + 1)
    for parts in box_partitions(m, n):
        coeffs[sum(parts)] += 1
    return QSeries(coeffs)
