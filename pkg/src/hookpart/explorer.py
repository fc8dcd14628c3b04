"""Explicit cell matchings realizing the pair-multiset identity.

For each n there must exist a bijection on the cells of all partitions
of n carrying each cell's (arm, left) pair onto its image's (arm, leg)
pair.  No uniform closed-form rule for such a map is known; this module
constructs one concrete, deterministic matching per n so the output can
be inspected for patterns, and validates arbitrary candidate matchings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from hookpart.partitions import cells, partitions_of
from hookpart.qseries import VerifyReport


class CellRef(NamedTuple):
    """A cell addressed globally: which partition of n (by its index in
    the canonical largest-first enumeration), then row and column."""

    partition_index: int
    row: int
    col: int


@dataclass(frozen=True)
class Matching:
    """A pairing of every cell (as source) with every cell (as target)
    such that each source's (arm, left) equals its target's (arm, leg)."""

    n: int
    pairs: tuple[tuple[CellRef, CellRef], ...]


def canonical_matching(n: int) -> Matching:
    """Build the reference matching for weight n.

    Sources are grouped by their (arm, left) key and targets by their
    (arm, leg) key; inside each key group both sides are ordered by
    (partition_index, row, col) and paired off positionally.  The pair
    list is emitted sorted by source.  Any order inside a group would be
    valid; fixing this one makes runs diffable.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    sources: dict[tuple[int, int], list[CellRef]] = {}
    targets: dict[tuple[int, int], list[CellRef]] = {}
    for index, parts in enumerate(partitions_of(n)):
        for (row, col), stats in cells(parts):
            ref = CellRef(index, row, col)
            sources.setdefault((stats.arm, stats.left), []).append(ref)
            targets.setdefault((stats.arm, stats.leg), []).append(ref)
    pairs: list[tuple[CellRef, CellRef]] = []
    for key in sorted(set(sources) | set(targets)):
        src_group = sources.get(key, [])
        dst_group = targets.get(key, [])
        if len(src_group) != len(dst_group):
            raise RuntimeError(
                f"pair multiset identity violated at n={n}, key={key}: "
                f"{len(src_group)} arm-left cells vs {len(dst_group)} arm-leg cells"
            )
        pairs.extend(zip(src_group, dst_group))
    pairs.sort(key=lambda pair: pair[0])
    return Matching(n=n, pairs=tuple(pairs))


def verify_matching(matching: Matching) -> VerifyReport:
    """Check both matching invariants.

    Bijectivity: the sources enumerate every cell of every partition of n
    exactly once, and so do the targets.  Transport: for every pair, the
    source's (arm, left) equals the target's (arm, leg).
    """
    n = matching.n
    context = f"matching(n={n}, pairs={len(matching.pairs)})"
    all_partitions = list(partitions_of(n))
    stats_by_ref: dict[CellRef, tuple[int, int, int]] = {}
    for index, parts in enumerate(all_partitions):
        for (row, col), stats in cells(parts):
            stats_by_ref[CellRef(index, row, col)] = (stats.arm, stats.leg, stats.left)

    universe = sorted(stats_by_ref)
    for side, refs in (
        ("sources", sorted(pair[0] for pair in matching.pairs)),
        ("targets", sorted(pair[1] for pair in matching.pairs)),
    ):
        if refs != universe:
            seen: set[CellRef] = set()
            for ref in refs:
                if ref not in stats_by_ref:
                    return VerifyReport.failure(
                        context, where=(side, ref), expected="a valid cell", actual="absent"
                    )
                if ref in seen:
                    return VerifyReport.failure(
                        context, where=(side, ref), expected="used once", actual="duplicated"
                    )
                seen.add(ref)
            missing = next(ref for ref in universe if ref not in seen)
            return VerifyReport.failure(
                context, where=(side, missing), expected="used once", actual="missing"
            )

    for src, dst in matching.pairs:
        arm_s, _, left_s = stats_by_ref[src]
        arm_t, leg_t, _ = stats_by_ref[dst]
        if (arm_s, left_s) != (arm_t, leg_t):
            return VerifyReport.failure(
                context,
                where=(src, dst),
                expected=(arm_s, left_s),
                actual=(arm_t, leg_t),
            )
    return VerifyReport.success(context)
