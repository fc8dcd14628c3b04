"""Tour of the partition layer: enumeration, conjugation, cell statistics.

Run:  python demos/01_partitions_and_cells.py
"""

from hookpart import cell_stats, cells, conjugate, count_partitions, partitions_of


def draw(parts, label=None):
    print(f"  {label or parts}")
    for length in parts:
        print("   " + "[]" * length)


print("=== The partitions of 5, largest-first ===\n")
for parts in partitions_of(5):
    print(" ", parts)
print(f"\ncount_partitions(5) = {count_partitions(5)} (independent recurrence)")

print("\n=== Conjugation transposes the diagram ===\n")
lam = (4, 2, 1)
draw(lam, "lambda = (4, 2, 1)")
draw(conjugate(lam), f"conjugate = {conjugate(lam)}")
print("  conjugating twice returns the original:", conjugate(conjugate(lam)) == lam)

print("\n=== Five statistics per cell ===\n")
lam = (4, 3, 1)
draw(lam, "lambda = (4, 3, 1)")
print("""
Pick the cell in row 1, column 2.  Looking along its row and column:
  arm  = cells to its right      left = cells to its left
  leg  = cells below it          hook = arm + leg + 1
  part = arm + left + 1, always the full length of its row
""")
stats = cell_stats(lam, (1, 2))
print(f"  cell (1,2): {stats}")

print("\nEvery cell of (4, 3, 1), row-major, with hook = arm+leg+1 checked:")
for (row, col), s in cells(lam):
    assert s.hook == s.arm + s.leg + 1
    assert s.part == s.arm + s.left + 1 == lam[row - 1]
    print(f"  ({row},{col}): arm={s.arm} leg={s.leg} left={s.left} hook={s.hook} part={s.part}")

print("\nHook grid for (4, 3, 1):")
grid = {cell: s.hook for cell, s in cells(lam)}
for row, length in enumerate(lam, start=1):
    print("   " + " ".join(str(grid[(row, col)]) for col in range(1, length + 1)))
