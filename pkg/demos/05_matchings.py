"""Explicit matchings: pairing each cell with a partner that swaps its
left length for a leg of the same size.

The multiset identity guarantees such a pairing exists for every n; no
uniform rule valid for all n at once is known.  The canonical matching
below is one deterministic choice, printed in full so it can be eyeballed
for structure.

Run:  python demos/05_matchings.py
"""

from hookpart import canonical_matching, cell_stats, partitions_of, verify_matching

n = 4
index_to_partition = list(partitions_of(n))
print(f"partitions of {n}:", ", ".join(f"[{k}]={p}" for k, p in enumerate(index_to_partition)))

matching = canonical_matching(n)
print(f"\ncanonical matching for n={n} ({len(matching.pairs)} pairs):\n")
print("source cell          (arm,left)   ->   target cell          (arm,leg)")
for src, dst in matching.pairs:
    s = cell_stats(index_to_partition[src.partition_index], (src.row, src.col))
    t = cell_stats(index_to_partition[dst.partition_index], (dst.row, dst.col))
    src_label = f"[{src.partition_index}] r{src.row} c{src.col}"
    dst_label = f"[{dst.partition_index}] r{dst.row} c{dst.col}"
    print(f"  {src_label:18s} ({s.arm},{s.left})        ->   {dst_label:18s} ({t.arm},{t.leg})")

report = verify_matching(matching)
print(f"\nbijective and statistic-preserving: {report.passed}")

fixed = sum(1 for src, dst in matching.pairs if src == dst)
print(f"fixed points: {fixed} of {len(matching.pairs)}")

print("""
Things to look for when hunting a uniform rule: which cells are fixed,
whether partners stay inside the same partition, and how the pairing
interacts with conjugation.  The matching is deterministic, so any
conjecture can be tested against these exact outputs for larger n (try
the command line: hookpart match --n 8 --format csv).
""")
