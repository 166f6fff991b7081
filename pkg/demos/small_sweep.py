"""Tabulate shapes and CM verdicts for Gorenstein curves with n4 <= 30."""

from collections import Counter

from tangentcone.cli import sweep_row
from tangentcone.gridcheck import grid_tuples

tally = Counter()
non_cm = []
for tup in grid_tuples(30, 4):
    row = sweep_row(tup)
    if not row["gorenstein"]:
        continue
    tally[row["gorenstein"], row["cm"]] += 1
    if row["cm"] == 0:
        non_cm.append((tup, row["reduced_numerator"], row["nondecreasing"]))

for (shape, cm), n in sorted(tally.items()):
    print(f"shape {shape}  CM={cm}: {n}")
print("non-CM members:")
for tup, h, nd in non_cm:
    print(f"  {tup}  h coefficients [{h}]  non-decreasing={nd}")
