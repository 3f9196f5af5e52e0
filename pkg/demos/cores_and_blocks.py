"""
Cores, weights, and block dimensions
====================================

Walks a few partitions through the abacus, then tabulates block dimensions:
for each 3-core mu and size m, the number of 3-regular partitions of m with
core mu.  Row sums recover the count of all 3-regular partitions of m.
"""

from slnbranch import (
    abacus_display,
    block_dimension,
    format_partition,
    is_n_core,
    n_core,
    n_weight,
    partitions_of,
)

N = 3

for p in [(8,), (6, 2), (3, 3, 1, 1), (5, 4, 1)]:
    display = abacus_display(p, N)
    core = n_core(p, N)
    print(
        f"{format_partition(p):10s} beta={display.beta}  "
        f"core={format_partition(core)}  weight={n_weight(p, N)}"
    )

print("\nblock dimensions (rows: m, columns: cores):")
cores = [mu for c in range(7) for mu in partitions_of(c) if is_n_core(mu, N)]
header = " ".join(f"{format_partition(mu):>6s}" for mu in cores)
print(f"m={'':2s} {header}   total  regular")
for m in range(9):
    row = [block_dimension(N, m, mu) for mu in cores]
    regular = sum(1 for _ in partitions_of(m, regular=N))
    cells = " ".join(f"{d:6d}" for d in row)
    print(f"{m:4d} {cells}  {sum(row):6d} {regular:8d}")
