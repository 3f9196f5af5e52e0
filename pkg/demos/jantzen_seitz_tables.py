"""
Restriction-irreducible partitions, graded by core and weight
=============================================================

Lists the n = 3 member sets for every admissible core up to weight 2, and
compares the two evaluations of the counting series chi (direct enumeration
vs shifted branching functions).
"""

from slnbranch import chi_by_branching, chi_direct, format_partition, js_set

N = 3
CORES = [(), (1,), (2,), (1, 1)]  # the rectangular 3-cores with k + l <= 3

for mu in CORES:
    print(f"core {format_partition(mu)}:")
    for d in range(3):
        members = ", ".join(format_partition(p) for p in js_set(N, mu, d))
        print(f"  weight {d}: {{{members}}}")
    direct = chi_direct(N, mu, 4)
    shifted = chi_by_branching(N, mu, 4)
    tag = "ok" if direct == shifted else "MISMATCH"
    print(f"  chi direct    {direct}")
    print(f"  chi branching {shifted}   [{tag}]\n")
