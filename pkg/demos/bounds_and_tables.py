"""Reproduce the tables of known codes from the bound and the data.

The non-degenerate bound says 2^(N_stab-1) >= nmaj for distance 4.  The best
known K at each size comes from taking non-degenerate codes and padding them
with weight-2 pairs.
"""

from majorana_codes import extend_by_pair, hamming_majorana
from majorana_codes.distance import brute_force_distance
from majorana_codes.tables import nd_upper_bound_d4, reproduce_table, upper_bound_d4

print("nmaj  bound")
for n in range(10, 34, 2):
    print(f"{n:4d}  {upper_bound_d4(n):5d}")

for table in ("1", "2", "3"):
    print(f"\ntable {table}")
    for row in reproduce_table(table):
        print(f"  {row.label:24s} expected {row.expected} computed {row.computed} {'ok' if row.ok else 'MISMATCH'}")

# padding Hamming m=4 keeps K and distance
code = extend_by_pair(hamming_majorana(4))
print(f"\npadded Hamming: nmaj={code.nmaj} K={code.k} d={brute_force_distance(code, wmax=4)}"
      f" bound={nd_upper_bound_d4(code.nmaj)}")
