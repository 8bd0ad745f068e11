"""Build the Hamming Majorana codes and look at what makes them work.

Every column of the stabilizer matrix is a distinct binary number, so each
single Majorana error leaves a different syndrome.  That is enough for
distance 4 once the generators are even and overlap evenly.
"""

from majorana_codes import hamming_majorana
from majorana_codes.code import single_mode_syndromes_distinct, syndrome
from majorana_codes.distance import brute_force_distance
from majorana_codes.f2core import MajoranaOperator
from majorana_codes.tables import nd_upper_bound_d4

for m in (3, 4, 5):
    code = hamming_majorana(m)
    print(f"m={m}: nmaj={code.nmaj} nstab={code.nstab} K={code.k}")
    if m == 4:
        for row in code.to_strings():
            print("   ", row)

    # a few single-mode syndromes, stored generators first and parity last
    for mode in (1, 2, code.nmaj):
        err = MajoranaOperator.from_modes(code.nmaj, [mode])
        print(f"    gamma_{mode:<2} -> {syndrome(code, err)}")
    print("    all single-mode syndromes distinct:", single_mode_syndromes_distinct(code))

    if code.k:
        d = brute_force_distance(code, wmax=4)
        print(f"    distance {d}, bound on K is {nd_upper_bound_d4(code.nmaj)}")
