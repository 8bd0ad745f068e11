"""Turn qubit stabilizer codes into Majorana codes with twice the distance.

Each qubit becomes four Majoranas tied together by a quartic stabilizer, and
X and Z become pairs.  A weight-w qubit error costs 2w Majoranas.
"""

from majorana_codes import map_qubit_code
from majorana_codes.code import min_stabilizer_weight
from majorana_codes.distance import brute_force_distance

examples = {
    "[[4,2,2]]": ["XXXX", "ZZZZ"],
    "[[5,1,3]]": ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX"],
}

for label, stabs in examples.items():
    code = map_qubit_code(stabs)
    d = brute_force_distance(code)
    print(f"{label}: nmaj={code.nmaj} nstab={code.nstab} K={code.k} distance={d}"
          f" (min stabilizer weight {min_stabilizer_weight(code)})")

# the quartic on qubit 1 and the images of X and Z on it
code = map_qubit_code(["XXXX", "ZZZZ"])
print("first generators:")
for row in code.to_strings()[:3]:
    print("   ", row)
