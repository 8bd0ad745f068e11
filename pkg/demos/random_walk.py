"""Search for codes by walking through the space of commuting generator sets.

The walk starts from disjoint pairs (distance 2) and repeatedly applies a
random four-mode replacement.  The generators keep commuting because the
replacement preserves overlap parity, but their weights move, and every so
often the walk lands on a code that passes the distance check.
"""

import time

from majorana_codes.distance import brute_force_distance
from majorana_codes.f2core import ReplacementMask
from majorana_codes.search import WalkParams, init_walk, measure_throughput, run_campaign, run_walk, walk_step

# one step by hand
s = init_walk(WalkParams(12, 3, 4, seed=1))
print("start:", [str(g) for g in s.code().generators])
walk_step(s, ReplacementMask.from_modes(12, [2, 3, 4, 5]))
print("after {2,3,4,5}:", [str(g) for g in s.code().generators])

# a single run that finds a Hamming-sized code
out = run_walk(WalkParams(16, 5, 4, steps=10**6, seed=2024))
print(f"\n(16,5): {out.status} after {out.steps_taken} steps, distance {brute_force_distance(out.code)}")
for row in out.code.to_strings():
    print("   ", row)

# campaigns are reproducible from the master seed, whatever the thread count
p = WalkParams(20, 6, 4, steps=10**6)
t0 = time.perf_counter()
report = run_campaign(p, runs=8, master_seed=7, threads=2)
print(f"\n(20,6): {report.successes}/8 runs found a code in {time.perf_counter() - t0:.1f}s")
print("same report with one thread:", report.to_json() == run_campaign(p, runs=8, master_seed=7).to_json())

# below the bound there is nothing to find
report = run_campaign(WalkParams(12, 5, 4, steps=10**5), runs=10, master_seed=7)
print(f"(12,5): {report.successes}/10")

rate = measure_throughput(30, 7, steps=10**6)
print(f"\nthroughput at (30,7): {rate:,.0f} steps/s")
