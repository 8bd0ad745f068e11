"""Exit criteria.  Each test prints one PASS/FAIL line in the terminal summary."""

import time
from collections import Counter

import numpy as np
import pytest

from majorana_codes.code import (
    LogicalBasis,
    MajoranaCode,
    check_logical_basis,
    min_stabilizer_weight,
    single_mode_syndromes_distinct,
    validate,
)
from majorana_codes.constructions import hamming_majorana, map_qubit_code
from majorana_codes.distance import DistanceResult, brute_force_distance, passes_d4_check
from majorana_codes.f2core import MajoranaOperator, ReplacementMask, f2_rank, in_span
from majorana_codes.search import (
    WalkParams,
    init_walk,
    measure_throughput,
    replacement_masks,
    run_campaign,
    walk_step,
)
from majorana_codes.tables import (
    HAMMING_M5_ROW,
    TABLE_BEST_D4,
    TABLE_NONDEGENERATE_D4,
    best_from_nondegenerate,
    load_fixture,
    nd_upper_bound_d4,
    upper_bound_d4,
)

SEARCH_MASTER_SEED = 20261017
EXACT4 = DistanceResult.exact(4)
EXACT6 = DistanceResult.exact(6)


def test_criterion_01_hamming(record_property):
    """criterion 1: Hamming codes m=3,4,5"""
    t0 = time.perf_counter()
    for m, k in [(3, 0), (4, 3), (5, 10)]:
        code = hamming_majorana(m)
        assert validate(code).ok
        assert code.k == k
        assert single_mode_syndromes_distinct(code)
        assert 2 ** (code.nstab - 1) == code.nmaj
        if m >= 4:
            assert brute_force_distance(code, wmax=4) == EXACT4
    elapsed = time.perf_counter() - t0
    record_property("detail", f"{elapsed:.2f}s")
    assert elapsed < 5


def test_criterion_02_d4_fixtures(record_property):
    """criterion 2: appendix d=4 codes (nmaj 20/24/28/30)"""
    t0 = time.perf_counter()
    expected_k = {20: 4, 24: 6, 28: 7, 30: 8}
    for nmaj, k in expected_k.items():
        code = load_fixture(f"d4/nmaj{nmaj}")
        assert validate(code).ok
        assert code.k == k
        assert min_stabilizer_weight(code) >= 4
        assert brute_force_distance(code, wmax=4) == EXACT4
    elapsed = time.perf_counter() - t0
    record_property("detail", f"{elapsed:.2f}s")
    assert elapsed < 30


def test_criterion_03_d6_fixtures(record_property):
    """criterion 3: appendix d=6 codes (nmaj 28/30)"""
    t0 = time.perf_counter()
    for nmaj, k, has_weight4 in [(28, 2, True), (30, 3, False)]:
        code = load_fixture(f"d6/nmaj{nmaj}")
        assert validate(code).ok
        assert code.k == k
        assert brute_force_distance(code, wmax=6) == EXACT6
        assert (min_stabilizer_weight(code) <= 4) == has_weight4
    elapsed = time.perf_counter() - t0
    record_property("detail", f"{elapsed:.2f}s")
    assert elapsed < 300


def test_criterion_04_qubit_mapping():
    """criterion 4: qubit-code mapping doubles distance"""
    c422 = map_qubit_code(["XXXX", "ZZZZ"])
    assert (c422.nmaj, c422.k) == (16, 2)
    assert brute_force_distance(c422) == EXACT4
    c513 = map_qubit_code(["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ", "ZZXIX"])
    assert (c513.nmaj, c513.nstab, c513.k) == (20, 9, 1)
    assert brute_force_distance(c513) == EXACT6


def test_criterion_05_bounds():
    """criterion 5: d=4 upper bound, verified codes respect it, Table II from Table I"""
    for n in range(4, 65, 2):
        assert upper_bound_d4(n) == max(0, n // 2 - (n - 1).bit_length() - 1)
    verified = [hamming_majorana(4), hamming_majorana(5), map_qubit_code(["XXXX", "ZZZZ"])]
    verified += [load_fixture(f"d4/nmaj{n}") for n in (20, 24, 28, 30)]
    report = run_campaign(WalkParams(16, 5, 4, steps=10**5), runs=5, master_seed=SEARCH_MASTER_SEED)
    verified += [c for _, c in report.found_codes()]
    for code in verified:
        assert brute_force_distance(code, wmax=4) == EXACT4
        assert min_stabilizer_weight(code) >= 4
        assert code.k <= nd_upper_bound_d4(code.nmaj) <= upper_bound_d4(code.nmaj)
    assert hamming_majorana(4).k == nd_upper_bound_d4(16)
    assert hamming_majorana(5).k == nd_upper_bound_d4(32)
    derived = best_from_nondegenerate([*TABLE_NONDEGENERATE_D4, HAMMING_M5_ROW])
    assert [r.row() for r in derived] == [r.row() for r in TABLE_BEST_D4]


def _swap_1_5(v: int) -> int:
    b0, b4 = v & 1, v >> 4 & 1
    return v & ~0b10001 | b4 | b0 << 4


def test_criterion_06_walk_properties(record_property):
    """criterion 6: walk property suite, 100 states x 1000 steps"""
    rng = np.random.default_rng(SEARCH_MASTER_SEED)
    sizes = list(range(12, 34, 2))
    violations = []
    distance_checks = 0
    for i in range(100):
        nmaj = sizes[i % len(sizes)]
        nstab = int(rng.integers(2, nmaj // 2 + 1))
        s = init_walk(WalkParams(nmaj, nstab, 4, seed=int(rng.integers(0, 2**63))))
        for _ in range(int(rng.integers(0, 200))):
            walk_step(s)
        masks = replacement_masks(nmaj)
        parity = MajoranaOperator.parity(nmaj)
        swap = [ReplacementMask.from_modes(nmaj, m) for m in ([1, 2, 3, 4], [2, 3, 4, 5], [1, 2, 3, 4])]
        probes = [int(x) for x in rng.integers(0, 2**nmaj, size=8, dtype=np.uint64)]
        dist = brute_force_distance(s.code(), wmax=nmaj) if nmaj <= 16 else None
        for step in range(1000):
            before = s.gens.copy()
            m = int(masks[s.pending()[0]])
            walk_step(s)
            code = s.code()
            report = validate(code)
            if not report.ok or (report.nstab, report.k) != (nstab, nmaj // 2 - nstab):
                violations.append(f"state {i} step {step}: invalid {report.violations}")
            gens = list(code.generators)
            if f2_rank(gens) != nstab - 1 or in_span(parity, gens):
                violations.append(f"state {i} step {step}: rank/parity")
            # form preservation on generator pairs and random probes
            ops = [*before.tolist(), *probes]
            moved = [v ^ m if (v & m).bit_count() & 1 else v for v in ops]
            for a in range(len(ops)):
                for b in range(a, len(ops)):
                    if (ops[a] & ops[b]).bit_count() & 1 != (moved[a] & moved[b]).bit_count() & 1:
                        violations.append(f"state {i} step {step}: form not preserved")
            # a second application of the same mask restores the previous state
            after = s.gens.copy()
            walk_step(s, m)
            if not np.array_equal(s.gens, before):
                violations.append(f"state {i} step {step}: not an involution")
            s.gens[:] = after
            if dist is not None:
                distance_checks += 1
                if brute_force_distance(code, wmax=nmaj) != dist:
                    violations.append(f"state {i} step {step}: distance changed")
        # three masks act as the transposition of modes 1 and 5
        start = s.gens.copy()
        for mask in swap:
            walk_step(s, mask)
        if [int(v) for v in s.gens] != [_swap_1_5(int(v)) for v in start]:
            violations.append(f"state {i}: gamma_1 <-> gamma_5 sequence failed")
    kinds = Counter(v.rsplit(": ", 1)[1].split(" [")[0] for v in violations)
    summary = ", ".join(f"{k}: {n}" for k, n in sorted(kinds.items())) or "none"
    record_property("detail", f"violations {summary}; {distance_checks} distance checks")
    assert violations == []


def test_criterion_06b_d6_logicals_stay_valid():
    """criterion 6 (d=6): tracked logicals stay a valid basis along the walk"""
    s = init_walk(WalkParams(24, 9, 6, seed=SEARCH_MASTER_SEED))
    for step in range(1000):
        walk_step(s)
        ops = s.logical_operators()
        basis = LogicalBasis(tuple(ops[0::2]), tuple(ops[1::2]))
        assert check_logical_basis(s.code(), basis) == [], step


def test_criterion_07_search_success(record_property):
    """criterion 7: random-walk search finds distance-4 codes"""
    t0 = time.perf_counter()
    small = run_campaign(WalkParams(16, 5, 4, steps=10**6), runs=20, master_seed=SEARCH_MASTER_SEED)
    assert small.successes >= 1
    for _, code in small.found_codes():
        assert brute_force_distance(code, wmax=4) == EXACT4
    big = run_campaign(WalkParams(32, 6, 4, steps=10**7), runs=5, master_seed=SEARCH_MASTER_SEED)
    assert big.successes >= 1
    for _, code in big.found_codes():
        assert passes_d4_check(code.generators)
        assert brute_force_distance(code, wmax=4) == EXACT4
    elapsed = time.perf_counter() - t0
    record_property(
        "detail",
        f"(16,5): {small.successes}/20, (32,6): {big.successes}/5 with master seed {SEARCH_MASTER_SEED}, {elapsed:.1f}s",
    )
    assert elapsed < 600


@pytest.mark.parametrize("nmaj,nstab", [(10, 4), (12, 5)])
def test_criterion_08_negative_result(nmaj, nstab, record_property):
    """criterion 8: no distance-4 code with K>0 at nmaj 10 and 12"""
    report = run_campaign(WalkParams(nmaj, nstab, 4, steps=10**5), runs=50, master_seed=SEARCH_MASTER_SEED)
    record_property("detail", f"({nmaj},{nstab}): {report.successes}/50 successes")
    assert report.successes == 0


def test_criterion_09_throughput(record_property):
    """criterion 9: walk throughput at nmaj=30, nstab=7"""
    rate = measure_throughput(30, 7, steps=2 * 10**6)
    record_property("detail", f"{rate:,.0f} iterations/s/thread")
    print(f"walk throughput at (30,7): {rate:,.0f} iterations/s/thread")
    assert rate >= 1e5


def test_criterion_10_determinism():
    """criterion 10: campaign reports identical across repeats and thread counts"""
    for p in (WalkParams(16, 5, 4, steps=10**5), WalkParams(20, 6, 4, steps=2 * 10**5)):
        reports = {
            (threads, rep): run_campaign(p, runs=8, master_seed=SEARCH_MASTER_SEED, threads=threads).to_json()
            for threads in (1, 2, 4)
            for rep in range(2)
        }
        assert len(set(reports.values())) == 1
