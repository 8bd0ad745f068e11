import json

import numpy as np
import pytest

from majorana_codes.code import LogicalBasis, check_logical_basis, validate
from majorana_codes.distance import DistanceResult, brute_force_distance, passes_d4_check
from majorana_codes.f2core import ReplacementMask
from majorana_codes.search import (
    BLOCK,
    WalkParams,
    derive_seed,
    init_walk,
    replacement_masks,
    run_campaign,
    run_walk,
    walk_step,
)


def test_params_validation():
    with pytest.raises(ValueError, match="negative"):
        WalkParams(8, 5, 4)
    with pytest.raises(ValueError, match="K >= 1"):
        WalkParams(8, 4, 6)
    with pytest.raises(ValueError, match="target_distance"):
        WalkParams(16, 5, 8)
    assert WalkParams(16, 5).k == 3


def test_init_walk():
    s = init_walk(WalkParams(16, 5, 4))
    assert [str(g) for g in s.code().generators] == [
        "1100000000000000",
        "0011000000000000",
        "0000110000000000",
        "0000001100000000",
    ]
    assert len(s.logicals) == 0
    s6 = init_walk(WalkParams(20, 9, 6))
    assert len(s6.gens) == 8 and len(s6.logicals) == 2


def test_mask_table_is_complete():
    masks = replacement_masks(8)
    assert len(masks) == 70 and len(set(masks.tolist())) == 70
    assert {int(m).bit_count() for m in masks} == {4}


def test_step_with_commuting_mask_changes_only_counter():
    s = init_walk(WalkParams(12, 3, 4))
    before = s.gens.copy()
    walk_step(s, ReplacementMask.from_modes(12, [1, 2, 3, 4]))
    assert np.array_equal(s.gens, before) and s.steps == 1


def test_double_step_is_identity():
    rng = np.random.default_rng(3)
    s = init_walk(WalkParams(16, 5, 4, seed=9))
    for _ in range(50):
        walk_step(s)
    for idx in rng.integers(0, len(replacement_masks(16)), size=200):
        before = s.gens.copy()
        m = int(replacement_masks(16)[idx])
        walk_step(s, m)
        walk_step(s, m)
        assert np.array_equal(s.gens, before)


def test_three_masks_swap_modes_1_and_5():
    s = init_walk(WalkParams(8, 2, 4))
    for v in range(1 << 8):
        s.gens = np.array([v], dtype=np.uint64)
        for modes in ([1, 2, 3, 4], [2, 3, 4, 5], [1, 2, 3, 4]):
            walk_step(s, ReplacementMask.from_modes(8, modes))
        b = [v >> i & 1 for i in range(8)]
        b[0], b[4] = b[4], b[0]
        assert int(s.gens[0]) == sum(bit << i for i, bit in enumerate(b))


def test_walk_preserves_validity_and_logicals():
    p = WalkParams(20, 7, 6, seed=42)
    s = init_walk(p)
    for step in range(1000):
        walk_step(s)
        if step % 50 == 0:
            code = s.code()
            report = validate(code)
            assert report.ok and (report.nstab, report.k) == (7, 3)
            ops = s.logical_operators()
            basis = LogicalBasis(tuple(ops[0::2]), tuple(ops[1::2]))
            assert check_logical_basis(code, basis) == []


def test_single_steps_consume_the_block_stream():
    p = WalkParams(16, 5, 4, seed=5)
    a = init_walk(p)
    for _ in range(BLOCK + 300):
        walk_step(a)
    b = init_walk(p)
    masks = replacement_masks(16)
    indices = np.concatenate([b.rng.integers(0, len(masks), size=BLOCK, dtype=np.int64) for _ in range(2)])
    for idx in indices[: BLOCK + 300].tolist():
        b.apply(int(masks[idx]))
    assert np.array_equal(a.gens, b.gens)


def test_run_walk_d4_finds_hamming_sized_code():
    out = run_walk(WalkParams(16, 5, 4, steps=10**6, seed=2024))
    assert out.found and out.steps_taken <= 10**6
    assert passes_d4_check(out.code.generators)
    assert brute_force_distance(out.code) == DistanceResult.exact(4)


def test_run_walk_is_deterministic():
    p = WalkParams(18, 6, 4, steps=200_000, seed=77)
    a, b = run_walk(p), run_walk(p)
    assert (a.status, a.steps_taken) == (b.status, b.steps_taken)
    assert (a.code is None) == (b.code is None)
    if a.code is not None:
        assert a.code == b.code


def test_run_walk_matches_stepwise_replay():
    p = WalkParams(16, 5, 4, steps=10**6, seed=31)
    out = run_walk(p)
    assert out.found
    s = init_walk(p)
    for _ in range(out.steps_taken):
        walk_step(s)
    assert s.code() == out.code
    assert s.passes_check()


def test_exhausted_walk_uses_full_budget():
    out = run_walk(WalkParams(10, 4, 4, steps=BLOCK + 17, seed=1))
    assert out.status == "exhausted" and out.steps_taken == BLOCK + 17


def test_d6_walk_logicals_track_the_code():
    p = WalkParams(20, 9, 6, steps=10**5, seed=4)
    out = run_walk(p)
    assert out.found
    basis = LogicalBasis(tuple(out.logicals[0::2]), tuple(out.logicals[1::2]))
    assert check_logical_basis(out.code, basis) == []


def test_derive_seed_is_stable_and_distinct():
    seeds = [derive_seed(99, i) for i in range(100)]
    assert len(set(seeds)) == 100
    assert seeds == [derive_seed(99, i) for i in range(100)]
    assert all(0 <= s < 2**64 for s in seeds)


def test_campaign_report_shape():
    report = run_campaign(WalkParams(16, 5, 4, steps=10**4), runs=4, master_seed=11)
    assert len(report.outcomes) == 4
    assert report.successes == sum(o.found for o in report.outcomes)
    doc = json.loads(report.to_json())
    assert doc["params"] == {"nmaj": 16, "nstab": 5, "target_distance": 4, "steps": 10**4}
    assert [o["run"] for o in doc["outcomes"]] == [0, 1, 2, 3]
    for o in doc["outcomes"]:
        assert set(o) >= {"seed", "status", "steps_taken"}
        if o["status"] == "found":
            assert all(len(row) == 16 for row in o["code"])
    assert "wall_time" not in doc and "wall_time" in report.to_dict(include_timing=True)


def test_campaign_is_deterministic_across_threads():
    p = WalkParams(18, 6, 4, steps=20_000)
    one = run_campaign(p, runs=6, master_seed=5, threads=1).to_json()
    assert one == run_campaign(p, runs=6, master_seed=5, threads=1).to_json()
    assert one == run_campaign(p, runs=6, master_seed=5, threads=3).to_json()


def test_stop_early_is_deterministic():
    p = WalkParams(16, 5, 4, steps=10**5)
    serial = run_campaign(p, runs=8, master_seed=3, stop_early=True)
    threaded = run_campaign(p, runs=8, master_seed=3, threads=4, stop_early=True)
    assert serial.to_json() == threaded.to_json()
    assert serial.outcomes[-1].found and serial.successes == 1
    assert len(serial.outcomes) + len(serial.skipped) == 8
