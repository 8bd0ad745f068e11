"""Random-walk search for distance-4 and distance-6 codes.

The walk starts from the stored list gamma_1 gamma_2, gamma_3 gamma_4, ...
and repeatedly applies a uniformly random 4-mode replacement to every
generator.  Each replacement is an invertible linear map that preserves the
overlap form, so every state is a valid code with the same nstab.  After each
step the code is tested for the target distance.

Randomness comes from numpy's PCG64.  Mask indices are drawn in fixed-size
blocks that the single-step API and the compiled run loop both consume, so a
run is reproducible from its seed alone.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _kernels as K
from .code import MajoranaCode, logical_basis
from .distance import MAX_KERNEL_MODES, low_weight_masks, pair_masks
from .f2core import MajoranaOperator, ReplacementMask

log = logging.getLogger(__name__)

BLOCK = 1 << 16
SEED_MASK = (1 << 64) - 1


@dataclass(frozen=True)
class WalkParams:
    nmaj: int
    nstab: int
    target_distance: int = 4
    steps: int = 10**6
    seed: int = 0

    def __post_init__(self):
        problems = self.problems()
        if problems:
            raise ValueError("invalid walk parameters: " + "; ".join(problems))

    def problems(self) -> list[str]:
        out = []
        if self.nmaj <= 0 or self.nmaj % 2:
            out.append(f"nmaj={self.nmaj} must be a positive even integer")
        if self.nmaj < 4:
            out.append(f"nmaj={self.nmaj} is too small for 4-mode replacements")
        if self.nmaj > MAX_KERNEL_MODES:
            out.append(f"nmaj={self.nmaj} exceeds {MAX_KERNEL_MODES}")
        if self.nstab < 2:
            out.append(f"nstab={self.nstab} must be >= 2")
        if 2 * (self.nstab - 1) > self.nmaj:
            out.append(f"2(nstab-1)={2 * (self.nstab - 1)} exceeds nmaj={self.nmaj}")
        if self.k < 0:
            out.append(f"K = nmaj/2 - nstab = {self.k} is negative")
        if self.target_distance not in (4, 6):
            out.append(f"target_distance={self.target_distance} must be 4 or 6")
        elif self.target_distance == 6 and self.k < 1:
            out.append("target_distance=6 needs K >= 1 to track logical operators")
        if self.steps < 1:
            out.append(f"steps={self.steps} must be positive")
        if not 0 <= self.seed <= SEED_MASK:
            out.append(f"seed={self.seed} is not a 64-bit unsigned integer")
        return out

    @property
    def k(self) -> int:
        return self.nmaj // 2 - self.nstab

    def with_seed(self, seed: int) -> "WalkParams":
        return WalkParams(self.nmaj, self.nstab, self.target_distance, self.steps, seed)

    def to_dict(self) -> dict:
        return {
            "nmaj": self.nmaj,
            "nstab": self.nstab,
            "target_distance": self.target_distance,
            "steps": self.steps,
        }


@lru_cache(maxsize=None)
def replacement_masks(nmaj: int) -> np.ndarray:
    """All C(nmaj, 4) masks, i < j < k < l in lexicographic order."""
    masks = K.weight_masks(nmaj, 4)
    masks.flags.writeable = False
    return masks


def initial_stored_list(nmaj: int, nstab: int) -> list[MajoranaOperator]:
    return [MajoranaOperator(nmaj, 0b11 << (2 * i)) for i in range(nstab - 1)]


class WalkState:
    """Mutable walk configuration: stored list, tracked logicals, RNG and step count."""

    def __init__(self, params: WalkParams, gens: np.ndarray, logicals: np.ndarray):
        self.params = params
        self.gens = gens
        self.logicals = logicals
        self.steps = 0
        self.rng = np.random.Generator(np.random.PCG64(params.seed))
        self._block = np.empty(0, dtype=np.int64)
        self._pos = 0
        self._masks = replacement_masks(params.nmaj)
        if params.target_distance == 4:
            self._check_masks = pair_masks(params.nmaj)
        else:
            self._check_masks = low_weight_masks(params.nmaj)

    @property
    def nmaj(self) -> int:
        return self.params.nmaj

    def code(self) -> MajoranaCode:
        return MajoranaCode.from_bits(self.nmaj, self.gens.tolist())

    def logical_operators(self) -> list[MajoranaOperator]:
        return [MajoranaOperator(self.nmaj, int(v)) for v in self.logicals]

    def pending(self) -> np.ndarray:
        """Unused mask indices of the current block, refilling it when exhausted."""
        if self._pos >= len(self._block):
            self._block = self.rng.integers(0, len(self._masks), size=BLOCK, dtype=np.int64)
            self._pos = 0
        return self._block[self._pos:]

    def apply(self, mask: int) -> None:
        K.replace_all(self.gens, np.uint64(mask))
        K.replace_all(self.logicals, np.uint64(mask))

    def passes_check(self) -> bool:
        if self.params.target_distance == 4:
            return bool(K.d4_ok(self.gens, self._check_masks))
        return bool(K.d6_ok(self.gens, self.logicals, self._check_masks))

    def copy(self) -> "WalkState":
        other = WalkState.__new__(WalkState)
        other.__dict__.update(self.__dict__)
        other.gens = self.gens.copy()
        other.logicals = self.logicals.copy()
        other.rng = np.random.Generator(np.random.PCG64())
        other.rng.bit_generator.state = self.rng.bit_generator.state
        return other


def init_walk(p: WalkParams) -> WalkState:
    gens = initial_stored_list(p.nmaj, p.nstab)
    logicals = np.zeros(0, dtype=np.uint64)
    if p.target_distance == 6:
        basis = logical_basis(MajoranaCode(p.nmaj, tuple(gens)))
        logicals = K.as_rows(op.bits for op in basis.operators())
    return WalkState(p, K.as_rows(g.bits for g in gens), logicals)


def walk_step(s: WalkState, mask: ReplacementMask | int | None = None) -> WalkState:
    """Advance one step in place and return the state.

    With no ``mask`` a uniformly random one is drawn from the state's RNG;
    passing one applies it without consuming randomness.
    """
    if mask is None:
        idx = s.pending()[0]
        s._pos += 1
        m = int(s._masks[idx])
    else:
        m = mask.bits if isinstance(mask, ReplacementMask) else int(mask)
        if m.bit_count() != 4 or m >> s.nmaj:
            raise ValueError("mask must select four of the walk's modes")
    s.apply(m)
    s.steps += 1
    return s


@dataclass
class SearchOutcome:
    status: str  # "found" | "exhausted"
    steps_taken: int
    seed: int
    code: MajoranaCode | None = None
    logicals: list[MajoranaOperator] | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"

    def to_dict(self) -> dict:
        out = {"seed": self.seed, "status": self.status, "steps_taken": self.steps_taken}
        if self.code is not None:
            out["code"] = self.code.to_strings()
        return out


def continue_walk(s: WalkState, budget: int) -> bool:
    """Step-and-check up to ``budget`` times; True as soon as the check passes."""
    remaining = budget
    while remaining > 0:
        block = s.pending()[:remaining]
        hit = K.walk_chunk(s.gens, s.logicals, s._masks, block, s._check_masks, s.params.target_distance)
        used = hit if hit >= 0 else len(block)
        s._pos += used
        s.steps += used
        remaining -= used
        if hit >= 0:
            return True
    return False


def run_walk(p: WalkParams) -> SearchOutcome:
    s = init_walk(p)
    if continue_walk(s, p.steps):
        logs = s.logical_operators() if p.target_distance == 6 else None
        return SearchOutcome("found", s.steps, p.seed, s.code(), logs)
    return SearchOutcome("exhausted", s.steps, p.seed)


def derive_seed(master_seed: int, run_index: int) -> int:
    """64-bit seed for one run, hashed from (master_seed, run_index) by numpy's SeedSequence."""
    ss = np.random.SeedSequence(entropy=master_seed, spawn_key=(run_index,))
    return int(ss.generate_state(1, np.uint64)[0])


@dataclass
class CampaignReport:
    params: WalkParams
    master_seed: int
    runs: int
    outcomes: list[SearchOutcome]
    wall_time: float = 0.0
    stop_early: bool = False
    skipped: list[int] = field(default_factory=list)

    @property
    def successes(self) -> int:
        return sum(o.found for o in self.outcomes)

    @property
    def total_steps(self) -> int:
        return sum(o.steps_taken for o in self.outcomes)

    def found_codes(self) -> list[tuple[int, MajoranaCode]]:
        return [(i, o.code) for i, o in enumerate(self.outcomes) if o.found]

    def to_dict(self, include_timing: bool = False) -> dict:
        """Structured report.  Timing is excluded by default so reports compare byte-for-byte."""
        out = {
            "params": self.params.to_dict(),
            "master_seed": self.master_seed,
            "runs": self.runs,
            "successes": self.successes,
            "total_steps": self.total_steps,
            "outcomes": [{"run": i, **o.to_dict()} for i, o in enumerate(self.outcomes)],
        }
        if self.stop_early:
            out["stop_early"] = True
            out["skipped_runs"] = self.skipped
        if include_timing:
            out["wall_time"] = self.wall_time
        return out

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2) + "\n"


def run_campaign(
    p: WalkParams,
    runs: int,
    master_seed: int,
    threads: int = 1,
    stop_early: bool = False,
) -> CampaignReport:
    """Independent walks from a fresh start, each seeded from (master_seed, run index).

    The report does not depend on ``threads``.  With ``stop_early`` it covers
    runs up to the first success by index; later runs are listed as skipped.
    """
    if runs < 1:
        raise ValueError("runs must be positive")
    start = time.perf_counter()
    seeds = [derive_seed(master_seed, i) for i in range(runs)]
    results: dict[int, SearchOutcome] = {}
    if threads <= 1:
        for i, seed in enumerate(seeds):
            results[i] = run_walk(p.with_seed(seed))
            if stop_early and results[i].found:
                break
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {i: pool.submit(run_walk, p.with_seed(seed)) for i, seed in enumerate(seeds)}
            first_hit = runs
            for i in range(runs):
                if i > first_hit:
                    futures[i].cancel()
                    continue
                results[i] = futures[i].result()
                if stop_early and results[i].found:
                    first_hit = i
    last = runs
    if stop_early:
        last = next((i + 1 for i in range(runs) if i in results and results[i].found), runs)
    outcomes = [results[i] for i in range(last)]
    report = CampaignReport(
        p, master_seed, runs, outcomes, time.perf_counter() - start, stop_early, list(range(last, runs))
    )
    log.info("campaign %s: %d/%d found in %.1fs", p.to_dict(), report.successes, len(outcomes), report.wall_time)
    return report


def measure_throughput(nmaj: int = 30, nstab: int = 7, steps: int = 10**6, seed: int = 1) -> float:
    """Walk iterations (update + d=4 check) per second on the calling thread.

    A walk that succeeds early is restarted with the next seed so that the
    whole step budget is timed.
    """
    p = WalkParams(nmaj, nstab, 4, steps, seed)
    continue_walk(init_walk(p), 1000)  # compile and warm caches
    total = 0
    t0 = time.perf_counter()
    while total < steps:
        s = init_walk(p.with_seed(seed))
        continue_walk(s, steps - total)
        total += s.steps
        seed = (seed + 1) & SEED_MASK
    return total / (time.perf_counter() - t0)
