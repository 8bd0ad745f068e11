"""Distance checks: the fast d=4 / d=6 tests used by the walk, and a brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

from . import _kernels as K
from .code import CodeError, EnumerationCapExceeded, MajoranaCode
from .f2core import MajoranaOperator

DEFAULT_CANDIDATE_CAP = 10**9
MAX_KERNEL_MODES = 64


@dataclass(frozen=True)
class DistanceResult:
    """``kind`` is "exact", "at_least" or "no_logicals"; ``value`` is d or the lower bound."""

    kind: str
    value: int | None = None
    witness: MajoranaOperator | None = None

    @classmethod
    def exact(cls, d: int, witness: MajoranaOperator | None = None) -> "DistanceResult":
        return cls("exact", d, witness)

    @classmethod
    def at_least(cls, w: int) -> "DistanceResult":
        return cls("at_least", w)

    @classmethod
    def no_logicals(cls) -> "DistanceResult":
        return cls("no_logicals")

    def __str__(self):
        if self.kind == "exact":
            return str(self.value)
        if self.kind == "at_least":
            return f">={self.value}"
        return "none (K=0)"

    def __eq__(self, other):
        if not isinstance(other, DistanceResult):
            return NotImplemented
        return (self.kind, self.value) == (other.kind, other.value)

    def __hash__(self):
        return hash((self.kind, self.value))


@lru_cache(maxsize=None)
def pair_masks(nmaj: int) -> np.ndarray:
    masks = K.weight_masks(nmaj, 2)
    masks.flags.writeable = False
    return masks


@lru_cache(maxsize=None)
def low_weight_masks(nmaj: int) -> np.ndarray:
    """Weight-2 masks then weight-4 masks, each in lexicographic order."""
    masks = np.concatenate([K.weight_masks(nmaj, 2), K.weight_masks(nmaj, 4)])
    masks.flags.writeable = False
    return masks


def _rows(ops: Sequence[MajoranaOperator]) -> tuple[int, np.ndarray]:
    if not ops:
        return 0, np.zeros(0, dtype=np.uint64)
    nmaj = ops[0].nmaj
    if any(op.nmaj != nmaj for op in ops):
        raise ValueError("operators have different nmaj")
    if nmaj > MAX_KERNEL_MODES:
        raise ValueError(f"bitmask checks support nmaj <= {MAX_KERNEL_MODES}, got {nmaj}")
    return nmaj, K.as_rows(op.bits for op in ops)


def passes_d4_check(stored: Sequence[MajoranaOperator], nmaj: int | None = None) -> bool:
    """True iff every gamma_i gamma_j anticommutes with at least one stored generator.

    That makes the code non-degenerate with distance at least 4.
    """
    n, rows = _rows(stored)
    nmaj = nmaj or n
    if not nmaj:
        raise ValueError("nmaj is required for an empty generator list")
    return bool(K.d4_ok(rows, pair_masks(nmaj)))


def passes_d6_check(
    stored: Sequence[MajoranaOperator],
    logicals: Sequence[MajoranaOperator],
    nmaj: int | None = None,
) -> bool:
    """True iff no weight-2 or weight-4 operator commutes with all generators yet
    anticommutes with one of the tracked logicals.  Degenerate codes may pass.
    """
    n1, rows = _rows(stored)
    n2, logs = _rows(logicals)
    nmaj = nmaj or n1 or n2
    if not nmaj:
        raise ValueError("nmaj is required when both lists are empty")
    return bool(K.d6_ok(rows, logs, low_weight_masks(nmaj)))


def brute_force_distance(
    c: MajoranaCode, wmax: int = 8, cap: int = DEFAULT_CANDIDATE_CAP
) -> DistanceResult:
    """Smallest weight of an operator that commutes with the group but is not in it.

    Weights 2, 4, ..., wmax are enumerated in full; the result is ``at_least(wmax + 2)``
    if nothing turns up.
    """
    if c.k < 0:
        raise CodeError(f"invalid code: K = {c.k}")
    if c.k == 0:
        return DistanceResult.no_logicals()
    if c.nmaj > MAX_KERNEL_MODES:
        raise ValueError(f"brute force supports nmaj <= {MAX_KERNEL_MODES}, got {c.nmaj}")
    wmax = min(wmax, c.nmaj)
    total = sum(comb(c.nmaj, w) for w in range(2, wmax + 1, 2))
    if total > cap:
        raise EnumerationCapExceeded(f"{total} candidates up to weight {wmax} exceeds cap {cap}")
    gens = K.as_rows(c.generator_bits())
    basis, leads = K.sorted_basis(c.group_rows())
    for w in range(2, wmax + 1, 2):
        hit = int(K.first_logical_of_weight(gens, basis, leads, w, comb(c.nmaj, w)))
        if hit:
            return DistanceResult.exact(w, MajoranaOperator(c.nmaj, hit))
    return DistanceResult.at_least(wmax + 2)
