"""Compiled inner loops over uint64 bit rows (nmaj <= 64).

All kernels release the GIL so independent walks can share a thread pool.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np
from numba import njit

from .f2core import echelon

_jit = njit(cache=True, nogil=True)


@_jit
def parity64(x):
    x ^= x >> np.uint64(32)
    x ^= x >> np.uint64(16)
    x ^= x >> np.uint64(8)
    x ^= x >> np.uint64(4)
    x ^= x >> np.uint64(2)
    x ^= x >> np.uint64(1)
    return x & np.uint64(1)


@_jit
def replace_all(rows, mask):
    for r in range(rows.shape[0]):
        if parity64(rows[r] & mask):
            rows[r] ^= mask


@_jit
def commutes_with_all(op, gens):
    for r in range(gens.shape[0]):
        if parity64(op & gens[r]):
            return False
    return True


@_jit
def d4_ok(gens, pair_masks):
    # every gamma_i gamma_j must be caught by some stored generator
    for p in range(pair_masks.shape[0]):
        if commutes_with_all(pair_masks[p], gens):
            return False
    return True


@_jit
def d6_ok(gens, logicals, low_masks):
    for p in range(low_masks.shape[0]):
        m = low_masks[p]
        if commutes_with_all(m, gens) and not commutes_with_all(m, logicals):
            return False
    return True


@_jit
def walk_chunk(gens, logicals, masks, indices, check_masks, target):
    """Apply masks[indices[t]] in turn, checking after each; return steps used on success, else -1."""
    for t in range(indices.shape[0]):
        m = masks[indices[t]]
        replace_all(gens, m)
        replace_all(logicals, m)
        if target == 4:
            if d4_ok(gens, check_masks):
                return t + 1
        elif d6_ok(gens, logicals, check_masks):
            return t + 1
    return -1


@_jit
def reduce_by(v, basis, leads):
    # basis rows sorted by strictly decreasing leading bit leads[r]
    for r in range(basis.shape[0]):
        if (v >> leads[r]) & np.uint64(1):
            v ^= basis[r]
    return v


@_jit
def first_logical_of_weight(gens, group_basis, leads, w, count):
    """Scan all ``count`` = C(nmaj, w) weight-w masks in increasing numeric order.

    Returns the first that commutes with every generator but lies outside the
    group, or 0 if there is none.
    """
    x = (np.uint64(1) << np.uint64(w)) - np.uint64(1)
    for n in range(count):
        if commutes_with_all(x, gens) and reduce_by(x, group_basis, leads) != 0:
            return x
        if n + 1 < count:
            # Gosper's hack: next integer with the same popcount
            c = x & (~x + np.uint64(1))
            r = x + c
            x = (((r ^ x) >> np.uint64(2)) // c) | r
    return np.uint64(0)


def weight_masks(nmaj: int, w: int) -> np.ndarray:
    """All weight-w masks on nmaj bits, in lexicographic order of the mode tuples."""
    out = np.empty(comb(nmaj, w), dtype=np.uint64)
    for n, modes in enumerate(combinations(range(nmaj), w)):
        v = 0
        for a in modes:
            v |= 1 << a
        out[n] = v
    return out


def as_rows(values) -> np.ndarray:
    return np.array([int(v) for v in values], dtype=np.uint64)


def sorted_basis(rows) -> tuple[np.ndarray, np.ndarray]:
    """Echelon basis as uint64 rows with strictly decreasing leading bits, plus those bits."""
    basis = echelon(int(v) for v in rows)
    leads = sorted(basis, reverse=True)
    return (
        np.array([basis[p] for p in leads], dtype=np.uint64),
        np.array(leads, dtype=np.uint64),
    )
