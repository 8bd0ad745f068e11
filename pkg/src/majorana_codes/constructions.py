"""Deterministic code constructions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .code import DEFAULT_GROUP_CAP, CodeError, MajoranaCode, iter_group
from .f2core import MajoranaOperator, reduce_vector

# X -> gamma_(i,1) gamma_(i,2), Z -> gamma_(i,1) gamma_(i,3), Y = X Z up to sign.
_PAULI_IMAGE = {"I": 0b0000, "X": 0b0011, "Z": 0b0101, "Y": 0b0110}


@dataclass(frozen=True)
class QubitPauliOperator:
    letters: str

    def __post_init__(self):
        letters = self.letters.strip().upper()
        if not letters or set(letters) - set("IXYZ"):
            raise ValueError(f"not a Pauli string: {self.letters!r}")
        object.__setattr__(self, "letters", letters)

    @property
    def nqub(self) -> int:
        return len(self.letters)

    def commutes_with(self, other: "QubitPauliOperator") -> bool:
        clashes = sum(a != "I" and b != "I" and a != b for a, b in zip(self.letters, other.letters))
        return clashes % 2 == 0

    def to_majorana(self) -> MajoranaOperator:
        bits = 0
        for i, p in enumerate(self.letters):
            bits |= _PAULI_IMAGE[p] << (4 * i)
        return MajoranaOperator(4 * self.nqub, bits)


def _independent_rows(nmaj: int, candidates: Iterable[int]) -> list[int]:
    """Greedy subset of ``candidates`` that is independent and keeps parity out of its span."""
    basis = {nmaj - 1: (1 << nmaj) - 1}  # seed with parity so it is never generated
    kept = []
    for v in candidates:
        r = reduce_vector(v, basis)
        if r:
            basis[r.bit_length() - 1] = r
            kept.append(v)
    return kept


def hamming_majorana(m: int) -> MajoranaCode:
    """Code on 2^m modes whose generator S_t holds gamma_a when bit t of a - 1 is set.

    Bits are counted from the least significant, starting at t = 1.
    """
    if m < 3:
        raise ValueError(f"Hamming Majorana codes need m >= 3, got {m}")
    nmaj = 1 << m
    gens = []
    for t in range(m):
        bits = 0
        for a in range(nmaj):  # a here is the 0-based row, i.e. a - 1 in mode labels
            if a >> t & 1:
                bits |= 1 << a
        gens.append(MajoranaOperator(nmaj, bits))
    return MajoranaCode(nmaj, tuple(gens))


def map_qubit_code(stabilizers: Sequence[QubitPauliOperator | str], nqub: int | None = None) -> MajoranaCode:
    """Majorana code with four modes per qubit built from a qubit stabilizer code.

    Mode (i, a) for qubit i and a in 1..4 sits at bit 4(i - 1) + (a - 1).
    Redundant generators are dropped; in particular one of the per-qubit
    quartic terms always goes, since their product is fermion parity.
    """
    paulis = [s if isinstance(s, QubitPauliOperator) else QubitPauliOperator(s) for s in stabilizers]
    if nqub is None:
        if not paulis:
            raise ValueError("nqub is required when there are no stabilizers")
        nqub = paulis[0].nqub
    for p in paulis:
        if p.nqub != nqub:
            raise ValueError(f"{p.letters} acts on {p.nqub} qubits, expected {nqub}")
    for p, q in combinations(paulis, 2):
        if not p.commutes_with(q):
            raise ValueError(f"stabilizers {p.letters} and {q.letters} anticommute")
    nmaj = 4 * nqub
    quartics = [0b1111 << (4 * i) for i in range(nqub)]
    rows = _independent_rows(nmaj, quartics + [p.to_majorana().bits for p in paulis])
    return MajoranaCode.from_bits(nmaj, rows)


def read_pauli_file(path: str | Path) -> list[QubitPauliOperator]:
    """One Pauli string per line; '#' starts a comment, blank lines are skipped."""
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(QubitPauliOperator(line))
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from None
    return out


def extend_by_pair(c: MajoranaCode) -> MajoranaCode:
    """Add two modes and the weight-2 stabilizer on them.  K and distance are unchanged."""
    nmaj = c.nmaj + 2
    gens = [MajoranaOperator(nmaj, g.bits) for g in c.generators]
    gens.append(MajoranaOperator(nmaj, 0b11 << c.nmaj))
    return MajoranaCode(nmaj, tuple(gens))


def _delete_bits(v: int, a: int, b: int) -> int:
    """Drop bit positions a < b and close the gap."""
    low = v & ((1 << a) - 1)
    mid = (v >> (a + 1)) & ((1 << (b - a - 1)) - 1)
    high = v >> (b + 1)
    return low | mid << a | high << (b - 1)


def find_weight2_element(c: MajoranaCode, cap: int = DEFAULT_GROUP_CAP) -> tuple[int, int] | None:
    """Lowest pair (a, b) of 0-based modes with gamma_a gamma_b in the group, if any."""
    best = None
    for v in iter_group(c, cap):
        if v.bit_count() == 2:
            low = (v & -v).bit_length() - 1
            pair = (low, v.bit_length() - 1)
            if best is None or pair < best:
                best = pair
    return best


def strip_weight2_pairs(c: MajoranaCode, cap: int = DEFAULT_GROUP_CAP) -> MajoranaCode:
    """Repeatedly remove a pair of modes carrying a weight-2 stabilizer, quotienting the group.

    Stops when no weight-2 element remains, or at two modes where parity
    itself has weight 2.
    """
    while c.nmaj > 2:
        pair = find_weight2_element(c, cap)
        if pair is None:
            break
        a, b = pair
        nmaj = c.nmaj - 2
        # every group element commutes with gamma_a gamma_b, so it holds both modes or neither
        rows = _independent_rows(nmaj, (_delete_bits(g, a, b) for g in c.generator_bits()))
        if len(rows) != len(c.generators) - 1:
            raise CodeError("quotient by a weight-2 element lost more than one generator")
        c = MajoranaCode.from_bits(nmaj, rows)
    return c
