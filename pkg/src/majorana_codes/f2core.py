"""Bit vectors over F2 representing Majorana operators.

An operator on ``nmaj`` modes is stored as a Python int whose bit ``a - 1``
is set when the product contains gamma_a.  Signs and phases are dropped.
Text form puts gamma_1 leftmost, matching how generator tables are printed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class MajoranaOperator:
    """Support of a product of Majorana modes, as an ``nmaj``-bit vector."""

    nmaj: int
    bits: int

    def __post_init__(self):
        if self.nmaj <= 0 or self.nmaj % 2:
            raise ValueError(f"nmaj must be a positive even integer, got {self.nmaj}")
        if self.bits < 0 or self.bits >> self.nmaj:
            raise ValueError(f"bits 0x{self.bits:x} do not fit in {self.nmaj} modes")

    @classmethod
    def from_string(cls, text: str) -> "MajoranaOperator":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 bit string: {text!r}")
        return cls(len(text), int(text[::-1], 2))

    @classmethod
    def from_modes(cls, nmaj: int, modes: Iterable[int]) -> "MajoranaOperator":
        """Build from 1-based mode labels, e.g. ``from_modes(6, [1, 2])`` is gamma_1 gamma_2."""
        bits = 0
        for a in modes:
            if not 1 <= a <= nmaj:
                raise ValueError(f"mode {a} outside 1..{nmaj}")
            bits ^= 1 << (a - 1)
        return cls(nmaj, bits)

    @classmethod
    def zero(cls, nmaj: int) -> "MajoranaOperator":
        return cls(nmaj, 0)

    @classmethod
    def parity(cls, nmaj: int) -> "MajoranaOperator":
        """The fermion parity operator gamma_1 ... gamma_nmaj (all ones)."""
        return cls(nmaj, (1 << nmaj) - 1)

    def modes(self) -> list[int]:
        return [a + 1 for a in range(self.nmaj) if self.bits >> a & 1]

    def weight(self) -> int:
        return self.bits.bit_count()

    def __xor__(self, other: "MajoranaOperator") -> "MajoranaOperator":
        _check_same(self, other)
        return MajoranaOperator(self.nmaj, self.bits ^ other.bits)

    def __and__(self, other: "MajoranaOperator") -> "MajoranaOperator":
        _check_same(self, other)
        return MajoranaOperator(self.nmaj, self.bits & other.bits)

    def __str__(self):
        return format(self.bits, f"0{self.nmaj}b")[::-1]


@dataclass(frozen=True)
class ReplacementMask:
    """Four modes i < j < k < l (0-based bits) used by the walk update."""

    nmaj: int
    bits: int

    def __post_init__(self):
        if self.bits.bit_count() != 4:
            raise ValueError("a replacement mask must have exactly four bits set")
        if self.bits >> self.nmaj:
            raise ValueError(f"mask has bits beyond nmaj={self.nmaj}")

    @classmethod
    def from_modes(cls, nmaj: int, modes: Sequence[int]) -> "ReplacementMask":
        """Mask for 1-based modes, e.g. ``(1, 2, 3, 4)``."""
        if len(set(modes)) != 4:
            raise ValueError(f"need four distinct modes, got {modes}")
        return cls(nmaj, MajoranaOperator.from_modes(nmaj, modes).bits)

    def as_operator(self) -> MajoranaOperator:
        return MajoranaOperator(self.nmaj, self.bits)


def _check_same(a, b):
    if a.nmaj != b.nmaj:
        raise ValueError(f"length mismatch: {a.nmaj} vs {b.nmaj}")


def weight(v: MajoranaOperator) -> int:
    return v.bits.bit_count()


def overlap_parity(a: MajoranaOperator, b: MajoranaOperator) -> int:
    """Parity of the number of modes shared by ``a`` and ``b``."""
    _check_same(a, b)
    return (a.bits & b.bits).bit_count() & 1


def anticommutes(a: MajoranaOperator, b: MajoranaOperator) -> bool:
    """Whether two Majorana products anticommute.

    Moving each mode of ``b`` through ``a`` costs a sign ``(-1)^|a|``, plus an
    extra sign for every shared mode, so the total exponent is
    ``|a||b| + |a & b|``.  For even-weight operands this is just the overlap parity.
    """
    _check_same(a, b)
    return bool((weight(a) * weight(b) + (a.bits & b.bits).bit_count()) & 1)


def echelon(rows: Iterable[int]) -> dict[int, int]:
    """Reduce int bit rows to a basis keyed by pivot (highest set bit)."""
    basis: dict[int, int] = {}
    for r in rows:
        r = reduce_vector(r, basis)
        if r:
            basis[r.bit_length() - 1] = r
    return basis


def reduce_vector(v: int, basis: dict[int, int]) -> int:
    """Remainder of ``v`` modulo the span of ``basis``; zero iff ``v`` is in the span."""
    for pivot in sorted(basis, reverse=True):
        if v >> pivot & 1:
            v ^= basis[pivot]
    return v


def f2_rank(vs: Sequence[MajoranaOperator]) -> int:
    if not vs:
        return 0
    nmaj = vs[0].nmaj
    for v in vs:
        if v.nmaj != nmaj:
            raise ValueError(f"length mismatch: {v.nmaj} vs {nmaj}")
    return len(echelon(v.bits for v in vs))


def in_span(v: MajoranaOperator, vs: Sequence[MajoranaOperator]) -> bool:
    for u in vs:
        _check_same(u, v)
    return reduce_vector(v.bits, echelon(u.bits for u in vs)) == 0


def apply_replacement_bits(v: int, mask: int) -> int:
    """Int-level replacement: XOR in ``mask`` when ``v`` meets it an odd number of times."""
    if (v & mask).bit_count() & 1:
        return v ^ mask
    return v


def apply_replacement(v: MajoranaOperator, m: ReplacementMask) -> MajoranaOperator:
    """Substitute gamma_i -> gamma_j gamma_k gamma_l (and the three analogous moves).

    Done in parallel over all four modes, the substitution multiplies ``v`` by
    the mask exactly when ``v`` contains an odd number of the four modes.
    """
    _check_same(v, m)
    return MajoranaOperator(v.nmaj, apply_replacement_bits(v.bits, m.bits))
