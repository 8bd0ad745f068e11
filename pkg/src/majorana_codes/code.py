"""Majorana stabilizer codes as self-orthogonal binary codes.

A code keeps only its "stored list" of generators.  Fermion parity (the
all-ones vector) is always an extra, implicit generator, so
``nstab = len(generators) + 1`` and ``K = nmaj / 2 - nstab``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .f2core import MajoranaOperator, anticommutes, echelon, reduce_vector

DEFAULT_GROUP_CAP = 1 << 20


class CodeError(ValueError):
    """Raised when a code is used in a way its invariants forbid."""


class EnumerationCapExceeded(CodeError):
    pass


@dataclass(frozen=True)
class MajoranaCode:
    nmaj: int
    generators: tuple[MajoranaOperator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.nmaj != self.nmaj:
                raise CodeError(f"generator {g} has {g.nmaj} modes, code has {self.nmaj}")

    @classmethod
    def from_strings(cls, rows: Sequence[str], nmaj: int | None = None) -> "MajoranaCode":
        ops = [MajoranaOperator.from_string(r) for r in rows]
        if nmaj is None:
            if not ops:
                raise CodeError("cannot infer nmaj from an empty generator list")
            nmaj = ops[0].nmaj
        return cls(nmaj, tuple(ops))

    @classmethod
    def from_bits(cls, nmaj: int, rows: Sequence[int]) -> "MajoranaCode":
        return cls(nmaj, tuple(MajoranaOperator(nmaj, int(r)) for r in rows))

    @property
    def parity(self) -> MajoranaOperator:
        return MajoranaOperator.parity(self.nmaj)

    @property
    def nstab(self) -> int:
        return len(self.generators) + 1

    @property
    def k(self) -> int:
        return self.nmaj // 2 - self.nstab

    def generator_bits(self) -> list[int]:
        return [g.bits for g in self.generators]

    def group_rows(self) -> list[int]:
        """Stored generators followed by fermion parity, as ints."""
        return self.generator_bits() + [self.parity.bits]

    def to_strings(self) -> list[str]:
        return [str(g) for g in self.generators]

    def canonical(self) -> "MajoranaCode":
        """Same code with each generator replaced by its display representative."""
        return MajoranaCode(self.nmaj, tuple(canonical_representative(g) for g in self.generators))


@dataclass
class ValidationReport:
    nmaj: int
    nstab: int
    k: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class Syndrome:
    """One bit per generator: stored list order, parity last."""

    bits: tuple[int, ...]

    def __str__(self):
        return "".join(map(str, self.bits))

    def __xor__(self, other: "Syndrome") -> "Syndrome":
        if len(self.bits) != len(other.bits):
            raise ValueError("syndromes of different length")
        return Syndrome(tuple(a ^ b for a, b in zip(self.bits, other.bits)))


@dataclass(frozen=True)
class LogicalBasis:
    x_ops: tuple[MajoranaOperator, ...]
    z_ops: tuple[MajoranaOperator, ...]

    def __len__(self):
        return len(self.x_ops)

    def operators(self) -> list[MajoranaOperator]:
        """x_1, z_1, x_2, z_2, ... in pair order."""
        out = []
        for x, z in zip(self.x_ops, self.z_ops):
            out += [x, z]
        return out


def canonical_representative(g: MajoranaOperator) -> MajoranaOperator:
    """Pick between ``g`` and ``g * parity`` (equal up to parity): lighter wins, then lexicographic."""
    h = g ^ MajoranaOperator.parity(g.nmaj)
    return min(g, h, key=lambda v: (v.weight(), str(v)))


def validate(c: MajoranaCode) -> ValidationReport:
    report = ValidationReport(c.nmaj, c.nstab, c.k)
    if c.nmaj % 2:
        report.violations.append(f"nmaj={c.nmaj} is odd")
    gens = c.generators
    for i, g in enumerate(gens):
        if g.bits == 0:
            report.violations.append(f"generator {i} is the identity (zero vector)")
        elif g.weight() % 2:
            report.violations.append(f"generator {i} has odd weight {g.weight()}")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if (gens[i].bits & gens[j].bits).bit_count() % 2:
                report.violations.append(f"generators {i} and {j} anticommute")
    basis: dict[int, int] = {}
    for i, g in enumerate(gens):
        r = reduce_vector(g.bits, basis)
        if r == 0:
            if g.bits:
                report.violations.append(f"generator {i} is dependent on earlier generators")
            continue
        basis[r.bit_length() - 1] = r
    if gens and reduce_vector(c.parity.bits, basis) == 0:
        report.violations.append("fermion parity is in the span of the stored generators")
    if c.k < 0:
        report.violations.append(f"K = {c.k} is negative")
    return report


def num_logical_qubits(c: MajoranaCode) -> int:
    return c.k


def syndrome(c: MajoranaCode, e: MajoranaOperator) -> Syndrome:
    if e.nmaj != c.nmaj:
        raise ValueError(f"length mismatch: {e.nmaj} vs {c.nmaj}")
    return Syndrome(tuple(int(anticommutes(e, g)) for g in (*c.generators, c.parity)))


def single_mode_syndromes_distinct(c: MajoranaCode) -> bool:
    seen = set()
    for a in range(1, c.nmaj + 1):
        s = syndrome(c, MajoranaOperator.from_modes(c.nmaj, [a]))
        if s in seen:
            return False
        seen.add(s)
    return True


def iter_group(c: MajoranaCode, cap: int = DEFAULT_GROUP_CAP) -> Iterator[int]:
    """Every nontrivial element of the stabilizer group, in Gray-code order."""
    rows = c.group_rows()
    if (1 << len(rows)) - 1 > cap:
        raise EnumerationCapExceeded(f"group has 2^{len(rows)} elements, cap is {cap}")
    v = 0
    for n in range(1, 1 << len(rows)):
        v ^= rows[(n & -n).bit_length() - 1]
        yield v


def min_stabilizer_weight(c: MajoranaCode, cap: int = DEFAULT_GROUP_CAP) -> int:
    return min(v.bit_count() for v in iter_group(c, cap))


def is_degenerate(c: MajoranaCode, d: int, cap: int = DEFAULT_GROUP_CAP) -> bool:
    return min_stabilizer_weight(c, cap) < d


def _nullspace(rows: list[int], n: int) -> list[int]:
    """Basis of {v : popcount(v & r) even for every r}, via reduced row echelon form."""
    pivots: dict[int, int] = {}  # pivot column -> fully reduced row
    for r in rows:
        for col, p in pivots.items():
            if r >> col & 1:
                r ^= p
        if not r:
            continue
        col = (r & -r).bit_length() - 1
        for c2 in pivots:
            if pivots[c2] >> col & 1:
                pivots[c2] ^= r
        pivots[col] = r
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        v = 1 << free
        for col, p in pivots.items():
            if p >> free & 1:
                v |= 1 << col
        basis.append(v)
    return basis


def logical_basis(c: MajoranaCode) -> LogicalBasis:
    """Symplectic basis of logical operators, built by Gram-Schmidt over the overlap form.

    The commutant of the group is its orthogonal complement; the form restricted
    to it has the group itself as radical.  Pairing off vectors and discarding
    the ones orthogonal to everything leaves K anticommuting pairs.
    """
    pool = _nullspace(c.group_rows(), c.nmaj)
    xs, zs = [], []
    while pool:
        u = pool.pop(0)
        partner = next((i for i, w in enumerate(pool) if (u & w).bit_count() & 1), None)
        if partner is None:
            continue
        w = pool.pop(partner)
        pool = [
            x ^ (u if (x & w).bit_count() & 1 else 0) ^ (w if (x & u).bit_count() & 1 else 0)
            for x in pool
        ]
        xs.append(MajoranaOperator(c.nmaj, u))
        zs.append(MajoranaOperator(c.nmaj, w))
    return LogicalBasis(tuple(xs), tuple(zs))


def check_logical_basis(c: MajoranaCode, basis: LogicalBasis) -> list[str]:
    """Problems with ``basis`` as a logical basis of ``c``; empty when it is valid."""
    problems = []
    ops = basis.operators()
    if len(basis.x_ops) != len(basis.z_ops):
        problems.append("x and z lists differ in length")
    if len(basis.x_ops) != c.k:
        problems.append(f"expected {c.k} pairs, got {len(basis.x_ops)}")
    group = echelon(c.group_rows())
    for op in ops:
        if op.weight() % 2:
            problems.append(f"{op} has odd weight")
        for i, g in enumerate(c.generators):
            if (op.bits & g.bits).bit_count() % 2:
                problems.append(f"{op} anticommutes with generator {i}")
        if reduce_vector(op.bits, group) == 0:
            problems.append(f"{op} is in the stabilizer group")
    for i, (xi, zi) in enumerate(zip(basis.x_ops, basis.z_ops)):
        for j, (xj, zj) in enumerate(zip(basis.x_ops, basis.z_ops)):
            if anticommutes(xi, zj) != (i == j):
                problems.append(f"x_{i}, z_{j} pairing is wrong")
            if i != j and anticommutes(xi, xj):
                problems.append(f"x_{i}, x_{j} anticommute")
            if i != j and anticommutes(zi, zj):
                problems.append(f"z_{i}, z_{j} anticommute")
    # the 2K operators must also be independent modulo the group
    if len(echelon([*c.group_rows(), *(op.bits for op in ops)])) != c.nstab + len(ops):
        problems.append("logical operators are dependent modulo the stabilizer group")
    return problems
