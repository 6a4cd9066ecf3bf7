"""Brute-force oracle for antisymmetric biderivations over a field.

The unknowns are the coefficients B(e_i, e_j)(k) for ordered basis pairs
with i before j in canonical interval order; antisymmetry is built in by
rewriting B(e_j, e_i) as -B(e_i, e_j) and B(e_i, e_i) as 0.  Every basis
triple contributes the coefficient-level rows of both Leibniz identities.
Rows are eliminated as they are generated, so only the independent ones
are ever stored.  The nullspace of the system is exactly the module of
antisymmetric biderivations, computed with no reference to the chain
classification; classify() then cross-checks the two against each other.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import IncidenceElement
from .bracket import (
    Bracket,
    SigmaMap,
    check_antisymmetric,
    check_biderivation,
    extract_sigma,
    from_sigma,
)
from .coeff import RingSpec, Scalar
from .errors import BijectionViolation, NotAField, RingMismatch
from .poset import Interval, Poset


class LinearSystem:
    """The constraint system, kept as its reduced independent rows.

    rows maps a pivot column to a sparse row {column: coefficient} whose
    pivot coefficient is 1 and which is zero at every other pivot column.
    The nullspace of the full streamed system equals the nullspace of
    these rows.
    """

    def __init__(self, poset: Poset, ring: RingSpec):
        if not ring.is_field:
            raise NotAField(f"{ring} is not a field")
        self.poset = poset
        self.ring = ring
        intervals = poset.intervals()
        self.intervals = intervals
        self.interval_rank = {iv: k for k, iv in enumerate(intervals)}
        self.pairs = [
            (intervals[a], intervals[b])
            for a in range(len(intervals))
            for b in range(a + 1, len(intervals))
        ]
        self.pair_rank = {pair: r for r, pair in enumerate(self.pairs)}
        self.num_unknowns = len(self.pairs) * len(intervals)
        self.rows: dict[int, dict[int, object]] = {}
        self.rows_streamed = 0

    def column(self, i: Interval, j: Interval, k: Interval) -> tuple[int, int]:
        """Column index and sign for the coefficient B(e_i, e_j)(k)."""
        r = self.pair_rank.get((i, j))
        if r is not None:
            return r * len(self.intervals) + self.interval_rank[k], 1
        r = self.pair_rank[(j, i)]
        return r * len(self.intervals) + self.interval_rank[k], -1

    @property
    def rank(self) -> int:
        return len(self.rows)

    # -- incremental elimination, maintained fully reduced ------------------

    def _reduce(self, value):
        """Canonical representative of a raw field value."""
        if self.ring.kind == "Zmod":
            return value % self.ring.modulus
        return value

    def _inv(self, value):
        if self.ring.kind == "Q":
            return 1 / value
        return pow(value, -1, self.ring.modulus)

    def _absorb(self, row: dict[int, object]):
        self.rows_streamed += 1
        rows = self.rows
        red = self._reduce
        for col in sorted(row):
            pivot_row = rows.get(col)
            if pivot_row is None or col not in row:
                continue
            factor = row[col]
            for k, v in pivot_row.items():
                value = red(row.get(k, 0) - factor * v)
                if value:
                    row[k] = value
                else:
                    row.pop(k, None)
        if not row:
            return
        pivot = min(row)
        inv = self._inv(row[pivot])
        normalized = {k: red(inv * v) for k, v in row.items()}
        for other in rows.values():
            if pivot in other:
                factor = other[pivot]
                for k, v in normalized.items():
                    value = red(other.get(k, 0) - factor * v)
                    if value:
                        other[k] = value
                    else:
                        other.pop(k, None)
        rows[pivot] = normalized

    def satisfied_by(self, vector: dict[int, object]) -> bool:
        """True iff the vector solves every absorbed equation."""
        for row in self.rows.values():
            total = 0
            for col, coeff in row.items():
                v = vector.get(col)
                if v is not None:
                    total += coeff * v
            if self._reduce(total):
                return False
        return True


class SolutionBasis:
    """Deterministic basis of the solution space, one Bracket per vector."""

    def __init__(self, vectors: list[Bracket], free_columns: list[int]):
        self.vectors = vectors
        self.free_columns = free_columns

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def build_system(poset: Poset, field: RingSpec) -> LinearSystem:
    """Stream both Leibniz identities on all basis triples into the system."""
    system = LinearSystem(poset, field)
    intervals = system.intervals
    ring = field
    one = Fraction(1) if ring.kind == "Q" else 1
    modulus = ring.modulus if ring.kind == "Zmod" else None

    prod: dict[tuple[Interval, Interval], Interval] = {}
    for i in intervals:
        for j in intervals:
            if i.hi == j.lo:
                prod[(i, j)] = Interval(i.lo, j.hi)
    down = {
        x: [y for y in poset.elements if poset.leq(y, x)] for x in poset.elements
    }
    up = {
        x: [y for y in poset.elements if poset.leq(x, y)] for x in poset.elements
    }

    def emit(acc: dict):
        for row in acc.values():
            if row:
                system._absorb(row)

    def bump(acc, target: Interval, i: Interval, j: Interval, k: Interval, sign):
        if i == j:
            return
        col, s = system.column(i, j, k)
        value = sign if s > 0 else -sign
        if modulus is not None:
            value = value % modulus
        row = acc.setdefault(target, {})
        total = row.get(col, 0) + value
        if modulus is not None:
            total = total % modulus
        if total:
            row[col] = total
        else:
            row.pop(col, None)

    minus = -one if modulus is None else modulus - 1
    for a in intervals:
        for b in intervals:
            ab = prod.get((a, b))
            for c in intervals:
                # B(ab, c) - B(a, c) e_b - e_a B(b, c) = 0
                acc: dict = {}
                if ab is not None:
                    for k in intervals:
                        bump(acc, k, ab, c, k, one)
                for x in down[b.lo]:
                    bump(acc, Interval(x, b.hi), a, c, Interval(x, b.lo), minus)
                for y in up[a.hi]:
                    bump(acc, Interval(a.lo, y), b, c, Interval(a.hi, y), minus)
                emit(acc)

                # B(a, bc) - B(a, b) e_c - e_b B(a, c) = 0
                acc = {}
                bc = prod.get((b, c))
                if bc is not None:
                    for k in intervals:
                        bump(acc, k, a, bc, k, one)
                for x in down[c.lo]:
                    bump(acc, Interval(x, c.hi), a, b, Interval(x, c.lo), minus)
                for y in up[b.hi]:
                    bump(acc, Interval(b.lo, y), a, c, Interval(b.hi, y), minus)
                emit(acc)
    return system


def _vector_to_bracket(system: LinearSystem, vector: dict[int, object]) -> Bracket:
    n = len(system.intervals)
    ring = system.ring
    table: dict[tuple[Interval, Interval], IncidenceElement] = {}
    per_pair: dict[int, dict[Interval, Scalar]] = {}
    for col, value in vector.items():
        r, k = divmod(col, n)
        scalar = ring.scalar(value)
        if not scalar.is_zero():
            per_pair.setdefault(r, {})[system.intervals[k]] = scalar
    for r, coeffs in per_pair.items():
        table[system.pairs[r]] = IncidenceElement(system.poset, ring, coeffs)
    return Bracket(system.poset, ring, table, antisymmetric_mode=True)


def _bracket_to_vector(system: LinearSystem, bracket: Bracket) -> dict[int, object]:
    if bracket.ring != system.ring:
        raise RingMismatch("bracket ring differs from the system's field")
    n = len(system.intervals)
    vector: dict[int, object] = {}
    for (i, j) in bracket.stored_pairs():
        r = system.pair_rank[(i, j)]
        for k, c in bracket.value(i, j).coeffs.items():
            vector[r * n + system.interval_rank[k]] = c.value
    return vector


def nullspace(system: LinearSystem) -> SolutionBasis:
    """Basis of the solution space, free columns in ascending order."""
    one = Fraction(1) if system.ring.kind == "Q" else 1
    pivots = system.rows
    free = [c for c in range(system.num_unknowns) if c not in pivots]
    vectors = []
    for j in free:
        vec = {j: one}
        for p, row in pivots.items():
            v = row.get(j)
            if v is not None:
                vec[p] = -v if system.ring.kind == "Q" else (-v) % system.ring.modulus
        vectors.append(_vector_to_bracket(system, vec))
    return SolutionBasis(vectors, free)


class ClassificationReport:
    """Outcome of the solver-vs-theorem cross-check for one poset."""

    def __init__(
        self,
        poset: Poset,
        ring: RingSpec,
        basis: SolutionBasis,
        chain_component_count: int,
        sigmas: list[SigmaMap],
        match: bool,
    ):
        self.poset = poset
        self.ring = ring
        self.basis = basis
        self.chain_component_count = chain_component_count
        self.sigmas = sigmas
        self.match = match

    @property
    def dimension(self) -> int:
        return self.basis.dimension

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "chain_components": self.chain_component_count,
            "match": self.match,
            "basis": [sigma.to_json() for sigma in self.sigmas],
        }


def classify(poset: Poset, field: RingSpec) -> ClassificationReport:
    """Solve for all antisymmetric biderivations and confirm the bijection.

    Raises BijectionViolation if the solver space and the chain-constant
    parametrization disagree in any way; that would mean a bug, not math.
    """
    system = build_system(poset, field)
    basis = nullspace(system)
    components = poset.chain_components()
    match = basis.dimension == len(components)

    sigmas = []
    for vector in basis.vectors:
        if not check_antisymmetric(vector).ok or not check_biderivation(vector).ok:
            raise BijectionViolation("solver vector fails a bracket check")
        sigma = extract_sigma(vector, check=False)
        if not sigma.is_chain_constant():
            raise BijectionViolation("solver vector's sigma is not chain-constant")
        if from_sigma(sigma) != vector:
            raise BijectionViolation("sigma does not reproduce its solver vector")
        sigmas.append(sigma)

    for cls in components:
        indicator = SigmaMap(
            poset, field, {pair: field.one for pair in cls}
        )
        candidate = from_sigma(indicator)
        if not system.satisfied_by(_bracket_to_vector(system, candidate)):
            raise BijectionViolation(
                "indicator bracket falls outside the solver space"
            )

    if not match:
        raise BijectionViolation(
            f"dimension {basis.dimension} != {len(components)} chain components"
        )
    return ClassificationReport(
        poset, field, basis, len(components), sigmas, match
    )
