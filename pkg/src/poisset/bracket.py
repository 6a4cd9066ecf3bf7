"""Bilinear brackets on incidence algebras.

A bracket is determined by its values B(e_i, e_j) on ordered pairs of basis
elements.  This module stores such tables, verifies the antisymmetry,
Leibniz, and Jacobi identities exhaustively on basis triples (enough, by
multilinearity), and implements the two directions of the classification:
a chain-constant map sigma on strict pairs induces the bracket

    B(f, g)(x, y) = sigma(x, y) [f, g](x, y)   for x < y, 0 on the diagonal

and every antisymmetric biderivation arises this way, with sigma recovered
as sigma(x, y) = B(e_x, e_xy)(x, y).
"""

from __future__ import annotations

import random
from typing import Iterable, Mapping

from .algebra import IncidenceElement, random_element
from .coeff import RingSpec, Scalar, format_scalar, parse_scalar
from .errors import (
    InconsistentAntisymmetry,
    InvalidPair,
    NotABiderivation,
    NotAField,
    NotChainConstant,
    NotProportional,
    PosetMismatch,
    RingMismatch,
)
from .poset import Interval, Poset, StrictPair


class CheckReport:
    """Outcome of one verification pass.

    Passing instances are only counted (per check name); failing instances
    are kept individually with enough data to reproduce them.
    """

    def __init__(self, name: str):
        self.name = name
        self.pass_counts: dict[str, int] = {}
        self.failures: list[tuple[str, dict]] = []

    def count_pass(self, check: str, n: int = 1):
        self.pass_counts[check] = self.pass_counts.get(check, 0) + n

    def fail(self, check: str, instance: dict):
        self.failures.append((check, instance))

    @property
    def ok(self) -> bool:
        return not self.failures

    def total_passes(self) -> int:
        return sum(self.pass_counts.values())

    def to_json(self) -> list[dict]:
        records = [
            {"check": check, "instance": instance, "status": "fail"}
            for check, instance in self.failures
        ]
        failed = {check for check, _ in self.failures}
        for check in sorted(self.pass_counts):
            if check not in failed:
                records.append(
                    {
                        "check": check,
                        "instance": {"instances": self.pass_counts[check]},
                        "status": "pass",
                    }
                )
        return records

    def __repr__(self):
        verdict = "ok" if self.ok else f"{len(self.failures)} failures"
        return f"CheckReport({self.name}: {verdict}, {self.total_passes()} passes)"


class SigmaMap:
    """A total map from strict pairs of the poset to scalars."""

    __slots__ = ("poset", "ring", "values")

    def __init__(self, poset: Poset, ring: RingSpec, values: Mapping):
        self.poset = poset
        self.ring = ring
        total: dict[StrictPair, Scalar] = {
            pair: ring.zero for pair in poset.strict_pairs()
        }
        for key, scalar in values.items():
            lo, hi = key
            pair = StrictPair(lo, hi)
            if pair not in total:
                raise InvalidPair(f"({lo!r}, {hi!r}) is not a strict pair")
            if not isinstance(scalar, Scalar):
                scalar = ring.scalar(scalar)
            elif scalar.ring != ring:
                raise RingMismatch(f"value at {pair} lives in {scalar.ring}")
            total[pair] = scalar
        self.values = total

    def value(self, lo: str, hi: str) -> Scalar:
        pair = StrictPair(lo, hi)
        if pair not in self.values:
            raise InvalidPair(f"({lo!r}, {hi!r}) is not a strict pair")
        return self.values[pair]

    def is_chain_constant(self) -> bool:
        """True iff the map takes one value on each chain component."""
        for cls in self.poset.chain_components():
            first = self.values[cls[0]]
            if any(self.values[pair] != first for pair in cls[1:]):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, SigmaMap):
            return NotImplemented
        return (
            self.poset == other.poset
            and self.ring == other.ring
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.poset, self.ring, frozenset(self.values.items())))

    def __repr__(self):
        items = ", ".join(
            f"({lo},{hi})={format_scalar(v)}"
            for (lo, hi), v in sorted(
                self.values.items(), key=lambda kv: self.poset.interval_index(
                    Interval(*kv[0])
                )
            )
        )
        return f"SigmaMap({items})"

    def to_json(self) -> dict:
        pairs = self.poset.strict_pairs()
        return {
            "entries": [
                {"lo": lo, "hi": hi, "value": format_scalar(self.values[StrictPair(lo, hi)])}
                for lo, hi in pairs
            ]
        }

    @staticmethod
    def from_json(poset: Poset, ring: RingSpec, data: dict) -> "SigmaMap":
        values = {}
        for entry in data.get("entries", []):
            lo, hi = entry["lo"], entry["hi"]
            values[(lo, hi)] = parse_scalar(ring, entry["value"])
        return SigmaMap(poset, ring, values)


def is_chain_constant(sigma: SigmaMap) -> bool:
    return sigma.is_chain_constant()


def _basis_products(poset: Poset) -> dict[tuple[Interval, Interval], Interval]:
    """e_i e_j for all basis pairs with nonzero product."""
    out = {}
    for i in poset.intervals():
        for j in poset.intervals():
            if i.hi == j.lo:
                out[(i, j)] = Interval(i.lo, j.hi)
    return out


def _scale_into(acc: dict, coeffs: dict, factor: Scalar):
    for iv, c in coeffs.items():
        p = factor * c
        if iv in acc:
            s = acc[iv] + p
            if s.is_zero():
                del acc[iv]
            else:
                acc[iv] = s
        elif not p.is_zero():
            acc[iv] = p


def _sub_into(acc: dict, coeffs: dict):
    for iv, c in coeffs.items():
        if iv in acc:
            s = acc[iv] - c
            if s.is_zero():
                del acc[iv]
            else:
                acc[iv] = s
        else:
            acc[iv] = -c


def _mul_right(coeffs: dict, b: Interval) -> dict:
    """coeffs * e_b at the coefficient level."""
    u, v = b
    return {Interval(x, v): c for (x, z), c in coeffs.items() if z == u}


def _mul_left(a: Interval, coeffs: dict) -> dict:
    """e_a * coeffs at the coefficient level."""
    x, u = a
    return {Interval(x, y): c for (z, y), c in coeffs.items() if z == u}


class Bracket:
    """A bilinear bracket stored by its basis table.

    In antisymmetric mode only pairs (i, j) with i before j in the canonical
    interval order are stored; B(e_j, e_i) is minus the stored value and the
    diagonal is zero by construction.  In raw mode the table is taken as
    given, with missing pairs read as zero; this is how unvalidated input is
    held so that the checks can report its violations.
    """

    __slots__ = ("poset", "ring", "antisymmetric_mode", "_table", "_zero")

    def __init__(
        self,
        poset: Poset,
        ring: RingSpec,
        table: dict[tuple[Interval, Interval], IncidenceElement],
        antisymmetric_mode: bool,
    ):
        self.poset = poset
        self.ring = ring
        self.antisymmetric_mode = antisymmetric_mode
        self._table = table
        self._zero = IncidenceElement.zero(poset, ring)

    @staticmethod
    def from_basis_table(
        poset: Poset,
        ring: RingSpec,
        entries: Mapping,
        antisymmetric: bool = True,
    ) -> "Bracket":
        """Build a bracket from a map (pair of intervals) -> element.

        Interval keys may be given as Interval values or plain (lo, hi)
        tuples.  In antisymmetric mode, diagonal entries must be zero and
        mirrored entries must be each other's negatives.
        """

        def as_interval(key) -> Interval:
            lo, hi = key
            if not poset.is_interval(lo, hi):
                raise InvalidPair(f"({lo!r}, {hi!r}) is not an interval")
            return Interval(lo, hi)

        normalized: dict[tuple[Interval, Interval], IncidenceElement] = {}
        for (left_key, right_key), value in entries.items():
            left, right = as_interval(left_key), as_interval(right_key)
            if not isinstance(value, IncidenceElement):
                raise InvalidPair(f"value at ({left}, {right}) is not an element")
            if value.poset != poset:
                raise PosetMismatch(f"value at ({left}, {right}) uses another poset")
            if value.ring != ring:
                raise RingMismatch(f"value at ({left}, {right}) lives in {value.ring}")
            if not antisymmetric:
                if value:
                    normalized[(left, right)] = value
                continue
            if left == right:
                if value:
                    raise InconsistentAntisymmetry(
                        f"B(e_{left}, e_{left}) must vanish, got {value!r}"
                    )
                continue
            li = poset.interval_index(left)
            ri = poset.interval_index(right)
            key = (left, right) if li < ri else (right, left)
            signed = value if li < ri else -value
            if key in normalized:
                if normalized[key] != signed:
                    raise InconsistentAntisymmetry(
                        f"B{key} and its mirror disagree with antisymmetry"
                    )
            elif signed:
                normalized[key] = signed
        return Bracket(poset, ring, normalized, antisymmetric)

    # -- table access --------------------------------------------------------

    def value(self, i: Interval, j: Interval) -> IncidenceElement:
        """B(e_i, e_j)."""
        if not self.antisymmetric_mode:
            return self._table.get((i, j), self._zero)
        if i == j:
            return self._zero
        if self.poset.interval_index(i) < self.poset.interval_index(j):
            return self._table.get((i, j), self._zero)
        stored = self._table.get((j, i))
        return -stored if stored is not None else self._zero

    def _full_coeffs(self) -> dict[tuple[Interval, Interval], dict]:
        """Coefficient dicts for every nonzero pair, both orientations."""
        full: dict[tuple[Interval, Interval], dict] = {}
        for (i, j), el in self._table.items():
            full[(i, j)] = el.coeffs
            if self.antisymmetric_mode:
                full[(j, i)] = {iv: -c for iv, c in el.coeffs.items()}
        return full

    def stored_pairs(self) -> list[tuple[Interval, Interval]]:
        order = self.poset.interval_index
        return sorted(self._table, key=lambda p: (order(p[0]), order(p[1])))

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, f: IncidenceElement, g: IncidenceElement) -> IncidenceElement:
        """The bilinear extension: sum of f(i) g(j) B(e_i, e_j)."""
        for el in (f, g):
            if el.poset != self.poset:
                raise PosetMismatch("argument lives over another poset")
            if el.ring != self.ring:
                raise RingMismatch(f"argument lives in {el.ring}, not {self.ring}")
        acc: dict[Interval, Scalar] = {}
        for i, fi in f.coeffs.items():
            for j, gj in g.coeffs.items():
                val = self.value(i, j)
                if val.coeffs:
                    _scale_into(acc, val.coeffs, fi * gj)
        return IncidenceElement(self.poset, self.ring, acc)

    # -- equality ------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Bracket):
            return NotImplemented
        if self.poset != other.poset or self.ring != other.ring:
            return False
        if self.antisymmetric_mode and other.antisymmetric_mode:
            return self._table == other._table
        ivs = self.poset.intervals()
        return all(
            self.value(i, j) == other.value(i, j) for i in ivs for j in ivs
        )

    def __hash__(self):
        return hash((self.poset, self.ring, frozenset(self._table.items())))

    def __repr__(self):
        mode = "antisymmetric" if self.antisymmetric_mode else "raw"
        return f"Bracket({mode}, {len(self._table)} stored pairs)"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        """Table as JSON.  Antisymmetric tables are written out in full,
        both orientations of every stored pair, so that the file alone
        certifies antisymmetry when re-verified."""
        order = self.poset.interval_index
        entries: dict[tuple[Interval, Interval], IncidenceElement] = dict(self._table)
        if self.antisymmetric_mode:
            for (i, j), el in self._table.items():
                entries[(j, i)] = -el
        pairs = []
        for i, j in sorted(entries, key=lambda p: (order(p[0]), order(p[1]))):
            pairs.append(
                {
                    "left": {"lo": i.lo, "hi": i.hi},
                    "right": {"lo": j.lo, "hi": j.hi},
                    "value": entries[(i, j)].to_json()["entries"],
                }
            )
        return {"pairs": pairs}

    @staticmethod
    def from_json(
        poset: Poset, ring: RingSpec, data: dict, antisymmetric: bool = True
    ) -> "Bracket":
        entries = {}
        for pair in data.get("pairs", []):
            left = (pair["left"]["lo"], pair["left"]["hi"])
            right = (pair["right"]["lo"], pair["right"]["hi"])
            el = IncidenceElement.from_json(
                poset, {"entries": pair["value"]}, ring=ring
            )
            key = (left, right)
            if key in entries:
                raise InvalidPair(f"duplicate table entry for {key}")
            entries[key] = el
        return Bracket.from_basis_table(poset, ring, entries, antisymmetric)


# -- verification ------------------------------------------------------------


def check_antisymmetric(bracket: Bracket) -> CheckReport:
    """B(e_i, e_i) = 0 and B(e_i, e_j) + B(e_j, e_i) = 0 for all pairs."""
    report = CheckReport("antisymmetry")
    ivs = bracket.poset.intervals()
    full = bracket._full_coeffs()
    empty: dict = {}
    for i in ivs:
        if full.get((i, i)):
            report.fail("antisymmetry", {"left": list(i), "right": list(i)})
        else:
            report.count_pass("antisymmetry")
    for a in range(len(ivs)):
        for b in range(a + 1, len(ivs)):
            i, j = ivs[a], ivs[b]
            forward = full.get((i, j), empty)
            backward = full.get((j, i), empty)
            residual = dict(forward)
            for iv, c in backward.items():
                s = residual.get(iv)
                total = c if s is None else s + c
                if total.is_zero():
                    residual.pop(iv, None)
                else:
                    residual[iv] = total
            if residual:
                report.fail("antisymmetry", {"left": list(i), "right": list(j)})
            else:
                report.count_pass("antisymmetry")
    return report


def check_biderivation(bracket: Bracket) -> CheckReport:
    """Both Leibniz identities on all ordered basis triples (a, b, c):

        B(ab, c) = B(a, c) b + a B(b, c)
        B(a, bc) = B(a, b) c + b B(a, c)

    When the bracket is antisymmetric the two are equivalent; the report
    still records both, plus whether their verdicts agreed triple by triple.
    """
    report = CheckReport("biderivation")
    P = bracket.poset
    ivs = P.intervals()
    prod = _basis_products(P)
    full = bracket._full_coeffs()
    empty: dict = {}
    antisym = check_antisymmetric(bracket).ok
    fail1: set = set()
    fail2: set = set()

    for a in ivs:
        for b in ivs:
            ab = prod.get((a, b))
            for c in ivs:
                f_ac = full.get((a, c), empty)
                f_bc = full.get((b, c), empty)
                lhs1 = full.get((ab, c), empty) if ab is not None else empty
                if lhs1 or f_ac or f_bc:
                    residual = dict(lhs1)
                    _sub_into(residual, _mul_right(f_ac, b))
                    _sub_into(residual, _mul_left(a, f_bc))
                    ok1 = not residual
                else:
                    ok1 = True
                if ok1:
                    report.count_pass("leibniz_1")
                else:
                    fail1.add((a, b, c))
                    report.fail(
                        "leibniz_1", {"a": list(a), "b": list(b), "c": list(c)}
                    )

                bc = prod.get((b, c))
                f_ab = full.get((a, b), empty)
                lhs2 = full.get((a, bc), empty) if bc is not None else empty
                if lhs2 or f_ab or f_ac:
                    residual = dict(lhs2)
                    _sub_into(residual, _mul_right(f_ab, c))
                    _sub_into(residual, _mul_left(b, f_ac))
                    ok2 = not residual
                else:
                    ok2 = True
                if ok2:
                    report.count_pass("leibniz_2")
                else:
                    fail2.add((a, b, c))
                    report.fail(
                        "leibniz_2", {"a": list(a), "b": list(b), "c": list(c)}
                    )

    if antisym:
        # negating the first identity at (a, b, c) gives the second at
        # (c, a, b), so for an antisymmetric table the failing triples
        # must correspond under that permutation
        if {(c, a, b) for a, b, c in fail1} == fail2:
            report.count_pass("leibniz_equivalence")
        else:
            report.fail(
                "leibniz_equivalence", {"note": "Eq (1) and Eq (2) disagree"}
            )
    return report


def check_jacobi(bracket: Bracket) -> CheckReport:
    """B(a, B(b, c)) + B(b, B(c, a)) + B(c, B(a, b)) = 0 on basis triples."""
    report = CheckReport("jacobi")
    ivs = bracket.poset.intervals()
    full = bracket._full_coeffs()
    empty: dict = {}

    def apply(left: Interval, coeffs: dict, acc: dict):
        for k, ck in coeffs.items():
            inner = full.get((left, k))
            if inner:
                _scale_into(acc, inner, ck)

    for a in ivs:
        for b in ivs:
            f_ab = full.get((a, b), empty)
            for c in ivs:
                f_bc = full.get((b, c), empty)
                f_ca = full.get((c, a), empty)
                if not (f_ab or f_bc or f_ca):
                    report.count_pass("jacobi")
                    continue
                acc: dict[Interval, Scalar] = {}
                apply(a, f_bc, acc)
                apply(b, f_ca, acc)
                apply(c, f_ab, acc)
                if acc:
                    report.fail(
                        "jacobi", {"a": list(a), "b": list(b), "c": list(c)}
                    )
                else:
                    report.count_pass("jacobi")
    return report


def _require_biderivation(bracket: Bracket):
    if not check_antisymmetric(bracket).ok:
        raise NotABiderivation("bracket is not antisymmetric")
    if not check_biderivation(bracket).ok:
        raise NotABiderivation("bracket violates a Leibniz identity")


# -- classification ----------------------------------------------------------


def from_sigma(sigma: SigmaMap) -> Bracket:
    """The bracket B(f, g)(x, y) = sigma(x, y) [f, g](x, y), zero on loops."""
    if not sigma.is_chain_constant():
        raise NotChainConstant("sigma takes two values on one chain component")
    P, R = sigma.poset, sigma.ring
    ivs = P.intervals()
    prod = _basis_products(P)
    table: dict[tuple[Interval, Interval], IncidenceElement] = {}
    for a in range(len(ivs)):
        for b in range(a + 1, len(ivs)):
            i, j = ivs[a], ivs[b]
            # [e_i, e_j] is e_forward - e_backward where at most one of the
            # two products survives (both would force i = j)
            coeffs: dict[Interval, Scalar] = {}
            forward = prod.get((i, j))
            if forward is not None:
                weight = sigma.values[StrictPair(*forward)]
                if not weight.is_zero():
                    coeffs[forward] = weight
            backward = prod.get((j, i))
            if backward is not None:
                weight = sigma.values[StrictPair(*backward)]
                if not weight.is_zero():
                    coeffs[backward] = -weight
            if coeffs:
                table[(i, j)] = IncidenceElement(P, R, coeffs)
    return Bracket(P, R, table, antisymmetric_mode=True)


def extract_sigma(bracket: Bracket, check: bool = True) -> SigmaMap:
    """Recover sigma via sigma(x, y) = B(e_x, e_xy)(x, y).

    With check=True (the default) the bracket is first verified to be an
    antisymmetric biderivation; NotABiderivation is raised otherwise.
    """
    if check:
        _require_biderivation(bracket)
    P, R = bracket.poset, bracket.ring
    values = {}
    for lo, hi in P.strict_pairs():
        val = bracket.value(Interval(lo, lo), Interval(lo, hi))
        values[(lo, hi)] = val.coeff(lo, hi)
    return SigmaMap(P, R, values)


def extract_lambda(
    bracket: Bracket, check: bool = True
) -> dict[tuple[Interval, Interval], Scalar]:
    """The proportionality scalars B(e_i, e_j) = lambda(i, j) [e_i, e_j].

    Defined exactly on the ordered pairs with [e_i, e_j] nonzero.  Raises
    NotProportional when some B(e_i, e_j) is not a multiple of the
    commutator, which cannot happen for a genuine biderivation.
    """
    if check:
        _require_biderivation(bracket)
    P = bracket.poset
    ivs = P.intervals()
    prod = _basis_products(P)
    out: dict[tuple[Interval, Interval], Scalar] = {}
    for i in ivs:
        for j in ivs:
            if i == j:
                continue
            com: dict[Interval, Scalar] = {}
            forward = prod.get((i, j))
            if forward is not None:
                com[forward] = bracket.ring.one
            backward = prod.get((j, i))
            if backward is not None:
                com[backward] = -bracket.ring.one
            if not com:
                continue
            # a commutator of two distinct basis elements is a single
            # signed basis element, so the ratio needs no division
            (target, unit), = com.items()
            value = bracket.value(i, j)
            extra = [iv for iv in value.coeffs if iv != target]
            if extra:
                raise NotProportional(
                    f"B(e_{i}, e_{j}) has support outside [e_{i}, e_{j}]"
                )
            out[(i, j)] = value.coeff(*target) * unit
    return out


def is_standard(bracket: Bracket, check: bool = True) -> IncidenceElement | None:
    """The central element lam with B = lam [. , .], or None.

    Standard means B(f, g) = lam [f, g] for a single central lam, which
    happens exactly when the extracted sigma is constant on the strict
    pairs of each connected component.  Components with no strict pairs
    put no constraint on lam; their coefficient is set to zero.
    """
    sigma = extract_sigma(bracket, check=check)
    P, R = bracket.poset, bracket.ring
    coeffs: dict[Interval, Scalar] = {}
    for component in P.connected_components():
        members = set(component)
        values = [
            sigma.values[pair] for pair in P.strict_pairs() if pair.lo in members
        ]
        if values and any(v != values[0] for v in values[1:]):
            return None
        constant = values[0] if values else R.zero
        if not constant.is_zero():
            for x in component:
                coeffs[Interval(x, x)] = constant
    return IncidenceElement(P, R, coeffs)


class PiecewiseWitness:
    """A claimed decomposition into Lie ideals with one scalar each."""

    def __init__(
        self, ideals: list[list[IncidenceElement]], lambdas: list[Scalar]
    ):
        if len(ideals) != len(lambdas):
            raise ValueError("need exactly one scalar per ideal")
        self.ideals = [list(gens) for gens in ideals]
        self.lambdas = list(lambdas)


def _coords(el: IncidenceElement, index: dict[Interval, int]) -> dict[int, Scalar]:
    return {index[iv]: c for iv, c in el.coeffs.items()}


def _reduce_against(row: dict[int, Scalar], basis: dict[int, dict[int, Scalar]]):
    """Eliminate the pivots of basis from row, in place."""
    for col in sorted(row):
        if col in basis and col in row:
            factor = row[col]
            for k, v in basis[col].items():
                p = factor * v
                s = row.get(k)
                total = -p if s is None else s - p
                if total.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = total


def _span_basis(
    vectors: Iterable[dict[int, Scalar]],
) -> dict[int, dict[int, Scalar]]:
    """Row-reduce vectors into a pivot-keyed basis (requires a field)."""
    basis: dict[int, dict[int, Scalar]] = {}
    for vec in vectors:
        row = dict(vec)
        _reduce_against(row, basis)
        if not row:
            continue
        pivot = min(row)
        inv = row[pivot].inverse()
        normalized = {k: inv * v for k, v in row.items()}
        for other in basis.values():
            if pivot in other:
                factor = other[pivot]
                for k, v in normalized.items():
                    s = other.get(k)
                    total = -(factor * v) if s is None else s - factor * v
                    if total.is_zero():
                        other.pop(k, None)
                    else:
                        other[k] = total
        basis[pivot] = normalized
    return basis


def verify_piecewise_witness(
    bracket: Bracket, witness: PiecewiseWitness, check: bool = True
) -> CheckReport:
    """Check a claimed piecewise decomposition B|_{A_i} = lambda_i [. , .].

    Three clauses: (a) each span is a Lie ideal, (b) the spans form a
    direct sum filling the whole algebra, (c) the bracket restricted to
    each ideal is lambda_i times the commutator.  Indecomposability of the
    ideals is not examined.
    """
    if not bracket.ring.is_field:
        raise NotAField("piecewise verification needs rank computations")
    if check:
        _require_biderivation(bracket)
    report = CheckReport("piecewise")
    P, R = bracket.poset, bracket.ring
    index = {iv: k for k, iv in enumerate(P.intervals())}
    bases = [
        _span_basis(_coords(g, index) for g in gens) for gens in witness.ideals
    ]

    for pos, (gens, basis) in enumerate(zip(witness.ideals, bases)):
        ok = True
        for g in gens:
            for lo, hi in P.intervals():
                e = IncidenceElement.basis(P, R, lo, hi)
                row = _coords(g.commutator(e), index)
                _reduce_against(row, basis)
                if row:
                    ok = False
                    report.fail(
                        "piecewise.lie_ideal",
                        {"ideal": pos, "basis": [lo, hi]},
                    )
        if ok:
            report.count_pass("piecewise.lie_ideal")

    ranks = [len(b) for b in bases]
    joint = _span_basis(
        _coords(g, index) for gens in witness.ideals for g in gens
    )
    if len(joint) == sum(ranks) == len(index):
        report.count_pass("piecewise.direct_sum")
    else:
        report.fail(
            "piecewise.direct_sum",
            {
                "ranks": ranks,
                "joint_rank": len(joint),
                "dimension": len(index),
            },
        )

    for pos, (gens, lam) in enumerate(zip(witness.ideals, witness.lambdas)):
        ok = True
        for g in gens:
            for lo, hi in P.intervals():
                e = IncidenceElement.basis(P, R, lo, hi)
                if bracket.evaluate(g, e) != g.commutator(e).scale(lam):
                    ok = False
                    report.fail(
                        "piecewise.scaling",
                        {"ideal": pos, "basis": [lo, hi]},
                    )
        if ok:
            report.count_pass("piecewise.scaling")
    return report


# -- idempotent identity suite ------------------------------------------------


def lemma_suite(
    bracket: Bracket,
    samples: int = 20,
    seed: int = 0,
    strict: bool = False,
) -> CheckReport:
    """Idempotent identities for antisymmetric biderivations.

    Each identity is instantiated over all admissible tuples of the
    diagonal idempotents e_x and a deterministic batch of random elements.
    The suite reports violations instead of refusing corrupt input, so it
    can demonstrate why a table fails; pass strict=True to insist the
    bracket verify as an antisymmetric biderivation up front.
    """
    if strict:
        _require_biderivation(bracket)
    report = CheckReport("lemma_suite")
    P, R = bracket.poset, bracket.ring
    labels = P.elements
    idem = {x: IncidenceElement.basis(P, R, x, x) for x in labels}
    zero_el = IncidenceElement.zero(P, R)
    rng = random.Random(seed)
    xs = [random_element(P, R, rng) for _ in range(samples)]
    ys = [random_element(P, R, rng) for _ in range(samples)]

    # orthogonal idempotents bracket to zero
    for e in labels:
        for f in labels:
            if e == f:
                continue
            if bracket.value(Interval(e, e), Interval(f, f)):
                report.fail("orthogonal_vanishing", {"e": e, "f": f})
            else:
                report.count_pass("orthogonal_vanishing")

    for s in range(samples):
        x, y = xs[s], ys[s]
        bex = {e: bracket.evaluate(idem[e], x) for e in labels}
        sx = {(a, b): x.sandwich(a, b) for a in labels for b in labels}
        sy = {(a, b): y.sandwich(a, b) for a in labels for b in labels}

        # B(e, fxg) = f B(e, x) g, and = 0 when e differs from f and g
        for e in labels:
            for f in labels:
                for g in labels:
                    fxg = sx[(f, g)]
                    lhs = bracket.evaluate(idem[e], fxg)
                    rhs = bex[e].sandwich(f, g)
                    bad = lhs != rhs
                    if not bad and e != f and e != g and lhs:
                        bad = True
                    if bad:
                        report.fail(
                            "sandwich_transport",
                            {"e": e, "f": f, "g": g, "sample": s},
                        )
                    else:
                        report.count_pass("sandwich_transport")

        # B(e, exf) = B(exf, f)
        for e in labels:
            for f in labels:
                exf = sx[(e, f)]
                lhs = bracket.evaluate(idem[e], exf)
                rhs = bracket.evaluate(exf, idem[f])
                if lhs != rhs:
                    report.fail("endpoint_exchange", {"e": e, "f": f, "sample": s})
                else:
                    report.count_pass("endpoint_exchange")

        # distinct triples: B(exf, fyg) = e B(e, x) f y g
        for e in labels:
            for f in labels:
                if f == e:
                    continue
                exf = sx[(e, f)]
                ebexf = bex[e].sandwich(e, f)
                for g in labels:
                    if g == e or g == f:
                        continue
                    lhs = bracket.evaluate(exf, sy[(f, g)])
                    rhs = ebexf * y * idem[g]
                    if lhs != rhs:
                        report.fail(
                            "forward_chaining",
                            {"e": e, "f": f, "g": g, "sample": s},
                        )
                    else:
                        report.count_pass("forward_chaining")

        # distinct triples: B(exf, gye) = -g B(g, y) exf
        gby = {g: idem[g] * bracket.evaluate(idem[g], y) for g in labels}
        for e in labels:
            for f in labels:
                if f == e:
                    continue
                exf = sx[(e, f)]
                for g in labels:
                    if g == e or g == f:
                        continue
                    lhs = bracket.evaluate(exf, sy[(g, e)])
                    rhs = -(gby[g] * exf)
                    if lhs != rhs:
                        report.fail(
                            "backward_chaining",
                            {"e": e, "f": f, "g": g, "sample": s},
                        )
                    else:
                        report.count_pass("backward_chaining")

        # quadruples with e, g orthogonal to f, h: the value is its own
        # corner sandwich eg B(exf, gyh) fh
        for e in labels:
            for f in labels:
                if f == e:
                    continue
                exf = sx[(e, f)]
                for g in labels:
                    if g == f:
                        continue
                    for h in labels:
                        if h == e or h == g:
                            continue
                        val = bracket.evaluate(exf, sy[(g, h)])
                        if not val:
                            report.count_pass("corner_support")
                            continue
                        # eg and fh collapse to e_e, e_f or vanish outright
                        if e == g and f == h:
                            rhs = val.sandwich(e, f)
                        else:
                            rhs = zero_el
                        if val != rhs:
                            report.fail(
                                "corner_support",
                                {"e": e, "f": f, "g": g, "h": h, "sample": s},
                            )
                        else:
                            report.count_pass("corner_support")
    return report
