"""Elements of the incidence algebra of a finite poset over an exact ring.

An element is a finitely supported map from intervals (pairs x <= y) to
scalars, written f = sum f(x, y) e_xy.  Multiplication is convolution:

    (f g)(x, y) = sum over x <= z <= y of f(x, z) g(z, y)

so e_xy e_uv = e_xv when y == u and x <= v, else 0.  All arithmetic is
exact; elements are immutable.
"""

from __future__ import annotations

from typing import Iterable

from .coeff import RingSpec, Scalar, format_scalar, parse_scalar
from .errors import NotComparable, PosetMismatch, RingMismatch, UnknownLabel
from .poset import Interval, Poset


class IncidenceElement:
    """A sparse element of I(P, R).  Zero coefficients are never stored."""

    __slots__ = ("poset", "ring", "coeffs")

    def __init__(self, poset: Poset, ring: RingSpec, coeffs: dict[Interval, Scalar]):
        self.poset = poset
        self.ring = ring
        clean: dict[Interval, Scalar] = {}
        for iv, c in coeffs.items():
            if c.ring != ring:
                raise RingMismatch(f"coefficient at {iv} lives in {c.ring}, not {ring}")
            if not c.is_zero():
                clean[iv] = c
        self.coeffs = clean

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(poset: Poset, ring: RingSpec) -> "IncidenceElement":
        return IncidenceElement(poset, ring, {})

    @staticmethod
    def basis(poset: Poset, ring: RingSpec, lo: str, hi: str) -> "IncidenceElement":
        """The basis element e_xy; requires lo <= hi."""
        if lo not in poset or hi not in poset:
            raise UnknownLabel(f"{lo!r} or {hi!r} is not an element of the poset")
        if not poset.leq(lo, hi):
            raise NotComparable(f"{lo!r} <= {hi!r} does not hold")
        return IncidenceElement(poset, ring, {Interval(lo, hi): ring.one})

    @staticmethod
    def delta(poset: Poset, ring: RingSpec) -> "IncidenceElement":
        """The multiplicative identity, sum of e_xx over all x."""
        one = ring.one
        return IncidenceElement(
            poset, ring, {Interval(x, x): one for x in poset.elements}
        )

    # -- queries -------------------------------------------------------------

    def coeff(self, lo: str, hi: str) -> Scalar:
        return self.coeffs.get(Interval(lo, hi), self.ring.zero)

    def support(self) -> tuple[Interval, ...]:
        """Intervals with nonzero coefficient, in canonical order."""
        return tuple(iv for iv in self.poset.intervals() if iv in self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _check_peer(self, other: "IncidenceElement"):
        if self.poset != other.poset:
            raise PosetMismatch("elements live over different posets")
        if self.ring != other.ring:
            raise RingMismatch(f"elements live over {self.ring} and {other.ring}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, IncidenceElement):
            return NotImplemented
        self._check_peer(other)
        out = dict(self.coeffs)
        for iv, c in other.coeffs.items():
            s = out.get(iv)
            total = c if s is None else s + c
            if total.is_zero():
                out.pop(iv, None)
            else:
                out[iv] = total
        return self._wrap(out)

    def __sub__(self, other):
        if not isinstance(other, IncidenceElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self._wrap({iv: -c for iv, c in self.coeffs.items()})

    def scale(self, scalar: Scalar) -> "IncidenceElement":
        if scalar.ring != self.ring:
            raise RingMismatch(f"scalar in {scalar.ring}, element in {self.ring}")
        if scalar.is_zero():
            return self._wrap({})
        out = {}
        for iv, c in self.coeffs.items():
            p = scalar * c
            if not p.is_zero():
                out[iv] = p
        return self._wrap(out)

    def __mul__(self, other):
        """Convolution product."""
        if not isinstance(other, IncidenceElement):
            return NotImplemented
        self._check_peer(other)
        leq = self.poset.leq
        out: dict[Interval, Scalar] = {}
        for (x, z), a in self.coeffs.items():
            for (u, v), b in other.coeffs.items():
                if z != u or not leq(x, v):
                    continue
                iv = Interval(x, v)
                p = a * b
                s = out.get(iv)
                total = p if s is None else s + p
                if total.is_zero():
                    out.pop(iv, None)
                else:
                    out[iv] = total
        return self._wrap(out)

    def commutator(self, other: "IncidenceElement") -> "IncidenceElement":
        """[f, g] = f g - g f."""
        return self * other - other * self

    def sandwich(self, lo: str, hi: str) -> "IncidenceElement":
        """e_x f e_y, which is f(x, y) e_xy when x <= y and zero otherwise."""
        left = IncidenceElement.basis(self.poset, self.ring, lo, lo)
        right = IncidenceElement.basis(self.poset, self.ring, hi, hi)
        return left * self * right

    def restrict(self, lo: str, hi: str) -> "IncidenceElement":
        """The part of f supported on pairs touching the interval [lo, hi]:

            f|_lo^hi = f(lo, hi) e_lo,hi
                     + sum over lo <= v < hi of f(lo, v) e_lo,v
                     + sum over lo < u <= hi of f(u, hi) e_u,hi
        """
        if not self.poset.leq(lo, hi):
            raise NotComparable(f"{lo!r} <= {hi!r} does not hold")
        out: dict[Interval, Scalar] = {}
        for v in self.poset.between(lo, hi):
            if v != hi:
                c = self.coeffs.get(Interval(lo, v))
                if c is not None:
                    out[Interval(lo, v)] = c
        for u in self.poset.between(lo, hi):
            if u != lo:
                c = self.coeffs.get(Interval(u, hi))
                if c is not None:
                    out[Interval(u, hi)] = c
        c = self.coeffs.get(Interval(lo, hi))
        if c is not None:
            out[Interval(lo, hi)] = c
        return self._wrap(out)

    def _wrap(self, coeffs: dict[Interval, Scalar]) -> "IncidenceElement":
        el = IncidenceElement.__new__(IncidenceElement)
        el.poset = self.poset
        el.ring = self.ring
        el.coeffs = coeffs
        return el

    # -- predicates ----------------------------------------------------------

    def is_central(self) -> bool:
        """True iff f commutes with every basis element.

        It suffices to check the e_xy themselves since they span.
        """
        for lo, hi in self.poset.intervals():
            e = IncidenceElement.basis(self.poset, self.ring, lo, hi)
            if not (self * e - e * self).is_zero():
                return False
        return True

    def is_diagonal(self) -> bool:
        return all(lo == hi for lo, hi in self.coeffs)

    # -- equality and display ------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, IncidenceElement):
            return NotImplemented
        return (
            self.poset == other.poset
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(
            (self.poset, self.ring, frozenset(self.coeffs.items()))
        )

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for lo, hi in self.support():
            c = format_scalar(self.coeffs[Interval(lo, hi)])
            term = f"e[{lo},{hi}]" if c == "1" else f"{c}*e[{lo},{hi}]"
            parts.append(term)
        return " + ".join(parts)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "entries": [
                {"lo": lo, "hi": hi, "coeff": format_scalar(self.coeffs[Interval(lo, hi)])}
                for lo, hi in self.support()
            ],
        }

    @staticmethod
    def from_json(poset: Poset, data: dict, ring: RingSpec | None = None) -> "IncidenceElement":
        if ring is None:
            ring = RingSpec.from_json(data["ring"])
        coeffs: dict[Interval, Scalar] = {}
        for entry in data["entries"]:
            lo, hi = entry["lo"], entry["hi"]
            if lo not in poset or hi not in poset:
                raise UnknownLabel(f"{lo!r} or {hi!r} is not an element of the poset")
            if not poset.leq(lo, hi):
                raise NotComparable(f"{lo!r} <= {hi!r} does not hold")
            iv = Interval(lo, hi)
            c = parse_scalar(ring, entry["coeff"])
            coeffs[iv] = coeffs[iv] + c if iv in coeffs else c
        return IncidenceElement(poset, ring, coeffs)


def center_basis(poset: Poset, ring: RingSpec) -> tuple[IncidenceElement, ...]:
    """Basis of the center: one idempotent sum e_K = sum_{x in K} e_xx per
    connected component K."""
    one = ring.one
    return tuple(
        IncidenceElement(
            poset, ring, {Interval(x, x): one for x in component}
        )
        for component in poset.connected_components()
    )


def random_element(poset: Poset, ring: RingSpec, rng, density: float = 0.5) -> IncidenceElement:
    """A random sparse element with small integer coefficients.

    Used by the identity suites; rng is any random.Random-like object, so
    callers control reproducibility.
    """
    coeffs = {}
    for iv in poset.intervals():
        if rng.random() < density:
            value = rng.randint(-3, 3)
            if value:
                coeffs[iv] = ring.scalar(value)
    return IncidenceElement(poset, ring, coeffs)


def linear_combination(
    pairs: Iterable[tuple[Scalar, IncidenceElement]],
) -> IncidenceElement:
    """Sum of scalar multiples; pairs must be nonempty and compatible."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("need at least one term")
    total = pairs[0][1].scale(pairs[0][0])
    for c, el in pairs[1:]:
        total = total + el.scale(c)
    return total
