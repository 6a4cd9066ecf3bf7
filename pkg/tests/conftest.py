"""Shared corpus of small posets and random-data helpers.

The corpus mirrors the shapes the classification theory distinguishes:
total orders (everything standard), antichains (zero bracket), the
4-crown (maximally non-standard), lattices with overlapping maximal
chains, and a disconnected mix.
"""

from itertools import combinations

import pytest

from poisset import Poset, SigmaMap, from_covers, make_chain, make_crown


def antichain(n: int) -> Poset:
    return Poset([str(i) for i in range(1, n + 1)], [])


def diamond() -> Poset:
    """1 < a, b < 2 with a, b incomparable."""
    return from_covers(
        ["1", "a", "b", "2"],
        [("1", "a"), ("1", "b"), ("a", "2"), ("b", "2")],
    )


def fence3() -> Poset:
    """a < b > c: one connected component, two chain components."""
    return from_covers(["a", "b", "c"], [("a", "b"), ("c", "b")])


def boolean_lattice(n: int) -> Poset:
    """Subsets of {1..n} under inclusion; labels are digit strings, "0" empty."""

    def name(subset) -> str:
        return "".join(str(d) for d in sorted(subset)) or "0"

    subsets = [
        frozenset(c)
        for k in range(n + 1)
        for c in combinations(range(1, n + 1), k)
    ]
    covers = [
        (name(s), name(s | {x}))
        for s in subsets
        for x in range(1, n + 1)
        if x not in s
    ]
    return Poset([name(s) for s in subsets], covers)


def crown_plus_chain3() -> Poset:
    """Disjoint union of the 4-crown and a 3-element chain."""
    return from_covers(
        ["1", "2", "3", "4", "c1", "c2", "c3"],
        [
            ("1", "3"),
            ("1", "4"),
            ("2", "3"),
            ("2", "4"),
            ("c1", "c2"),
            ("c2", "c3"),
        ],
    )


def corpus() -> list[tuple[str, Poset]]:
    posets = [(f"chain{n}", make_chain(n)) for n in range(1, 6)]
    posets += [(f"antichain{n}", antichain(n)) for n in range(1, 4)]
    posets += [
        ("crown", make_crown()),
        ("diamond", diamond()),
        ("fence3", fence3()),
        ("bool2", boolean_lattice(2)),
        ("bool3", boolean_lattice(3)),
        ("crown+chain3", crown_plus_chain3()),
    ]
    return posets


CORPUS = corpus()


def corpus_params():
    return [pytest.param(poset, id=name) for name, poset in CORPUS]


def random_sigma(poset: Poset, ring, rng) -> SigmaMap:
    """A random chain-constant map: one value drawn per chain component."""
    values = {}
    for cls in poset.chain_components():
        c = ring.scalar(rng.randint(-5, 5))
        for pair in cls:
            values[pair] = c
    return SigmaMap(poset, ring, values)


@pytest.fixture
def crown() -> Poset:
    return make_crown()


@pytest.fixture
def chain3() -> Poset:
    return make_chain(3)
