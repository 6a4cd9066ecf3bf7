"""Exact classification of Poisson structures on incidence algebras.

Build a finite poset, form its incidence algebra over an exact ring, and
classify all Poisson brackets on it: they correspond one-to-one to maps
on strict comparable pairs that are constant on chains.  A brute-force
linear solver independently re-derives the same space over fields.
"""

from .coeff import (
    INTEGERS,
    RATIONALS,
    RingSpec,
    Scalar,
    format_scalar,
    integers_mod,
    parse_scalar,
)
from .poset import (
    Interval,
    PairPartition,
    Poset,
    StrictPair,
    from_covers,
    make_chain,
    make_crown,
)
from .algebra import (
    IncidenceElement,
    center_basis,
    linear_combination,
    random_element,
)
from .bracket import (
    Bracket,
    CheckReport,
    PiecewiseWitness,
    SigmaMap,
    check_antisymmetric,
    check_biderivation,
    check_jacobi,
    extract_lambda,
    extract_sigma,
    from_sigma,
    is_chain_constant,
    is_standard,
    lemma_suite,
    verify_piecewise_witness,
)
from .solver import (
    ClassificationReport,
    LinearSystem,
    SolutionBasis,
    build_system,
    classify,
    nullspace,
)
from . import errors

__all__ = [
    "INTEGERS",
    "RATIONALS",
    "RingSpec",
    "Scalar",
    "format_scalar",
    "integers_mod",
    "parse_scalar",
    "Interval",
    "PairPartition",
    "Poset",
    "StrictPair",
    "from_covers",
    "make_chain",
    "make_crown",
    "IncidenceElement",
    "center_basis",
    "linear_combination",
    "random_element",
    "Bracket",
    "CheckReport",
    "PiecewiseWitness",
    "SigmaMap",
    "check_antisymmetric",
    "check_biderivation",
    "check_jacobi",
    "extract_lambda",
    "extract_sigma",
    "from_sigma",
    "is_chain_constant",
    "is_standard",
    "lemma_suite",
    "verify_piecewise_witness",
    "ClassificationReport",
    "LinearSystem",
    "SolutionBasis",
    "build_system",
    "classify",
    "nullspace",
    "errors",
]

__version__ = "0.1.0"
