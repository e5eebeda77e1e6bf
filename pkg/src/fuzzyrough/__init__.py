"""Fuzzy rough sets with crisp reference sets over finite universes."""
from .approximation import (
    FuzzyRoughPair,
    RoughPair,
    crisp_approx,
    fuzzy_lower,
    fuzzy_rough_pair,
    fuzzy_upper,
    lemma2_bridge,
    prop1_check,
)
from .core import CrispSet, Degree, FuzzySet, TNorm, Universe, core_of, format_degree, parse_degree, support_of, tnorm_eval
from .document import emit_relation, parse_relation
from .errors import (
    DegreeOutOfRange,
    DimensionMismatch,
    FuzzyRoughError,
    InvalidAlpha,
    InvalidRelation,
    NonPositiveTNormWarning,
    NotALattice,
    NotAnEquivalence,
    ParseError,
    PreconditionViolated,
    UniverseMismatch,
    UniverseTooLarge,
)
from .exactness import alpha_identities, exactness_scan, three_valued_approx
from .lattice import RoughLattice, bounds, enumerate_crisp, enumerate_fuzzy, stone_verify, theorem1_verify, to_dot
from .relation import (
    CrispRelation,
    FuzzyRelation,
    Partition,
    alpha_cut,
    classes,
    min_transitive_closure,
    random_min_equivalence,
    relation_core,
    relation_support,
    spectrum,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "CrispRelation",
    "CrispSet",
    "Degree",
    "DegreeOutOfRange",
    "DimensionMismatch",
    "FuzzyRelation",
    "FuzzyRoughError",
    "FuzzyRoughPair",
    "FuzzySet",
    "InvalidAlpha",
    "InvalidRelation",
    "NonPositiveTNormWarning",
    "NotALattice",
    "NotAnEquivalence",
    "ParseError",
    "Partition",
    "PreconditionViolated",
    "RoughLattice",
    "RoughPair",
    "TNorm",
    "Universe",
    "UniverseMismatch",
    "UniverseTooLarge",
    "alpha_cut",
    "alpha_identities",
    "bounds",
    "classes",
    "core_of",
    "crisp_approx",
    "emit_relation",
    "enumerate_crisp",
    "enumerate_fuzzy",
    "exactness_scan",
    "format_degree",
    "fuzzy_lower",
    "fuzzy_rough_pair",
    "fuzzy_upper",
    "lemma2_bridge",
    "min_transitive_closure",
    "parse_degree",
    "parse_relation",
    "prop1_check",
    "random_min_equivalence",
    "relation_core",
    "relation_support",
    "spectrum",
    "stone_verify",
    "support_of",
    "theorem1_verify",
    "three_valued_approx",
    "tnorm_eval",
    "to_dot",
    "validate",
]
