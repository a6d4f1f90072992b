"""Exact arithmetic of supernatural numbers, their sieves, and points."""

from .cones import (
    BZPair,
    PositiveRational,
    cone_contains,
    cone_enumerate,
    cones_isomorphic,
    frac_to_pair,
    pair_to_frac,
)
from .errors import (
    ConstructionStuck,
    NonCoprimeGenerators,
    NotIncomparable,
    NotSeparable,
    ParseError,
    SearchBudgetExceeded,
    SteinitzError,
    UnsupportedProduct,
)
from .oracle import (
    ChainPoint,
    MemberEvidence,
    PointReport,
    RankOneReport,
    TruncatedCone,
    additively_closed,
    chain_from_points,
    check_point_conditions,
    verify_member_decision,
)
from .sieve import (
    Family,
    Sieve,
    SMonoidPresentation,
    smonoid_contains,
    smonoid_to_sieve,
)
from .supernat import (
    INF,
    ExpMap,
    FractionalSupernatural,
    PrimeSet,
    Supernatural,
    int_divides,
    unit_residues,
)
from .topology import (
    PointClass,
    SeparationWitness,
    incomparable,
    member,
    member_intersection,
    separating_side,
    separating_sieves,
)

__version__ = "0.1.0"

__all__ = [
    "BZPair",
    "ChainPoint",
    "ConstructionStuck",
    "ExpMap",
    "Family",
    "FractionalSupernatural",
    "INF",
    "MemberEvidence",
    "NonCoprimeGenerators",
    "NotIncomparable",
    "NotSeparable",
    "ParseError",
    "PointClass",
    "PointReport",
    "PositiveRational",
    "PrimeSet",
    "RankOneReport",
    "SearchBudgetExceeded",
    "SeparationWitness",
    "Sieve",
    "SMonoidPresentation",
    "SteinitzError",
    "Supernatural",
    "TruncatedCone",
    "UnsupportedProduct",
    "additively_closed",
    "chain_from_points",
    "check_point_conditions",
    "cone_contains",
    "cone_enumerate",
    "cones_isomorphic",
    "frac_to_pair",
    "incomparable",
    "int_divides",
    "member",
    "member_intersection",
    "pair_to_frac",
    "separating_side",
    "separating_sieves",
    "smonoid_contains",
    "smonoid_to_sieve",
    "unit_residues",
    "verify_member_decision",
]
