"""Theta-vexillary signed permutations.

Construction from triples, extended diagrams and corner taxonomy,
triple recovery, pattern-avoidance classification, and exhaustive
verification over small hyperoctahedral groups.
"""

from .classify import (
    PATTERNS,
    ClassificationReport,
    VerifySummary,
    build_report,
    classify_by_corners,
    classify_by_patterns,
    classify_by_triple,
    enumerate_theta_vexillary,
    oracle_is_theta_vexillary,
    pattern_table_digest,
    verify_equivalence,
)
from .diagram import (
    CornerClass,
    CornerRecord,
    CornerSet,
    ExtendedDiagram,
    build_extended_diagram,
    corners,
    full_corners,
    is_se_corner,
    rank,
    reflect,
    render_extended,
    render_full,
)
from .sigperm import (
    FullPermutation,
    RankTooLargeError,
    SignedPattern,
    SignedPermutation,
    contains_pattern,
    enumerate_group,
    find_pattern,
    format_window,
    group_order,
    parse_window,
)
from .theta import (
    ConditionReport,
    InfeasibleRankError,
    InvalidTripleError,
    StepPlacement,
    ThetaTriple,
    construct,
    construct_inverse,
    construct_with_trace,
    derive,
    format_triple,
    generate_triples,
    min_feasible_rank,
    optional_corners,
    parse_triple,
    recover,
    triple_from_json,
    triple_to_json,
    validate,
)

__all__ = [
    "PATTERNS",
    "ClassificationReport",
    "ConditionReport",
    "CornerClass",
    "CornerRecord",
    "CornerSet",
    "ExtendedDiagram",
    "FullPermutation",
    "InfeasibleRankError",
    "InvalidTripleError",
    "RankTooLargeError",
    "SignedPattern",
    "SignedPermutation",
    "StepPlacement",
    "ThetaTriple",
    "VerifySummary",
    "build_extended_diagram",
    "build_report",
    "classify_by_corners",
    "classify_by_patterns",
    "classify_by_triple",
    "construct",
    "construct_inverse",
    "construct_with_trace",
    "contains_pattern",
    "corners",
    "derive",
    "enumerate_group",
    "enumerate_theta_vexillary",
    "find_pattern",
    "format_triple",
    "format_window",
    "full_corners",
    "generate_triples",
    "group_order",
    "is_se_corner",
    "min_feasible_rank",
    "optional_corners",
    "oracle_is_theta_vexillary",
    "parse_triple",
    "parse_window",
    "pattern_table_digest",
    "rank",
    "recover",
    "reflect",
    "render_extended",
    "render_full",
    "triple_from_json",
    "triple_to_json",
    "validate",
    "verify_equivalence",
]

__version__ = "0.1.0"
