"""Tip-augmented plane trees, their leaf statistics, and two involutions.

The package enumerates plane trees whose interior vertices all have a leaf
as their leftmost child, classifies every leaf into one of five categories,
tabulates the resulting statistics, and implements two statistic-swapping
involutions: a recursive one on shapes and one on labelled trees built from
the match merge/decompose bijection.
"""

from .chen import (
    Match,
    MatchSet,
    MatchSetIssue,
    MatchType,
    MergeStep,
    ValidationReport,
    decompose,
    decompose_all,
    flip,
    match_type,
    merge,
    parse_matches,
    serialize_matches,
    validate_match_set,
)
from .enumeration import (
    DistributionTable,
    SymmetryReport,
    SymmetryViolation,
    check_symmetry,
    distribution_table,
    gen_labelled_plane_trees,
    gen_labelled_tip_augmented,
    gen_plane_trees,
    gen_tip_augmented,
    motzkin,
    table_to_csv,
    table_to_json_lines,
)
from .leaf_stats import (
    InteriorCensus,
    LeafCategory,
    StatsVector,
    interior_census,
    leaf_category,
    stats,
)
from .phi import (
    ClassView,
    Prop1Report,
    TreeClass,
    check_prop1,
    classify,
    phi,
    phi_with_correspondence,
)
from .psi import MatchCensus, flip_type_iv, match_census, psi
from .render import render_dot
from .trees import (
    Label,
    LabelledPlaneTree,
    PlaneTree,
    is_tip_augmented,
    parse_labelled,
    parse_tree,
    serialize_labelled,
    serialize_tree,
)

__all__ = [
    "ClassView",
    "DistributionTable",
    "InteriorCensus",
    "Label",
    "LabelledPlaneTree",
    "LeafCategory",
    "Match",
    "MatchCensus",
    "MatchSet",
    "MatchSetIssue",
    "MatchType",
    "MergeStep",
    "PlaneTree",
    "Prop1Report",
    "StatsVector",
    "SymmetryReport",
    "SymmetryViolation",
    "TreeClass",
    "ValidationReport",
    "check_prop1",
    "check_symmetry",
    "classify",
    "decompose",
    "decompose_all",
    "distribution_table",
    "flip",
    "flip_type_iv",
    "gen_labelled_plane_trees",
    "gen_labelled_tip_augmented",
    "gen_plane_trees",
    "gen_tip_augmented",
    "interior_census",
    "is_tip_augmented",
    "leaf_category",
    "match_census",
    "match_type",
    "merge",
    "motzkin",
    "parse_labelled",
    "parse_matches",
    "parse_tree",
    "phi",
    "phi_with_correspondence",
    "psi",
    "render_dot",
    "serialize_labelled",
    "serialize_matches",
    "serialize_tree",
    "stats",
    "table_to_csv",
    "table_to_json_lines",
    "validate_match_set",
]

__version__ = "0.1.0"
