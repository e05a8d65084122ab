"""The involution on labelled tip-augmented plane trees.

Decompose the tree into matches, turn every doubly-marked match upside
down, and merge back.  On tip-augmented trees the decomposition never
produces a match with an unmarked root and a marked leaf, so the flip is
an involution that exchanges singleton and elder non-twin leaves while
preserving elder twin, second and younger leaves (the root label may
change).

The orientation of a doubly-marked match is diagnostic only: a horizontal
merge at such a match creates an elder non-twin leaf and a vertical merge
at it creates a singleton, but one match can serve both roles, so the two
orientation counts do not in general equal the two leaf counts.
"""

from __future__ import annotations

from typing import NamedTuple

from .chen import (
    MatchSet,
    MatchType,
    _check_label_domain,
    decompose,
    flip,
    match_type,
    merge,
)
from .errors import NotTipAugmentedError
from .trees import LabelledPlaneTree, is_tip_augmented


class MatchCensus(NamedTuple):
    type_i: int
    type_ii: int
    type_iii: int
    type_iv: int


def flip_type_iv(f: MatchSet) -> MatchSet:
    """Turn every doubly-marked match of ``f`` upside down."""
    return MatchSet.from_matches(
        flip(m) if match_type(m) is MatchType.IV else m for m in f.matches
    )


def psi(t: LabelledPlaneTree) -> LabelledPlaneTree:
    """Apply the labelled involution to a tip-augmented tree on {1..n+1}."""
    if not is_tip_augmented(t.shape):
        raise NotTipAugmentedError(f"not tip-augmented: {t.word}")
    _check_label_domain(t)
    if t.shape.edge_count == 0:
        return t
    return merge(flip_type_iv(decompose(t)))


def match_census(t: LabelledPlaneTree) -> MatchCensus:
    """Per-type match counts in the decomposition of ``t``.

    Defined for any labelled plane tree on {1..n+1}; type iii stays zero
    exactly on the tip-augmented ones.
    """
    n = _check_label_domain(t)
    if n == 0:
        return MatchCensus(0, 0, 0, 0)
    counts = {kind: 0 for kind in MatchType}
    for m in decompose(t).matches:
        counts[match_type(m)] += 1
    return MatchCensus(
        counts[MatchType.I],
        counts[MatchType.II],
        counts[MatchType.III],
        counts[MatchType.IV],
    )
