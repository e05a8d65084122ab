import pytest
from hypothesis import given, settings, strategies as st

from tiptree import (
    Label,
    LabelledPlaneTree,
    decompose,
    flip_type_iv,
    gen_labelled_tip_augmented,
    gen_tip_augmented,
    is_tip_augmented,
    match_census,
    parse_labelled,
    parse_matches,
    psi,
    stats,
)
from tiptree.errors import BadLabelDomainError, NotTipAugmentedError

from helpers import (
    ELEVEN_ROW_A,
    ELEVEN_ROW_B,
    ELEVEN_STATS_A,
    ELEVEN_STATS_B,
    ELEVEN_TREE_A,
    ELEVEN_TREE_B,
)


class TestPsi:
    def test_one_edge_fixed(self):
        t = parse_labelled("1(2)")
        assert psi(t) == t

    def test_no_type_iv_means_fixed(self):
        t = parse_labelled("1(2,3)")
        assert psi(t) == t

    def test_three_edge_example(self):
        assert psi(parse_labelled("1(2,3(4))")).word == "3(4,1(2))"
        assert psi(parse_labelled("3(4,1(2))")).word == "1(2,3(4))"

    def test_eleven_edge_pair(self):
        a = parse_labelled(ELEVEN_TREE_A)
        b = parse_labelled(ELEVEN_TREE_B)
        assert psi(a) == b
        assert psi(b) == a
        assert stats(a.shape).as_tuple() == ELEVEN_STATS_A
        assert stats(b.shape).as_tuple() == ELEVEN_STATS_B

    def test_rejects_non_tip_augmented(self):
        with pytest.raises(NotTipAugmentedError):
            psi(parse_labelled("2(1(3(4)))"))

    def test_rejects_bad_labels(self):
        with pytest.raises(BadLabelDomainError):
            psi(parse_labelled("1(2,5)"))

    def test_involution_exhaustive_small(self):
        for n in range(1, 5):
            for t in gen_labelled_tip_augmented(n):
                image = psi(t)
                assert is_tip_augmented(image.shape)
                assert image.label_values() == t.label_values()
                if n >= 2:  # the swap statement starts at two edges
                    assert stats(image.shape) == stats(t.shape).swapped()
                assert psi(image) == t

    def test_flip_stability(self):
        # The image's decomposition is exactly the flipped decomposition.
        for n in range(1, 4):
            for t in gen_labelled_tip_augmented(n):
                assert decompose(psi(t)) == flip_type_iv(decompose(t))


class TestMatchCensus:
    def test_eleven_edge(self):
        census = match_census(parse_labelled(ELEVEN_TREE_A))
        assert tuple(census) == (5, 2, 0, 4)

    def test_three_edge(self):
        assert tuple(match_census(parse_labelled("1(2,3(4))"))) == (2, 0, 0, 1)

    def test_chain_has_type_iii(self):
        assert tuple(match_census(parse_labelled("2(1(3(4)))"))) == (1, 0, 2, 0)

    def test_no_type_iii_on_tip_augmented(self):
        for n in range(1, 5):
            for t in gen_labelled_tip_augmented(n):
                assert match_census(t).type_iii == 0


class TestFlipTypeIv:
    def test_row_flip(self):
        assert flip_type_iv(parse_matches(ELEVEN_ROW_A)) == parse_matches(
            ELEVEN_ROW_B
        )
        assert flip_type_iv(parse_matches(ELEVEN_ROW_B)) == parse_matches(
            ELEVEN_ROW_A
        )

    def test_only_type_iv_moves(self):
        f = parse_matches("1:2,3:4,5*:6*")
        assert str(flip_type_iv(f)) == "1:2,3:4,6*:5*"


@st.composite
def labelled_tip_augmented(draw, max_edges=4):
    n = draw(st.integers(min_value=1, max_value=max_edges))
    words = [t.word for t in gen_tip_augmented(n)]
    shape = draw(st.sampled_from(words))
    perm = draw(st.permutations(list(range(1, n + 2))))
    from tiptree import parse_tree

    return LabelledPlaneTree(parse_tree(shape), tuple(Label(v) for v in perm))


@settings(max_examples=60, deadline=None)
@given(labelled_tip_augmented())
def test_psi_involution_property(t):
    image = psi(t)
    assert psi(image) == t
    if t.shape.edge_count >= 2:
        assert stats(image.shape) == stats(t.shape).swapped()
