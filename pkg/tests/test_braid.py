import pytest
from hypothesis import given, settings, strategies as st

from twistlab.braid import (
    build_diagram,
    braid_class,
    canonical_form,
    diagram_from_name,
    equivalent,
    flatten,
    layer,
    layered_from_json_obj,
    left_divisible_by,
    neighbors,
    parse_letters,
    word,
    word_from_json_obj,
)

A2 = build_diagram("A", 2)
A3 = build_diagram("A", 3)
D4 = build_diagram("D", 4)


class TestDiagrams:
    def test_a2_is_the_unique_tree_on_two_vertices(self):
        assert sorted(A2.edges) == [(1, 2)]
        assert A2.coloring == (0, 1)

    def test_d4_star_with_center_2(self):
        assert sorted(D4.edges) == [(1, 2), (2, 3), (2, 4)]
        assert neighbors(D4, 2) == {1, 3, 4}

    def test_e6_branch_at_4(self):
        e6 = build_diagram("E", 6)
        assert sorted(e6.edges) == [(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)]
        assert neighbors(e6, 4) == {2, 3, 5}

    @pytest.mark.parametrize("family,rank", [("E", 5), ("E", 9), ("D", 3), ("A", 1), ("F", 4)])
    def test_illegal_pairs_rejected(self, family, rank):
        with pytest.raises(ValueError):
            build_diagram(family, rank)

    def test_neighbors_examples(self):
        assert neighbors(A3, 2) == {1, 3}
        assert neighbors(A3, 1) == {2}
        with pytest.raises(ValueError):
            neighbors(A3, 7)

    def test_coloring_is_proper_everywhere(self):
        for name in ("A2", "A5", "D4", "D6", "E6", "E7", "E8"):
            d = diagram_from_name(name)
            assert d.color(1) == 0
            for a, b in d.edges:
                assert d.color(a) != d.color(b)

    def test_diagram_json_roundtrip(self):
        from twistlab.braid import diagram_from_json_obj

        assert diagram_from_json_obj(D4.to_json_obj()) == D4


class TestOracle:
    def test_braid_relation(self):
        assert equivalent(word(A2, (1, 2, 1)), word(A2, (2, 1, 2)))

    def test_commutation(self):
        assert equivalent(word(A3, (1, 3)), word(A3, (3, 1)))

    def test_distinct_generators(self):
        assert not equivalent(word(A2, (1,)), word(A2, (2,)))

    def test_length_preserved(self):
        assert not equivalent(word(A2, (1,)), word(A2, (1, 1)))

    def test_diagram_mismatch(self):
        with pytest.raises(ValueError):
            equivalent(word(A2, (1,)), word(A3, (1,)))

    def test_left_divisible_examples(self):
        rem = left_divisible_by(word(A2, (1, 2, 1)), 2)
        assert rem is not None and equivalent(word(A2, (2,) + rem.letters), word(A2, (1, 2, 1)))
        assert left_divisible_by(word(A2, (1, 2)), 2) is None
        assert left_divisible_by(word(A2, ()), 1) is None

    def test_left_divisible_agrees_with_class_scan(self):
        for letters in [(1, 2, 1, 2), (2, 1, 1), (1, 2, 2, 1)]:
            w = word(A2, letters)
            cls = braid_class(w)
            for j in (1, 2):
                expected = any(u[0] == j for u in cls)
                assert (left_divisible_by(w, j) is not None) == expected


def words_strategy(diagram, max_len=6):
    return st.lists(
        st.sampled_from(list(diagram.vertices)), min_size=0, max_size=max_len
    ).map(lambda ls: word(diagram, tuple(ls)))


@settings(max_examples=60, deadline=None)
@given(words_strategy(A3))
def test_layer_flatten_roundtrip(w):
    assert equivalent(flatten(layer(w)), w)


@settings(max_examples=40, deadline=None)
@given(words_strategy(D4, max_len=5))
def test_layer_parity(w):
    lw = layer(w)
    for k, sl in enumerate(lw.slices):
        for j in sl:
            assert D4.color(j) == k % 2


@settings(max_examples=40, deadline=None)
@given(words_strategy(A2, max_len=5), st.sampled_from([1, 2]))
def test_equivalence_stable_under_appending(w, j):
    for u in braid_class(w):
        assert equivalent(word(A2, (j,) + u), word(A2, (j,) + w.letters))
        assert equivalent(word(A2, u + (j,)), word(A2, w.letters + (j,)))


class TestLayering:
    def test_a3_greedy_example(self):
        lw = layer(word(A3, (2, 1)))
        assert [sorted(s) for s in lw.slices] == [[], [2], [1]]

    def test_commuting_same_color_share_a_slice(self):
        lw = layer(word(A3, (1, 3)))
        assert [sorted(s) for s in lw.slices] == [[1, 3]]

    def test_d4_worked_example(self):
        # the branch vertex has color 1 here, so the layering starts at slice 1
        lw = layer(word(D4, (2, 1, 3, 4, 2, 1, 3, 4, 2, 4)))
        assert [sorted(s) for s in lw.slices] == [
            [], [2], [1, 3, 4], [2], [1, 3, 4], [2], [4],
        ]

    def test_flatten_examples(self):
        from twistlab.braid import LayeredWord

        lw = LayeredWord(A2, (frozenset(), frozenset({2}), frozenset({1})))
        assert flatten(lw).letters == (2, 1)
        lw2 = LayeredWord(A3, (frozenset({1, 3}),))
        assert flatten(lw2).letters == (1, 3)

    def test_slice_parity_enforced(self):
        from twistlab.braid import LayeredWord

        with pytest.raises(ValueError):
            LayeredWord(A2, (frozenset({2}),))

    def test_layered_json_roundtrip(self):
        lw = layer(word(D4, (2, 1, 3, 4)))
        back = layered_from_json_obj(lw.to_json_obj())
        assert back.slices == lw.slices


class TestParsing:
    def test_word_formats(self):
        assert parse_letters("1,2,1") == (1, 2, 1)
        assert parse_letters("s1 s2") == (1, 2)
        assert parse_letters("") == ()
        with pytest.raises(ValueError):
            parse_letters("1,x")

    def test_word_json_roundtrip(self):
        w = word(D4, (2, 1, 3))
        assert word_from_json_obj(w.to_json_obj()).letters == w.letters

    def test_bad_letters_rejected(self):
        with pytest.raises(ValueError):
            word(A2, (3,))


def test_canonical_form_constant_on_classes():
    w = word(A2, (1, 2, 1, 1))
    c = canonical_form(w)
    for u in braid_class(w):
        assert canonical_form(word(A2, u)) == c
