"""Smith normal form, abelianization, and presentation parsing."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fourfold.abelian import (
    AbelianGroup,
    Presentation,
    PresentationError,
    abelianize,
    format_presentation_text,
    parse_abelian_group,
    parse_presentation_text,
    parse_word,
    smith_normal_form,
)
from fourfold.forms import IntegerMatrix


@st.composite
def integer_matrices(draw, max_n=5, magnitude=20):
    rows = draw(st.integers(min_value=1, max_value=max_n))
    cols = draw(st.integers(min_value=1, max_value=max_n))
    data = [
        [draw(st.integers(min_value=-magnitude, max_value=magnitude)) for _ in range(cols)]
        for _ in range(rows)
    ]
    return IntegerMatrix(data)


def _diagonal_pivots(d):
    return [d.entry(i, i) for i in range(min(d.rows, d.cols))]


class TestSmithNormalForm:
    def test_identity(self):
        m = IntegerMatrix.identity(3)
        d, u, v = smith_normal_form(m)
        assert d == m
        assert u @ m @ v == d

    def test_known_diagonal(self):
        # diag(2, 3) is not in normal form; the chain forces (1, 6)
        d, u, v = smith_normal_form(IntegerMatrix([[2, 0], [0, 3]]))
        assert _diagonal_pivots(d) == [1, 6]
        assert u @ IntegerMatrix([[2, 0], [0, 3]]) @ v == d

    def test_frozen_surface_bundle_relations(self):
        m = IntegerMatrix(
            [
                (0, 0, 1, -1, 0, 0),
                (0, 0, -1, 1, 0, 0),
                (0, 0, 0, 1, 0, 3),
            ]
        )
        d, u, v = smith_normal_form(m)
        assert _diagonal_pivots(d) == [1, 1, 0]
        assert u @ m @ v == d

    def test_zero_matrix(self):
        m = IntegerMatrix([[0, 0], [0, 0]])
        d, u, v = smith_normal_form(m)
        assert _diagonal_pivots(d) == [0, 0]
        assert u @ m @ v == d

    @given(integer_matrices())
    @settings(max_examples=80)
    def test_factorization_properties(self, m):
        d, u, v = smith_normal_form(m)
        # the factorization itself
        assert u @ m @ v == d
        # U and V are unimodular
        assert abs(u.determinant()) == 1
        assert abs(v.determinant()) == 1
        # D is diagonal with nonnegative entries
        for i in range(d.rows):
            for j in range(d.cols):
                if i != j:
                    assert d.entry(i, j) == 0
        pivots = _diagonal_pivots(d)
        assert all(x >= 0 for x in pivots)
        # divisibility chain over the nonzero prefix, zeros only at the end
        nonzero = [x for x in pivots if x != 0]
        assert pivots[: len(nonzero)] == nonzero
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0

    @given(integer_matrices(max_n=4, magnitude=12))
    @settings(max_examples=40)
    def test_pivots_invariant_under_row_shuffle(self, m):
        rows = list(m.to_lists())
        rng = random.Random(11)
        rng.shuffle(rows)
        d1, _, _ = smith_normal_form(m)
        d2, _, _ = smith_normal_form(IntegerMatrix(rows))
        assert _diagonal_pivots(d1) == _diagonal_pivots(d2)


class TestAbelianGroup:
    def test_str(self):
        assert str(AbelianGroup(4)) == "Z^4"
        assert str(AbelianGroup(2, (2,))) == "Z^2 + Z/2"
        assert str(AbelianGroup(0, (2, 4))) == "Z^0 + Z/2 + Z/4"

    def test_two_torsion(self):
        assert AbelianGroup(1, (2,)).has_two_torsion
        assert AbelianGroup(1, (3, 6)).has_two_torsion
        assert not AbelianGroup(1, (3,)).has_two_torsion
        assert not AbelianGroup(5).has_two_torsion

    def test_rejects_bad_torsion(self):
        with pytest.raises(ValueError):
            AbelianGroup(0, (1,))
        with pytest.raises(ValueError):
            AbelianGroup(0, (3, 2))
        with pytest.raises(ValueError):
            AbelianGroup(-1)

    def test_parse(self):
        assert parse_abelian_group("Z^4") == AbelianGroup(4)
        assert parse_abelian_group("Z^0") == AbelianGroup(0)
        assert parse_abelian_group("Z^2 + Z/2 + Z/4") == AbelianGroup(2, (2, 4))
        assert parse_abelian_group("  Z^3+Z/5  ") == AbelianGroup(3, (5,))

    @pytest.mark.parametrize("bad", ["Z", "Z/2", "Z^-1", "Z^2 + Z/1", "Z^2 + Z/3 + Z/2", ""])
    def test_parse_rejects(self, bad):
        with pytest.raises(PresentationError):
            parse_abelian_group(bad)

    def test_parse_round_trips_str(self):
        for g in [AbelianGroup(0), AbelianGroup(3), AbelianGroup(1, (2, 2, 4))]:
            assert parse_abelian_group(str(g)) == g


class TestAbelianize:
    def test_free_group(self):
        assert abelianize(Presentation(3)) == AbelianGroup(3)

    def test_trivial_group(self):
        p = Presentation(2, ((1, 0), (0, 1)))
        assert abelianize(p) == AbelianGroup(0)

    def test_torsion(self):
        assert abelianize(Presentation(1, ((2,),))) == AbelianGroup(0, (2,))
        assert abelianize(Presentation(2, ((2, 0), (0, 2)))) == AbelianGroup(0, (2, 2))
        assert abelianize(Presentation(2, ((2, 0), (0, 3)))) == AbelianGroup(0, (6,))

    def test_mixed(self):
        p = Presentation(3, ((0, 2, 0), (0, 0, 0)))
        assert abelianize(p) == AbelianGroup(2, (2,))

    def test_frozen_surface_bundle(self):
        p = Presentation(
            6,
            (
                (0, 0, 1, -1, 0, 0),
                (0, 0, -1, 1, 0, 0),
                (0, 0, 0, 1, 0, 3),
            ),
        )
        assert abelianize(p) == AbelianGroup(4)

    def test_invariant_under_row_operations(self):
        rng = random.Random(99)
        for _ in range(30):
            gens = rng.randint(1, 5)
            rels = [
                tuple(rng.randint(-9, 9) for _ in range(gens))
                for _ in range(rng.randint(1, 5))
            ]
            base = abelianize(Presentation(gens, tuple(rels)))
            # add a multiple of one relation to another; the group is unchanged
            mutated = [list(r) for r in rels]
            if len(mutated) >= 2:
                i, j = rng.sample(range(len(mutated)), 2)
                factor = rng.randint(-3, 3)
                mutated[i] = [
                    x + factor * y for x, y in zip(mutated[i], mutated[j])
                ]
            rng.shuffle(mutated)
            assert abelianize(Presentation(gens, tuple(tuple(r) for r in mutated))) == base

    def test_redundant_relations_ignored(self):
        p1 = Presentation(2, ((1, 2),))
        p2 = Presentation(2, ((1, 2), (2, 4), (-1, -2)))
        assert abelianize(p1) == abelianize(p2)


class TestWords:
    NAMES = ("a1", "b1", "c", "d", "e", "f")

    def test_commutator_vanishes(self):
        assert parse_word(self.NAMES, "a1^-1 b1^-1 a1 b1") == (0, 0, 0, 0, 0, 0)

    def test_exponents(self):
        assert parse_word(self.NAMES, "d f^3") == (0, 0, 0, 1, 0, 3)
        assert parse_word(self.NAMES, "e d e^-1 c^-1") == (0, 0, -1, 1, 0, 0)

    def test_empty_word(self):
        assert parse_word(self.NAMES, "") == (0, 0, 0, 0, 0, 0)

    def test_unknown_generator(self):
        with pytest.raises(PresentationError):
            parse_word(self.NAMES, "a1 z")

    def test_bad_token(self):
        with pytest.raises(PresentationError):
            parse_word(self.NAMES, "a1^x")
        with pytest.raises(PresentationError):
            parse_word(self.NAMES, "^2")

    def test_duplicate_names_rejected(self):
        with pytest.raises(PresentationError):
            parse_word(("a", "a"), "a")


class TestPresentationText:
    def test_round_trip(self):
        p = Presentation(3, ((1, -2, 0), (0, 3, 3)))
        text = format_presentation_text(p)
        assert parse_presentation_text(text) == p

    def test_comments_and_blanks(self):
        text = "# leading comment\n\ngens = 2\nrel = 1, -1  # inline\n"
        assert parse_presentation_text(text) == Presentation(2, ((1, -1),))

    @pytest.mark.parametrize(
        "bad",
        [
            "rel = 1,2",                      # missing gens
            "gens = 2\ngens = 3",             # duplicate gens
            "gens = two",                     # non-integer count
            "gens = 2\nrel = 1",              # wrong relation length
            "gens = 2\nrel = 1; 2",           # bad separator
            "gens = 2\nspam = 1",             # unknown key
            "gens = 2\njust text",            # no equals sign
        ],
    )
    def test_rejects(self, bad):
        with pytest.raises(PresentationError):
            parse_presentation_text(bad)

    def test_presentation_validates_relation_length(self):
        with pytest.raises(PresentationError):
            Presentation(2, ((1, 2, 3),))

    def test_presentation_validates_names(self):
        with pytest.raises(PresentationError):
            Presentation(2, (), ("onlyone",))
