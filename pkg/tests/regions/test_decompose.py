"""Tests for region decomposition."""
from fractions import Fraction

from hypothesis import given

from rvlogic.core.domain import Add, Letter, Meet, Mode, One, Scale, Zero
from rvlogic.core.formulas import abs_value, pos_part
from rvlogic.linear.forms import LinearForm
from rvlogic.regions.decompose import decompose, decompose_jointly, piece_count_bound
from rvlogic.semantics.models import Model, evaluate
from tests.strategies import assignments, formulas

P, Q = Letter("P"), Letter("Q")


class TestDecompose:
    """Test suite for decompose."""

    def test_meet_free_formula_is_one_piece(self):
        d = decompose(Add(P, Scale(Fraction(2), Q)))
        assert len(d.pieces) == 1
        assert d.pieces[0].guards == ()
        assert d.pieces[0].value == LinearForm({"P": Fraction(1), "Q": Fraction(2)})

    def test_meet_splits_positive_first(self):
        """Test that P /\\ Q yields Q where P - Q >= 0 and P where Q - P >= 0."""
        d = decompose(Meet(P, Q))
        plus, minus = d.pieces
        assert (plus.signs, plus.guards, plus.value) == ("+", (LinearForm.letter("P") - LinearForm.letter("Q"),), LinearForm.letter("Q"))
        assert (minus.signs, minus.guards, minus.value) == ("-", (LinearForm.letter("Q") - LinearForm.letter("P"),), LinearForm.letter("P"))

    def test_constant_one(self):
        d = decompose(Meet(One(), P))
        assert [p.value for p in d.pieces] == [LinearForm.letter("P"), LinearForm.constant(1)]

    def test_prune_drops_empty_regions(self):
        """Test that P /\\ P has an unreachable branch only when guards conflict."""
        f = Meet(Meet(P, Zero()), Meet(P, Zero()))
        full = decompose(f)
        pruned = decompose(f, prune=True)
        assert len(full.pieces) == 8
        assert 0 < len(pruned.pieces) <= len(full.pieces)

    @given(formulas(max_leaves=6))
    def test_piece_count_bound(self, f):
        assert len(decompose(f).pieces) == piece_count_bound(f)

    @given(formulas(max_leaves=6), assignments())
    def test_pieces_agree_with_evaluation(self, f, values):
        """Test that every piece whose guards hold gives the formula's value, and some piece applies."""
        model = Model(values)
        expected = evaluate(f, model)
        applicable = [p for p in decompose(f).pieces if all(g.value_at(values) >= 0 for g in p.guards)]
        assert applicable
        assert all(p.value.value_at(values) == expected for p in applicable)

    @given(formulas(Mode.EXTENDED, max_leaves=5), assignments(Mode.EXTENDED))
    def test_pruned_pieces_still_cover(self, f, values):
        model = Model(values, Mode.EXTENDED)
        applicable = [p for p in decompose(f, prune=True).pieces if all(g.value_at(values) >= 0 for g in p.guards)]
        assert applicable
        assert all(p.value.value_at(values) == evaluate(f, model) for p in applicable)


class TestDecomposeJointly:
    """Test suite for decompose_jointly."""

    def test_product_of_splits(self):
        pieces = decompose_jointly([pos_part(P), abs_value(Q), Q])
        assert len(pieces) == 4
        assert [p.signs for p in pieces] == ["++", "+-", "-+", "--"]
        assert all(len(p.values) == 3 for p in pieces)

    @given(assignments())
    def test_values_agree_on_shared_branch(self, values):
        fs = [pos_part(P), Meet(P, Q)]
        model = Model(values)
        for piece in decompose_jointly(fs):
            if all(g.value_at(values) >= 0 for g in piece.guards):
                assert [v.value_at(values) for v in piece.values] == [evaluate(f, model) for f in fs]
