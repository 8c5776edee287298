"""Tests for derived rules and lemmas.

Every constructor must yield a derivation the checker accepts, whose
conclusion is the intended statement and holds in every model of its theory.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings

from rvlogic.core.domain import Add, Inequality, Letter, Meet, Mode, One, Scale, Zero
from rvlogic.core.errors import ModeError, TransformError
from rvlogic.core.formulas import abs_value, join, neg, neg_part, pos_part, sub
from rvlogic.decide.procedure import decide
from rvlogic.proofs.canon import same_inequality
from rvlogic.proofs.checker import check
from rvlogic.proofs.derivation import Derivation, Fragment, R3Step
from rvlogic.proofs.library import (
    cancel_scale,
    extended_bound,
    farkas_derivation,
    join_lub,
    lin_halving,
    meet_glb,
    meet_mono,
    negation_flip,
    reflexivity,
    riesz_abs,
    riesz_decomp,
    riesz_disjoint,
    riesz_sum,
    scaled_parts_disjoint,
)
from rvlogic.semantics.models import Model, satisfies, satisfies_theory
from tests.strategies import assignments, formulas, nonnegative_rationals

P, Q, R = Letter("P"), Letter("Q"), Letter("R")


def assert_proves(d: Derivation, expected: Inequality) -> None:
    report = check(d)
    assert report.accepted, report.reason
    assert same_inequality(report.conclusion, expected)


def assert_sound(d: Derivation, values: dict[str, Fraction], mode: Mode = Mode.BASIC) -> None:
    model = Model(values, mode)
    if satisfies_theory(model, d.theory):
        assert satisfies(model, d.conclusion)


class TestBasicInferences:
    """Test suite for the invertibility and lattice rules."""

    def test_reflexivity_in_mp(self):
        d = reflexivity(Meet(P, Q))
        assert d.fragment is Fragment.MP
        assert_proves(d, Inequality(Meet(P, Q), Meet(P, Q)))

    def test_cancel_scale(self):
        d = cancel_scale(Fraction(3), P, Q, R)
        assert d.theory == (Inequality(Add(Scale(Fraction(3), P), R), Add(Scale(Fraction(3), Q), R)),)
        assert_proves(d, Inequality(P, Q))

    def test_cancel_scale_needs_positive_r(self):
        with pytest.raises(TransformError, match="r > 0"):
            cancel_scale(Fraction(0), P, Q, R)

    def test_negation_flip(self):
        assert_proves(negation_flip(P, Meet(Q, Zero())), Inequality(neg(Meet(Q, Zero())), neg(P)))

    def test_lin_halving(self):
        """Test that 0 <= 2P ⊢ 0 <= P in fragment lin, a step no single r2-free proof makes."""
        d = lin_halving()
        assert d.fragment is Fragment.LIN
        assert_proves(d, Inequality(Zero(), P))

    @pytest.mark.parametrize("r", [1, 2, 5, 10])
    def test_no_fixed_multiple_bound(self, r):
        """Test that r·2P <= P is not valid for any fixed r."""
        verdict = decide((), Inequality(Scale(Fraction(r), Scale(Fraction(2), P)), P), Mode.BASIC)
        assert not verdict.entailed

    def test_meet_mono(self):
        assert_proves(meet_mono(P, Q, R), Inequality(Meet(P, R), Meet(Q, R)))

    def test_meet_glb(self):
        assert_proves(meet_glb(R, P, Q), Inequality(R, Meet(P, Q)))

    def test_join_lub(self):
        assert_proves(join_lub(P, Q, R), Inequality(join(P, Q), R))

    def test_basic_mode_rejects_one(self):
        with pytest.raises(ModeError):
            meet_mono(P, One(), Q)

    def test_uses_r3_only_in_full(self):
        assert any(isinstance(step, R3Step) for step in meet_mono(P, Q, R).steps)
        assert not any(isinstance(step, R3Step) for step in cancel_scale(Fraction(2), P, Q, R).steps)


class TestRieszIdentities:
    """Test suite for the vector-lattice identities."""

    def test_riesz_sum(self):
        eq = riesz_sum(P, Q)
        assert_proves(eq.le, Inequality(Add(P, Q), Add(Meet(P, Q), join(P, Q))))
        assert_proves(eq.ge, Inequality(Add(Meet(P, Q), join(P, Q)), Add(P, Q)))

    def test_riesz_decomp(self):
        eq = riesz_decomp(P)
        assert_proves(eq.le, Inequality(P, sub(pos_part(P), neg_part(P))))
        assert_proves(eq.ge, Inequality(sub(pos_part(P), neg_part(P)), P))

    def test_riesz_disjoint(self):
        eq = riesz_disjoint(Add(P, neg(Q)))
        f = Add(P, neg(Q))
        assert_proves(eq.le, Inequality(Meet(pos_part(f), neg_part(f)), Zero()))
        assert_proves(eq.ge, Inequality(Zero(), Meet(pos_part(f), neg_part(f))))

    def test_riesz_abs(self):
        eq = riesz_abs(P)
        assert_proves(eq.le, Inequality(abs_value(P), Add(pos_part(P), neg_part(P))))
        assert_proves(eq.ge, Inequality(Add(pos_part(P), neg_part(P)), abs_value(P)))

    @pytest.mark.parametrize("r,s", [(2, 3), (3, 2), (1, 1), (0, 4), (0, 0)])
    def test_scaled_parts_disjoint(self, r, s):
        eq = scaled_parts_disjoint(Fraction(r), Fraction(s), P)
        lhs = Meet(Scale(Fraction(r), pos_part(P)), Scale(Fraction(s), neg_part(P)))
        assert_proves(eq.le, Inequality(lhs, Zero()))
        assert_proves(eq.ge, Inequality(Zero(), lhs))

    @settings(max_examples=25, deadline=None)
    @given(formulas(max_leaves=3), formulas(max_leaves=3), assignments())
    def test_identities_for_random_formulas(self, f, g, values):
        """Test that the identities check and hold at random formulas and models."""
        for eq in (riesz_sum(f, g), riesz_decomp(f), riesz_abs(g)):
            for d in (eq.le, eq.ge):
                assert check(d).accepted
                assert_sound(d, values)


class TestExtendedBound:
    """Test suite for extended_bound."""

    def test_sum_of_letters(self):
        bound = extended_bound(Add(P, P))
        assert bound.n == 2
        assert_proves(bound.lower, Inequality(Scale(Fraction(-2), One()), Add(P, P)))
        assert_proves(bound.upper, Inequality(Add(P, P), Scale(Fraction(2), One())))

    def test_fractional_scale_rounds_up(self):
        assert extended_bound(Add(P, Scale(Fraction(1, 2), Q))).n == 2

    def test_meet_and_one(self):
        bound = extended_bound(Meet(Scale(Fraction(-3), P), One()))
        assert bound.n == 3
        assert check(bound.lower).accepted
        assert check(bound.upper).accepted

    def test_zero(self):
        bound = extended_bound(Zero())
        assert bound.n == 0
        assert check(bound.lower).accepted

    @settings(max_examples=30, deadline=None)
    @given(formulas(Mode.EXTENDED, letters=("P", "Q"), max_leaves=4), assignments(Mode.EXTENDED, ("P", "Q")))
    def test_random_bounds_check_and_hold(self, f, values):
        bound = extended_bound(f)
        for d in (bound.lower, bound.upper):
            assert check(d).accepted
            assert_sound(d, values, Mode.EXTENDED)


class TestFarkasDerivation:
    """Test suite for derivations replayed from Farkas certificates."""

    def test_basic_entailment(self):
        theory = (Inequality(Scale(Fraction(2), Q), P), Inequality(Zero(), Q))
        d = farkas_derivation(theory, Inequality(Zero(), P), Mode.BASIC)
        assert d.fragment is Fragment.LIN
        assert_proves(d, Inequality(Zero(), P))

    def test_extended_slack(self):
        """Test a goal needing the constant slack 0 <= 1."""
        d = farkas_derivation((), Inequality(P, Scale(Fraction(2), One())), Mode.EXTENDED)
        assert_proves(d, Inequality(P, Scale(Fraction(2), One())))

    def test_infeasible_theory(self):
        theory = (Inequality(One(), P), Inequality(P, Zero()))
        goal = Inequality(Scale(Fraction(3), Q), Scale(Fraction(-1), One()))
        assert_proves(farkas_derivation(theory, goal, Mode.EXTENDED), goal)

    def test_not_entailed(self):
        with pytest.raises(TransformError, match="not entailed"):
            farkas_derivation((Inequality(Scale(Fraction(2), Q), P),), Inequality(Q, P), Mode.BASIC)

    def test_meet_rejected(self):
        with pytest.raises(TransformError, match="meet-free"):
            farkas_derivation((), Inequality(Zero(), Meet(P, P)), Mode.BASIC)

    @settings(max_examples=40, deadline=None)
    @given(nonnegative_rationals, nonnegative_rationals)
    def test_positive_combinations(self, a, b):
        """Test that aP + bQ >= 0 follows from 0 <= P and 0 <= Q for any a, b >= 0."""
        theory = (Inequality(Zero(), P), Inequality(Zero(), Q))
        goal = Inequality(Zero(), Add(Scale(a, P), Scale(b, Q)))
        assert_proves(farkas_derivation(theory, goal, Mode.BASIC), goal)
