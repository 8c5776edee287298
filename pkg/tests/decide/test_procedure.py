"""Tests for the finite-theory decision procedure."""
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from rvlogic.core.domain import Inequality, Letter, Meet, Mode, One, Scale, Zero, count_meets
from rvlogic.core.errors import ModeError
from rvlogic.core.formulas import neg
from rvlogic.decide.procedure import Entails, Refutes, decide
from rvlogic.farkas.certificates import Entailed, Infeasible, Refuted, verify_certificate
from rvlogic.semantics.models import satisfies, satisfies_theory
from tests.oracles import countermodel
from tests.strategies import formulas

P, Q = Letter("P"), Letter("Q")
TWO_Q_LE_P = Inequality(Scale(Fraction(2), Q), P)


def non_archimedean_prefix(n: int) -> tuple[Inequality, ...]:
    """{0 <= kQ, kQ <= P : k = 1..n}."""
    theory: list[Inequality] = []
    for k in range(1, n + 1):
        theory += [Inequality(Zero(), Scale(Fraction(k), Q)), Inequality(Scale(Fraction(k), Q), P)]
    return tuple(theory)


class TestDecide:
    """Test suite for decide."""

    def test_entailed(self):
        """Test that 2Q <= P and 0 <= Q entail 0 <= P."""
        verdict = decide((TWO_Q_LE_P, Inequality.bare(Q)), Inequality.bare(P), Mode.BASIC)
        assert isinstance(verdict, Entails)
        assert verdict.entailed
        assert len(verdict.branches) == 1
        branch = verdict.branches[0]
        assert branch.signs == ""
        assert isinstance(branch.verdict, Entailed)
        assert verify_certificate(branch.system, branch.target, branch.verdict.certificate)

    def test_refuted_with_countermodel(self):
        """Test that 2Q <= P does not entail Q <= P and the countermodel is checked."""
        goal = Inequality(Q, P)
        verdict = decide((TWO_Q_LE_P,), goal, Mode.BASIC)
        assert isinstance(verdict, Refutes)
        assert not verdict.entailed
        assert satisfies(verdict.countermodel, TWO_Q_LE_P)
        assert not satisfies(verdict.countermodel, goal)
        assert set(verdict.countermodel.assignment) == {"P", "Q"}

    def test_meet_needs_case_split(self):
        """Test that 0 <= P entails 0 <= P /\\ 0 through both sign branches."""
        verdict = decide((Inequality.bare(P),), Inequality.bare(Meet(P, Zero())), Mode.BASIC)
        assert isinstance(verdict, Entails)
        assert [b.signs for b in verdict.branches] == ["+", "-"]

    def test_extended_unit_bound(self):
        """Test that every extended model satisfies P <= 1."""
        assert decide((), Inequality(P, One()), Mode.EXTENDED).entailed
        assert not decide((), Inequality(P, Scale(Fraction(1, 2), One())), Mode.EXTENDED).entailed

    def test_basic_mode_rejects_one(self):
        with pytest.raises(ModeError):
            decide((), Inequality(P, One()), Mode.BASIC)

    def test_inconsistent_theory_entails_everything(self):
        theory = (Inequality(One(), P), Inequality(P, Zero()))
        verdict = decide(theory, Inequality(One(), Zero()), Mode.EXTENDED)
        assert verdict.entailed
        assert all(isinstance(b.verdict, Infeasible) for b in verdict.branches)

    def test_unconstrained_letters_default_to_zero(self):
        verdict = decide((Inequality.bare(Letter("R")),), Inequality(Q, P), Mode.BASIC)
        assert isinstance(verdict, Refutes)
        assert set(verdict.countermodel.assignment) == {"P", "Q", "R"}

    def test_prune_keeps_verdict(self):
        theory = (Inequality.bare(Meet(P, Q)),)
        goal = Inequality.bare(Meet(Meet(P, Zero()), Q))
        assert decide(theory, goal, Mode.BASIC).entailed == decide(theory, goal, Mode.BASIC, prune=True).entailed

    def test_deterministic(self):
        first = decide((TWO_Q_LE_P,), Inequality(Q, P), Mode.BASIC)
        second = decide((TWO_Q_LE_P,), Inequality(Q, P), Mode.BASIC)
        assert first == second

    @pytest.mark.parametrize("n", range(1, 51))
    def test_finite_prefixes_never_force_q_nonpositive(self, n):
        """Test that no finite prefix of {0 <= kQ <= P} entails Q <= 0."""
        theory = non_archimedean_prefix(n)
        verdict = decide(theory, Inequality.bare(neg(Q)), Mode.BASIC)
        assert isinstance(verdict, Refutes)
        assert satisfies_theory(verdict.countermodel, theory)
        assert verdict.countermodel["Q"] > 0

    @settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
    @given(st.lists(formulas(max_leaves=4), max_size=2), formulas(max_leaves=4))
    def test_agrees_with_vertex_enumeration(self, hypotheses, goal_formula):
        """Test verdicts over up to three letters and two meets against exact vertex enumeration."""
        assume(sum(map(count_meets, [*hypotheses, goal_formula])) <= 2)
        self._assert_agrees(tuple(Inequality.bare(h) for h in hypotheses), Inequality.bare(goal_formula), Mode.BASIC)

    @settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
    @given(
        st.lists(formulas(Mode.EXTENDED, letters=("P", "Q"), max_leaves=3), max_size=2),
        formulas(Mode.EXTENDED, letters=("P", "Q"), max_leaves=3),
    )
    def test_extended_agrees_with_vertex_enumeration(self, hypotheses, goal_formula):
        assume(sum(map(count_meets, [*hypotheses, goal_formula])) <= 2)
        self._assert_agrees(tuple(Inequality.bare(h) for h in hypotheses), Inequality.bare(goal_formula), Mode.EXTENDED)

    @staticmethod
    def _assert_agrees(theory, goal, mode):
        verdict = decide(theory, goal, mode)
        if isinstance(verdict, Refutes):
            assert satisfies_theory(verdict.countermodel, theory)
            assert not satisfies(verdict.countermodel, goal)
            return
        assert countermodel(theory, goal, mode) is None
        for branch in verdict.branches:
            match branch.verdict:
                case Entailed(cert):
                    assert verify_certificate(branch.system, branch.target, cert)
                case Infeasible(cert):
                    assert verify_certificate(branch.system, None, cert)
                case _:
                    pytest.fail(f"branch {branch.signs} refuted under an entailment")

    @settings(max_examples=200, deadline=None)
    @given(
        st.lists(formulas(letters=("P", "Q"), max_leaves=3), max_size=2),
        formulas(letters=("P", "Q"), max_leaves=3),
        formulas(letters=("P", "Q"), max_leaves=3),
    )
    def test_monotone_in_the_theory(self, hypotheses, extra, goal_formula):
        """Test that adding a hypothesis never turns an entailment into a refutation."""
        theory = tuple(Inequality.bare(h) for h in hypotheses)
        goal = Inequality.bare(goal_formula)
        if decide(theory, goal, Mode.BASIC).entailed:
            assert decide(theory + (Inequality.bare(extra),), goal, Mode.BASIC).entailed

    @settings(max_examples=30, deadline=None)
    @given(formulas(Mode.EXTENDED, letters=("P",), max_leaves=4))
    def test_extended_countermodels_in_range(self, f):
        verdict = decide((), Inequality.bare(f), Mode.EXTENDED)
        if isinstance(verdict, Refutes):
            assert all(-1 <= v <= 1 for v in verdict.countermodel.assignment.values())
        for branch in verdict.branches:
            if isinstance(branch.verdict, Refuted):
                assert all(-1 <= v <= 1 for v in branch.verdict.witness.values())
