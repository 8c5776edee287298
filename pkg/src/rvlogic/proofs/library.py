"""Derived rules and lemmas, built as checked derivations.

The step-level helpers take a ProofBuilder and the indices of premises
already in it, append the steps of the derived rule and return the index
of its conclusion. The public constructors wrap them into standalone
derivations over the lemma's own hypotheses.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from rvlogic.core.domain import Add, Formula, Inequality, Letter, Meet, Mode, One, Scale, Theory, Zero, uses_one
from rvlogic.core.errors import ModeError, NotLinearError, TransformError
from rvlogic.core.formulas import abs_value, join, letters_of, letters_of_all, neg, neg_part, pos_part, sub
from rvlogic.farkas.certificates import Entailed, Infeasible, LinearSystem
from rvlogic.farkas.solver import entails_linear
from rvlogic.linear.forms import LinearForm, lf_sub, lf_to_formula, linearize
from rvlogic.proofs.builder import ProofBuilder
from rvlogic.proofs.derivation import Derivation, Fragment

logger = logging.getLogger("rvlogic.proofs.library")


@dataclass(frozen=True)
class Equality:
    """Derivations of both halves of an equation f = g."""

    le: Derivation
    ge: Derivation


@dataclass(frozen=True)
class ExtendedBound:
    """-n <= f and f <= n, both derived from no hypotheses."""

    n: int
    lower: Derivation
    upper: Derivation


def _scaled_one(q: Fraction | int) -> Formula:
    q = Fraction(q)
    if q == 0:
        return Zero()
    return One() if q == 1 else Scale(q, One())


def _require_mode(mode: Mode, *formulas: Formula) -> None:
    if mode is Mode.BASIC and any(uses_one(f) for f in formulas):
        raise ModeError("constant 1 is not available in basic mode")


# -- lattice steps -------------------------------------------------------------


def meet_mono_step(b: ProofBuilder, i: int, xi: Formula) -> int:
    """From step i: φ <= ψ derive φ ∧ ξ <= ψ ∧ ξ."""
    phi, psi = b.conclusion(i).lhs, b.conclusion(i).rhs
    shifted = b.r2(i, 1, neg(xi))
    cut = b.r3(shifted)
    back = b.add(cut, xi)
    down = b.axiom(12, "le", phi=sub(phi, xi), psi=Zero(), xi=xi)
    up = b.axiom(12, "ge", phi=sub(psi, xi), psi=Zero(), xi=xi)
    return b.chain(down, back, up)


def meet_mono_right_step(b: ProofBuilder, i: int, xi: Formula) -> int:
    """From step i: φ <= ψ derive ξ ∧ φ <= ξ ∧ ψ."""
    phi, psi = b.conclusion(i).lhs, b.conclusion(i).rhs
    swap_in = b.axiom(10, "le", phi=xi, psi=phi)
    mono = meet_mono_step(b, i, xi)
    swap_out = b.axiom(10, "le", phi=psi, psi=xi)
    return b.chain(swap_in, mono, swap_out)


def meet_glb_step(b: ProofBuilder, i: int, j: int) -> int:
    """From ξ <= φ (step i) and ξ <= ψ (step j) derive ξ <= φ ∧ ψ."""
    xi, phi, psi = b.conclusion(i).lhs, b.conclusion(i).rhs, b.conclusion(j).rhs
    idem = b.axiom(9, "ge", phi=xi)
    right = meet_mono_step(b, j, xi)
    swap = b.axiom(10, "le", phi=psi, psi=xi)
    left = meet_mono_step(b, i, psi)
    return b.chain(idem, right, swap, left)


def join_lub_step(b: ProofBuilder, i: int, j: int) -> int:
    """From φ <= ξ (step i) and ψ <= ξ (step j) derive φ ∨ ψ <= ξ."""
    glb = meet_glb_step(b, b.negate(i), b.negate(j))
    return b.negate(glb)


def meet_lower_right(b: ProofBuilder, f: Formula, g: Formula) -> int:
    """f ∧ g <= g."""
    return b.axiom(14, "le", phi=f, psi=g)


def meet_lower_left(b: ProofBuilder, f: Formula, g: Formula) -> int:
    """f ∧ g <= f."""
    return b.chain(b.axiom(10, "le", phi=f, psi=g), b.axiom(14, "le", phi=g, psi=f))


def join_upper_right(b: ProofBuilder, f: Formula, g: Formula) -> int:
    """g <= f ∨ g."""
    return b.negate(meet_lower_right(b, neg(f), neg(g)))


def join_upper_left(b: ProofBuilder, f: Formula, g: Formula) -> int:
    """f <= f ∨ g."""
    return b.negate(meet_lower_left(b, neg(f), neg(g)))


def zero_le_pos(b: ProofBuilder, f: Formula) -> int:
    """0 <= f⁺."""
    return join_upper_left(b, Zero(), f)


def zero_le_neg(b: ProofBuilder, f: Formula) -> int:
    """0 <= f⁻."""
    return join_upper_left(b, Zero(), neg(f))


# -- Riesz-space identities ----------------------------------------------------


def riesz_sum_steps(b: ProofBuilder, f: Formula, g: Formula) -> tuple[int, int]:
    """f + g = (f ∧ g) + (f ∨ g), as the indices of the two halves."""
    upper, lower = join(f, g), Meet(f, g)

    below_f = b.add(join_upper_right(b, f, g), sub(f, upper))
    below_g = b.add(join_upper_left(b, f, g), sub(g, upper))
    le = b.add(meet_glb_step(b, below_f, below_g), upper)

    above_f = b.add(meet_lower_right(b, f, g), sub(f, lower))
    above_g = b.add(meet_lower_left(b, f, g), sub(g, lower))
    ge = b.add(join_lub_step(b, above_f, above_g), lower)
    return le, ge


def riesz_decomp_steps(b: ProofBuilder, f: Formula) -> tuple[int, int]:
    """f = f⁺ - f⁻."""
    return riesz_sum_steps(b, Zero(), f)


def riesz_disjoint_steps(b: ProofBuilder, f: Formula) -> tuple[int, int]:
    """f⁺ ∧ f⁻ = 0."""
    n = neg_part(f)
    split = sub(pos_part(f), n)
    to_split, from_split = riesz_decomp_steps(b, f)

    pull = b.axiom(12, "le", phi=split, psi=Zero(), xi=n)
    squeeze = b.add(b.r3(from_split), n)
    swap = b.add(b.axiom(10, "le", phi=f, psi=Zero()), n)
    le = b.chain(pull, squeeze, swap)

    swap_back = b.add(b.axiom(10, "le", phi=Zero(), psi=f), n)
    widen = b.add(b.r3(to_split), n)
    push = b.axiom(12, "ge", phi=split, psi=Zero(), xi=n)
    ge = b.chain(swap_back, widen, push)
    return le, ge


def riesz_abs_steps(b: ProofBuilder, f: Formula) -> tuple[int, int]:
    """|f| = f⁺ + f⁻."""
    low = Meet(Zero(), f)
    double = Scale(Fraction(2), f)
    to_split, from_split = riesz_decomp_steps(b, f)

    shift = b.negate(b.axiom(12, "ge", phi=Zero(), psi=double, xi=neg(f)))
    spread = b.add(b.negate(b.axiom(13, "le", r=2, phi=Zero(), psi=f)), f)
    parts = b.add(to_split, Scale(Fraction(-2), low))
    le = b.chain(shift, spread, parts)

    unsplit = b.add(from_split, Scale(Fraction(-2), low))
    gather = b.add(b.negate(b.axiom(13, "ge", r=2, phi=Zero(), psi=f)), f)
    unshift = b.negate(b.axiom(12, "le", phi=Zero(), psi=double, xi=neg(f)))
    ge = b.chain(unsplit, gather, unshift)
    return le, ge


def scaled_parts_disjoint_steps(b: ProofBuilder, r: Fraction, s: Fraction, f: Formula) -> tuple[int, int]:
    """rf⁺ ∧ sf⁻ = 0 for r, s >= 0."""
    if r < 0 or s < 0:
        raise TransformError("scalars must be non-negative")
    p, n = pos_part(f), neg_part(f)
    rp, sn = Scale(r, p), Scale(s, n)
    pos_ok, neg_ok = zero_le_pos(b, f), zero_le_neg(b, f)
    ge = meet_glb_step(b, b.scale(pos_ok, r), b.scale(neg_ok, s))

    t = max(r, s)
    if t == 0:
        return b.axiom(9, "le", phi=Zero()), ge
    grow_p = b.add(b.scale(pos_ok, t - r), rp)
    grow_n = b.add(b.scale(neg_ok, t - s), sn)
    left = meet_mono_step(b, grow_p, sn)
    right = meet_mono_right_step(b, grow_n, Scale(t, p))
    factor = b.axiom(13, "ge", r=t, phi=p, psi=n)
    disjoint, _ = riesz_disjoint_steps(b, f)
    le = b.chain(left, right, factor, b.scale(disjoint, t))
    return le, ge


# -- extended-mode bounds --------------------------------------------------------


def zero_le_one(b: ProofBuilder, letter: str = "P") -> int:
    """0 <= 1, through -1 <= P <= 1."""
    span = b.chain(b.axiom(15, "ge", phi=Letter(letter)), b.axiom(15, "le", phi=Letter(letter)))
    return b.r2(span, Fraction(1, 2), Scale(Fraction(1, 2), One()))


def _weakener(b: ProofBuilder, letter: str) -> Callable[[int, Fraction, int, bool], int]:
    memo: list[int] = []

    def weaken(i: int, m: Fraction, n: int, lower: bool) -> int:
        if m == n:
            return i
        if not memo:
            memo.append(zero_le_one(b, letter))
        gap = b.scale(memo[0], n - m)
        if lower:
            return b.chain(b.add(gap, _scaled_one(-n)), i)
        return b.chain(i, b.add(gap, _scaled_one(m)))

    return weaken


def extended_bound_steps(b: ProofBuilder, f: Formula, letter: str | None = None) -> tuple[int, int, int]:
    """An integer n with -n <= f <= n.

    Returns:
        (n, index of -n <= f, index of f <= n).
    """
    letter = letter or next(iter(letters_of(f)), "P")
    weaken = _weakener(b, letter)

    def bound(g: Formula) -> tuple[Fraction, int, int]:
        match g:
            case Zero():
                i = b.refl(Zero())
                return Fraction(0), i, i
            case Letter():
                return Fraction(1), b.axiom(15, "ge", phi=g), b.axiom(15, "le", phi=g)
            case One():
                lo = b.chain(b.axiom(15, "ge", phi=Letter(letter)), b.axiom(15, "le", phi=Letter(letter)))
                return Fraction(1), lo, b.refl(One())
            case Add(left, right):
                m1, lo1, up1 = bound(left)
                m2, lo2, up2 = bound(right)
                return m1 + m2, b.combine(lo1, lo2), b.combine(up1, up2)
            case Scale(q, inner):
                m, lo, up = bound(inner)
                if q >= 0:
                    lo, up = b.scale(lo, q), b.scale(up, q)
                else:
                    lo, up = b.negate(b.scale(up, -q)), b.negate(b.scale(lo, -q))
                m = abs(q) * m
                n = math.ceil(m)
                return Fraction(n), weaken(lo, m, n, True), weaken(up, m, n, False)
            case Meet(left, right):
                m1, lo1, up1 = bound(left)
                m2, lo2, up2 = bound(right)
                m = max(m1, m2)
                n = math.ceil(m)
                up = b.chain(meet_lower_right(b, left, right), weaken(up2, m2, n, False))
                lo = meet_glb_step(b, weaken(lo1, m1, n, True), weaken(lo2, m2, n, True))
                return Fraction(n), lo, up
        raise TypeError(f"Not a formula: {g!r}")

    m, lo, up = bound(f)
    n = math.ceil(m)
    return n, weaken(lo, m, n, True), weaken(up, m, n, False)


# -- standalone derivations -------------------------------------------------------


def reflexivity(f: Formula, mode: Mode = Mode.BASIC) -> Derivation:
    """⊢ f <= f, in fragment mp."""
    _require_mode(mode, f)
    b = ProofBuilder((), mode, Fragment.MP)
    b.refl(f)
    return b.build()


def cancel_scale(r: Fraction, f: Formula, g: Formula, xi: Formula, mode: Mode = Mode.BASIC) -> Derivation:
    """rf + ξ <= rg + ξ ⊢ f <= g, for r > 0."""
    r = Fraction(r)
    if r <= 0:
        raise TransformError(f"cancellation needs r > 0, got {r}")
    _require_mode(mode, f, g, xi)
    hyp = Inequality(Add(Scale(r, f), xi), Add(Scale(r, g), xi))
    b = ProofBuilder((hyp,), mode, Fragment.LIN)
    b.r2(b.hyp(0), 1 / r, Scale(-1 / r, xi))
    return b.build(stated=Inequality(f, g))


def negation_flip(f: Formula, g: Formula, mode: Mode = Mode.BASIC) -> Derivation:
    """f <= g ⊢ -g <= -f."""
    _require_mode(mode, f, g)
    b = ProofBuilder((Inequality(f, g),), mode, Fragment.LIN)
    b.negate(b.hyp(0))
    return b.build(stated=Inequality(neg(g), neg(f)))


def lin_halving() -> Derivation:
    """0 <= 2P ⊢ 0 <= P in fragment lin; no mp derivation exists."""
    p = Letter("P")
    b = ProofBuilder((Inequality(Zero(), Scale(Fraction(2), p)),), Mode.BASIC, Fragment.LIN)
    b.scale(b.hyp(0), Fraction(1, 2))
    return b.build(stated=Inequality(Zero(), p))


def meet_mono(f: Formula, g: Formula, xi: Formula, mode: Mode = Mode.BASIC) -> Derivation:
    """f <= g ⊢ f ∧ ξ <= g ∧ ξ."""
    _require_mode(mode, f, g, xi)
    b = ProofBuilder((Inequality(f, g),), mode)
    meet_mono_step(b, b.hyp(0), xi)
    return b.build(stated=Inequality(Meet(f, xi), Meet(g, xi)))


def meet_glb(xi: Formula, f: Formula, g: Formula, mode: Mode = Mode.BASIC) -> Derivation:
    """ξ <= f, ξ <= g ⊢ ξ <= f ∧ g."""
    _require_mode(mode, f, g, xi)
    b = ProofBuilder((Inequality(xi, f), Inequality(xi, g)), mode)
    meet_glb_step(b, b.hyp(0), b.hyp(1))
    return b.build(stated=Inequality(xi, Meet(f, g)))


def join_lub(f: Formula, g: Formula, xi: Formula, mode: Mode = Mode.BASIC) -> Derivation:
    """f <= ξ, g <= ξ ⊢ f ∨ g <= ξ."""
    _require_mode(mode, f, g, xi)
    b = ProofBuilder((Inequality(f, xi), Inequality(g, xi)), mode)
    join_lub_step(b, b.hyp(0), b.hyp(1))
    return b.build(stated=Inequality(join(f, g), xi))


def _equality(b: ProofBuilder, halves: tuple[int, int], lhs: Formula, rhs: Formula) -> Equality:
    le, ge = halves
    return Equality(b.build(le, Inequality(lhs, rhs)), b.build(ge, Inequality(rhs, lhs)))


def riesz_sum(f: Formula, g: Formula, mode: Mode = Mode.BASIC) -> Equality:
    """⊢ f + g = (f ∧ g) + (f ∨ g)."""
    _require_mode(mode, f, g)
    b = ProofBuilder((), mode)
    return _equality(b, riesz_sum_steps(b, f, g), Add(f, g), Add(Meet(f, g), join(f, g)))


def riesz_decomp(f: Formula, mode: Mode = Mode.BASIC) -> Equality:
    """⊢ f = f⁺ - f⁻."""
    _require_mode(mode, f)
    b = ProofBuilder((), mode)
    return _equality(b, riesz_decomp_steps(b, f), f, sub(pos_part(f), neg_part(f)))


def riesz_disjoint(f: Formula, mode: Mode = Mode.BASIC) -> Equality:
    """⊢ f⁺ ∧ f⁻ = 0."""
    _require_mode(mode, f)
    b = ProofBuilder((), mode)
    return _equality(b, riesz_disjoint_steps(b, f), Meet(pos_part(f), neg_part(f)), Zero())


def riesz_abs(f: Formula, mode: Mode = Mode.BASIC) -> Equality:
    """⊢ |f| = f⁺ + f⁻."""
    _require_mode(mode, f)
    b = ProofBuilder((), mode)
    return _equality(b, riesz_abs_steps(b, f), abs_value(f), Add(pos_part(f), neg_part(f)))


def scaled_parts_disjoint(r: Fraction, s: Fraction, f: Formula, mode: Mode = Mode.BASIC) -> Equality:
    """⊢ rf⁺ ∧ sf⁻ = 0 for r, s >= 0."""
    _require_mode(mode, f)
    r, s = Fraction(r), Fraction(s)
    b = ProofBuilder((), mode)
    lhs = Meet(Scale(r, pos_part(f)), Scale(s, neg_part(f)))
    return _equality(b, scaled_parts_disjoint_steps(b, r, s, f), lhs, Zero())


def extended_bound(f: Formula) -> ExtendedBound:
    """⊢ -n·1 <= f and ⊢ f <= n·1 in extended mode, for the least n this construction finds.

    Example:
        >>> extended_bound(Add(Letter("P"), Scale(Fraction(1, 2), Letter("Q")))).n
        2
    """
    b = ProofBuilder((), Mode.EXTENDED)
    n, lo, up = extended_bound_steps(b, f)
    return ExtendedBound(
        n,
        b.build(lo, Inequality(_scaled_one(-n), f)),
        b.build(up, Inequality(f, _scaled_one(n))),
    )


# -- linear completeness --------------------------------------------------------------


def _difference(ineq: Inequality) -> LinearForm:
    return lf_sub(linearize(ineq.rhs), linearize(ineq.lhs))


def farkas_derivation(theory: Theory, goal: Inequality, mode: Mode) -> Derivation:
    """A fragment-lin derivation of a ∧-free goal from a ∧-free theory.

    The derivation replays a Farkas certificate: each hypothesis (and, in
    extended mode, each a15 bound) is moved to the form 0 <= d, scaled by
    its multiplier and summed. An infeasible theory proves the goal ex falso
    through 0 <= -1 and a bound on the goal.

    Raises:
        TransformError: If the goal does not follow, or a formula has a meet.
    """
    try:
        hyp_forms = [_difference(ineq) for ineq in theory]
        target = _difference(goal)
    except NotLinearError as e:
        raise TransformError(f"linear derivations need meet-free formulas: {e}") from e
    _require_mode(mode, goal.lhs, goal.rhs, *[f for ineq in theory for f in (ineq.lhs, ineq.rhs)])

    rows = list(hyp_forms)
    bounds: list[tuple[str, str]] = []
    if mode is Mode.EXTENDED:
        letters = letters_of_all([f for ineq in (*theory, goal) for f in (ineq.lhs, ineq.rhs)])
        for letter in letters:
            rows.append(LinearForm.constant(1) - LinearForm.letter(letter))
            bounds.append((letter, "le"))
            rows.append(LinearForm.letter(letter) + LinearForm.constant(1))
            bounds.append((letter, "ge"))
    verdict = entails_linear(LinearSystem(tuple(rows)), target)

    b = ProofBuilder(theory, mode, Fragment.LIN)

    def row_step(k: int) -> int:
        if k < len(theory):
            return b.r2(b.hyp(k), 1, neg(theory[k].lhs))
        letter, direction = bounds[k - len(theory)]
        step = b.axiom(15, direction, phi=Letter(letter))
        return b.r2(step, 1, neg(Letter(letter))) if direction == "le" else b.add(step, One())

    def weighted_sum(multipliers: tuple[Fraction, ...]) -> int:
        total: int | None = None
        for k, q in enumerate(multipliers):
            if q > 0:
                term = b.scale(row_step(k), q)
                total = term if total is None else b.combine(total, term)
        return b.refl(Zero()) if total is None else total

    match verdict:
        case Entailed(certificate):
            total = weighted_sum(certificate.multipliers)
            reached = sum((q * row.affine for q, row in zip(certificate.multipliers, rows)), Fraction(0))
            slack = target.affine - reached
            if slack > 0:
                total = b.combine(total, b.scale(zero_le_one(b), slack))
            logger.debug(f"Replayed certificate with slack {slack}")
        case Infeasible(certificate):
            if mode is Mode.BASIC:
                raise TransformError("a basic-mode theory is never infeasible")
            total = weighted_sum(certificate.multipliers)
            c = sum((q * row.affine for q, row in zip(certificate.multipliers, rows)), Fraction(0))
            absurd = b.scale(total, 1 / -c)
            n, lower, _ = extended_bound_steps(b, lf_to_formula(target))
            total = b.chain(b.scale(absurd, n), lower)
            logger.debug(f"Theory is infeasible; goal bounded by {n}")
        case _:
            raise TransformError("the goal is not entailed by the theory")
    b.add(total, goal.lhs)
    return b.build(stated=goal)
