"""Derivations: axiom schemas, checker, builder, derived rules, transforms and proof files."""
from rvlogic.proofs.builder import ProofBuilder
from rvlogic.proofs.canon import canon, canon_inequality, same_formula, same_inequality
from rvlogic.proofs.checker import CheckReport, check
from rvlogic.proofs.derivation import (
    AxiomStep,
    Derivation,
    Fragment,
    HypStep,
    ProofStep,
    R1Step,
    R2Step,
    R3Step,
)
from rvlogic.proofs.files import format_derivation, parse_derivation
from rvlogic.proofs.library import (
    Equality,
    ExtendedBound,
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
from rvlogic.proofs.schemas import AxiomId, Direction, SchemaError, instantiate
from rvlogic.proofs.transforms import DeductionResult, cut_eliminate, deduction_transform

__all__ = [
    "AxiomId",
    "AxiomStep",
    "CheckReport",
    "DeductionResult",
    "Derivation",
    "Direction",
    "Equality",
    "ExtendedBound",
    "Fragment",
    "HypStep",
    "ProofBuilder",
    "ProofStep",
    "R1Step",
    "R2Step",
    "R3Step",
    "SchemaError",
    "cancel_scale",
    "canon",
    "canon_inequality",
    "check",
    "cut_eliminate",
    "deduction_transform",
    "extended_bound",
    "farkas_derivation",
    "format_derivation",
    "instantiate",
    "join_lub",
    "lin_halving",
    "meet_glb",
    "meet_mono",
    "negation_flip",
    "parse_derivation",
    "reflexivity",
    "riesz_abs",
    "riesz_decomp",
    "riesz_disjoint",
    "riesz_sum",
    "same_formula",
    "same_inequality",
    "scaled_parts_disjoint",
]
