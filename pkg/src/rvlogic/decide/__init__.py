"""Decision procedure for finite theories and derived predicates."""
from rvlogic.decide.predicates import (
    ArchimedeanReport,
    ConsistencyReport,
    archimedean_pair,
    bound_by_unit,
    consistent,
    strictly_positive_model,
)
from rvlogic.decide.procedure import BranchResult, Entails, Refutes, Verdict, decide

__all__ = [
    "ArchimedeanReport",
    "BranchResult",
    "ConsistencyReport",
    "Entails",
    "Refutes",
    "Verdict",
    "archimedean_pair",
    "bound_by_unit",
    "consistent",
    "decide",
    "strictly_positive_model",
]
