"""Region decomposition of formulas into guarded linear pieces."""
from rvlogic.regions.decompose import (
    GuardedPiece,
    JointPiece,
    RegionDecomposition,
    decompose,
    decompose_jointly,
    piece_count_bound,
)

__all__ = ["GuardedPiece", "JointPiece", "RegionDecomposition", "decompose", "decompose_jointly", "piece_count_bound"]
