"""Linear formulas and normal forms."""
from rvlogic.linear.forms import LinearForm, lf_add, lf_scale, lf_sub, lf_sum, lf_to_formula, linearize

__all__ = ["LinearForm", "lf_add", "lf_scale", "lf_sub", "lf_sum", "lf_to_formula", "linearize"]
