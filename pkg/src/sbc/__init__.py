"""Exact Sylow branching coefficients at the prime 2 for hook partitions.

Computes decompositions of restricted symmetric-group characters
chi^(n-x, 1^x) |_{P_n}, where P_n is a Sylow 2-subgroup of S_n, together
with the closed formulas and box thresholds that describe which degrees
occur, all in exact integer arithmetic.
"""

from .errors import InternalConsistencyError, NeedsOracleError

__all__ = ["InternalConsistencyError", "NeedsOracleError"]
__version__ = "0.1.0"
