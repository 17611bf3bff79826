"""Exceptions shared across the package."""


class InternalConsistencyError(RuntimeError):
    """Exact arithmetic produced an impossible value (inexact division,
    orthogonality failure, empty constituent count).  Never caused by bad
    user input; indicates a bug or memory corruption."""


class NeedsOracleError(RuntimeError):
    """A threshold value depends on a restriction computation beyond the
    configured group-size cap."""

    def __init__(self, exponent: int):
        self.exponent = exponent
        super().__init__(f"requires oracle at 2^{exponent}")
