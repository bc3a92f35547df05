"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Position length does not match the rule set's dimension."""


class UnsupportedVariantError(ValueError):
    """Operation is not defined for this variant (e.g. move sets for
    3-dimensional games, or plain move generation for the pass variant)."""


class NoClosedFormError(ValueError):
    """No closed-form Grundy formula covers this variant/parameter choice;
    callers must fall back to the brute-force oracle."""


class RegionError(ValueError):
    """Position lies outside the table's region, or a region bound is invalid."""


class NoMoveError(ValueError):
    """Engine asked for a move from a terminal position."""


class TheoremCounterexampleError(RuntimeError):
    """A sweep that a theorem guarantees must find a witness found none.

    This never fires unless the implementation (or the theorem) is wrong, so
    it is deliberately loud rather than a quiet empty result.
    """
