"""Exception types raised by the library."""


class ShapeError(ValueError):
    """Shapes or element counts are incompatible with the operation."""


class RankError(ValueError):
    """An operand has the wrong rank (too few or too many axes)."""


class BoundsError(IndexError):
    """An index vector is out of bounds or has the wrong length."""


class PlanError(ValueError):
    """A kernel plan is inconsistent with the operands it is run against."""
