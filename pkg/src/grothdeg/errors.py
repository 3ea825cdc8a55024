"""Exception types shared across the package.

DomainError subclasses signal invalid inputs and map to CLI exit code 1.
InternalError subclasses signal arithmetic or bookkeeping bugs: they should
never be reachable from valid inputs.
"""


class DomainError(Exception):
    """Invalid input for an operation."""


class NonStrictShift(DomainError):
    """A shifted diagram or shifted tableau was requested for a non-strict shape."""


class TooFewVariables(DomainError):
    """The alphabet bound n is smaller than the number of rows of the shape."""


class EmptyTableauSet(DomainError):
    """An aggregate over an empty tableau set was requested."""


class EmptyShape(DomainError):
    """A degree formula was asked for the empty shape."""


class ShapeMismatch(DomainError):
    """A filling and its diagram disagree, or two shapes do not nest as required."""


class OddSize(DomainError):
    """Fixed-point-free involutions only exist on an even number of letters."""


class SizeTooLarge(DomainError):
    """Requested size exceeds the desk-scale ceiling; pass allow_large to override."""


class InternalError(Exception):
    """An internal consistency check failed; indicates a bug, not bad input."""


class InternalDivisionError(InternalError):
    """Exact division left a nonzero remainder."""


class InconsistentRecursion(InternalError):
    """Two derivation paths of the divided-difference recursion disagree."""
