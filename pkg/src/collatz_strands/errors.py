"""Exception types shared across the package.

Domain errors subclass ValueError so callers probing invalid inputs can
catch them broadly; budget and search-state errors are separate.
"""


class CollatzError(Exception):
    pass


class NotDivisible(CollatzError, ValueError):
    """Raised when an inverse step would leave the naturals."""


class EvenInput(CollatzError, ValueError):
    pass


class RowOutOfRange(CollatzError, ValueError):
    pass


class InternalResidueViolation(CollatzError, ArithmeticError):
    """A residue construction produced an inexact division (a bug, not bad input)."""


class BudgetExhausted(CollatzError):
    """The step/round budget ran out. Carries the partial result; never a disproof."""

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


class CycleFound(CollatzError):
    """A row-reduction sequence revisited a termination column."""

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


class CorruptCheckpoint(CollatzError):
    pass


class BoundsMismatch(CollatzError):
    pass
