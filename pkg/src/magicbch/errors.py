"""Exception hierarchy shared by every module in this package.

The command-line front end maps these onto process exit codes: structural
and input problems exit 2, math-domain failures exit 3, and violated
internal invariants exit 4.
"""


class MagicBchError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(MagicBchError, ValueError):
    """Input has the wrong shape or violates a structural precondition."""


class DomainError(MagicBchError, ArithmeticError):
    """Input lies outside the mathematical domain of the operation."""


class AntipodalSingularityError(DomainError):
    """The rotation sits at the branch point where the half-angle reaches pi.

    At that point the group element is a numerical -I on some factor and the
    direction of its logarithm is not recoverable from the matrix entries.
    """


class ConvergenceError(DomainError):
    """An iterative routine failed to converge within its step budget."""


class InternalConsistencyError(MagicBchError):
    """A computed result violated an invariant that must hold by construction."""
