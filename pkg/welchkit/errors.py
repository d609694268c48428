"""
Exception hierarchy for welchkit.

Service functions raise these; the CLI layer maps them to exit codes.
"""


class WelchkitError(Exception):
    """Base class for every error raised by welchkit."""


class InvalidArgumentError(WelchkitError, ValueError):
    """A precondition on an argument was violated."""


class NumericFailureError(WelchkitError, ArithmeticError):
    """An iterative numerical routine did not converge."""


class SingularOperatorError(WelchkitError, ArithmeticError):
    """An operator that must be invertible is singular or indefinite."""


class RangeError(WelchkitError, OverflowError):
    """An exact integer result does not fit the supported range."""


class NotApplicableError(WelchkitError):
    """A quantity or bound is undefined for the given input."""


class FrameValidationError(InvalidArgumentError):
    """Frame data (in memory or in a frame file) failed validation."""
