"""Exception hierarchy shared by every wandering-lab package."""


class LabError(Exception):
    """Base class for all errors raised by the laboratory."""


class NonFiniteInputError(LabError):
    """A NaN or infinite value was passed to a map."""


class DegenerateInputError(LabError):
    """A conjugated map is undefined at the requested point (a pole)."""


class BracketFailureError(LabError):
    """The root scan found no sign change where one was expected."""


class NotFoundError(LabError):
    """A search exhausted its budget without producing a witness."""


class NotReachedError(LabError):
    """An approximation threshold was not reached within the index budget."""


class PreconditionViolatedError(LabError):
    """An argument lies outside the range an operation is defined on."""


class EmptySetError(LabError):
    """A point set that must be non-empty is empty."""


class OutsideFrameError(LabError):
    """A point is not interior to the hyperbolic frame it is measured in."""


class InvariantViolationError(LabError):
    """A proven ordering or bound failed numerically during an experiment."""


class UsageError(LabError):
    """Malformed command-line input."""
