"""Exception hierarchy shared by all modules."""


class FieldSepError(Exception):
    """Base class for all workbench errors."""


class FieldMismatchError(FieldSepError):
    """Operands belong to different fields."""


class InputError(FieldSepError):
    """Bad user input (parse error, invalid polynomial, bad flag)."""


class ReducibleError(InputError):
    """A polynomial required to be irreducible has a nontrivial factor."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class HeightBoundExceeded(FieldSepError):
    """A bounded search would exceed the configured height/candidate budget.

    This is a resource error: the computation refuses to answer rather
    than answer incompletely.
    """


class ContextTooSmallError(FieldSepError):
    """A splitting context does not contain all required roots."""


class CapabilityError(FieldSepError):
    """The requested computation is outside the supported extension class."""


class PropertyViolation(FieldSepError):
    """A checked mathematical property failed; indicates a bug."""
