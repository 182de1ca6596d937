"""Exception hierarchy shared by every module."""


class ValidationError(ValueError):
    """Malformed input data (anchors out of order, bad slopes, ...)."""


class ParseError(ValidationError):
    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        self.reason = message
        super().__init__(f"line {line}, column {column}: {message}")


class TypeSignatureUndefined(ValueError):
    """The sign type is only defined for some maps."""


class NotOrientationPreserving(TypeSignatureUndefined):
    pass


class IdentityMap(TypeSignatureUndefined):
    pass


class InfiniteFixedSet(TypeSignatureUndefined):
    pass


class PreconditionError(ValueError):
    pass


class SharedFixedPoint(PreconditionError):
    """The chosen generators have a common fixed point."""


class DegenerateConfiguration(PreconditionError):
    """A (g, f) configuration that cannot occur in a group without global fixed points."""


class NotFree(PreconditionError):
    """Some element of the ball has a fixed point."""


class OverlapError(ValidationError):
    pass


class ResourceError(RuntimeError):
    """A configured cap (ball size, exponent search) was exhausted."""


class MissingAuxiliary(LookupError):
    """The context ball holds no element with the required displacement."""


class ReductionFailed(RuntimeError):
    """A reduction between sibling cases broke an inequality it relies on."""

    def __init__(self, message, check=None):
        self.check = check
        super().__init__(message)
