"""Exception hierarchy shared by the library and the ``pil`` command line."""


class PowerIdealError(Exception):
    """Base class for every error raised by this package."""


class InputError(PowerIdealError):
    """User-supplied data cannot be used."""


class ArrangementFormatError(InputError):
    def __init__(self, line_number, message):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class PreconditionError(PowerIdealError, ValueError):
    """An operation was called outside its domain."""


class AdmissibilityError(PreconditionError):
    """k lies below the standing hypothesis k >= -(rho+1)."""


class SpaceMismatchError(PowerIdealError, TypeError):
    """Operator (x) and solution (y) polynomials were mixed."""


class GroundSetMismatchError(PowerIdealError):
    pass


class GroundSetTooLargeError(PowerIdealError):
    pass


class GenericityError(PowerIdealError):
    """A seeded generic construction ran out of redraws."""


class TutteMismatchError(PowerIdealError):
    """The two Tutte algorithms disagreed."""
