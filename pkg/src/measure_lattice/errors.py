"""Exception types shared across the package."""


class MeasureLatticeError(Exception):
    """Base class for every error raised by this package."""


class UndefinedDifference(MeasureLatticeError, ArithmeticError):
    """A subtraction would need ``inf - inf`` or produce ``-inf``.

    ``atom`` is set when the failure happened at a specific atom of a
    measure (index into the space's atom list).
    """

    def __init__(self, message: str, atom: int | None = None, atom_name: str | None = None):
        super().__init__(message)
        self.atom = atom
        self.atom_name = atom_name


class SpaceMismatch(MeasureLatticeError, ValueError):
    """Operands live on different measurable spaces."""


class TooLargeToEnumerate(MeasureLatticeError):
    """An exhaustive enumeration would exceed its configured cap."""


class EmptyFamily(MeasureLatticeError, ValueError):
    """A meet or join was requested over an empty family of measures."""
