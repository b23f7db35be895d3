"""Exception types shared across the package."""


class MonolieError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(MonolieError):
    """Vectors or objects of different ambient dimensions were combined."""


class ZeroGenerator(MonolieError):
    """A generating set contained the zero exponent vector (the unit ideal)."""


class NotFull(MonolieError):
    """The ideal contains a variable, so the quotient degenerates."""


class InfiniteAlgebra(MonolieError):
    """The quotient algebra is infinite dimensional (no pure power on some axis)."""


class NotDownwardClosed(MonolieError):
    """A point set that should be a staircase is not downward closed."""


class NotInner(MonolieError):
    """An inner-degree operation was called with a degree outside the orthant."""


class NotOuter(MonolieError):
    """An outer-degree operation was called with a degree inside the orthant."""


class NotADerivation(MonolieError):
    """The degree/covector pair does not induce a derivation of the quotient."""


class InconsistentWeightFunction(MonolieError):
    """A weight function is not the step-count function of any staircase."""


class MissingKey(MonolieError):
    """A degree outside the restricted weight data domain was requested."""


class UnsupportedDimension(MonolieError):
    """The requested operation is only available in low ambient dimension."""


class IdealSyntaxError(MonolieError):
    """Malformed ideal or weights-file text. Carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
