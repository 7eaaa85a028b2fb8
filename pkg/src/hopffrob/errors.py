"""Exception hierarchy shared by every module of the package."""


class HopfError(Exception):
    """Base class for all errors raised by hopffrob."""


class FieldMismatch(HopfError, TypeError):
    """Scalars from different cyclotomic fields were combined."""


class DimensionMismatch(HopfError, ValueError):
    pass


class NotRankOne(HopfError, ValueError):
    pass


class Singular(HopfError, ValueError):
    pass


class NoAntipode(HopfError):
    """The convolution-inverse system for the antipode has no solution."""


class AntipodeOneSided(HopfError):
    """Only one side of the Hopf law can be satisfied."""


class SnakeFailure(HopfError):
    """A cap/cup pair does not satisfy the snake equations."""


class DegeneratePairing(HopfError):
    """The integral morphism does not factor as a normalised rank-one map."""


class InternalInconsistency(HopfError):
    """A constructed structure failed its own verification.

    For valid input this indicates a bug, never expected behaviour.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotAGroup(HopfError, ValueError):
    pass


class NotCoinvertible(HopfError, ValueError):
    pass


class InvalidForm(HopfError, ValueError):
    pass


class ParseError(HopfError, ValueError):
    """Malformed algebra specification text.

    ``line`` and ``column`` are 1-based when known.
    """

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
        self.line = line
        self.column = column
