"""Exception types shared across the package."""


class HoughregError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(HoughregError):
    """Exponent vectors or points of the wrong length."""


class RingMismatchError(HoughregError):
    """Operands live in different rings."""


class LeadingTermError(HoughregError):
    """Leading term of the zero polynomial requested."""


class BindingError(HoughregError):
    """Substitution targets a name that is not an indeterminate."""


class DegenerateFamilyError(HoughregError):
    """The family's generic fiber ideal is the unit ideal."""


class SpecializationError(HoughregError):
    """Specialization point lies on the zero locus of the denominator."""


class DetectorConfigError(HoughregError):
    """Accumulator box or resolution is unusable."""


class NoVotesError(HoughregError):
    """Peak requested from an accumulator holding no votes."""


class ParseError(HoughregError):
    """Syntax error in a family file or polynomial expression."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
