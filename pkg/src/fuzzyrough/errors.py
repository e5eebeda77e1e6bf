"""Exception hierarchy shared by all fuzzyrough modules."""


class FuzzyRoughError(Exception):
    pass


class UniverseMismatch(FuzzyRoughError):
    pass


class NotAnEquivalence(FuzzyRoughError):
    pass


class PreconditionViolated(FuzzyRoughError):
    pass


class InvalidRelation(FuzzyRoughError):
    pass


class UniverseTooLarge(FuzzyRoughError):
    pass


class NotALattice(FuzzyRoughError):
    pass


class InvalidAlpha(FuzzyRoughError, ValueError):
    pass


class ParseError(FuzzyRoughError, ValueError):
    """Malformed relation document. ``position`` locates the fault, e.g. ``"line 3, column 7"``."""

    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        super().__init__(f"{position}: {message}" if position else message)


class DimensionMismatch(ParseError):
    pass


class DegreeOutOfRange(ParseError):
    pass


class NonPositiveTNormWarning(UserWarning):
    """The support of a T-equivalence need not be transitive for this t-norm."""
