"""Exception types shared across the package."""


class BettiError(Exception):
    """Base class for every domain error raised by this package."""


class FormatError(BettiError):
    """Malformed wire-format input (rational literal, JSON shape, ideal data)."""


class EmptyDiagramError(BettiError):
    """Operation requires a nonzero diagram."""


class GapColumnError(BettiError):
    """A column strictly below the projective dimension is entirely zero."""


class ZeroNumeratorError(BettiError):
    """The Hilbert numerator vanishes identically."""


class LengthMismatchError(BettiError):
    """Termwise comparison of sequences with different lengths."""


class InvalidSequenceError(BettiError):
    """Degree sequence is not a strictly increasing integer tuple."""


class NegativeGapError(BettiError):
    """Gap vector has a negative or non-integer coordinate where a degree sequence is required."""


class DomainError(BettiError):
    """Argument outside the mathematical domain of the function."""


class PoleError(BettiError):
    """A denominator linear form vanishes at the evaluation point."""


class NotInConeError(BettiError):
    """Greedy elimination failed: the diagram is not a nonnegative combination it can reach."""


class NoFirstSyzygyError(BettiError):
    """Column 1 of the diagram is empty, so the syzygy-degree hypothesis is vacuous."""


class TooManyGeneratorsError(BettiError):
    """Generator count exceeds the subset-enumeration guard."""


class UnknownFamilyError(BettiError):
    """Unrecognized corpus family name."""


class ParamError(BettiError):
    """Invalid asymptotic-bound parameters."""


class ConstraintError(BettiError):
    """Gap tail violates the constraint required by the bound."""


class BoundsError(BettiError):
    """Scan range outside the guard rails."""
