"""Exception types raised by the library and mapped to CLI exit codes."""

from __future__ import annotations


class AlgebraError(ArithmeticError):
    """Base class for every domain error in this package."""


class RingMismatch(AlgebraError):
    pass


class NotAUnit(AlgebraError):
    pass


class InfiniteRing(AlgebraError):
    pass


class NotInRing(AlgebraError):
    pass


class InvalidDescriptor(AlgebraError, ValueError):
    pass


class NotLocal(AlgebraError):
    pass


class NotCommutative(AlgebraError):
    pass


class CornerNotSolvable(AlgebraError):
    pass


class NoSplit(AlgebraError):
    """A monic quadratic has no root pair (alpha in 1+J, beta in J).

    ``reason`` is ``"no-roots"`` or ``"wrong-classes"``.
    """

    def __init__(self, reason: str, message: str = "") -> None:
        super().__init__(message or reason)
        self.reason = reason


class NotVeryClean(AlgebraError):
    pass


class NotStronglyClean(AlgebraError):
    pass


class NotVeryCleanAtZero(AlgebraError):
    pass


class TooLarge(AlgebraError):
    pass


class UnknownSuite(AlgebraError, KeyError):
    pass


class ParseError(AlgebraError, ValueError):
    def __init__(self, text: str, position: int, reason: str) -> None:
        super().__init__(f"{reason} at position {position} in {text!r}")
        self.text = text
        self.position = position
        self.reason = reason


class InvariantViolation(AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""
