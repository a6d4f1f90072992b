"""Exception types shared across the package."""

from __future__ import annotations


class SteinitzError(Exception):
    """Base class for domain errors raised by this package."""


class ParseError(SteinitzError):
    """A literal failed to parse; carries the offending position."""

    def __init__(self, message: str, pos: int = -1):
        self.pos = pos
        if pos >= 0:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class UnsupportedProduct(SteinitzError):
    """Product of two sieves that both carry prime-indexed families."""


class NonCoprimeGenerators(SteinitzError):
    """Numerical-monoid generators with a common factor; no finite gaps."""


class NotSeparable(SteinitzError):
    """One point weakly divides the other; no open can split them."""


class NotIncomparable(SteinitzError):
    """Separation was requested for points that are order-related."""


class SearchBudgetExceeded(SteinitzError):
    """A bounded prime or witness search ran out before deciding."""


class ConstructionStuck(SteinitzError):
    """Chain extension could not absorb a seed within the search bound."""

    def __init__(self, seed):
        self.seed = seed
        super().__init__(f"no chain extension absorbs seed {seed}")
