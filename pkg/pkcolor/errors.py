"""
pkcolor.errors
==============

Exception hierarchy shared by all pkcolor modules.

Every error derives from :class:`PkColorError` and also from the closest
builtin (``ValueError`` for bad input, ``RuntimeError`` for search
outcomes) so callers that only know the builtins still catch them.
"""

from __future__ import annotations

from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:  # pragma: no cover
    from .models import Witness


class PkColorError(Exception):
    """Base class for every pkcolor error."""


class InvalidArgument(PkColorError, ValueError):
    """A parameter is outside its documented range.

    ``witness`` is set when the argument was rejected because of a
    concrete defect, e.g. an improper coloring handed to path search.
    """

    def __init__(self, message: str, witness: Optional["Witness"] = None) -> None:
        super().__init__(message)
        self.witness = witness


class ParseError(InvalidArgument):
    """A graph or coloring file could not be parsed."""


class UnsupportedInstance(PkColorError, ValueError):
    """The request is well formed but no construction is known for it."""


class NoDecomposition(UnsupportedInstance):
    """The integer cannot be written as 3·alpha + 4·beta."""


class BudgetExhausted(PkColorError, RuntimeError):
    """A search ran out of its node budget before reaching a verdict."""

    def __init__(self, message: str, spent: int = 0) -> None:
        super().__init__(message)
        self.spent = spent


class GuardExceeded(BudgetExhausted):
    """A request was refused up front because its estimated cost is too large."""


class PrecisionError(PkColorError, ArithmeticError):
    """A numeric evaluation overflowed even in log space."""


class ConstructionFailed(PkColorError, RuntimeError):
    """A constructed coloring did not pass post-verification."""


class InternalError(PkColorError, RuntimeError):
    """An invariant that holds for every valid input was violated."""
