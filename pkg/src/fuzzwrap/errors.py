"""Exception types shared across the package."""

from __future__ import annotations


class FuzzwrapError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def name(self) -> str:
        return type(self).__name__


class InvalidLexeme(FuzzwrapError, ValueError):
    """classify() was handed an empty lexeme."""


class LabelError(FuzzwrapError, ValueError):
    """Base class for zone label validation failures.

    ``offset`` points at the offending character position when one exists.
    """

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class OverlappingSpans(LabelError):
    """Two spans at the same zone level overlap or are out of order."""


class SpanOutsideParent(LabelError):
    """A span escapes its parent zone (record outside global, etc.)."""


class BoundaryInsideToken(LabelError):
    """A span boundary falls strictly inside a token."""


class InvalidSpan(LabelError):
    """A span is empty, reversed, or structurally unusable."""


class NoRecords(FuzzwrapError, ValueError):
    """Training labels contain no record spans."""


class EmptyTrainingSet(FuzzwrapError, ValueError):
    """A detector was asked to learn from zero windows."""


class GlobalZoneNotFound(FuzzwrapError, RuntimeError):
    """No acceptable global zone separators on a page; extraction aborted."""


class ZeroTotal(FuzzwrapError, ValueError):
    """Recall/precision requested over zero gold tuples."""


class UnknownId(FuzzwrapError, KeyError):
    """A page, model, or corpus id is not present in the store."""

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return self.args[0] if self.args else ""
