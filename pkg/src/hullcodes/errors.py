"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class HullCodesError(Exception):
    """Base class for every error raised by this package."""


class FieldError(HullCodesError, ValueError):
    """Invalid field description or an operation the field cannot perform."""


class FieldMismatchError(FieldError):
    """Operands live in different fields."""


class DimensionError(HullCodesError, ValueError):
    """Matrix or vector shapes are incompatible."""


class ZeroCodeError(HullCodesError, ValueError):
    """A generator matrix spans only the zero vector."""


class BudgetExceededError(HullCodesError):
    """An exhaustive enumeration would exceed the evaluation budget."""


class HypothesisError(HullCodesError):
    """A precondition of a construction does not hold.

    ``report`` carries the partial construction report (when one exists) so
    that callers can still show which hypotheses were evaluated.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ParseError(HullCodesError, ValueError):
    """Malformed element, matrix or code-file text."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
