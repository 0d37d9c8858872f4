"""Exception hierarchy shared across the library and the CLI."""

from __future__ import annotations


class LatticeDiamError(Exception):
    """Base class for all library errors."""


class ValidationError(LatticeDiamError):
    """Input violates a documented precondition (bad polygon, wrong dimension, ...)."""


class ParseError(LatticeDiamError):
    """A document could not be parsed (malformed JSON, unknown kind, bad number)."""


class BudgetError(LatticeDiamError):
    """A computation would exceed its configured size budget."""


class FitError(LatticeDiamError):
    """Quasi-polynomial fitting failed (too few samples or verification mismatch)."""
