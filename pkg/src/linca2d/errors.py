"""Exception types shared across the package."""

from __future__ import annotations


class RuleRangeError(ValueError):
    """Rule number outside 0..511, or a weight that is not a fundamental rule."""


class DimensionError(ValueError):
    """Operands whose dimensions do not line up."""


class CapacityError(ValueError):
    """Input exceeds the supported size caps."""


class ParseError(ValueError):
    """Malformed grid or matrix text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
