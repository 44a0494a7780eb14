"""Exception types shared across the package."""


class BracketError(Exception):
    """Base class for all package errors."""


class ShapeError(BracketError, ValueError):
    """Non-rectangular tableau, width mismatch or malformed grid."""


class SymbolRangeError(BracketError, ValueError):
    """A symbol index outside 1..m."""


class CapacityError(BracketError):
    """An expansion would exceed its configured term budget."""

    def __init__(self, what, needed, budget, unit="terms"):
        super().__init__(f"{what}: needs {needed} {unit}, budget is {budget}")
        self.needed = needed
        self.budget = budget


class ConsistencyError(BracketError, RuntimeError):
    """An internal invariant failed; indicates a bug rather than bad input."""


class ParseError(BracketError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DisagreementError(BracketError):
    """Two straightening algorithms produced different normal forms."""
