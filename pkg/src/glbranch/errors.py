"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a mathematical precondition of an operation."""


class ParseError(ValueError):
    """Malformed expression text.

    ``line`` and ``column`` are 1-based; ``expected`` names what the parser
    was looking for when it stopped.
    """

    kind = "syntax error"

    def __init__(self, message, line=1, column=1, expected=None):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        detail = f"{self.kind} at line {line}, column {column}: {message}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class SemanticError(ParseError):
    """Well-formed text that does not denote a valid object."""

    kind = "semantic error"
