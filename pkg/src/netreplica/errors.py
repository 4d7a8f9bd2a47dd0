"""Exception types shared across the package."""


class EdgeListParseError(ValueError):
    """Raised when an edge-list file contains a malformed line.

    Carries the 1-based line number of the offending line.
    """

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class UndefinedInputError(ValueError):
    """Raised when a statistic is mathematically undefined for the input
    (e.g. Gini of an all-zero sequence, diameter of an empty graph)."""


class NotGraphicalError(ValueError):
    """Raised when a degree sequence cannot be realized by any simple graph."""
