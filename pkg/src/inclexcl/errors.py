"""Exception types shared across the package."""


class InclExclError(Exception):
    """Base class for every error raised by this package."""


class ParseError(InclExclError, ValueError):
    """Malformed expression text."""

    def __init__(self, message: str, position: int, expected: list[str]):
        self.position = position
        self.expected = list(expected)
        super().__init__(
            f"{message} at position {position}; expected one of: "
            + ", ".join(self.expected))


class IndexOutOfRange(InclExclError, ValueError):
    """A variable index outside 1..n."""


class ArityError(InclExclError, ValueError):
    """An arity outside the configured range 1..n_max."""


class ArityMismatch(InclExclError, ValueError):
    """Operands built for different arities."""


class EmptyIndex(InclExclError, ValueError):
    """The empty index set where a nonempty one is required."""


class RangeError(InclExclError, ValueError):
    """A parameter outside its admissible range."""


class CoefficientOverflow(InclExclError, OverflowError):
    """An exact integer result does not fit the configured integer width."""
