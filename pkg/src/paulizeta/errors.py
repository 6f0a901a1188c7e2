"""Exception hierarchy shared by every module in the package."""


class PauliZetaError(Exception):
    """Base class for all errors raised by paulizeta."""


class DuplicateIndex(PauliZetaError, ValueError):
    def __init__(self, index, first, second):
        self.index = index
        super().__init__(
            f"qubit {index} assigned two different letters: {first} and {second}"
        )


class NegativeIndex(PauliZetaError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"qubit index must be non-negative, got {index}")


class IndexOutOfRange(PauliZetaError, ValueError):
    """An index does not fit the 32-bit key layout or a dense rendering width."""


class NotCanonical(PauliZetaError, ValueError):
    """Entries handed to a constructor that requires canonical input."""


class WeightCapExceeded(PauliZetaError):
    def __init__(self, weight, cap):
        self.weight = weight
        self.cap = cap
        super().__init__(f"string weight {weight} exceeds weight cap {cap}")


class CountOverflow(PauliZetaError, OverflowError):
    pass


class ParityViolation(PauliZetaError, RuntimeError):
    """``inserted - Z`` came out odd: the pattern table is corrupted."""


class InternalInconsistency(PauliZetaError, RuntimeError):
    pass


class TooLarge(PauliZetaError, ValueError):
    pass


class InvalidSpec(PauliZetaError, ValueError):
    pass


class ParseError(PauliZetaError, ValueError):
    """Base for line-level parse failures. ``line`` is 1-based when known."""

    line = None

    def with_line(self, line):
        self.line = line
        return self

    def __str__(self):
        msg = super().__str__()
        if self.line is not None:
            return f"line {self.line}: {msg}"
        return msg


class BadCharacter(ParseError):
    def __init__(self, char, position):
        self.char = char
        self.position = position
        super().__init__(f"unexpected character {char!r} at position {position}")


class EmptyLine(ParseError):
    def __init__(self):
        super().__init__("empty line is not a dense Pauli string (use I...I for weight 0)")


class BadToken(ParseError):
    def __init__(self, token):
        self.token = token
        super().__init__(f"malformed sparse token {token!r}")


class CorpusParseError(PauliZetaError, ValueError):
    """A corpus file line failed to parse; wraps the line-level error."""

    def __init__(self, line, cause):
        self.line = line
        self.cause = cause
        super().__init__(f"line {line}: {cause}")
