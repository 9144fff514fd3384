from direction_space.exception import DirectionSpaceError


class ArityTooSmall(DirectionSpaceError):
    """A regular tree needs degree at least 3."""


class OrderTooSmall(DirectionSpaceError):
    """The finite group F needs at least two elements."""


class NotSymmetricGenerators(DirectionSpaceError):
    """The generating set is not closed under inverses."""


class ParseError(DirectionSpaceError):
    """Malformed input, reported with the offending line."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class InvariantViolation(DirectionSpaceError):
    """Well-formed input that breaks a structural invariant."""

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail
