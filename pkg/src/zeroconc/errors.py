"""Exception hierarchy shared by every module."""


class ZeroconcError(Exception):
    """Base class for all errors raised by the package."""


class Unsupported(ZeroconcError):
    """The input lies outside what the catalog or algorithms can evaluate."""


class Degenerate(ZeroconcError):
    """A linking matrix is singular where a nondegenerate one is required."""


class Ambiguous(ZeroconcError):
    """More than one spin structure is a valid candidate.

    ``candidates`` holds every admissible choice so callers can quantify.
    """

    def __init__(self, message, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class NotQuasiAlternating(ZeroconcError):
    pass


class ExprSyntaxError(ZeroconcError):
    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(sorted(set(expected)))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{message} at position {position}{detail}")


class SemanticError(ZeroconcError):
    """A well-formed expression violates a mathematical constraint."""

    def __init__(self, message, constraint=""):
        self.constraint = constraint
        super().__init__(message)
