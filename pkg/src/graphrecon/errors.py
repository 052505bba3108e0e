"""Exception hierarchy shared by every module."""


class GraphError(ValueError):
    """Base class for all domain errors raised by graphrecon."""


class InvalidVertexError(GraphError):
    pass


class CannotDeleteLastVertexError(GraphError):
    pass


class InvalidPermutationError(GraphError):
    pass


class Graph6ParseError(GraphError):
    """Malformed graph6 input. ``offset`` is the 0-based byte position of the fault."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.reason = message
        self.offset = offset


class DeckUndefinedError(GraphError):
    pass


class IllegitimateDeckError(GraphError):
    pass


class SearchBoundExceededError(GraphError):
    pass


class TooManySpecialsError(GraphError):
    pass


class InvalidTrialError(GraphError):
    pass


class TheoremViolationError(AssertionError):
    """Raised when a proof step fails on a verified class member.

    This can only mean an implementation bug, so it is deliberately not a
    GraphError (callers should never swallow it as a domain-negative result).
    """
