"""Exception hierarchy shared by every module."""


class WeightingError(Exception):
    """Base class for all errors raised by twoweight."""


class GraphError(WeightingError, ValueError):
    pass


class InvalidEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class BadVertex(GraphError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadElement(WeightingError, ValueError):
    pass


class NotApplicable(WeightingError):
    """A structural hypothesis of the requested construction does not hold."""


class Disconnected(NotApplicable):
    pass


class InfeasibleSum(WeightingError):
    """The target colors do not sum to a doubled group element."""


class InfeasibleParity(WeightingError):
    pass


class IncompleteWeighting(WeightingError, KeyError):
    pass


class InfeasibleBounds(WeightingError):
    pass


class SearchFailed(WeightingError):
    def __init__(self, message: str, best_deficit: int | None = None):
        self.best_deficit = best_deficit
        super().__init__(message)


class BudgetExceeded(WeightingError):
    pass


class TheoremViolation(WeightingError, AssertionError):
    """A construction that is guaranteed to succeed did not. Always a bug."""


class BadSpec(WeightingError, ValueError):
    pass


class GenerationFailed(WeightingError):
    pass
