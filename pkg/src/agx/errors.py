"""Exception types shared across the package."""


class AgxError(Exception):
    """Base class for all package errors."""


class LoopEdge(AgxError):
    pass


class DuplicateEdge(AgxError):
    pass


class DegreeExceedsFour(AgxError):
    pass


class VertexOutOfRange(AgxError):
    pass


class MalformedGraph6(AgxError):
    pass


class DegreeOutOfRange(AgxError):
    pass


class InfeasiblePair(AgxError):
    pass


class SizeOutOfRange(AgxError):
    pass


class ExceptionalPair(AgxError):
    pass


class Infeasible(AgxError):
    pass


class BudgetExceeded(AgxError):
    pass


class CatalogMismatch(AgxError):
    pass


class StaleMove(AgxError):
    pass
