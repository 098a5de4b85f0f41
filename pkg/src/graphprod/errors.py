"""Exception hierarchy shared by all modules."""


class GraphProductError(Exception):
    pass


class InvalidElement(GraphProductError, ValueError):
    pass


class IdentityElement(GraphProductError, ValueError):
    pass


class InvalidGenerator(GraphProductError, ValueError):
    pass


class InvalidGroupTable(GraphProductError, ValueError):
    pass


class InvalidIndependence(GraphProductError, ValueError):
    pass


class UnknownNode(GraphProductError, KeyError):
    pass


class SpecParseError(GraphProductError, ValueError):
    pass


class WordParseError(GraphProductError, ValueError):
    pass


class InvalidSyllableWord(GraphProductError, ValueError):
    pass


class NotInKernel(GraphProductError, ValueError):
    pass


class NotReduced(GraphProductError, ValueError):
    pass


class NotCyclicallyReduced(GraphProductError, ValueError):
    pass


class BudgetExceeded(GraphProductError, RuntimeError):
    pass


class CrossCheckError(GraphProductError, AssertionError):
    """Two independent computations of the same quantity disagreed."""
