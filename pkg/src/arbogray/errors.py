"""Exception hierarchy shared by all modules."""


class ArbograyError(Exception):
    pass


class GraphError(ArbograyError, ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ArbograyError, ValueError):
    pass


class IllegalFlipError(ArbograyError, ValueError):
    pass


class NoCompletionError(ArbograyError):
    pass


class BudgetExceeded(ArbograyError, RuntimeError):
    pass


class InternalInconsistency(ArbograyError, RuntimeError):
    """A case the construction proves impossible was reached.

    ``provenance`` holds the recursion trace collected so far.
    """

    def __init__(self, message, provenance=None):
        super().__init__(message)
        self.provenance = list(provenance or [])
