"""Exception hierarchy shared by every module of the package."""


class SignedGraphError(Exception):
    """Base class for all errors raised by signedchordal."""


class LoopEdge(SignedGraphError):
    pass


class DuplicateEdge(SignedGraphError):
    pass


class VertexOutOfRange(SignedGraphError):
    pass


class OddCycle(SignedGraphError):
    """The graph is not bipartite."""


class NotAnEdge(SignedGraphError):
    pass


class SeparableInput(SignedGraphError):
    pass


class IsolatedVertex(SignedGraphError):
    pass


class ParamOutOfBounds(SignedGraphError):
    pass


class IncompatibleParities(SignedGraphError):
    pass


class InputIsChordal(SignedGraphError):
    pass


class InternalInconsistency(SignedGraphError):
    """A computed object failed a check that the theory guarantees.

    Either there is a bug or the input is a counterexample; callers should
    report it rather than swallow it.
    """


class TooManyEdges(SignedGraphError):
    pass


class TooManyVertices(SignedGraphError):
    pass


class BudgetExceeded(SignedGraphError):
    pass


class GraphParseError(SignedGraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
