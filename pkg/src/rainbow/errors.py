"""Exception hierarchy shared by every module of the package."""


class RainbowError(Exception):
    """Base class for all errors raised by :mod:`rainbow`."""


# graph construction and I/O

class GraphError(RainbowError, ValueError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError, IndexError):
    pass


class EmptyGraph(GraphError):
    pass


class OverlappingSets(GraphError):
    pass


class EcgSyntaxError(GraphError):
    """Malformed ``.ecg`` text; ``lineno`` is 1-based (0 when the problem is global)."""

    def __init__(self, message, lineno=0):
        self.lineno = lineno
        where = f"line {lineno}: " if lineno else ""
        super().__init__(f"{where}{message}")


# detectors

class NoEdges(RainbowError, ValueError):
    pass


class BadK(RainbowError, ValueError):
    pass


# lemmata / audit

class PivotInA(RainbowError, ValueError):
    pass


class PivotNotAdjacent(RainbowError, ValueError):
    pass


class NotDependent(RainbowError, ValueError):
    def __init__(self, edge, message=None):
        self.edge = edge
        super().__init__(message or f"edge {edge} violates the dependence property")


class EmptySet(RainbowError, ValueError):
    pass


class BadTemplate(RainbowError, ValueError):
    pass


class NotComplete(RainbowError, ValueError):
    pass


class PathTooShort(RainbowError, ValueError):
    pass


class NotRainbow(RainbowError, ValueError):
    pass


class NotAPath(RainbowError, ValueError):
    pass


# generators

class BadParams(RainbowError, ValueError):
    pass


class RepairFailed(RainbowError, RuntimeError):
    pass


# verifier

class MissingParam(RainbowError, ValueError):
    pass


class SpaceTooLarge(RainbowError, ValueError):
    pass


class IndeterminateSideCondition(RainbowError, RuntimeError):
    """A side condition could not be certified within the budget.

    Kept for callers that catch it; the current C4-freeness check is
    polynomial and never runs out of budget.
    """
