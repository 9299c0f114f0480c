"""Exception hierarchy shared by all modules."""


class UGIGError(Exception):
    """Base class for every error raised by this package."""


class GraphError(UGIGError, ValueError):
    pass


class DuplicateLabel(GraphError):
    pass


class EdgeWithinPartition(GraphError):
    pass


class UnknownEndpoint(GraphError):
    pass


class OddCycle(GraphError):
    pass


class BadParams(UGIGError, ValueError):
    pass


class NotATree(GraphError):
    pass


class GeometryError(UGIGError, ValueError):
    pass


class CollinearOverlap(GeometryError):
    def __init__(self, a, b):
        super().__init__(f"collinear segments {a!r} and {b!r} share a point")
        self.pair = (a, b)


class EmptyRepresentation(GeometryError):
    pass


class NotAnEdge(GeometryError):
    pass


class NeighborhoodOverlap(GeometryError):
    pass


class BadEpsilon(GeometryError):
    pass


class BlockedSlide(GeometryError):
    def __init__(self, vertex, blocker=None):
        msg = f"cannot slide {vertex!r} into the frame"
        if blocker is not None:
            msg += f" (blocked by {blocker!r})"
        super().__init__(msg)
        self.vertex = vertex
        self.blocker = blocker


class NotTwoDirectional(GeometryError):
    pass


class NotUGIG(GeometryError):
    pass


class InconsistentEvents(UGIGError, ValueError):
    pass


class CertificateError(UGIGError, ValueError):
    pass


class PopulationMismatch(CertificateError):
    pass


class NotProper(CertificateError):
    pass


class InconsistentCertificate(CertificateError):
    pass


class MalformedBytes(CertificateError):
    pass


class InconsistentModel(UGIGError, RuntimeError):
    pass


class CapExceeded(UGIGError, ValueError):
    pass


class BudgetExceeded(UGIGError, TimeoutError):
    pass


class SquareTooSmall(UGIGError, ValueError):
    pass


class BadGirth(UGIGError, ValueError):
    pass


class AlreadyFourOccurrences(UGIGError, ValueError):
    pass


class InvalidInstance(UGIGError, ValueError):
    pass


class FormatError(UGIGError, ValueError):
    pass
