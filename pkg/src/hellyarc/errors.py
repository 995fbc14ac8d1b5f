"""Exception types shared across the package."""


class HellyArcError(Exception):
    """Base class for all errors raised by this package."""


class TwinsPresent(HellyArcError):
    """An operation requiring a twin-free graph was given a graph with twins."""


class UniversalPresent(HellyArcError):
    """An operation requiring a universal-free graph found a universal vertex."""


class NotAdjacent(HellyArcError):
    """A vertex pair that must be an edge is not adjacent."""


class NoEssentialEdge(HellyArcError):
    """The graph has edges but none of them is essential.

    This certifies that the graph is not a Helly circular-arc graph.
    """


class ResourceLimit(HellyArcError):
    """A configurable search or enumeration bound was exceeded."""


class NotSharp(HellyArcError):
    """An arc model expected to be sharp has coinciding extreme points."""


class OnePointArc(HellyArcError):
    """Flipping was requested for a one-point arc, which has no flip."""


class NoCommonPoint(HellyArcError):
    """The arcs selected for a clique have no common point."""


class NotSharpenable(HellyArcError):
    """The interval system is not isomorphic to any sharp interval system."""


class NotRealizable(HellyArcError):
    """No interval system has the given pairwise-intersection matrix."""


class NotAClique(HellyArcError):
    """The given vertex set is not a clique."""


class InternalInconsistency(HellyArcError):
    """An arc-relation combination that is impossible for Helly models occurred.

    Raised when the model-free matrix computation meets a relation pattern that
    cannot arise from any sharp Helly model; certifies a non-HCA input.
    """


class NotCircularArc(HellyArcError):
    """The hypergraph admits no arc representation."""


class GraphParseError(HellyArcError):
    """A graph input file is malformed."""


class NotHCA(HellyArcError):
    """The input graph is not a Helly circular-arc graph."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason
