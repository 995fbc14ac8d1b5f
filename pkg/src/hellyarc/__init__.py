"""Helly circular-arc graphs: recognition, canonical models, isomorphism."""

from .arcs import (
    Arc,
    ArcModel,
    ArcRelationWitness,
    ValidationReport,
    arc_relation,
    close_to_circle,
    cut_to_line,
    flip,
    sharpen_interval_system,
    validate_model,
)
from .canon import (
    CanonicalForm,
    Hypergraph,
    bundle_hypergraph,
    canonical_arc_model,
    canonical_representation,
    isomorphism,
    maxcliques_from_model,
)
from .errors import (
    GraphParseError,
    HellyArcError,
    InternalInconsistency,
    NoCommonPoint,
    NoEssentialEdge,
    NotAClique,
    NotAdjacent,
    NotCircularArc,
    NotHCA,
    NotRealizable,
    NotSharp,
    NotSharpenable,
    OnePointArc,
    ResourceLimit,
    TwinsPresent,
    UniversalPresent,
)
from .graphs import (
    Graph,
    Maxclique,
    PairRelation,
    TwinReduction,
    bundle_relation,
    enumerate_maxcliques,
    find_base_maxclique,
    is_essential_edge,
    meet_subset,
    twin_reduce,
)
from .matrix import flip_matrix, intersection_matrix, reconstruct_interval_system
from .pipeline import HellyRepresentation, helly_representation, helly_representation_core

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcModel",
    "ArcRelationWitness",
    "CanonicalForm",
    "Graph",
    "GraphParseError",
    "HellyArcError",
    "HellyRepresentation",
    "Hypergraph",
    "InternalInconsistency",
    "Maxclique",
    "NoCommonPoint",
    "NoEssentialEdge",
    "NotAClique",
    "NotAdjacent",
    "NotCircularArc",
    "NotHCA",
    "NotRealizable",
    "NotSharp",
    "NotSharpenable",
    "OnePointArc",
    "PairRelation",
    "ResourceLimit",
    "TwinReduction",
    "TwinsPresent",
    "UniversalPresent",
    "ValidationReport",
    "arc_relation",
    "bundle_hypergraph",
    "bundle_relation",
    "canonical_arc_model",
    "canonical_representation",
    "close_to_circle",
    "cut_to_line",
    "enumerate_maxcliques",
    "find_base_maxclique",
    "flip",
    "flip_matrix",
    "helly_representation",
    "helly_representation_core",
    "intersection_matrix",
    "is_essential_edge",
    "isomorphism",
    "maxcliques_from_model",
    "meet_subset",
    "reconstruct_interval_system",
    "sharpen_interval_system",
    "twin_reduce",
    "validate_model",
]
