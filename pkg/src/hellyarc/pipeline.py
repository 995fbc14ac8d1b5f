"""End-to-end construction of verified Helly arc representations.

For a twin-free, universal-free core the steps are: intersection matrix, one
base maxclique, the clique-flipped matrix, reconstruction of an interval
system with that matrix, sharpening, closing the line to a circle, and
flipping the clique arcs back.  Every success is certified by validation
against the input graph, so each failure path is a sound rejection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .arcs import (
    Arc,
    ArcModel,
    close_to_circle,
    flip,
    sharpen_interval_system,
    validate_model,
)
from .errors import (
    InternalInconsistency,
    NoEssentialEdge,
    NotHCA,
    NotRealizable,
    NotSharpenable,
)
from .graphs import (
    DEFAULT_CLIQUE_LIMIT,
    Graph,
    Maxclique,
    find_base_maxclique,
    twin_reduce,
)
from .matrix import flip_matrix, intersection_matrix, reconstruct_interval_system


@dataclass
class Provenance:
    """Intermediate artifacts kept for debugging and tests."""

    base_clique: Optional[Maxclique] = None
    m_alpha: Optional[np.ndarray] = None
    m_lambda: Optional[np.ndarray] = None
    sharpen_map: dict[int, int] = field(default_factory=dict)
    core_size: int = 0


@dataclass
class HellyRepresentation:
    """A validated Helly arc representation of a graph.

    ``assignment`` maps every vertex to an element of ``model``; twins share
    one element whose multiplicity is the twin-class size, and a universal
    class is mapped to the complete arc.
    """

    model: ArcModel
    assignment: dict[int, int]
    provenance: Provenance = field(default_factory=Provenance)


def helly_representation_core(
    g: Graph, clique_limit: int = DEFAULT_CLIQUE_LIMIT
) -> HellyRepresentation:
    """Verified Helly model on 2n points for a twin-free, universal-free graph."""
    n = g.n
    if n == 0:
        raise ValueError("core pipeline needs at least one vertex")
    try:
        m_alpha = intersection_matrix(g)
    except InternalInconsistency as exc:
        raise NotHCA(f"impossible relation pattern: {exc}") from exc
    try:
        base = find_base_maxclique(g)
    except NoEssentialEdge as exc:
        raise NotHCA("no essential edge") from exc
    m_lambda = flip_matrix(g, m_alpha, base)
    try:
        ivs = reconstruct_interval_system(m_lambda)
    except NotRealizable as exc:
        raise NotHCA(f"flipped matrix is not interval-realizable: {exc}") from exc
    try:
        sharp, point_map = sharpen_interval_system(ivs)
    except NotSharpenable as exc:
        raise NotHCA(f"interval system cannot be sharpened: {exc}") from exc
    circle = close_to_circle(sharp)
    model = flip(circle, set(base.members))
    assignment = {v: v for v in range(n)}
    report = validate_model(g, model, assignment, clique_limit=clique_limit)
    if not report.ok:
        raise NotHCA("final validation failed: " + "; ".join(report.problems[:3]))
    assert model.m == 2 * n
    return HellyRepresentation(
        model=model,
        assignment=assignment,
        provenance=Provenance(
            base_clique=base,
            m_alpha=m_alpha,
            m_lambda=m_lambda,
            sharpen_map=point_map,
            core_size=n,
        ),
    )


def helly_representation(
    g: Graph, clique_limit: int = DEFAULT_CLIQUE_LIMIT
) -> HellyRepresentation:
    """Verified Helly model for an arbitrary graph, via twin reduction.

    The core model is lifted by sharing each element among its twin class with
    matching multiplicity; a removed universal class is mapped to the complete
    arc.  Cliques and the empty graph, whose core is empty, are handled
    directly on a one-point circle.
    """
    red = twin_reduce(g)
    if red.core.n == 0:
        if g.n == 0:
            model = ArcModel(1, {})
            rep = HellyRepresentation(model=model, assignment={})
        else:
            # g is a complete graph: one maxclique, everyone on the complete arc
            model = ArcModel(1, {0: Arc(1, 1)}, {0: g.n})
            rep = HellyRepresentation(
                model=model, assignment={v: 0 for v in range(g.n)}
            )
        report = validate_model(g, rep.model, rep.assignment, clique_limit=clique_limit)
        if not report.ok:
            raise NotHCA("degenerate model failed validation: " + "; ".join(report.problems))
        return rep

    core_rep = helly_representation_core(red.core, clique_limit=clique_limit)
    arcs = dict(core_rep.model.arcs)
    mult = {cv: len(red.lift[cv]) for cv in range(red.core.n)}
    assignment: dict[int, int] = {}
    for cv, cls in enumerate(red.lift):
        for v in cls:
            assignment[v] = cv
    if red.universal_class is not None:
        uid = red.core.n
        arcs[uid] = Arc(1, core_rep.model.m)
        mult[uid] = len(red.classes[red.universal_class])
        for v in red.classes[red.universal_class]:
            assignment[v] = uid
    model = ArcModel(core_rep.model.m, arcs, mult)
    report = validate_model(g, model, assignment, clique_limit=clique_limit)
    if not report.ok:
        raise NotHCA("lifted model failed validation: " + "; ".join(report.problems[:3]))
    return HellyRepresentation(
        model=model, assignment=assignment, provenance=core_rep.provenance
    )
