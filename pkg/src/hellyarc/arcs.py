"""Discrete circles, arcs and interval systems, flipping, sharpening, validation.

Points of a circle of size m are 1..m with successor m -> 1.  An arc [a, b]
consists of the points on the directed path from a to b, inclusive, so
|[a, b]| = ((b - a) mod m) + 1.  The pair (a, pred(a)) encodes the complete
arc with designated extreme points, and (a, a) is a one-point arc.  An
interval system is a model whose arcs never cross the wrap position m -> 1;
the full interval [1, m] doubles as the complete arc with extremes 1 and m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .errors import (
    NoCommonPoint,
    NotSharp,
    NotSharpenable,
    OnePointArc,
)
from .graphs import Graph, PairRelation, enumerate_maxcliques


@dataclass(frozen=True)
class Arc:
    start: int
    end: int


class ArcModel:
    """A family of arcs on a discrete circle, keyed by element id.

    ``multiplicity`` defaults to 1 per element; twin classes of a graph share
    one element whose multiplicity is the class size.  m = 0 is permitted only
    for the empty model.
    """

    __slots__ = ("m", "arcs", "multiplicity")

    def __init__(
        self,
        m: int,
        arcs: Mapping[int, Arc],
        multiplicity: Optional[Mapping[int, int]] = None,
    ):
        if m < 0:
            raise ValueError("circle size must be nonnegative")
        if m == 0 and arcs:
            raise ValueError("empty circle cannot carry arcs")
        for e, a in arcs.items():
            if not (1 <= a.start <= m and 1 <= a.end <= m):
                raise ValueError(f"arc {a} of element {e} outside circle of size {m}")
        self.m = m
        self.arcs = dict(arcs)
        if multiplicity is None:
            self.multiplicity = {e: 1 for e in arcs}
        else:
            mult = dict(multiplicity)
            for e in arcs:
                mult.setdefault(e, 1)
            if any(c < 1 for c in mult.values()):
                raise ValueError("multiplicities must be positive")
            self.multiplicity = mult

    def arc_of(self, e: int) -> Arc:
        return self.arcs[e]

    def elements(self) -> list[int]:
        return sorted(self.arcs)

    def copy(self) -> "ArcModel":
        return ArcModel(self.m, self.arcs, self.multiplicity)

    def is_interval_system(self) -> bool:
        return all(a.start <= a.end for a in self.arcs.values())

    def is_sharp(self) -> bool:
        """Every point is an extreme point of exactly one arc."""
        if any(a.start == a.end for a in self.arcs.values()):
            return False
        extremes = []
        for a in self.arcs.values():
            extremes.append(a.start)
            extremes.append(a.end)
        return len(extremes) == len(set(extremes)) and len(extremes) == self.m

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ArcModel)
            and self.m == other.m
            and self.arcs == other.arcs
            and self.multiplicity == other.multiplicity
        )

    def __repr__(self) -> str:
        return f"ArcModel(m={self.m}, arcs={len(self.arcs)})"


def arc_length(m: int, a: Arc) -> int:
    return ((a.end - a.start) % m) + 1


def arc_contains(m: int, a: Arc, p: int) -> bool:
    return (p - a.start) % m <= (a.end - a.start) % m


def arc_points(m: int, a: Arc) -> list[int]:
    return [((a.start - 1 + i) % m) + 1 for i in range(arc_length(m, a))]


def arc_mask(m: int, a: Arc) -> int:
    """Points of the arc as a bitmask (bit p-1 for point p)."""
    ln = arc_length(m, a)
    s = a.start - 1
    if s + ln <= m:
        return ((1 << ln) - 1) << s
    head = m - s
    return (((1 << head) - 1) << s) | ((1 << (ln - head)) - 1)


def successor(m: int, p: int) -> int:
    return p % m + 1


def predecessor(m: int, p: int) -> int:
    return (p - 2) % m + 1


@dataclass(frozen=True)
class ArcRelationWitness:
    """Outcome of relating two arcs; ``left`` names the strict-overlap side.

    For a strict overlap, ``left`` is the element whose arc overlaps the other
    on the left (its end point lies in the other arc).
    """

    relation: PairRelation
    left: Optional[int] = None


def _require_sharp(model: ArcModel) -> None:
    if not model.is_sharp():
        raise NotSharp("model is not sharp")


def arc_relation(model: ArcModel, x: int, y: int) -> ArcRelationWitness:
    """Classify two arcs of a sharp model into the five pair relations."""
    _require_sharp(model)
    if x == y:
        raise ValueError("arc_relation needs two distinct elements")
    m = model.m
    a, b = model.arcs[x], model.arcs[y]
    ma, mb = arc_mask(m, a), arc_mask(m, b)
    full = (1 << m) - 1
    if ma & mb == 0:
        return ArcRelationWitness(PairRelation.DISJOINT)
    if ma == full and mb == full:
        # two complete arcs with designated extremes always form a circle cover
        return ArcRelationWitness(PairRelation.CIRCLE_COVER)
    if ma & ~mb == 0:
        return ArcRelationWitness(PairRelation.FIRST_INSIDE_SECOND)
    if mb & ~ma == 0:
        return ArcRelationWitness(PairRelation.SECOND_INSIDE_FIRST)
    # circle cover is the extreme-point pattern, not merely a full union: two
    # arcs may cover the circle yet overlap in a single stretch
    if arc_contains(m, a, b.start) and arc_contains(m, a, b.end):
        assert arc_contains(m, b, a.start) and arc_contains(m, b, a.end)
        assert ma | mb == full
        return ArcRelationWitness(PairRelation.CIRCLE_COVER)
    a_end_in_b = arc_contains(m, b, a.end)
    b_end_in_a = arc_contains(m, a, b.end)
    assert a_end_in_b != b_end_in_a
    return ArcRelationWitness(PairRelation.STRICT_OVERLAP, left=x if a_end_in_b else y)


def flip(model: ArcModel, elems: Iterable[int]) -> ArcModel:
    """Replace each selected arc [a, b] by [b, a]; an involution on sharp models.

    Two-point arcs become complete arcs with designated extremes and vice
    versa.  Cardinalities satisfy |flip(A)| + |A| = m + 2.
    """
    chosen = set(elems)
    missing = chosen - set(model.arcs)
    if missing:
        raise KeyError(f"unknown elements {sorted(missing)}")
    new_arcs = {}
    for e, a in model.arcs.items():
        if e in chosen:
            if a.start == a.end:
                raise OnePointArc(f"element {e} has a one-point arc")
            new_arcs[e] = Arc(a.end, a.start)
        else:
            new_arcs[e] = a
    return ArcModel(model.m, new_arcs, model.multiplicity)


def common_intersection_mask(model: ArcModel, elems: Iterable[int]) -> int:
    out = (1 << model.m) - 1
    for e in elems:
        out &= arc_mask(model.m, model.arcs[e])
    return out


def cut_to_line(model: ArcModel, clique_arcs: Iterable[int]) -> ArcModel:
    """Flip the clique arcs and relabel so the result is an interval system.

    Picks the smallest start point x of a clique arc lying in the common
    intersection, lets y be its successor, and cuts the circle between x and
    y; after flipping, no arc crosses the cut except the flip of a two-point
    arc [x, y], which becomes the full interval [1, m].
    """
    _require_sharp(model)
    clique = sorted(set(clique_arcs))
    if not clique:
        raise ValueError("clique_arcs must be nonempty")
    m = model.m
    common = common_intersection_mask(model, clique)
    if common == 0:
        raise NoCommonPoint("clique arcs have no common point")
    # points covered by arcs outside the clique are not usable as cut points;
    # for a maxclique of a Helly model none of the common points are covered
    outside = 0
    for e in model.arcs:
        if e not in clique:
            outside |= arc_mask(m, model.arcs[e])
    candidates = [
        model.arcs[e].start
        for e in clique
        if (common >> (model.arcs[e].start - 1)) & 1
        and not (outside >> (model.arcs[e].start - 1)) & 1
    ]
    if not candidates:
        raise NoCommonPoint(
            "no clique arc starts at a common point free of outside arcs; "
            "the clique is not a maximal family of the model"
        )
    x = min(candidates)
    y = successor(m, x)

    def relabel(p: int) -> int:
        return ((p - y) % m) + 1

    flipped = flip(model, clique)
    new_arcs = {e: Arc(relabel(a.start), relabel(a.end)) for e, a in flipped.arcs.items()}
    out = ArcModel(m, new_arcs, model.multiplicity)
    assert out.is_interval_system()
    return out


def close_to_circle(ivs: ArcModel) -> ArcModel:
    """Reinterpret an interval system as a model on the circle.

    With the arc encoding used here this is the identity on coordinates: the
    full interval [1, m] already denotes the complete arc with designated
    extreme points 1 and m.
    """
    if not ivs.is_interval_system():
        raise ValueError("input is not an interval system")
    return ivs.copy()


def sharpen_interval_system(ivs: ArcModel) -> tuple[ArcModel, dict[int, int]]:
    """Rebuild an interval system as a sharp one, with a point bijection.

    Three steps, in this order: delete interior points (extreme for no
    interval); for each shared start point give the non-longest intervals
    fresh start points just after it, in decreasing-length order; symmetrically
    for shared end points.  The result lives on exactly 2k points.  The
    returned map sends covered points of the input onto points of the output
    so that every interval maps onto its counterpart; if no such bijection
    exists the input was not isomorphic to a sharp system and NotSharpenable
    is raised.
    """
    if not ivs.is_interval_system():
        raise NotSharpenable("input is not an interval system")
    k = len(ivs.arcs)
    if k == 0:
        return ArcModel(0, {}), {}
    for e, a in ivs.arcs.items():
        if a.start == a.end:
            raise NotSharpenable(f"one-point interval at element {e}")
    starts: dict[int, list[int]] = {}
    ends: dict[int, list[int]] = {}
    for e, a in ivs.arcs.items():
        starts.setdefault(a.start, []).append(e)
        ends.setdefault(a.end, []).append(e)
    if set(starts) & set(ends):
        p = min(set(starts) & set(ends))
        raise NotSharpenable(f"point {p} is both a start and an end point")
    seen_arcs = set()
    for a in ivs.arcs.values():
        if (a.start, a.end) in seen_arcs:
            raise NotSharpenable("duplicate intervals cannot be sharpened")
        seen_arcs.add((a.start, a.end))

    # Ordering keys: original point p is (p, 0); fresh start points go right
    # after their shared start, fresh end points right before their shared end.
    key_start: dict[int, tuple[int, int]] = {}
    key_end: dict[int, tuple[int, int]] = {}
    for p, elems in starts.items():
        elems = sorted(elems, key=lambda e: (-arc_length(ivs.m, ivs.arcs[e]), e))
        for rank, e in enumerate(elems):
            key_start[e] = (p, rank)
    for p, elems in ends.items():
        elems = sorted(elems, key=lambda e: (-arc_length(ivs.m, ivs.arcs[e]), e))
        for rank, e in enumerate(elems):
            key_end[e] = (p, -rank)

    all_keys = sorted(set(key_start.values()) | set(key_end.values()))
    assert len(all_keys) == 2 * k
    pos = {key: i + 1 for i, key in enumerate(all_keys)}
    new_arcs = {e: Arc(pos[key_start[e]], pos[key_end[e]]) for e in ivs.arcs}
    sharp = ArcModel(2 * k, new_arcs, ivs.multiplicity)
    if not (sharp.is_interval_system() and sharp.is_sharp()):
        raise NotSharpenable("rebuilt system failed the sharpness check")

    point_map = _interval_system_point_bijection(ivs, sharp)
    if point_map is None:
        raise NotSharpenable("no point bijection maps the input onto the sharp system")
    return sharp, point_map


def _interval_system_point_bijection(
    src: ArcModel, dst: ArcModel
) -> Optional[dict[int, int]]:
    """A bijection of covered points carrying each src interval onto dst's.

    Group points by the set of elements covering them; any group-wise matching
    realizes the element-respecting hypergraph isomorphism, and one exists iff
    all group sizes agree.
    """
    def profiles(model: ArcModel) -> dict[frozenset, list[int]]:
        out: dict[frozenset, list[int]] = {}
        for p in range(1, model.m + 1):
            cover = frozenset(
                e for e, a in model.arcs.items() if arc_contains(model.m, a, p)
            )
            if cover:
                out.setdefault(cover, []).append(p)
        return out

    src_prof = profiles(src)
    dst_prof = profiles(dst)
    if set(src_prof) != set(dst_prof):
        return None
    mapping: dict[int, int] = {}
    for cover, src_pts in src_prof.items():
        dst_pts = dst_prof[cover]
        if len(src_pts) != len(dst_pts):
            return None
        for a, b in zip(src_pts, dst_pts):
            mapping[a] = b
    # post-hoc check: each interval maps onto its counterpart
    for e, a in src.arcs.items():
        image = {mapping[p] for p in arc_points(src.m, a)}
        if image != set(arc_points(dst.m, dst.arcs[e])):
            return None
    return mapping


@dataclass
class ValidationReport:
    ok: bool
    problems: list[str] = field(default_factory=list)


def validate_model(
    g: Graph,
    model: ArcModel,
    assignment: Mapping[int, int],
    clique_limit: int = 100_000,
) -> ValidationReport:
    """Certify that (model, assignment) is a Helly arc representation of g.

    Checks that adjacency coincides with arc intersection (a shared element
    counts as intersecting), that element multiplicities equal the number of
    assigned vertices, and that the arcs of every maxclique have a common
    point.  Failures are reported, never raised.
    """
    problems: list[str] = []
    for v in range(g.n):
        if v not in assignment:
            problems.append(f"vertex {v} has no assigned element")
    if problems:
        return ValidationReport(False, problems)

    masks = {e: arc_mask(model.m, a) for e, a in model.arcs.items()}
    for v in range(g.n):
        if assignment[v] not in model.arcs:
            problems.append(f"vertex {v} assigned to unknown element {assignment[v]}")
    if problems:
        return ValidationReport(False, problems)

    used: dict[int, int] = {}
    for v in range(g.n):
        used[assignment[v]] = used.get(assignment[v], 0) + 1
    for e in model.arcs:
        have = used.get(e, 0)
        want = model.multiplicity.get(e, 1)
        if have == 0:
            problems.append(f"element {e} is not assigned to any vertex")
        elif have != want:
            problems.append(
                f"element {e} has multiplicity {want} but {have} assigned vertices"
            )

    for u in range(g.n):
        for v in range(u + 1, g.n):
            eu, ev = assignment[u], assignment[v]
            meet = eu == ev or (masks[eu] & masks[ev]) != 0
            if meet != g.adjacent(u, v):
                if meet:
                    problems.append(f"arcs of non-adjacent {u},{v} intersect")
                else:
                    problems.append(f"arcs of adjacent {u},{v} are disjoint")

    for mc in enumerate_maxcliques(g, limit=clique_limit):
        elems = sorted({assignment[v] for v in mc})
        common = (1 << model.m) - 1 if model.m else 0
        for e in elems:
            common &= masks[e]
        if common == 0 and len(mc) > 0:
            problems.append(
                "maxclique {" + ",".join(map(str, mc)) + "} has no common point"
            )

    return ValidationReport(not problems, problems)
