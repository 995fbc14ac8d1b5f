"""Simple graphs, twin reduction, maxcliques, and neighborhood-level predicates.

Vertices are dense integers 0..n-1.  Closed neighborhoods are kept as integer
bitmasks, which makes the containment tests behind the pair classification
cheap even for a few hundred vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    NoEssentialEdge,
    NotAdjacent,
    ResourceLimit,
    TwinsPresent,
    UniversalPresent,
)

DEFAULT_CLIQUE_LIMIT = 100_000


class PairRelation(Enum):
    """How the arcs of two distinct vertices relate in a sharp Helly model.

    On twin-free, universal-free graphs the five outcomes are mutually
    exclusive and total; they are decided from closed neighborhoods alone,
    without building any model.
    """

    DISJOINT = "disjoint"
    FIRST_INSIDE_SECOND = "first_inside_second"
    SECOND_INSIDE_FIRST = "second_inside_first"
    CIRCLE_COVER = "circle_cover"
    STRICT_OVERLAP = "strict_overlap"


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph; adjacency stored as per-vertex bitmasks."""

    __slots__ = ("n", "_adj", "labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = adj
        self.labels = list(labels) if labels is not None else None

    def adjacent(self, u: int, v: int) -> bool:
        return (self._adj[u] >> v) & 1 == 1

    def adj_mask(self, v: int) -> int:
        """Open neighborhood of ``v`` as a bitmask."""
        return self._adj[v]

    def closed_mask(self, v: int) -> int:
        """Closed neighborhood N[v] as a bitmask."""
        return self._adj[v] | (1 << v)

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            for off in bits(rest):
                out.append((u, u + 1 + off))
        return out

    def edge_count(self) -> int:
        return sum(self._adj[v].bit_count() for v in range(self.n)) // 2

    def is_clique(self, mask: int) -> bool:
        """True iff the vertices of ``mask`` are pairwise adjacent."""
        for v in bits(mask):
            if mask & ~self.closed_mask(v):
                return False
        return True

    def label_of(self, v: int) -> str:
        if self.labels is not None:
            return self.labels[v]
        return str(v)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


@dataclass(frozen=True)
class Maxclique:
    """An inclusion-maximal clique, members sorted."""

    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    def mask(self) -> int:
        m = 0
        for v in self.members:
            m |= 1 << v
        return m

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)


@dataclass(frozen=True)
class TwinReduction:
    """Quotient of a graph by the twin relation with the universal class removed.

    ``classes`` partitions the original vertex set into twin classes (ordered by
    smallest member).  ``universal_class`` indexes the class that is universal
    in the quotient, if any; it is not part of ``core``.  ``lift`` maps each
    core vertex back to its originating twin class.
    """

    classes: tuple[tuple[int, ...], ...]
    class_repr: tuple[int, ...]
    universal_class: Optional[int]
    core: Graph
    lift: tuple[tuple[int, ...], ...]


def twin_reduce(g: Graph) -> TwinReduction:
    """Partition into twin classes, form the quotient, drop the universal class.

    The quotient of any graph by the closed-neighborhood equivalence is
    twin-free, and a twin-free graph has at most one universal vertex; removing
    it leaves a core with no twins and no universal vertices.
    """
    by_mask: dict[int, list[int]] = {}
    for v in range(g.n):
        by_mask.setdefault(g.closed_mask(v), []).append(v)
    classes = sorted((tuple(vs) for vs in by_mask.values()), key=lambda c: c[0])
    reprs = tuple(c[0] for c in classes)
    k = len(classes)

    class_of = {}
    for i, c in enumerate(classes):
        for v in c:
            class_of[v] = i
    quot_edges = set()
    for i in range(k):
        u = reprs[i]
        for w in bits(g.adj_mask(u)):
            j = class_of[w]
            if j != i:
                quot_edges.add((min(i, j), max(i, j)))

    quot = Graph(k, quot_edges)
    universal = None
    for i in range(k):
        if quot.closed_mask(i) == quot.full_mask() and k > 0:
            universal = i
            break
    if universal is not None:
        keep = [i for i in range(k) if i != universal]
    else:
        keep = list(range(k))
    new_id = {old: new for new, old in enumerate(keep)}
    core_edges = [
        (new_id[a], new_id[b]) for a, b in quot_edges if a != universal and b != universal
    ]
    core = Graph(len(keep), core_edges)
    lift = tuple(classes[i] for i in keep)
    return TwinReduction(
        classes=tuple(classes),
        class_repr=reprs,
        universal_class=universal,
        core=core,
        lift=lift,
    )


def check_reduced(g: Graph) -> None:
    """Raise unless ``g`` is twin-free and universal-free."""
    seen: dict[int, int] = {}
    full = g.full_mask()
    for v in range(g.n):
        m = g.closed_mask(v)
        if m == full:
            raise UniversalPresent(f"vertex {v} is universal")
        if m in seen:
            raise TwinsPresent(f"vertices {seen[m]} and {v} are twins")
        seen[m] = v


def classify_pair(g: Graph, u: int, v: int) -> PairRelation:
    """Pair classification without precondition checks (internal fast path)."""
    if not g.adjacent(u, v):
        return PairRelation.DISJOINT
    nu = g.closed_mask(u)
    nv = g.closed_mask(v)
    if nu & ~nv == 0:
        return PairRelation.FIRST_INSIDE_SECOND
    if nv & ~nu == 0:
        return PairRelation.SECOND_INSIDE_FIRST
    if nu | nv == g.full_mask():
        only_u = nu & ~nv
        only_v = nv & ~nu
        if all(g.closed_mask(w) & ~nu == 0 for w in bits(only_u)) and all(
            g.closed_mask(w) & ~nv == 0 for w in bits(only_v)
        ):
            return PairRelation.CIRCLE_COVER
    return PairRelation.STRICT_OVERLAP


def bundle_relation(g: Graph, u: int, v: int) -> PairRelation:
    """Relate the maxclique bundles of ``u`` and ``v`` through neighborhoods.

    Containment of bundles equals containment of closed neighborhoods, and the
    bundles cover the whole maxclique set exactly when the three neighborhood
    conditions of the circle-cover test hold.  Requires a twin-free,
    universal-free graph, where the outcome also equals the geometric relation
    of the two arcs in the (never materialized) sharpened bundle model.
    """
    if u == v:
        raise ValueError("bundle_relation needs two distinct vertices")
    check_reduced(g)
    return classify_pair(g, u, v)


def meet_subset(g: Graph, u: int, v: int, w: int) -> bool:
    """True iff N[u] ∩ N[v] ⊆ N[w], for an edge uv and a third vertex w."""
    if len({u, v, w}) != 3:
        raise ValueError("meet_subset needs three pairwise distinct vertices")
    if not g.adjacent(u, v):
        raise NotAdjacent(f"({u},{v}) is not an edge")
    return (g.closed_mask(u) & g.closed_mask(v)) & ~g.closed_mask(w) == 0


def is_essential_edge(g: Graph, u: int, v: int) -> Optional[Maxclique]:
    """Return N[u] ∩ N[v] as a maxclique iff the edge lies in a unique maxclique.

    The intersection is a clique exactly when uv is essential, and then it is
    the one maxclique containing uv.
    """
    if not g.adjacent(u, v):
        raise NotAdjacent(f"({u},{v}) is not an edge")
    meet = g.closed_mask(u) & g.closed_mask(v)
    if g.is_clique(meet):
        return Maxclique(tuple(bits(meet)))
    return None


def find_base_maxclique(g: Graph) -> Maxclique:
    """One maxclique of a twin-free, universal-free graph, found deterministically.

    Scans edges (u,v), u<v, in lexicographic order and returns the maxclique of
    the first essential edge.  An edgeless graph yields the singleton of vertex
    0, which is a maxclique there.  Raising NoEssentialEdge certifies the graph
    is not HCA.
    """
    if g.n == 0:
        raise ValueError("empty graph has no maxclique")
    check_reduced(g)
    if g.edge_count() == 0:
        return Maxclique((0,))
    for u in range(g.n):
        rest = g.adj_mask(u) >> (u + 1)
        for off in bits(rest):
            v = u + 1 + off
            mc = is_essential_edge(g, u, v)
            if mc is not None:
                return mc
    raise NoEssentialEdge("graph has edges but no essential edge")


def enumerate_maxcliques(g: Graph, limit: int = DEFAULT_CLIQUE_LIMIT) -> list[Maxclique]:
    """All maxcliques, via pivoting Bron-Kerbosch, in deterministic sorted order.

    Intended as validation and oracle infrastructure at desk scale.  Raises
    ResourceLimit once more than ``limit`` cliques have been collected.
    """
    if g.n == 0:
        return []
    adj = g._adj
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            found.append(r)
            if len(found) > limit:
                raise ResourceLimit(f"more than {limit} maxcliques")
            return
        # pivot: vertex of p|x with most neighbors inside p
        pivot, best = -1, -1
        for cand in bits(p | x):
            deg = (adj[cand] & p).bit_count()
            if deg > best:
                pivot, best = cand, deg
        for v in bits(p & ~adj[pivot]):
            vb = 1 << v
            expand(r | vb, p & adj[v], x & adj[v])
            p &= ~vb
            x |= vb

    expand(0, g.full_mask(), 0)
    cliques = [Maxclique(tuple(bits(m))) for m in found]
    cliques.sort(key=lambda c: c.members)
    return cliques


def lift_maxcliques(red: TwinReduction, core_cliques: Iterable[Maxclique]) -> list[Maxclique]:
    """Expand core maxcliques back to the original graph.

    Each core vertex is replaced by its twin class; the universal class, if
    present, joins every maxclique.  For an empty core the universal class
    itself (if any) is the unique maxclique.
    """
    univ: tuple[int, ...] = ()
    if red.universal_class is not None:
        univ = red.classes[red.universal_class]
    out = []
    for mc in core_cliques:
        members: list[int] = list(univ)
        for cv in mc:
            members.extend(red.lift[cv])
        out.append(Maxclique(tuple(members)))
    if not out and univ:
        out.append(Maxclique(univ))
    out.sort(key=lambda c: c.members)
    return out
