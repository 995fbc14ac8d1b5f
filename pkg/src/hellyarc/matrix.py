"""Model-free matrix computations and interval-system reconstruction.

The pairwise-intersection matrix of the sharpened bundle model is a function
of the graph alone; it is computed here purely from neighborhood predicates.
Flipping the arcs of a clique transforms that matrix entrywise through fixed
case tables.  Since an interval system is determined by its matrix up to
isomorphism, a realization can then be rebuilt and self-checked.
"""

from __future__ import annotations

import numpy as np

from .arcs import Arc, ArcModel
from .errors import InternalInconsistency, NotAClique, NotRealizable
from .graphs import (
    Graph,
    Maxclique,
    PairRelation,
    check_reduced,
    classify_pair,
)

_REL_CODE = {
    PairRelation.DISJOINT: 0,
    PairRelation.FIRST_INSIDE_SECOND: 1,
    PairRelation.SECOND_INSIDE_FIRST: 2,
    PairRelation.CIRCLE_COVER: 3,
    PairRelation.STRICT_OVERLAP: 4,
}

# Extreme points of u's arc inside v's arc, used for the diagonal: an arc
# inside contributes 2, a circle-cover partner contributes 2, a strict
# overlap contributes 1, anything else contributes 0.
_DIAG_CONTRIB = np.array([0, 2, 0, 2, 1], dtype=np.int64)

# Contribution of a third arc w to |arc(u) ∩ arc(v)| when u,v strictly
# overlap, indexed by (relation of w to u, relation of w to v).  -1 marks the
# combination (inside one, circle cover with the other), impossible for any
# sharp Helly model; -2 marks (strict overlap, strict overlap), which needs
# the meet_subset test.
_SO_TABLE = np.array(
    [
        # w vs v:  D   FIS  SIF  CC  SO      w vs u:
        [0, 0, 0, 0, 0],  # disjoint
        [0, 2, 0, -1, 1],  # w inside u
        [0, 0, 0, 0, 0],  # w contains u
        [0, -1, 0, 2, 1],  # circle cover with u
        [0, 1, 0, 1, -2],  # strict overlap with u
    ],
    dtype=np.int64,
)


def relation_table(g: Graph) -> np.ndarray:
    """Pairwise relation codes for all ordered vertex pairs of a reduced graph."""
    check_reduced(g)
    n = g.n
    rel = np.zeros((n, n), dtype=np.int8)
    for u in range(n):
        for v in range(u + 1, n):
            r = classify_pair(g, u, v)
            rel[u, v] = _REL_CODE[r]
            if r is PairRelation.FIRST_INSIDE_SECOND:
                rel[v, u] = _REL_CODE[PairRelation.SECOND_INSIDE_FIRST]
            elif r is PairRelation.SECOND_INSIDE_FIRST:
                rel[v, u] = _REL_CODE[PairRelation.FIRST_INSIDE_SECOND]
            else:
                rel[v, u] = rel[u, v]
    return rel


def intersection_matrix(g: Graph) -> np.ndarray:
    """Pairwise-intersection matrix of the sharpened bundle model, from g alone.

    The model lives on a circle of 2n points and is never constructed; every
    entry is derived from the pair relations and, for doubly strict overlaps,
    from the meet-containment predicate N[u] ∩ N[v] ⊆ N[w].
    """
    rel = relation_table(g)  # validates the preconditions
    n = g.n
    two_n = 2 * n
    M = np.zeros((n, n), dtype=np.int64)

    for v in range(n):
        # rel[v, v] is the disjoint code and contributes nothing
        M[v, v] = 2 + int(_DIAG_CONTRIB[rel[:, v]].sum())

    closed = [g.closed_mask(v) for v in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            code = rel[u, v]
            if code == 0:
                val = 0
            elif code == 1:
                val = M[u, u]
            elif code == 2:
                val = M[v, v]
            elif code == 3:
                val = M[u, u] + M[v, v] - two_n
            else:
                contrib = _SO_TABLE[rel[:, u], rel[:, v]]
                contrib[u] = 0
                contrib[v] = 0
                if (contrib == -1).any():
                    raise InternalInconsistency(
                        f"impossible relation pattern around edge ({u},{v})"
                    )
                val = 2 + int(contrib[contrib >= 0].sum())
                meet = closed[u] & closed[v]
                for w in np.nonzero(contrib == -2)[0]:
                    if meet & ~closed[w]:
                        val += 1
            M[u, v] = val
            M[v, u] = val
    return M


def apply_flip_tables(
    M: np.ndarray, members: set[int], rel: np.ndarray, n: int
) -> np.ndarray:
    """Apply the clique-flip case tables to M, given a relation code table.

    ``rel`` must describe the pair relations of the model whose matrix M is;
    flipping changes those relations, so a second application needs the table
    produced by :func:`flip_relation_table`, not the original one.
    """
    t = 2 * n + 2
    in_c = [v in members for v in range(n)]
    out = np.array(M, dtype=np.int64, copy=True)
    for v in range(n):
        if in_c[v]:
            out[v, v] = t - M[v, v]

    def entry(u: int, v: int) -> int:
        # u flipped; relation codes read as (arc of u) versus (arc of v)
        code = rel[u, v]
        if not in_c[v]:
            if code == 0:
                return int(M[v, v])
            if code == 1:
                return int(M[v, v] - M[u, u]) + 2
            if code == 2:
                return 0
            if code == 3:
                return t - int(M[u, u])
            return int(M[v, v] - M[u, v]) + 1
        else:
            if code == 0:
                return t + 2 - int(M[u, u] + M[v, v])
            if code == 1:
                return t - int(M[v, v])
            if code == 2:
                return t - int(M[u, u])
            if code == 3:
                return 0
            return t + int(M[u, v] - M[u, u] - M[v, v])

    for u in range(n):
        for v in range(u + 1, n):
            if in_c[u]:
                val = entry(u, v)
            elif in_c[v]:
                val = entry(v, u)
            else:
                continue
            out[u, v] = val
            out[v, u] = val
    return out


def flip_relation_table(rel: np.ndarray, members: set[int], n: int) -> np.ndarray:
    """Pair relations of the model after flipping the arcs of ``members``.

    In a sharp model, flipping both arcs swaps the containments and exchanges
    circle covers with disjointness; flipping only the first arc turns
    containment of the first into a circle cover, containment of the second
    into disjointness, and conversely.  Strict overlaps stay strict overlaps.
    """
    both = {0: 3, 1: 2, 2: 1, 3: 0, 4: 4}
    first = {0: 2, 1: 3, 2: 0, 3: 1, 4: 4}
    second = {0: 1, 1: 0, 2: 3, 3: 2, 4: 4}
    out = np.array(rel, copy=True)
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if u in members and v in members:
                out[u, v] = both[int(rel[u, v])]
            elif u in members:
                out[u, v] = first[int(rel[u, v])]
            elif v in members:
                out[u, v] = second[int(rel[u, v])]
    return out


def flip_matrix(g: Graph, M: np.ndarray, C: Maxclique) -> np.ndarray:
    """Matrix of the model with the arcs of clique C flipped, by case tables.

    Expects M = intersection_matrix(g); the pair relations are re-derived from
    the graph, matching the classification that produced M.
    """
    if not g.is_clique(C.mask()):
        raise NotAClique(f"{C.members} is not a clique")
    rel = relation_table(g)
    return apply_flip_tables(M, set(C.members), rel, g.n)


# ---------------------------------------------------------------------------
# Reconstruction of an interval system from its pairwise-intersection matrix.


_PLACEMENT_BUDGET = 200_000


def reconstruct_interval_system(M: np.ndarray) -> ArcModel:
    """Build an interval system whose matrix equals M, or raise NotRealizable.

    Elements are the row indices.  Relations are read off the matrix (zero
    means disjoint, an entry equal to a diagonal means containment, anything
    else is an overlap of known size); overlap-connected components are laid
    out left to right by a backtracking placement that is rigid up to
    reflection, contained components are nested into the unique slot matching
    their container signature, and the result is relabelled densely so that
    every point is covered.  A final self-check recomputes the matrix; any
    discrepancy is reported as NotRealizable.
    """
    M = np.asarray(M, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotRealizable("matrix is not square")
    k = M.shape[0]
    if k == 0:
        return ArcModel(0, {})
    if not np.array_equal(M, M.T):
        raise NotRealizable("matrix is not symmetric")
    sizes = np.diag(M)
    if (sizes < 1).any():
        raise NotRealizable("diagonal entries must be at least 1")
    for u in range(k):
        for v in range(k):
            if u != v and not (0 <= M[u, v] <= min(sizes[u], sizes[v])):
                raise NotRealizable(f"entry ({u},{v}) out of range")

    # collapse elements with identical rows: they must share one interval
    groups: dict[bytes, list[int]] = {}
    for u in range(k):
        groups.setdefault(M[u].tobytes(), []).append(u)
    reps = sorted(g[0] for g in groups.values())
    rep_of = {}
    for g_members in groups.values():
        for u in g_members:
            rep_of[u] = g_members[0]
    for u in range(k):
        for v in range(u + 1, k):
            if rep_of[u] != rep_of[v] and M[u, v] == sizes[u] == sizes[v]:
                raise NotRealizable(
                    f"elements {u},{v} claim equal intervals but differ elsewhere"
                )

    pos = _place_all(M, sizes, reps)

    arcs = {}
    for u in range(k):
        r = rep_of[u]
        arcs[u] = (pos[r], pos[r] + int(sizes[r]) - 1)

    # dense relabel over covered positions only
    covered = sorted({p for s, e in arcs.values() for p in range(s, e + 1)})
    dense = {p: i + 1 for i, p in enumerate(covered)}
    final = {u: Arc(dense[s], dense[e]) for u, (s, e) in arcs.items()}
    model = ArcModel(len(covered), final)

    check = matrix_of_interval_system(model, list(range(k)))
    if not np.array_equal(check, M):
        raise NotRealizable("self-check failed: reconstructed matrix differs")
    return model


def matrix_of_interval_system(model: ArcModel, order: list[int]) -> np.ndarray:
    """Pairwise-intersection matrix of an interval system, rows in given order."""
    k = len(order)
    out = np.zeros((k, k), dtype=np.int64)
    spans = []
    for e in order:
        a = model.arcs[e]
        if a.start > a.end:
            raise ValueError("not an interval system")
        spans.append((a.start, a.end))
    for i in range(k):
        s1, e1 = spans[i]
        out[i, i] = e1 - s1 + 1
        for j in range(i + 1, k):
            s2, e2 = spans[j]
            inter = min(e1, e2) - max(s1, s2) + 1
            out[i, j] = out[j, i] = max(inter, 0)
    return out


def _interval_overlap(s1: int, e1: int, s2: int, e2: int) -> int:
    return max(0, min(e1, e2) - max(s1, s2) + 1)


def _place_all(M: np.ndarray, sizes: np.ndarray, reps: list[int]) -> dict[int, int]:
    """Absolute start positions for representative elements."""
    rep_set = set(reps)

    def rel(u: int, v: int) -> str:
        val = int(M[u, v])
        if val == 0:
            return "disjoint"
        if val == sizes[u]:
            return "u_in_v"
        if val == sizes[v]:
            return "v_in_u"
        return "overlap"

    # overlap components over representatives
    comp_of: dict[int, int] = {}
    comps: list[list[int]] = []
    for u in reps:
        if u in comp_of:
            continue
        stack, comp = [u], []
        comp_of[u] = len(comps)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in reps:
                if y != x and y not in comp_of and rel(min(x, y), max(x, y)) == "overlap":
                    comp_of[y] = len(comps)
                    stack.append(y)
        comps.append(sorted(comp))

    local = {}
    for comp in comps:
        local.update(_place_component(M, sizes, comp, rel))

    # containment forest over components
    span: list[tuple[int, int]] = []
    for comp in comps:
        lo = min(local[u] for u in comp)
        hi = max(local[u] + int(sizes[u]) - 1 for u in comp)
        span.append((lo, hi))

    parent_edge: list[int | None] = [None] * len(comps)
    for ci, comp in enumerate(comps):
        containers = [
            b
            for b in reps
            if comp_of[b] != ci and all(int(M[a, b]) == sizes[a] for a in comp)
        ]
        if containers:
            parent_edge[ci] = min(containers, key=lambda b: (int(sizes[b]), b))

    # slots of each component, from its local layout
    slot_info: list[list[tuple[int, int, frozenset]]] = []
    for comp in comps:
        bounds = set()
        for u in comp:
            bounds.add(local[u])
            bounds.add(local[u] + int(sizes[u]))
        cuts = sorted(bounds)
        slots = []
        for a, b in zip(cuts, cuts[1:]):
            sig = frozenset(
                u for u in comp if local[u] <= a and b <= local[u] + int(sizes[u])
            )
            if sig:
                slots.append((a, b - a, sig))
        slot_info.append(slots)

    children: dict[tuple[int, int], list[int]] = {}
    top: list[int] = []
    for ci, comp in enumerate(comps):
        b = parent_edge[ci]
        if b is None:
            top.append(ci)
            continue
        pi = comp_of[b]
        signature = frozenset(
            x for x in comps[pi] if int(M[comp[0], x]) == sizes[comp[0]]
        )
        slot_idx = None
        for si, (_, _, sig) in enumerate(slot_info[pi]):
            if sig == signature:
                slot_idx = si
                break
        if slot_idx is None:
            raise NotRealizable(
                f"no slot of the parent matches the container signature of {comp[0]}"
            )
        children.setdefault((pi, slot_idx), []).append(ci)

    # recursive assembly: components packed left to right inside their slot
    placed: dict[int, int] = {}

    def width(ci: int) -> int:
        lo, hi = span[ci]
        return hi - lo + 1

    def assemble(ci: int, offset: int) -> None:
        lo, _ = span[ci]
        for u in comps[ci]:
            placed[u] = offset + (local[u] - lo)
        for si, (slot_start, slot_width, _) in enumerate(slot_info[ci]):
            kids = sorted(children.get((ci, si), []))
            used = sum(width(c) for c in kids)
            if used > slot_width:
                raise NotRealizable("children exceed the capacity of their slot")
            cursor = offset + (slot_start - lo)
            for c in kids:
                assemble(c, cursor)
                cursor += width(c)

    cursor = 1
    for ci in sorted(top, key=lambda c: comps[c][0]):
        assemble(ci, cursor)
        cursor += width(ci)
    return placed


def _place_component(M, sizes, comp, rel) -> dict[int, int]:
    """Lay out one overlap component on the line, rigid up to reflection.

    Elements are placed in BFS order over the overlap edges; each new element
    has at most two candidate positions relative to its tree parent, checked
    eagerly against everything already placed.  The first edge is oriented to
    the right, which fixes the reflection; later choices are backtracked.
    """
    if len(comp) == 1:
        return {comp[0]: 0}
    order = sorted(comp)
    adjacency = {
        u: [v for v in order if v != u and rel(min(u, v), max(u, v)) == "overlap"]
        for u in order
    }
    root = order[0]
    bfs = [root]
    parent: dict[int, int] = {}
    seen = {root}
    qi = 0
    while qi < len(bfs):
        u = bfs[qi]
        qi += 1
        for v in adjacency[u]:
            if v not in seen:
                seen.add(v)
                parent[v] = u
                bfs.append(v)
    if len(bfs) != len(comp):
        raise NotRealizable("overlap component is not overlap-connected")

    pos: dict[int, int] = {root: 0}
    budget = [_PLACEMENT_BUDGET]

    def consistent(v: int, p: int) -> bool:
        for w, q in pos.items():
            want = int(M[min(v, w), max(v, w)])
            got = _interval_overlap(p, p + int(sizes[v]) - 1, q, q + int(sizes[w]) - 1)
            if got != want:
                return False
        return True

    def search(i: int) -> bool:
        if i == len(bfs):
            return True
        v = bfs[i]
        u = parent[v]
        overlap = int(M[min(u, v), max(u, v)])
        candidates = [pos[u] + int(sizes[u]) - overlap]
        if i > 1:
            candidates.append(pos[u] - int(sizes[v]) + overlap)
        for p in candidates:
            budget[0] -= 1
            if budget[0] < 0:
                raise NotRealizable("placement search budget exhausted")
            if consistent(v, p):
                pos[v] = p
                if search(i + 1):
                    return True
                del pos[v]
        return False

    if not search(1):
        raise NotRealizable("no consistent layout for an overlap component")
    return pos
