"""Brute-force oracles and seeded instance generation.

Everything here is deliberately independent of the production pipeline: the
recognizer searches circular orders of maxcliques directly, the reference
matrix is read off an explicitly built and sharpened bundle model, and the
canonical-model oracle enumerates every labeling.  These back the derived
expectations and the acceptance suite.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

import numpy as np

from .arcs import Arc, ArcModel, arc_mask, validate_model
from .canon import CanonicalForm, Hypergraph
from .errors import NotCircularArc, ResourceLimit
from .graphs import (
    DEFAULT_CLIQUE_LIMIT,
    Graph,
    Maxclique,
    bits,
    check_reduced,
    enumerate_maxcliques,
)

DEFAULT_CLIQUE_ORDER_BOUND = 9
_SEARCH_NODE_CAP = 2_000_000


def _bundle_masks(g: Graph, cliques: Sequence[Maxclique]) -> list[int]:
    masks = []
    for v in range(g.n):
        bm = 0
        for i, c in enumerate(cliques):
            if v in c:
                bm |= 1 << i
        masks.append(bm)
    return masks


def _is_cyclic_arc(slots: list[int], k: int) -> bool:
    """True iff the sorted slot list is contiguous on the k-cycle."""
    if not slots or len(slots) == k:
        return bool(slots)
    runs = 1
    for a, b in zip(slots, slots[1:]):
        if b != a + 1:
            runs += 1
    if runs == 1:
        return True
    return runs == 2 and slots[0] == 0 and slots[-1] == k - 1


def _find_clique_circular_order(bundles: list[int], k: int) -> Optional[list[int]]:
    """A circular order of the k cliques making every bundle an arc, or None.

    Backtracking over slot assignments with clique 0 pinned to slot 0.  A
    partially placed bundle survives only while its placed slots can still
    grow into an arc through the open region; a fully placed one must already
    be an arc.
    """
    if k <= 1:
        return list(range(k))
    distinct = sorted(set(bundles))
    sizes = [b.bit_count() for b in distinct]
    slot_of: dict[int, int] = {0: 0}
    order = [0] + [-1] * (k - 1)
    nodes = [0]

    def bundle_ok(b: int, bsize: int, i: int) -> bool:
        slots = sorted(slot_of[c] for c in bits(b) if c in slot_of)
        if not slots:
            return True
        placed = len(slots)
        runs = 1
        for a, c in zip(slots, slots[1:]):
            if c != a + 1:
                runs += 1
        if runs == 1:
            if placed == bsize:
                return True
            return slots[0] == 0 or slots[-1] == i
        if runs == 2 and slots[0] == 0 and slots[-1] == i:
            if placed == bsize:
                return i == k - 1
            return bsize - placed == (k - 1) - i
        return False

    def search(i: int) -> bool:
        if i == k:
            return True
        nodes[0] += 1
        if nodes[0] > _SEARCH_NODE_CAP:
            raise ResourceLimit("circular-order search exceeded its node budget")
        for c in range(1, k):
            if c in slot_of:
                continue
            slot_of[c] = i
            order[i] = c
            if all(
                bundle_ok(b, bs, i) for b, bs in zip(distinct, sizes) if (b >> c) & 1
            ):
                if search(i + 1):
                    return True
            del slot_of[c]
            order[i] = -1
        return False

    if search(1):
        result = list(order)
        # final confirmation: every bundle is a cyclic arc of slots
        for b in distinct:
            slots = sorted(slot_of[c] for c in bits(b))
            if not _is_cyclic_arc(slots, k):
                return None
        return result
    return None


def brute_force_is_hca(
    g: Graph,
    clique_bound: int = DEFAULT_CLIQUE_ORDER_BOUND,
    clique_limit: int = DEFAULT_CLIQUE_LIMIT,
) -> bool:
    """Exhaustively decide HCA membership through the bundle hypergraph.

    The graph is HCA exactly when some circular ordering of its maxcliques
    turns every bundle into an arc.  Multiplicities and universal vertices
    need no special treatment: equal bundles impose one constraint and the
    full bundle is always an arc.
    """
    cliques = enumerate_maxcliques(g, limit=clique_limit)
    k = len(cliques)
    if k > clique_bound:
        raise ResourceLimit(f"{k} maxcliques exceed the bound {clique_bound}")
    if k <= 2:
        return True
    bundles = _bundle_masks(g, cliques)
    return _find_clique_circular_order(bundles, k) is not None


def brute_force_iso(g: Graph, h: Graph, max_n: int = 8) -> Optional[dict[int, int]]:
    """Exhaustive isomorphism search with degree pruning; verified result."""
    if g.n > max_n or h.n > max_n:
        raise ResourceLimit(f"graphs larger than {max_n} vertices")
    if g.n != h.n or g.edge_count() != h.edge_count():
        return None
    if sorted(g.degree(v) for v in range(g.n)) != sorted(
        h.degree(v) for v in range(h.n)
    ):
        return None
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    mapping: dict[int, int] = {}
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        u = order[i]
        for w in range(h.n):
            if used[w] or g.degree(u) != h.degree(w):
                continue
            if all(
                g.adjacent(u, prev) == h.adjacent(w, mapping[prev])
                for prev in order[:i]
            ):
                mapping[u] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                del mapping[u]
        return False

    if extend(0):
        return dict(mapping)
    return None


def brute_force_canonical_model(h: Hypergraph, max_vertices: int = 8) -> CanonicalForm:
    """Minimal canonical form over every circular labeling of the hypergraph.

    Independent of the production canonizer: arcs are recovered by walking
    sorted positions, not through any shared decomposition code.
    """
    K = h.vertex_count
    if K > max_vertices:
        raise ResourceLimit(f"{K} vertices exceed the brute-force bound")
    if K == 0:
        return CanonicalForm.build(0, [])
    import itertools

    best: Optional[list[tuple[int, int, int]]] = None
    for perm in itertools.permutations(range(K)):
        triples = []
        ok = True
        for members, mult in h.hyperedges:
            if not members:
                ok = False
                break
            pos = sorted(perm[v] for v in members)
            if len(pos) == K:
                triples.append((1, K, mult))
                continue
            gaps = [
                i for i in range(len(pos)) if (pos[i] - pos[i - 1]) % K != 1
            ]
            if len(gaps) != 1:
                ok = False
                break
            start = pos[gaps[0]]
            end = pos[gaps[0] - 1]
            if (end - start) % K + 1 != len(pos):
                ok = False
                break
            triples.append((start + 1, end + 1, mult))
        if not ok:
            continue
        triples.sort()
        if best is None or triples < best:
            best = triples
    if best is None:
        raise NotCircularArc("no circular order realizes the hypergraph")
    return CanonicalForm.build(K, best)


def reference_matrix(
    g: Graph,
    clique_bound: int = DEFAULT_CLIQUE_ORDER_BOUND,
    clique_limit: int = DEFAULT_CLIQUE_LIMIT,
) -> np.ndarray:
    """Pairwise-intersection matrix read off an explicit sharpened bundle model.

    Builds a concrete arc model of the bundle hypergraph from a brute-force
    circular clique order, then performs the literal interleaved-endpoint
    sharpening on it, and measures all pairwise intersections.  Used only to
    validate the model-free matrix computation.
    """
    check_reduced(g)
    cliques = enumerate_maxcliques(g, limit=clique_limit)
    k = len(cliques)
    if k > clique_bound:
        raise ResourceLimit(f"{k} maxcliques exceed the bound {clique_bound}")
    bundles = _bundle_masks(g, cliques)
    order = _find_clique_circular_order(bundles, k)
    if order is None:
        raise NotCircularArc("graph is not HCA; no reference model exists")
    slot_of_clique = {c: i for i, c in enumerate(order)}

    # arcs of the bundle model on the k-point circle, one per vertex
    base: dict[int, Arc] = {}
    for v in range(g.n):
        slots = sorted(slot_of_clique[c] for c in bits(bundles[v]))
        # reduced graphs have no empty and no complete bundles
        assert 0 < len(slots) < k and _is_cyclic_arc(slots, k)
        breaks = [
            i for i in range(len(slots)) if (slots[i] - slots[i - 1]) % k != 1
        ]
        assert len(breaks) == 1
        base[v] = Arc(slots[breaks[0]] + 1, slots[breaks[0] - 1] + 1)

    mat = _sharpened_matrix(base, k, g.n)
    return mat


def _sharpened_matrix(base: dict[int, Arc], k: int, n: int) -> np.ndarray:
    """Interleaved-endpoint sharpening of a bundle model, then its matrix.

    For every gap between consecutive circle points, the arcs ending before
    the gap and the arcs starting after it receive fresh, pairwise distinct
    extreme points inside the gap: longer starters first, and each new end
    point goes right after the start point of the shortest starter its arc
    still intersects.  The original points are then discarded.
    """
    def length(a: Arc) -> int:
        return (a.end - a.start) % k + 1

    base_masks = {v: arc_mask(k, a) for v, a in base.items()}
    # keys[(gap, t)] describes position t inside the gap after point gap
    start_key: dict[int, tuple[int, int]] = {}
    end_key: dict[int, tuple[int, int]] = {}
    for x in range(1, k + 1):
        y = x % k + 1
        enders = sorted(
            (v for v, a in base.items() if a.end == x),
            key=lambda v: (length(base[v]), v),
        )
        starters = sorted(
            (v for v, a in base.items() if a.start == y),
            key=lambda v: (length(base[v]), v),
        )
        # sequence within the gap: longest starters first, each ender placed
        # after the shortest starter it intersects (before all of them if none)
        entries: list[tuple[int, str]] = []
        for sv in reversed(starters):
            entries.append((sv, "start"))
        placed: list[tuple[int, str]] = []
        for ev in enders:
            idx = None
            for pos_j, sv in enumerate(starters):
                if base_masks[ev] & base_masks[sv]:
                    idx = pos_j
                    break
            if idx is None:
                placed.append((ev, "before_all"))
            else:
                placed.append((ev, f"after_{idx}"))
        sequence: list[tuple[int, str]] = []
        for ev, tag in placed:
            if tag == "before_all":
                sequence.append((ev, "end"))
        for j in range(len(starters) - 1, -1, -1):
            sequence.append((starters[j], "start"))
            for ev, tag in placed:
                if tag == f"after_{j}":
                    sequence.append((ev, "end"))
        for t, (v, kind) in enumerate(sequence):
            if kind == "start":
                start_key[v] = (x, t)
            else:
                end_key[v] = (x, t)

    all_keys = sorted(set(start_key.values()) | set(end_key.values()))
    assert len(all_keys) == 2 * n
    pos = {key: i + 1 for i, key in enumerate(all_keys)}
    sharp = ArcModel(
        2 * n, {v: Arc(pos[start_key[v]], pos[end_key[v]]) for v in base}
    )
    assert sharp.is_sharp()
    masks = {v: arc_mask(2 * n, a) for v, a in sharp.arcs.items()}
    out = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in range(u, n):
            out[u, v] = out[v, u] = (masks[u] & masks[v]).bit_count()
    return out


def random_hca_graph(
    n: int, seed: int, max_attempts: int = 40
) -> tuple[Graph, ArcModel]:
    """A seeded random HCA graph with a validated witness model.

    Rejection sampling over random arc families; a family is accepted when it
    validates as a Helly model of its own intersection graph.  After a bounded
    number of rejections the sampler falls back to interval families, which
    are Helly by construction, so termination is guaranteed.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)

    def intersection_graph(model: ArcModel) -> Graph:
        masks = {v: arc_mask(model.m, a) for v, a in model.arcs.items()}
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if masks[u] & masks[v]
        ]
        return Graph(n, edges)

    for _ in range(max_attempts):
        m = rng.randint(max(3, n), 3 * n + 3)
        arcs = {}
        for v in range(n):
            s = rng.randint(1, m)
            ln = rng.randint(1, m - 1)
            arcs[v] = Arc(s, (s - 1 + ln - 1) % m + 1)
        model = ArcModel(m, arcs)
        g = intersection_graph(model)
        try:
            # a Helly family on m points has at most m maxcliques (point stabs),
            # so blowing past that certifies rejection cheaply
            ok = validate_model(g, model, {v: v for v in range(n)}, clique_limit=m).ok
        except ResourceLimit:
            ok = False
        if ok:
            return g, model

    m = 3 * n + 3
    arcs = {}
    for v in range(n):
        s = rng.randint(1, m)
        e = rng.randint(s, m)
        arcs[v] = Arc(s, e)
    model = ArcModel(m, arcs)
    g = intersection_graph(model)
    report = validate_model(g, model, {v: v for v in range(n)})
    assert report.ok, "interval families are always Helly"
    return g, model
