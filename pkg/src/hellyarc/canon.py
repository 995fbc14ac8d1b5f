"""Canonical arc models of CA hypergraphs and graph isomorphism on top of them.

The canonical form of an arc model is its circle size followed by the sorted
(start, end, multiplicity) triples of its arcs, packed as little-endian 32-bit
integers.  ``canonical_arc_model`` returns a model of the hypergraph whose
form is minimal over all of its arc models, so two hypergraphs are isomorphic
exactly when their forms are equal.  Small instances are minimized by brute
force over all labelings; larger ones through the rigid decomposition of the
hyperedge family into overlap components and slots, whose represented circular
orders are searched exhaustively per anchor with exact stream comparison.
"""

from __future__ import annotations

import hashlib
import struct
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import permutations
from math import factorial
from typing import Iterable, Optional, Sequence

import numpy as np

from .arcs import Arc, ArcModel, arc_mask, validate_model
from .errors import InternalInconsistency, NotCircularArc, NotHCA, NotRealizable
from .graphs import DEFAULT_CLIQUE_LIMIT, Graph, Maxclique, bits
from .matrix import reconstruct_interval_system
from .pipeline import HellyRepresentation, helly_representation

_PERM_CAP = 720
_SPLIT_CAP = 720


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraph with multiplicities; distinct hyperedge sets listed once."""

    vertex_count: int
    hyperedges: tuple[tuple[frozenset, int], ...]

    @staticmethod
    def build(vertex_count: int, edges: Iterable[tuple[Iterable[int], int]]) -> "Hypergraph":
        agg: dict[frozenset, int] = {}
        for members, mult in edges:
            s = frozenset(members)
            if any(not (0 <= v < vertex_count) for v in s):
                raise ValueError("hyperedge vertex out of range")
            if mult < 1:
                raise ValueError("multiplicity must be positive")
            agg[s] = agg.get(s, 0) + mult
        ordered = sorted(agg.items(), key=lambda kv: tuple(sorted(kv[0])))
        return Hypergraph(vertex_count, tuple(ordered))


@dataclass(frozen=True)
class CanonicalForm:
    """Byte encoding of an arc model: m, k, then k sorted (start, end, mult) triples."""

    encoding: bytes

    @staticmethod
    def build(m: int, triples: Iterable[tuple[int, int, int]]) -> "CanonicalForm":
        ordered = sorted(triples)
        blob = struct.pack("<II", m, len(ordered))
        for s, e, c in ordered:
            blob += struct.pack("<III", s, e, c)
        return CanonicalForm(blob)

    def hex_digest(self) -> str:
        return hashlib.sha256(self.encoding).hexdigest()

    def triples(self) -> list[tuple[int, int, int]]:
        m, k = struct.unpack_from("<II", self.encoding, 0)
        out = []
        for i in range(k):
            out.append(struct.unpack_from("<III", self.encoding, 8 + 12 * i))
        return out

    def circle_size(self) -> int:
        return struct.unpack_from("<II", self.encoding, 0)[0]


# ---------------------------------------------------------------------------
# From a validated representation back to maxcliques and the bundle hypergraph.


def maxcliques_from_model(g: Graph, rep: HellyRepresentation) -> list[Maxclique]:
    """Read all maxcliques off a validated representation by point stabbing.

    For each circle point x the vertices whose arcs contain x form a clique;
    keeping the maximal ones and deduplicating yields exactly the maxclique
    set of the graph.
    """
    model = rep.model
    point_sets = [0] * (model.m + 1)
    for v in range(g.n):
        am = arc_mask(model.m, model.arcs[rep.assignment[v]])
        for p in bits(am):
            point_sets[p + 1] |= 1 << v
    seen = set()
    out = []
    for p in range(1, model.m + 1):
        cand = point_sets[p]
        if cand == 0 or cand in seen:
            continue
        seen.add(cand)
        common = g.full_mask()
        for v in bits(cand):
            common &= g.closed_mask(v)
        if common == cand:  # maximal: nobody outside is adjacent to all of cand
            out.append(Maxclique(tuple(bits(cand))))
    uniq = sorted(set(out), key=lambda c: c.members)
    return uniq


def bundle_hypergraph(
    g: Graph, cliques: Sequence[Maxclique]
) -> tuple[Hypergraph, dict[int, int]]:
    """The dual hypergraph of the maxclique family, plus the vertex map into it.

    Hypergraph vertices are clique indices; each twin class contributes one
    hyperedge (its bundle) with multiplicity equal to the class size.  The
    intersection sanity law (bundles meet iff the vertices are adjacent) is
    asserted.
    """
    clique_masks = [c.mask() for c in cliques]
    bundle_mask: dict[int, int] = {}
    for v in range(g.n):
        bm = 0
        for i, cm in enumerate(clique_masks):
            if (cm >> v) & 1:
                bm |= 1 << i
        bundle_mask[v] = bm
    for u in range(g.n):
        for v in range(u + 1, g.n):
            meets = bundle_mask[u] & bundle_mask[v] != 0
            if meets != g.adjacent(u, v):
                raise InternalInconsistency(
                    f"bundle intersection law fails for pair ({u},{v})"
                )
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(bundle_mask[v], []).append(v)
    h = Hypergraph.build(
        len(cliques),
        [(tuple(bits(bm)), len(vs)) for bm, vs in groups.items()],
    )
    index_of = {members: i for i, (members, _) in enumerate(h.hyperedges)}
    assign = {
        v: index_of[frozenset(bits(bundle_mask[v]))] for v in range(g.n)
    }
    return h, assign


# ---------------------------------------------------------------------------
# Canonical arc models.


def canonical_arc_model(
    h: Hypergraph, brute_threshold: int = 8
) -> tuple[ArcModel, CanonicalForm, dict[int, int]]:
    """A model of ``h`` whose canonical form is minimal over all its arc models.

    Isomorphic hypergraphs (multiplicity preserving) receive equal forms, and
    equal forms imply isomorphism.  Up to ``brute_threshold`` vertices the
    minimum is found by enumerating all labelings, which also serves as the
    test oracle for the structural path used beyond.
    """
    K = h.vertex_count
    edges = [(set(members), mult) for members, mult in h.hyperedges]
    for members, _ in edges:
        if not members:
            raise NotCircularArc("empty hyperedge has no arc")
    if K == 0:
        return ArcModel(0, {}), CanonicalForm.build(0, []), {}
    if K <= brute_threshold:
        arcs = _brute_min_model(K, edges)
    else:
        arcs = _structured_min_model(K, edges)
    model = ArcModel(
        K,
        {i: Arc(s, e) for i, (s, e) in arcs.items()},
        {i: edges[i][1] for i in arcs},
    )
    if not _model_realizes(K, model, edges):
        raise NotCircularArc("produced model does not realize the hypergraph")
    form = CanonicalForm.build(
        K, [(a.start, a.end, model.multiplicity[i]) for i, a in model.arcs.items()]
    )
    return model, form, {i: i for i in range(len(edges))}


def _model_realizes(K: int, model: ArcModel, edges: list[tuple[set, int]]) -> bool:
    """Point profiles of the model match vertex profiles of the hypergraph."""
    point_prof: dict[frozenset, int] = {}
    masks = {i: arc_mask(K, a) for i, a in model.arcs.items()}
    for p in range(K):
        prof = frozenset(i for i, mk in masks.items() if (mk >> p) & 1)
        point_prof[prof] = point_prof.get(prof, 0) + 1
    vert_prof: dict[frozenset, int] = {}
    for v in range(K):
        prof = frozenset(i for i, (members, _) in enumerate(edges) if v in members)
        vert_prof[prof] = vert_prof.get(prof, 0) + 1
    return point_prof == vert_prof


def _positions_to_arc(K: int, pos: set[int]) -> Optional[tuple[int, int]]:
    """(start, end) of a set of 0-based circle positions, or None if not an arc."""
    L = len(pos)
    if L == 0:
        return None
    if L == K:
        return (1, K)
    starts = [p for p in pos if (p - 1) % K not in pos]
    if len(starts) != 1:
        return None
    s = starts[0]
    if all((s + i) % K in pos for i in range(L)):
        return (s + 1, ((s + L - 1) % K) + 1)
    return None


def _brute_min_model(K: int, edges: list[tuple[set, int]]) -> dict[int, tuple[int, int]]:
    best_key = None
    best = None
    for perm in permutations(range(K)):
        arcs = {}
        ok = True
        for i, (members, mult) in enumerate(edges):
            arc = _positions_to_arc(K, {perm[v] for v in members})
            if arc is None:
                ok = False
                break
            arcs[i] = arc
        if not ok:
            continue
        key = sorted((s, e, edges[i][1]) for i, (s, e) in arcs.items())
        if best_key is None or key < best_key:
            best_key = key
            best = arcs
    if best is None:
        raise NotCircularArc("no circular order realizes every hyperedge as an arc")
    return best


# --- structural path -------------------------------------------------------
#
# For each candidate anchor vertex, the hyperedges containing the anchor are
# complemented; a circular order anchored there is exactly a consecutive-ones
# order of the complemented family with the anchor first.  On the line the
# family decomposes rigidly into overlap components, slots and nested
# components (reflection and slot-content order are the only freedoms), so the
# minimal encoding is found by exact search over that tree, two special rules
# aside: complemented hyperedges contribute wrap triples computed from their
# interval positions, and an interval flush with the right end of the line
# makes its complement start at circle position 1.

_PERM_CAP = 720


class _Slot:
    __slots__ = ("width", "loose", "children", "content_cache")

    def __init__(self, width: int):
        self.width = width
        self.loose = 0
        self.children: list["_Comp"] = []
        self.content_cache: Optional[tuple] = None


class _Comp:
    __slots__ = ("slots", "arcs", "width", "generic_cache", "flush_cache")

    def __init__(self, slots, arcs, width):
        self.slots: list[_Slot] = slots
        # arcs: (entries, cover): cover is the covered slot-index set, entries
        # the (edge_id, mult, complemented) tuples sharing that interval
        self.arcs: list[tuple[tuple, frozenset]] = arcs
        self.width: int = width
        self.generic_cache: Optional[tuple[int, tuple]] = None
        self.flush_cache: Optional[tuple] = None


def _key3(stream) -> list[tuple[int, int, int]]:
    return [t[:3] for t in stream]


def _shift(stream, off: int):
    return [(s + off, e + off, m, i) for (s, e, m, i) in stream]


def _merge_items(items) -> tuple:
    """Concatenate item streams at packed offsets (first item starts at 1)."""
    out = []
    off = 0
    for width, stream in items:
        out.extend(_shift(stream, off))
        off += width
    out.sort()
    return tuple(out)


def _distinct_perm_count(classes: list[int]) -> int:
    total = factorial(sum(classes))
    for c in classes:
        total //= factorial(c)
    return total


def _unique_permutations(items: list):
    """All distinct orderings of items; equality is by (width, triple key)."""
    keyed = sorted(items, key=lambda it: (it[0], _key3(it[1])))
    used = [False] * len(keyed)
    cur: list = []

    def rec():
        if len(cur) == len(keyed):
            yield list(cur)
            return
        prev_key = None
        for idx, it in enumerate(keyed):
            if used[idx]:
                continue
            key = (it[0], _key3(it[1]))
            if key == prev_key:
                continue
            prev_key = key
            used[idx] = True
            cur.append(it)
            yield from rec()
            cur.pop()
            used[idx] = False

    yield from rec()


def _p_opt(items: list) -> tuple:
    """Minimal merged stream over all orderings of interchangeable blocks.

    Exact by enumeration when the number of distinct orderings is small;
    beyond that, a deterministic comparator sort with adjacent-exchange passes,
    which is still canonical (it depends only on the block streams) and exact
    in the homogeneous cases that produce wide nodes in practice.
    """
    if not items:
        return ()
    if len(items) == 1:
        return _merge_items(items)
    class_sizes: dict[tuple, int] = {}
    for it in items:
        key = (it[0], tuple(_key3(it[1])))
        class_sizes[key] = class_sizes.get(key, 0) + 1
    if _distinct_perm_count(list(class_sizes.values())) <= _PERM_CAP:
        best = None
        for order in _unique_permutations(items):
            cand = _merge_items(order)
            if best is None or _key3(cand) < _key3(best):
                best = cand
        return best

    def cmp(x, y):
        xy = _key3(_merge_items([x, y]))
        yx = _key3(_merge_items([y, x]))
        if xy < yx:
            return -1
        if xy > yx:
            return 1
        return 0

    order = sorted(items, key=cmp_to_key(cmp))
    improved = True
    passes = 0
    while improved and passes <= len(order):
        improved = False
        passes += 1
        for i in range(len(order) - 1):
            swapped = order[:i] + [order[i + 1], order[i]] + order[i + 2 :]
            if _key3(_merge_items(swapped)) < _key3(_merge_items(order)):
                order = swapped
                improved = True
    return _merge_items(order)


def _slot_content_stream(slot: _Slot) -> tuple:
    if slot.content_cache is None:
        items = [_stream_generic(c) for c in slot.children] + [(1, ())] * slot.loose
        slot.content_cache = _p_opt(items)
    return slot.content_cache


def _oriented(comp: _Comp, rev: bool):
    r = len(comp.slots)
    if not rev:
        return comp.slots, comp.arcs
    slots = list(reversed(comp.slots))
    arcs = [
        (entries, frozenset(r - 1 - i for i in cover))
        for (entries, cover) in comp.arcs
    ]
    return slots, arcs


def _stream_generic(comp: _Comp) -> tuple[int, tuple]:
    """Minimal relative stream of a component placed away from the line end.

    Positions are relative to the component start; complemented hyperedges
    contribute the wrap triple derived from their interval, which shifts along
    with the block.
    """
    if comp.generic_cache is not None:
        return comp.generic_cache
    best = None
    for rev in (False, True):
        slots, arcs = _oriented(comp, rev)
        offs = [0]
        for s in slots:
            offs.append(offs[-1] + s.width)
        stream = []
        for i, s in enumerate(slots):
            stream.extend(_shift(list(_slot_content_stream(s)), offs[i]))
        for entries, cover in arcs:
            i0, i1 = min(cover), max(cover)
            assert cover == frozenset(range(i0, i1 + 1))
            s0, e0 = offs[i0] + 1, offs[i1] + slots[i1].width
            for edge, mult, flag in entries:
                if flag:
                    stream.append((e0 + 1, s0 - 1, mult, edge))
                else:
                    stream.append((s0, e0, mult, edge))
        stream.sort()
        if best is None or _key3(stream) < _key3(best):
            best = stream
    comp.generic_cache = (comp.width, tuple(best))
    return comp.generic_cache


def _stream_flush(comp: _Comp, K: int) -> tuple:
    """Minimal absolute stream of a component whose right edge is the line end.

    The component occupies circle positions K-width+1 .. K.  A complemented
    hyperedge whose interval ends exactly at K wraps through the anchor, so
    its arc starts at circle position 1; whether the rightmost position
    belongs to a nested component is part of the optimization, handled by
    recursing into a flush variant of the final slot's content.
    """
    if comp.flush_cache is not None:
        return comp.flush_cache
    base = K - comp.width
    best = None
    for rev in (False, True):
        slots, arcs = _oriented(comp, rev)
        offs = [base]
        for s in slots:
            offs.append(offs[-1] + s.width)
        fixed = []
        for i, s in enumerate(slots[:-1]):
            fixed.extend(_shift(list(_slot_content_stream(s)), offs[i]))
        for entries, cover in arcs:
            i0, i1 = min(cover), max(cover)
            s0, e0 = offs[i0] + 1, offs[i1] + slots[i1].width
            for edge, mult, flag in entries:
                if not flag:
                    fixed.append((s0, e0, mult, edge))
                elif e0 == K:
                    fixed.append((1, s0 - 1, mult, edge))
                else:
                    fixed.append((e0 + 1, s0 - 1, mult, edge))
        last = slots[-1]
        last_off = offs[len(slots) - 1]
        for content in _flush_slot_contents(last, K):
            stream = fixed + _shift(list(content), last_off)
            stream.sort()
            if best is None or _key3(stream) < _key3(best):
                best = stream
    comp.flush_cache = tuple(best)
    return comp.flush_cache


def _flush_slot_contents(slot: _Slot, K: int):
    """Candidate streams for the content of a slot ending at the line end.

    Either a loose position is rightmost (everything inside is generic), or
    some nested component is flush with the end and recurses.
    """
    out = []
    if slot.loose >= 1 or not slot.children:
        items = [_stream_generic(c) for c in slot.children]
        items += [(1, ())] * max(slot.loose - 1, 0)
        out.append(_p_opt(items))
    for child in slot.children:
        rest = [_stream_generic(c) for c in slot.children if c is not child]
        rest += [(1, ())] * slot.loose
        flush = _stream_flush(child, K)
        # the flush child stream is absolute already; the rest is packed at the
        # slot start, so report content relative to the slot by un-shifting
        slot_base = K - slot.width
        merged = list(_p_opt(rest))
        merged.extend(_shift(list(flush), -slot_base))
        out.append(tuple(sorted(merged)))
    return out


def _derive_linear_blocks(L: int, intervals: dict[int, Arc], entries_of):
    """Overlap components, slots and nesting of an interval realization.

    On the line the decomposition is rigid: overlap-connected components are
    unique up to reflection, every nested component sits in a unique slot, and
    slot contents are freely arrangeable.  Returns the top-level components.
    """
    ids = sorted(intervals)
    span = {i: (intervals[i].start, intervals[i].end) for i in ids}
    size = {i: span[i][1] - span[i][0] + 1 for i in ids}

    def overlap(a, b) -> bool:
        (s1, e1), (s2, e2) = span[a], span[b]
        inter = min(e1, e2) - max(s1, s2) + 1
        return inter > 0 and inter < min(size[a], size[b])

    def contains(a, b) -> bool:  # interval a inside interval b
        return span[b][0] <= span[a][0] and span[a][1] <= span[b][1]

    comp_id: dict[int, int] = {}
    comp_members: list[list[int]] = []
    for i in ids:
        if i in comp_id:
            continue
        comp_id[i] = len(comp_members)
        stack, members = [i], []
        while stack:
            x = stack.pop()
            members.append(x)
            for y in ids:
                if y not in comp_id and overlap(x, y):
                    comp_id[y] = comp_id[i]
                    stack.append(y)
        comp_members.append(sorted(members))

    comps: list[_Comp] = []
    comp_span: list[tuple[int, int]] = []
    slot_ranges: list[list[tuple[int, int]]] = []
    for members in comp_members:
        lo = min(span[i][0] for i in members)
        hi = max(span[i][1] for i in members)
        bounds = set()
        for i in members:
            bounds.add(span[i][0])
            bounds.add(span[i][1] + 1)
        cuts = sorted(bounds)
        ranges = []
        profiles = []
        for a, b in zip(cuts, cuts[1:]):
            sig = frozenset(
                i for i in members if span[i][0] <= a and b - 1 <= span[i][1]
            )
            if sig:
                ranges.append((a, b - 1))
                profiles.append(sig)
        slots = [_Slot(b - a + 1) for a, b in ranges]
        arcs = []
        for i in members:
            cover = frozenset(t for t, sig in enumerate(profiles) if i in sig)
            arcs.append((entries_of[i], cover))
        comps.append(_Comp(slots, arcs, hi - lo + 1))
        comp_span.append((lo, hi))
        slot_ranges.append(ranges)

    tops: list[int] = []
    for ci, members in enumerate(comp_members):
        containers = [
            b
            for b in ids
            if comp_id[b] != ci
            and all(contains(a, b) for a in members)
        ]
        if not containers:
            tops.append(ci)
            continue
        parent = min(containers, key=lambda b: (size[b], b))
        pc = comp_id[parent]
        lo = comp_span[ci][0]
        slot_idx = next(
            (
                t
                for t, (a, b) in enumerate(slot_ranges[pc])
                if a <= lo <= b
            ),
            None,
        )
        if slot_idx is None or not (
            slot_ranges[pc][slot_idx][0] <= comp_span[ci][0]
            and comp_span[ci][1] <= slot_ranges[pc][slot_idx][1]
        ):
            raise NotCircularArc("nested component crosses a slot boundary")
        comps[pc].slots[slot_idx].children.append(comps[ci])

    for comp in comps:
        for slot in comp.slots:
            used = sum(c.width for c in slot.children)
            if used > slot.width:
                raise NotCircularArc("slot capacity exceeded by nested components")
            slot.loose = slot.width - used

    ordered = sorted(tops, key=lambda ci: comp_members[ci][0])
    total = sum(comps[ci].width for ci in ordered)
    if total != L:
        raise NotCircularArc("components do not tile the covered line")
    return [comps[ci] for ci in ordered]


def _best_anchored_stream(K: int, working, anchor: int) -> list:
    """Minimal circular stream over all valid readings anchored at one vertex.

    Hyperedges containing the anchor are complemented; the complemented family
    must be an interval hypergraph (realized via its intersection matrix), and
    the minimization runs over its rigid line decomposition with the anchor
    pinned to circle position 1.
    """
    allv = frozenset(range(K))
    mod = []
    for i, members, mult in working:
        if anchor in members:
            mod.append((i, allv - members, True, mult))
        else:
            mod.append((i, members, False, mult))
    bitmasks = []
    for _, T, _, _ in mod:
        m = 0
        for v in T:
            m |= 1 << v
        bitmasks.append(m)
    k = len(mod)
    M = np.zeros((k, k), dtype=np.int64)
    for a in range(k):
        M[a, a] = bitmasks[a].bit_count()
        for b in range(a + 1, k):
            M[a, b] = M[b, a] = (bitmasks[a] & bitmasks[b]).bit_count()
    try:
        ivs = reconstruct_interval_system(M)
    except NotRealizable as exc:
        raise NotCircularArc(f"complemented family is not interval: {exc}") from exc
    L = ivs.m
    covered = 0
    for m in bitmasks:
        covered |= m
    if covered.bit_count() != L:
        raise NotCircularArc("covered vertex count does not match the realization")
    assert L < K  # the anchor itself is never covered by the complemented family

    # group equal intervals into one structural unit: a hyperedge complement
    # may coincide with another hyperedge, and both then share one interval
    by_span: dict[tuple[int, int], list[int]] = {}
    for idx in range(k):
        a = ivs.arcs[idx]
        by_span.setdefault((a.start, a.end), []).append(idx)
    intervals: dict[int, Arc] = {}
    entries_of: dict[int, tuple] = {}
    for uid, (spankey, idxs) in enumerate(sorted(by_span.items())):
        intervals[uid] = Arc(spankey[0], spankey[1])
        entries_of[uid] = tuple(
            (mod[idx][0], mod[idx][3], mod[idx][2]) for idx in sorted(idxs)
        )
    tops = _derive_linear_blocks(L, intervals, entries_of)
    free_extra = K - 1 - L

    best: Optional[list] = None

    def consider(stream: list) -> None:
        nonlocal best
        stream = sorted(stream)
        if best is None or _key3(stream) < _key3(best):
            best = stream

    top_generic = [_stream_generic(c) for c in tops]
    if free_extra >= 1:
        items = top_generic + [(1, ())] * (free_extra - 1)
        consider(list(_shift(list(_p_opt(items)), 1)))
    for bi, b in enumerate(tops):
        others = [
            top_generic[ci] for ci in range(len(tops)) if ci != bi
        ] + [(1, ())] * free_extra
        mid = _p_opt(others)
        flush = _stream_flush(b, K)
        consider(list(_shift(list(mid), 1)) + list(flush))

    assert best is not None
    return best


def _structured_min_model(K: int, edges: list[tuple[set, int]]) -> dict[int, tuple[int, int]]:
    complete = [(i, mult) for i, (members, mult) in enumerate(edges) if len(members) == K]
    working = [
        (i, frozenset(members), mult)
        for i, (members, mult) in enumerate(edges)
        if len(members) < K
    ]
    result: dict[int, tuple[int, int]] = {i: (1, K) for i, _ in complete}
    if not working:
        return result

    # The minimal stream begins with a triple (1, e, m) of an arc of minimal
    # (size, multiplicity), so only vertices of such hyperedges can be optimal
    # anchors; anchors with equal hyperedge profiles are interchangeable.
    min_key = min((len(members), mult) for _, members, mult in working)
    candidates = sorted(
        {
            v
            for _, members, mult in working
            if (len(members), mult) == min_key
            for v in members
        }
    )
    best: Optional[list] = None
    seen_profiles: set[frozenset] = set()
    for anchor in candidates:
        profile = frozenset(i for i, members, _ in working if anchor in members)
        if profile in seen_profiles:
            continue
        seen_profiles.add(profile)
        cand = _best_anchored_stream(K, working, anchor)
        if best is None or _key3(cand) < _key3(best):
            best = cand

    assert best is not None
    for s, e, _m, i in best:
        result[i] = (s, e)
    assert len(result) == len(edges)
    return result


# ---------------------------------------------------------------------------
# The canonical representation scheme and isomorphism with certificates.


def canonical_representation(
    g: Graph, clique_limit: int = DEFAULT_CLIQUE_LIMIT
) -> tuple[HellyRepresentation, CanonicalForm]:
    """A Helly representation whose model is identical for isomorphic graphs.

    Runs the representation pipeline, reads the maxcliques off the model,
    forms the bundle hypergraph and canonizes it; the final assignment sends
    each vertex through its bundle to the canonical arc.  The result is
    re-validated against the input graph.
    """
    rep = helly_representation(g, clique_limit=clique_limit)
    cliques = maxcliques_from_model(g, rep)
    h, beta = bundle_hypergraph(g, cliques)
    try:
        model, form, elem_map = canonical_arc_model(h)
    except NotCircularArc as exc:
        raise NotHCA(f"bundle hypergraph is not circular-arc: {exc}") from exc
    assignment = {v: elem_map[beta[v]] for v in range(g.n)}
    report = validate_model(g, model, assignment, clique_limit=clique_limit)
    if not report.ok:
        raise NotHCA(
            "canonical model failed validation: " + "; ".join(report.problems[:3])
        )
    return HellyRepresentation(model=model, assignment=assignment), form


def isomorphism(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """An explicit isomorphism between two HCA graphs, or None.

    Equal canonical forms guarantee isomorphism; the certificate matches
    vertices through equal canonical arcs, pairing twin-class members in
    index order, and is verified edge by edge before being returned.
    """
    rep_g, form_g = canonical_representation(g)
    rep_h, form_h = canonical_representation(h)
    if form_g.encoding != form_h.encoding:
        return None

    def groups(graph: Graph, rep: HellyRepresentation) -> dict[tuple, list[int]]:
        out: dict[tuple, list[int]] = {}
        for v in range(graph.n):
            arc = rep.model.arcs[rep.assignment[v]]
            mult = rep.model.multiplicity[rep.assignment[v]]
            out.setdefault((arc.start, arc.end, mult), []).append(v)
        return out

    gg = groups(g, rep_g)
    hh = groups(h, rep_h)
    if set(gg) != set(hh):
        raise InternalInconsistency("equal forms but different arc triples")
    mapping: dict[int, int] = {}
    for key in sorted(gg):
        a, b = gg[key], hh[key]
        if len(a) != len(b):
            raise InternalInconsistency("equal forms but different class sizes")
        for u, v in zip(a, b):
            mapping[u] = v
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adjacent(u, v) != h.adjacent(mapping[u], mapping[v]):
                raise InternalInconsistency("certificate failed edge verification")
    return mapping
