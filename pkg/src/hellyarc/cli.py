"""Command-line front end.

Graphs are read in a DIMACS-like format: optional comment lines starting with
``c``, one ``p edge <n> <m>`` line, then ``e <u> <v>`` lines with 1-based
vertex ids.  Models are written as deterministic JSON.  Exit codes: 0 for
success, 1 for a negative verdict, 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .arcs import ArcModel
from .canon import canonical_representation, maxcliques_from_model
from .errors import GraphParseError, NotHCA, ResourceLimit
from .graphs import DEFAULT_CLIQUE_LIMIT, Graph
from .pipeline import HellyRepresentation, helly_representation
from .testkit import random_hca_graph


def parse_graph_file(text: str) -> Graph:
    """Parse a DIMACS-like edge list; duplicate edges and self-loops rejected."""
    n: Optional[int] = None
    m_declared: Optional[int] = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError(f"line {lineno}: expected 'p edge <n> <m>'")
            try:
                n = int(parts[2])
                m_declared = int(parts[3])
            except ValueError as exc:
                raise GraphParseError(f"line {lineno}: bad problem line") from exc
            if n < 0 or m_declared < 0:
                raise GraphParseError(f"line {lineno}: negative counts")
        elif parts[0] == "e":
            if n is None:
                raise GraphParseError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise GraphParseError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise GraphParseError(f"line {lineno}: bad edge") from exc
            if u == v:
                raise GraphParseError(f"line {lineno}: self-loop at {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"line {lineno}: vertex out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphParseError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphParseError("missing problem line")
    if m_declared is not None and m_declared != len(edges):
        raise GraphParseError(
            f"problem line declares {m_declared} edges, found {len(edges)}"
        )
    return Graph(n, edges)


def render_graph_file(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count()}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def render_model_file(
    model: ArcModel, vertex_of_element: dict[int, object]
) -> str:
    """Deterministic JSON for a model; one entry per element, sorted."""
    entries = []
    for e in model.elements():
        arc = model.arcs[e]
        entries.append(
            {
                "vertex": vertex_of_element[e],
                "start": arc.start,
                "end": arc.end,
                "multiplicity": model.multiplicity[e],
            }
        )
    entries.sort(key=lambda d: d["vertex"])
    return json.dumps({"points": model.m, "arcs": entries}, indent=2) + "\n"


def _model_file_for_rep(rep: HellyRepresentation) -> str:
    # representative original vertex per element: the smallest, 1-based
    rep_vertex: dict[int, int] = {}
    for v in sorted(rep.assignment):
        e = rep.assignment[v]
        rep_vertex.setdefault(e, v + 1)
    return render_model_file(rep.model, rep_vertex)


def _canonical_model_file(rep: HellyRepresentation) -> str:
    # canonical ids: rank of each arc in sorted (start, end, multiplicity) order
    order = sorted(
        rep.model.elements(),
        key=lambda e: (
            rep.model.arcs[e].start,
            rep.model.arcs[e].end,
            rep.model.multiplicity[e],
        ),
    )
    canon_id = {e: i + 1 for i, e in enumerate(order)}
    return render_model_file(rep.model, canon_id)


def _read_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc}") from exc
    return parse_graph_file(text)


def _write(path: Optional[str], content: str) -> None:
    if path is None:
        sys.stdout.write(content)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(content)


def cmd_recognize(args) -> int:
    g = _read_graph(args.graph)
    try:
        helly_representation(g, clique_limit=args.limit)
    except NotHCA as exc:
        print(f"NOT-HCA: {exc.reason}")
        return 1
    print("HCA")
    return 0


def cmd_model(args) -> int:
    g = _read_graph(args.graph)
    try:
        rep = helly_representation(g, clique_limit=args.limit)
    except NotHCA as exc:
        print(f"NOT-HCA: {exc.reason}")
        return 1
    _write(args.out, _model_file_for_rep(rep))
    return 0


def cmd_canon(args) -> int:
    g = _read_graph(args.graph)
    try:
        rep, form = canonical_representation(g, clique_limit=args.limit)
    except NotHCA as exc:
        print(f"NOT-HCA: {exc.reason}")
        return 1
    _write(args.out, _canonical_model_file(rep))
    print(form.hex_digest())
    return 0


def cmd_iso(args) -> int:
    from .canon import isomorphism

    g = _read_graph(args.graph1)
    h = _read_graph(args.graph2)
    try:
        mapping = isomorphism(g, h)
    except NotHCA as exc:
        print(f"NOT-HCA: {exc.reason}", file=sys.stderr)
        return 2
    if mapping is None:
        print("NON-ISOMORPHIC")
        return 1
    for u in sorted(mapping):
        print(f"{u + 1} -> {mapping[u] + 1}")
    return 0


def cmd_maxcliques(args) -> int:
    g = _read_graph(args.graph)
    try:
        rep = helly_representation(g, clique_limit=args.limit)
    except NotHCA as exc:
        print(f"NOT-HCA: {exc.reason}")
        return 1
    cliques = maxcliques_from_model(g, rep)
    for c in cliques:
        print(" ".join(str(v + 1) for v in c))
    return 0


def cmd_gen(args) -> int:
    g, model = random_hca_graph(args.n, args.seed)
    _write(args.out, render_graph_file(g))
    if args.witness is not None:
        _write(args.witness, render_model_file(model, {v: v + 1 for v in model.elements()}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hellyarc",
        description="Helly circular-arc graphs: recognition, models, canonization, isomorphism",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_limit(p):
        p.add_argument(
            "--limit",
            type=int,
            default=DEFAULT_CLIQUE_LIMIT,
            help="bound on enumerated maxcliques during validation",
        )

    p = sub.add_parser("recognize", help="decide whether a graph is HCA")
    p.add_argument("graph")
    add_limit(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("model", help="write a verified Helly arc model")
    p.add_argument("graph")
    p.add_argument("--out", default=None)
    add_limit(p)
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("canon", help="write the canonical model and its digest")
    p.add_argument("graph")
    p.add_argument("--out", default=None)
    add_limit(p)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("iso", help="decide isomorphism of two HCA graphs")
    p.add_argument("graph1")
    p.add_argument("graph2")
    add_limit(p)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("maxcliques", help="print all maxcliques of an HCA graph")
    p.add_argument("graph")
    add_limit(p)
    p.set_defaults(func=cmd_maxcliques)

    p = sub.add_parser("gen", help="generate a seeded random HCA graph")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.add_argument("--witness", default=None)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ResourceLimit, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
