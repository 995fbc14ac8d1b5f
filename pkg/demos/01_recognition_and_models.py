"""Recognizing Helly circular-arc graphs and building verified models.

A graph is Helly circular-arc (HCA) when it has an intersection model made of
circle arcs in which every pairwise-intersecting family shares a point.  This
script runs the recognizer on three small graphs: an 8-vertex HCA graph, the
3-sun (HCA, but with a maxclique that no single edge pins down), and a
triangle with pendant vertices, which has circular-arc models but no Helly
one.
"""

from hellyarc import Graph, NotHCA, helly_representation, validate_model

# an 8-vertex HCA graph with six maxcliques
wheelish = Graph(8, [
    (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4),
    (2, 5), (3, 5), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (7, 0),
])

# the 3-sun: triangle 0,1,2 plus a degree-2 vertex on each triangle edge
sun = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)])

# triangle with one pendant per corner: circular-arc but not Helly
pendant = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 0), (4, 1), (5, 2)])

for name, g in [("8-vertex", wheelish), ("3-sun", sun), ("pendant triangle", pendant)]:
    print(f"--- {name} (n={g.n}, m={g.edge_count()})")
    try:
        rep = helly_representation(g)
    except NotHCA as exc:
        print(f"  NOT HCA: {exc.reason}")
        continue
    print(f"  HCA; model on {rep.model.m} circle points:")
    for v in range(g.n):
        arc = rep.model.arcs[rep.assignment[v]]
        print(f"    vertex {v}: arc [{arc.start}, {arc.end}]")
    report = validate_model(g, rep.model, rep.assignment)
    print(f"  validation: {'ok' if report.ok else report.problems}")
