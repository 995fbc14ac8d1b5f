import json
import subprocess
import sys

import pytest

from conftest import FIG3_EDGES, HAJOS_EDGES, TRIANGLE_PENDANTS_EDGES
from hellyarc.cli import main, parse_graph_file, render_graph_file
from hellyarc.errors import GraphParseError
from hellyarc.graphs import Graph


def graph_text(n, edges):
    return f"p edge {n} {len(edges)}\n" + "".join(
        f"e {u + 1} {v + 1}\n" for u, v in edges
    )


@pytest.fixture
def fig3_file(tmp_path):
    path = tmp_path / "fig3.col"
    path.write_text(graph_text(8, FIG3_EDGES))
    return str(path)


@pytest.fixture
def bad_file(tmp_path):
    path = tmp_path / "bad.col"
    path.write_text(graph_text(6, TRIANGLE_PENDANTS_EDGES))
    return str(path)


class TestParser:
    def test_round_trip(self):
        g = Graph(5, [(0, 1), (2, 4)])
        assert parse_graph_file(render_graph_file(g)) == g

    def test_comments_ignored(self):
        g = parse_graph_file("c hello\np edge 2 1\nc mid\ne 1 2\n")
        assert g.n == 2 and g.adjacent(0, 1)

    @pytest.mark.parametrize(
        "text",
        [
            "e 1 2\n",                      # edge before problem line
            "p edge 2 1\ne 1 1\n",          # self-loop
            "p edge 2 2\ne 1 2\ne 2 1\n",   # duplicate edge
            "p edge 2 1\ne 1 3\n",          # out of range
            "p edge 2 2\ne 1 2\n",          # wrong edge count
            "p edge x y\n",                 # malformed counts
            "q edge 1 0\n",                 # unknown line
            "",                             # empty
        ],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(GraphParseError):
            parse_graph_file(text)


class TestVerbs:
    def test_recognize(self, fig3_file, bad_file, capsys):
        assert main(["recognize", fig3_file]) == 0
        assert capsys.readouterr().out.strip() == "HCA"
        assert main(["recognize", bad_file]) == 1
        assert capsys.readouterr().out.startswith("NOT-HCA:")

    def test_parse_error_exit_code(self, tmp_path, capsys):
        p = tmp_path / "x.col"
        p.write_text("p edge 2 1\ne 1 1\n")
        assert main(["recognize", str(p)]) == 2

    def test_model(self, fig3_file, tmp_path, capsys):
        out = tmp_path / "model.json"
        assert main(["model", fig3_file, "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["points"] == 16
        assert len(doc["arcs"]) == 8
        assert [a["vertex"] for a in doc["arcs"]] == list(range(1, 9))

    def test_model_not_hca(self, bad_file):
        assert main(["model", bad_file]) == 1

    def test_canon_digest_and_determinism(self, fig3_file, tmp_path, capsys):
        out1 = tmp_path / "c1.json"
        out2 = tmp_path / "c2.json"
        assert main(["canon", fig3_file, "--out", str(out1)]) == 0
        digest1 = capsys.readouterr().out.strip()
        assert main(["canon", fig3_file, "--out", str(out2)]) == 0
        digest2 = capsys.readouterr().out.strip()
        assert digest1 == digest2 and len(digest1) == 64
        assert out1.read_text() == out2.read_text()

    def test_canon_identical_for_isomorphic_inputs(self, tmp_path, capsys):
        perm = [5, 2, 7, 0, 3, 6, 1, 4]
        f1 = tmp_path / "a.col"
        f2 = tmp_path / "b.col"
        f1.write_text(graph_text(8, FIG3_EDGES))
        f2.write_text(graph_text(8, [(perm[u], perm[v]) for u, v in FIG3_EDGES]))
        o1, o2 = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["canon", str(f1), "--out", str(o1)]) == 0
        d1 = capsys.readouterr().out.strip()
        assert main(["canon", str(f2), "--out", str(o2)]) == 0
        d2 = capsys.readouterr().out.strip()
        assert d1 == d2
        assert o1.read_bytes() == o2.read_bytes()

    def test_iso(self, tmp_path, capsys):
        f1 = tmp_path / "a.col"
        f2 = tmp_path / "b.col"
        f1.write_text(graph_text(6, HAJOS_EDGES))
        perm = [3, 5, 0, 2, 4, 1]
        f2.write_text(graph_text(6, [(perm[u], perm[v]) for u, v in HAJOS_EDGES]))
        assert main(["iso", str(f1), str(f2)]) == 0
        out = capsys.readouterr().out
        lines = [l for l in out.splitlines() if "->" in l]
        assert len(lines) == 6

    def test_iso_negative(self, tmp_path, capsys):
        f1 = tmp_path / "p4.col"
        f2 = tmp_path / "claw.col"
        f1.write_text(graph_text(4, [(0, 1), (1, 2), (2, 3)]))
        f2.write_text(graph_text(4, [(0, 1), (0, 2), (0, 3)]))
        assert main(["iso", str(f1), str(f2)]) == 1
        assert capsys.readouterr().out.strip() == "NON-ISOMORPHIC"

    def test_iso_not_hca_exit_2(self, bad_file, fig3_file):
        assert main(["iso", bad_file, fig3_file]) == 2

    def test_maxcliques(self, fig3_file, capsys):
        assert main(["maxcliques", fig3_file]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == ["1 2 3", "1 8", "2 3 4 5", "3 4 5 6", "5 6 7", "6 7 8"]

    def test_gen_deterministic_and_hca(self, tmp_path, capsys):
        f1 = tmp_path / "g1.col"
        f2 = tmp_path / "g2.col"
        assert main(["gen", "6", "--seed", "1", "--out", str(f1)]) == 0
        assert main(["gen", "6", "--seed", "1", "--out", str(f2)]) == 0
        assert f1.read_bytes() == f2.read_bytes()
        assert main(["recognize", str(f1)]) == 0

    def test_gen_witness(self, tmp_path):
        f = tmp_path / "g.col"
        w = tmp_path / "w.json"
        assert main(["gen", "5", "--seed", "3", "--out", str(f), "--witness", str(w)]) == 0
        doc = json.loads(w.read_text())
        assert len(doc["arcs"]) == 5


class TestEntryPoint:
    def test_module_invocation(self, tmp_path):
        f = tmp_path / "k2.col"
        f.write_text("p edge 2 1\ne 1 2\n")
        proc = subprocess.run(
            [sys.executable, "-m", "hellyarc.cli", "recognize", str(f)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "HCA"
