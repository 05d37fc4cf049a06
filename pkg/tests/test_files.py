import pytest

from minorcover import files
from minorcover.chimera import ChimeraSpec, FaultSet, QubitCoord, apply_faults, build_chimera, virtualize
from minorcover.embedder import EmbeddingVerdict, embed_clique
from minorcover.faulty import IncompleteBipartite, check_no_clique_criteria
from minorcover.graph import Graph, complete_bipartite
from minorcover.msc import msc_complete_bipartite, verify_msc


class TestEdgeList:
    def test_round_trip(self, tmp_path):
        g = complete_bipartite(3, 3).without_edges([(0, 3)])
        p = tmp_path / "g.edges"
        files.write_edge_list(g, p, comments=["left 3", "right 3"])
        assert files.read_edge_list(p) == g

    def test_noncontiguous_ids_renumbered(self, tmp_path):
        g = Graph([10, 20, 30], [(10, 20), (20, 30)])
        p = tmp_path / "g.edges"
        files.write_edge_list(g, p)
        back = files.read_edge_list(p)
        assert back == Graph([0, 1, 2], [(0, 1), (1, 2)])

    def test_writes_are_stable(self, tmp_path):
        g = complete_bipartite(4, 4)
        a, b = tmp_path / "a.edges", tmp_path / "b.edges"
        files.write_edge_list(g, a)
        files.write_edge_list(g, b)
        assert a.read_bytes() == b.read_bytes()

    def test_isolated_vertices_survive(self, tmp_path):
        g = Graph(range(5), [(0, 1)])
        p = tmp_path / "g.edges"
        files.write_edge_list(g, p)
        assert files.read_edge_list(p).order == 5

    @pytest.mark.parametrize(
        "text,message",
        [
            ("e 0 1\n", "before p"),
            ("p 2 1\np 2 1\ne 0 1\n", "duplicate p"),
            ("p 2 1\ne 0 0\n", "self-loop"),
            ("p 2 1\ne 0 5\n", "out of range"),
            ("p 2 2\ne 0 1\ne 1 0\n", "duplicate edges"),
            ("p 2 2\ne 0 1\n", "promises"),
            ("p 2 0\nq 1 2\n", "unknown record"),
            ("p 2\n", "two counts"),
            ("p 2 1\ne 0\n", "two endpoints"),
            ("# nothing\n", "missing p"),
        ],
    )
    def test_malformed_inputs(self, tmp_path, text, message):
        p = tmp_path / "bad.edges"
        p.write_text(text)
        with pytest.raises(files.FormatError, match=message):
            files.read_edge_list(p)


class TestChimeraFiles:
    def test_round_trip(self, tmp_path):
        spec = ChimeraSpec(2, 3, 2)
        g = build_chimera(spec)
        p = tmp_path / "c.edges"
        files.write_chimera(g, spec, p)
        back, back_spec = files.read_chimera(p)
        assert back == g and back_spec == spec

    def test_faulty_round_trip(self, tmp_path):
        spec = ChimeraSpec(2, 2, 2)
        dead = QubitCoord(0, 0, 0, 1)
        g = apply_faults(build_chimera(spec), FaultSet(dead_qubits=frozenset([dead])), spec)
        p = tmp_path / "c.edges"
        files.write_chimera(g, spec, p, dead=[dead])
        back, _ = files.read_chimera(p)
        assert back.vertices == g.vertices
        assert back.edges == g.edges

    def test_header_required(self, tmp_path):
        p = tmp_path / "c.edges"
        files.write_edge_list(complete_bipartite(2, 2), p)
        with pytest.raises(files.FormatError, match="chimera"):
            files.read_chimera(p)

    def test_size_mismatch(self, tmp_path):
        p = tmp_path / "c.edges"
        p.write_text("# chimera 2 2 2\np 4 1\ne 0 1\n")
        with pytest.raises(files.FormatError, match="16"):
            files.read_chimera(p)


class TestVirtualHardwareFiles:
    def test_round_trip(self, tmp_path):
        spec = ChimeraSpec(2, 2, 2)
        vh = virtualize(build_chimera(spec), spec)
        p = tmp_path / "vh.txt"
        files.write_virtual_hardware(vh, p)
        back = files.read_virtual_hardware(p)
        assert back.graph == vh.graph
        assert back.labeling == vh.labeling
        assert back.chains == vh.chains
        assert back.spec == vh.spec

    def test_malformed(self, tmp_path):
        p = tmp_path / "vh.txt"
        p.write_text("# chimera 2 2 2\nv 0 left 0 1\n")
        with pytest.raises(files.FormatError, match="malformed v"):
            files.read_virtual_hardware(p)
        p.write_text("v 0 left : 0\n")
        with pytest.raises(files.FormatError, match="header"):
            files.read_virtual_hardware(p)


class TestMinorSequenceFiles:
    def test_round_trip_verifies(self, tmp_path):
        seq = msc_complete_bipartite(4, 4, seed=2)
        outdir = files.write_minor_sequence(seq, tmp_path / "seq")
        back = files.read_minor_sequence(outdir)
        assert len(back) == len(seq)
        report = verify_msc(back)
        assert report.ok, report.failures

    def test_bag_contents_survive(self, tmp_path):
        seq = msc_complete_bipartite(3, 3, seed=0)
        outdir = files.write_minor_sequence(seq, tmp_path / "seq")
        back = files.read_minor_sequence(outdir)
        # bags are relabeled but their member sets are preserved
        for (_, bags_a), (_, bags_b) in zip(seq.minors, back.minors):
            assert sorted(map(sorted, bags_a.values())) == sorted(map(sorted, bags_b.values()))

    def test_missing_pieces(self, tmp_path):
        with pytest.raises(files.FormatError, match="minor_0"):
            files.read_minor_sequence(tmp_path)
        seq = msc_complete_bipartite(2, 2, seed=0)
        outdir = files.write_minor_sequence(seq, tmp_path / "seq")
        (outdir / "bags_1.txt").unlink()
        with pytest.raises(files.FormatError, match="missing bag map"):
            files.read_minor_sequence(outdir)


class TestEmbeddingFiles:
    def test_round_trip(self, tmp_path):
        emb = embed_clique(ChimeraSpec(2, 2, 2), 5, seed=0)
        p = tmp_path / "emb.txt"
        files.write_embedding(emb, p, comments=["clique 5"])
        assert files.read_embedding(p) == emb

    def test_empty_rejected(self, tmp_path):
        p = tmp_path / "emb.txt"
        p.write_text("# nothing\n")
        with pytest.raises(files.FormatError):
            files.read_embedding(p)


class TestFormatters:
    def test_criteria_report_text(self):
        b = IncompleteBipartite.complete(5).without_edges([(0, 5)])
        text = files.format_criteria_report(check_no_clique_criteria(b))
        assert "verdict Inconclusive" in text
        assert "covering_matching (0,6) (1,5)" in text
        assert "required_edges 19" in text

    def test_msc_report_text(self):
        report = verify_msc(msc_complete_bipartite(3, 3, seed=0))
        text = files.format_msc_report(report)
        assert "cardinality 3" in text
        assert "complement_isolated_counts 0 1 4" in text
        assert "failures none" in text

    def test_verdict_text(self):
        assert files.format_verdict(EmbeddingVerdict(True)) == "verdict valid\n"
        bad = EmbeddingVerdict(False, "coverage", "edge (0,1) uncovered")
        assert "violation coverage" in files.format_verdict(bad)

    def test_write_table(self, tmp_path):
        p = tmp_path / "t.tsv"
        files.write_table(p, ["a", "b"], [[1, 2], [3, 4]])
        assert p.read_text() == "# a\tb\n1\t2\n3\t4\n"

    def test_write_bag_map(self, tmp_path):
        p = tmp_path / "bags.txt"
        files.write_bag_map({2: {5, 1}, 0: {3}}, p)
        assert p.read_text() == "bag 0 : 3\nbag 2 : 1 5\n"


class TestOutdir:
    def test_precedence(self, tmp_path, monkeypatch):
        monkeypatch.delenv("MINORCOVER_OUTDIR", raising=False)
        assert str(files.resolve_outdir()) == "."
        monkeypatch.setenv("MINORCOVER_OUTDIR", str(tmp_path))
        assert files.resolve_outdir() == tmp_path
        assert str(files.resolve_outdir("elsewhere")) == "elsewhere"
