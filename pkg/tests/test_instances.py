"""
Tests for generators and the claw-free corpus
"""

import networkx as nx
import pytest

from src.graph.graph import Graph
from src.graph.properties import claw_witness, is_connected, line_graph
from src.instances.corpus import claw_free_corpus, named_graphs
from src.instances.generators import (
    GeneratorSpec,
    SplitMix64,
    complete_graph,
    four_net_graph,
    named_graph,
    net_graph,
    random_connected,
    spider,
    star_graph,
)
from src.oracle.enumeration import matrix_tree_count


class TestSplitMix64:
    """Tests for the fixed generator"""

    def test_reference_output(self):
        """Test SplitMix64 against its reference output for seed 0"""
        assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF

    def test_deterministic(self):
        a, b = SplitMix64(99), SplitMix64(99)
        assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]

    def test_below(self):
        """Test below stays in range, reaches every value and rejects a zero bound"""
        rng = SplitMix64(1)
        values = [rng.below(7) for _ in range(200)]

        assert all(0 <= v < 7 for v in values)
        assert len(set(values)) == 7
        with pytest.raises(ValueError):
            rng.below(0)


class TestSpider:
    """Tests for spiders and their line graphs"""

    def test_one_edge_legs_form_a_star(self):
        """Test a spider with one-edge legs is a star"""
        assert spider(3, 1) == star_graph(3)

    def test_line_graph_of_three_leg_spider_is_net(self):
        tree = spider(3, 2)

        assert tree.vertex_count == 7
        assert line_graph(tree) == net_graph()

    def test_line_graph_of_four_leg_spider_is_four_net(self):
        """Test L(spider(4, 2)) is the four-net"""
        lg = line_graph(spider(4, 2))

        assert lg == four_net_graph()
        assert nx.is_isomorphic(lg.to_networkx(), nx.line_graph(spider(4, 2).to_networkx()))

    @pytest.mark.parametrize("legs,length", [(2, 1), (3, 0)])
    def test_bounds(self, legs, length):
        """Test spider parameters outside their range are rejected"""
        with pytest.raises(ValueError):
            spider(legs, length)


class TestRandomConnected:
    """Tests for random_connected"""

    def test_no_extra_edges_gives_a_tree(self):
        """Test random_connected without extra edges returns a tree"""
        g = random_connected(5, 0, seed=17)

        assert g.edge_count == 4
        assert is_connected(g)
        assert nx.is_tree(g.to_networkx())

    def test_saturation(self):
        """Test the maximum extra edge count gives a complete graph"""
        assert random_connected(5, 6, seed=3) == complete_graph(5)

    def test_too_many_extra_edges(self):
        with pytest.raises(ValueError):
            random_connected(5, 10, seed=3)

    def test_deterministic(self):
        assert random_connected(8, 5, seed=42) == random_connected(8, 5, seed=42)

    def test_always_connected(self):
        """Test random graphs are connected for many seeds"""
        for seed in range(50):
            assert is_connected(random_connected(9, seed % 7, seed))


class TestGeneratorSpec:
    """Tests for the generator spec syntax"""

    def test_parse_and_build(self):
        """Test parsing a spec, building it and printing it back"""
        spec = GeneratorSpec.parse("line-of-spider:legs=3,length=2")

        assert spec.parameters == {"legs": 3, "length": 2}
        assert spec.build() == net_graph()
        assert spec.to_text() == "line-of-spider:legs=3,length=2"

    def test_identical_specs_give_identical_graphs(self):
        """Test equal spec text gives an equal graph and digest"""
        a = GeneratorSpec.parse("line-of-random:nv=7,extra=4", seed=5)
        b = GeneratorSpec.parse("line-of-random:extra=4,nv=7", seed=5)

        assert a == b
        assert a.build() == b.build()
        assert a.digest() == b.digest()
        assert len(a.digest()) == 12

    def test_seed_changes_digest_for_random_kinds_only(self):
        """Test the seed enters the digest only for random kinds"""
        assert GeneratorSpec.parse("random-connected:nv=6", 1).digest() != \
            GeneratorSpec.parse("random-connected:nv=6", 2).digest()
        assert GeneratorSpec.parse("named:name=C5", 1).digest() == GeneratorSpec.parse("named:name=C5", 2).digest()

    def test_probability_parameter(self):
        assert GeneratorSpec.parse("random-connected:nv=5,p=1.0").build() == complete_graph(5)

    def test_named(self):
        """Test named specs and named_graph"""
        assert GeneratorSpec.parse("named:name=four-net").build() == four_net_graph()
        assert named_graph("C5").edge_count == 5
        assert named_graph("K4") == complete_graph(4)
        assert named_graph("P3") == Graph(3, [(0, 1), (1, 2)])
        assert named_graph("S3") == star_graph(3)

    @pytest.mark.parametrize("text", [
        "tree:nv=4",
        "named:name",
        "named:name=Q7",
        "random-connected:extra=2",
    ])
    def test_invalid(self, text):
        """Test malformed spec text is rejected"""
        with pytest.raises(ValueError):
            GeneratorSpec.parse(text).build()


class TestCorpus:
    """Tests for the claw-free corpus"""

    def test_named_members(self):
        """Test the named members and their order"""
        ids = [entry.graph_id for entry in named_graphs()]

        assert ids[:6] == [
            "named:name=C5", "named:name=C6", "named:name=K4",
            "named:name=K5", "named:name=net", "named:name=four-net",
        ]
        assert len(ids) == len(set(ids)) == 8

    def test_small_budget_keeps_named_graphs(self):
        """Test a zero budget keeps only the named graphs"""
        corpus = claw_free_corpus(size_budget=0)
        assert [e.graph_id for e in corpus] == [e.graph_id for e in named_graphs()]

    def test_tree_limit_drops_members(self):
        """Test members above the spanning-tree limit are dropped"""
        corpus = claw_free_corpus(size_budget=0, tree_limit=100)
        ids = [entry.graph_id for entry in corpus]

        assert "named:name=K5" not in ids
        assert "named:name=K4" in ids
        for entry in corpus:
            assert matrix_tree_count(entry.graph) <= 100

    def test_members_are_connected_claw_free_and_small(self):
        corpus = claw_free_corpus(size_budget=25, seed=3)

        assert len(corpus) == 8 + 25
        for entry in corpus:
            assert is_connected(entry.graph)
            assert claw_witness(entry.graph) is None
            assert entry.graph.vertex_count <= 12

    def test_deterministic_and_reproducible_from_ids(self):
        """Test members rebuild from their ids"""
        first = claw_free_corpus(size_budget=10, seed=8)
        second = claw_free_corpus(size_budget=10, seed=8)

        assert first == second
        for entry in first[8:]:
            text, _, seed = entry.graph_id.rpartition("@")
            assert GeneratorSpec.parse(text, int(seed)).build() == entry.graph
