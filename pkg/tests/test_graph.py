import json
from itertools import islice

import pytest
from hypothesis import given, settings

from leavitt import oracles
from leavitt.graph import (Graph, GraphError, LatticeTooLarge, all_hereditary_saturated,
                           closed_simple_paths, condition_K, condition_L, connects_to_cycle_in,
                           csp_at_least_two, cycle_has_exit_in, hereditary_saturated_closure,
                           is_cycle, is_downward_directed, is_hereditary_saturated, load_graph,
                           maximal_tails, quotient_graph, restriction_graph, simple_cycles)

from conftest import corpus, small_graphs

fs = frozenset


class TestLoading:
    def test_rose2(self):
        g = corpus("rose2")
        assert g.vertices == ("v",) and [e.id for e in g.edges] == ["e1", "e2"]

    def test_toeplitz(self):
        g = corpus("toeplitz")
        assert len(g.vertices) == 2 and len(g.edges) == 2 and g.is_sink("w")

    def test_dangling_endpoint(self):
        text = json.dumps({"vertices": ["v"], "edges": [{"id": "e", "src": "x", "rng": "v"}]})
        with pytest.raises(GraphError, match="dangling endpoint"):
            load_graph(text)

    def test_duplicate_id(self):
        text = json.dumps({"vertices": ["v", "v"], "edges": []})
        with pytest.raises(GraphError, match="duplicate"):
            load_graph(text)

    def test_parse_error_has_location(self):
        with pytest.raises(GraphError, match="line 1"):
            load_graph('{"vertices": [')

    def test_empty_graph_rejected(self):
        with pytest.raises(GraphError):
            load_graph('{"vertices": [], "edges": []}')

    def test_round_trip(self):
        g = corpus("twin-roses")
        assert load_graph(json.dumps(g.to_json()), g.name) == g


class TestLattice:
    def test_closure_examples(self):
        t = corpus("toeplitz")
        assert hereditary_saturated_closure(t, {"w"}) == {"w"}
        assert hereditary_saturated_closure(t, {"v"}) == {"v", "w"}
        chain = corpus("chain3")
        assert hereditary_saturated_closure(chain, {"x"}) == {"v", "w", "x"}
        assert oracles.closure(chain, {"x"}) == {"v", "w", "x"}

    def test_lattice_examples(self):
        assert all_hereditary_saturated(corpus("rose2")) == [fs(), fs({"v"})]
        assert set(all_hereditary_saturated(corpus("toeplitz"))) == {fs(), fs({"w"}), fs({"v", "w"})}
        assert len(all_hereditary_saturated(corpus("free2"))) == 4

    def test_cap(self):
        g = Graph.from_edges([f"v{i}" for i in range(5)], [])
        with pytest.raises(LatticeTooLarge, match="too large"):
            all_hereditary_saturated(g, cap=4)
        with pytest.raises(LatticeTooLarge):
            maximal_tails(g, cap=4)

    def test_tail_examples(self):
        assert maximal_tails(corpus("rose2")) == [fs({"v"})]
        # {v} qualifies too: its complement {w} is hereditary saturated
        assert maximal_tails(corpus("toeplitz")) == [fs({"v", "w"}), fs({"v"})]
        assert set(oracles.tails(corpus("toeplitz"))) == {fs({"v", "w"}), fs({"v"})}
        assert set(maximal_tails(corpus("free2"))) == {fs({"u"}), fs({"v"})}

    @given(small_graphs())
    @settings(max_examples=150, deadline=None)
    def test_against_brute_force(self, g):
        assert set(all_hereditary_saturated(g)) == set(oracles.hereditary_saturated_sets(g))
        assert set(maximal_tails(g)) == set(oracles.tails(g))
        for m in maximal_tails(g):
            assert is_downward_directed(g, m)

    @given(small_graphs())
    @settings(max_examples=100, deadline=None)
    def test_closure_laws(self, g):
        subsets = oracles.hereditary_saturated_sets(g)
        for k, v in enumerate(g.vertices):
            s = {v} | set(g.vertices[:k:2])
            h = hereditary_saturated_closure(g, s)
            assert is_hereditary_saturated(g, h) and h >= s
            assert hereditary_saturated_closure(g, h) == h
            assert h == oracles.closure(g, s)
            assert hereditary_saturated_closure(g, s | h) == h  # monotone, idempotent
            assert h in subsets


class TestQuotients:
    def test_toeplitz(self):
        t = corpus("toeplitz")
        q = quotient_graph(t, {"w"})
        assert q.vertices == ("v",) and [e.id for e in q.edges] == ["e"]
        r = restriction_graph(t, {"w"})
        assert r.vertices == ("w",) and r.edges == ()

    def test_identities(self):
        g = corpus("twin-roses")
        assert quotient_graph(g, set()) == g
        assert restriction_graph(g, g.vertices).vertices == g.vertices
        assert restriction_graph(g, g.vertices).edges == g.edges

    def test_not_saturated(self):
        with pytest.raises(GraphError):
            quotient_graph(corpus("toeplitz"), {"v"})


class TestCycles:
    def test_examples(self):
        assert simple_cycles(corpus("rose2")) == [("e1",), ("e2",)]
        assert simple_cycles(Graph.from_edges(["v", "w"], [("a", "v", "w")])) == []
        g = Graph.from_edges(["v", "w"], [("a", "v", "w"), ("b", "w", "v"), ("c", "w", "w")])
        assert simple_cycles(g) == [("c",), ("a", "b")]

    @given(small_graphs())
    @settings(max_examples=150, deadline=None)
    def test_against_brute_force(self, g):
        cs = simple_cycles(g)
        assert {tuple(sorted(c)) for c in cs} == oracles.cycles(g)
        assert len(cs) == len(set(cs))
        assert all(is_cycle(g, c) for c in cs)

    def test_exits(self):
        t = corpus("toeplitz")
        assert cycle_has_exit_in(t, ("e",), {"v", "w"})
        assert not cycle_has_exit_in(t, ("e",), {"v"})
        assert cycle_has_exit_in(corpus("rose2"), ("e1",), {"v"})
        with pytest.raises(GraphError):
            cycle_has_exit_in(t, ("f",), {"v", "w"})


class TestClosedPaths:
    def test_examples(self):
        assert csp_at_least_two(corpus("rose2"), "v")
        assert not csp_at_least_two(corpus("loop"), "v")
        pump = Graph.from_edges(["v", "w"], [("a", "v", "w"), ("c", "w", "w"), ("b", "w", "v")])
        assert csp_at_least_two(pump, "v")
        assert len(list(closed_simple_paths(pump, "v", 6))) >= 2

    @given(small_graphs())
    @settings(max_examples=150, deadline=None)
    def test_matches_walk_enumeration(self, g):
        bound = 2 * len(g.edges) + 2
        for v in g.vertices:
            paths = list(islice(closed_simple_paths(g, v, bound), 2))
            assert len(set(paths)) == len(paths)
            assert csp_at_least_two(g, v) == (len(paths) >= 2)

    def test_conditions(self):
        assert condition_K(corpus("rose2")) and condition_L(corpus("rose2"))
        assert not condition_K(corpus("loop")) and not condition_L(corpus("loop"))
        assert not condition_K(corpus("toeplitz")) and condition_L(corpus("toeplitz"))

    @given(small_graphs())
    @settings(max_examples=150, deadline=None)
    def test_k_gives_l_on_quotients(self, g):
        if condition_K(g):
            for h in all_hereditary_saturated(g):
                if len(h) < len(g.vertices):
                    assert condition_L(quotient_graph(g, h))

    def test_connects(self):
        t = corpus("toeplitz")
        assert connects_to_cycle_in(t, "v", {"v", "w"})
        assert not connects_to_cycle_in(t, "w", {"v", "w"})
        chain = corpus("chain3")
        assert not any(connects_to_cycle_in(chain, v, chain.vertices) for v in chain.vertices)
        with pytest.raises(GraphError):
            connects_to_cycle_in(t, "w", {"v"})
