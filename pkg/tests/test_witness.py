import random

import pytest
from hypothesis import given, settings

from leavitt.graph import Graph, condition_L, csp_at_least_two
from leavitt.kernel import (Element, KernelError, PreconditionError, SearchBudget, Unknown,
                            bounded_properly_infinite_search, constructive_properly_infinite,
                            diag, reduce_to_vertex, scalar, subequivalence_from_path,
                            vertex_properly_infinite_witness, verify_K_membership,
                            verify_precsim)
from leavitt.literals import format_element, parse_element
from leavitt.sampling import random_element

from conftest import corpus, small_graphs

ROSE2 = corpus("rose2")


def pi_target(g, a):
    return diag(g, [a, a]), scalar(a)


class TestVertexWitness:
    def test_rose2(self):
        w = vertex_properly_infinite_witness(ROSE2, "v")
        assert [format_element(x) for x in (w.alpha[0, 0], w.alpha[1, 0])] == ["g(e1)", "g(e2)"]
        v = Element.vertex(ROSE2, "v")
        assert verify_precsim(ROSE2, *pi_target(ROSE2, v), w)
        assert verify_K_membership(ROSE2, v, v, w)

    def test_single_loop(self):
        with pytest.raises(PreconditionError, match=r"\|CSP\(v\)\| < 2"):
            vertex_properly_infinite_witness(corpus("loop"), "v")

    def test_parallel_circuits(self):
        g = corpus("double-circuit")
        w = vertex_properly_infinite_witness(g, "v")
        v = Element.vertex(g, "v")
        assert verify_precsim(g, *pi_target(g, v), w)

    @given(small_graphs())
    @settings(max_examples=120, deadline=None)
    def test_every_good_vertex(self, g):
        for u in g.vertices:
            if csp_at_least_two(g, u):
                a = Element.vertex(g, u)
                w = vertex_properly_infinite_witness(g, u)
                assert verify_precsim(g, *pi_target(g, a), w)
                assert verify_K_membership(g, a, a, w)


class TestPathSubequivalence:
    def test_examples(self):
        t = corpus("toeplitz")
        w = subequivalence_from_path(t, ["f"])
        assert verify_precsim(t, scalar(Element.vertex(t, "w")), scalar(Element.vertex(t, "v")), w)
        w = subequivalence_from_path(ROSE2, [], "v")
        v = Element.vertex(ROSE2, "v")
        assert verify_precsim(ROSE2, scalar(v), scalar(v), w)
        w = subequivalence_from_path(ROSE2, ["e1", "e1"])
        assert verify_precsim(ROSE2, scalar(v), scalar(v), w)

    def test_malformed(self):
        with pytest.raises(KernelError):
            subequivalence_from_path(corpus("toeplitz"), ["f", "e"])


class TestReduce:
    def test_examples(self):
        for text in ("e1", "v", "v + e1", "e1 ; g(e2) - 2 * e2.e2"):
            x = parse_element(ROSE2, text)
            w, u = reduce_to_vertex(ROSE2, x)
            assert verify_precsim(ROSE2, scalar(Element.vertex(ROSE2, u)), scalar(x), w)

    def test_vertex_gives_identity(self):
        w, u = reduce_to_vertex(ROSE2, Element.vertex(ROSE2, "v"))
        assert u == "v" and w.alpha[0, 0] == w.beta[0, 0] == Element.vertex(ROSE2, "v")

    def test_preconditions(self):
        with pytest.raises(KernelError):
            reduce_to_vertex(ROSE2, Element.zero(ROSE2))
        with pytest.raises(KernelError, match="\\(L\\)"):
            reduce_to_vertex(corpus("loop"), Element.vertex(corpus("loop"), "v"))

    @given(small_graphs())
    @settings(max_examples=80, deadline=None)
    def test_random(self, g):
        if not condition_L(g):
            return
        rng = random.Random(len(g.edges))
        for _ in range(5):
            x = random_element(g, rng, nonzero=True)
            w, u = reduce_to_vertex(g, x)
            assert verify_precsim(g, scalar(Element.vertex(g, u)), scalar(x), w)


class TestProperlyInfiniteSearch:
    def test_rose2_vertex(self):
        v = Element.vertex(ROSE2, "v")
        w = bounded_properly_infinite_search(ROSE2, v)
        assert verify_precsim(ROSE2, *pi_target(ROSE2, v), w)

    def test_rose2_sum(self):
        a = parse_element(ROSE2, "e1 + e2")
        assert constructive_properly_infinite(ROSE2, a) is not None
        w = bounded_properly_infinite_search(ROSE2, a)
        assert verify_precsim(ROSE2, *pi_target(ROSE2, a), w)

    def test_single_loop_unknown(self):
        g = corpus("loop")
        r = bounded_properly_infinite_search(g, Element.vertex(g, "v"), SearchBudget(max_len=2))
        assert isinstance(r, Unknown)

    def test_zero(self):
        with pytest.raises(PreconditionError):
            bounded_properly_infinite_search(ROSE2, Element.zero(ROSE2))

    def test_vertex_off_cycles(self):
        g = Graph.from_edges(["u", "w"], [("f", "u", "w"), ("g1", "w", "w"), ("g2", "w", "w")])
        a = Element.vertex(g, "u")
        w = constructive_properly_infinite(g, a)
        assert w is not None and verify_precsim(g, *pi_target(g, a), w)

    def test_twin_roses_elements(self):
        g = corpus("twin-roses")
        rng = random.Random(3)
        for _ in range(10):
            a = random_element(g, rng, 3, 2, nonzero=True)
            w = bounded_properly_infinite_search(g, a)
            assert not isinstance(w, Unknown)
            assert verify_precsim(g, *pi_target(g, a), w)
