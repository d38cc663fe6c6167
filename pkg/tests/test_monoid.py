import random

import pytest
from hypothesis import given, settings, strategies as st

from leavitt import oracles
from leavitt.graph import (Graph, GraphError, all_hereditary_saturated, csp_at_least_two,
                           quotient_graph)
from leavitt.monoid import (HypothesisFailure, MonoidError, MonoidVector, RefinementMatrix,
                            decompose_2x_3y, fred_decompose, is_abelian_in_quotient,
                            is_irreducible_in_quotient, lift_decomposition, lift_multiple_leq,
                            monoid_equal, monoid_leq, project_to_quotient,
                            random_walk, refine, vector, verify_2x_3y, verify_chain,
                            verify_equal, verify_fred, verify_leq, verify_not_abelian,
                            verify_reducible, verify_refinement)

from conftest import corpus, small_graphs

ROSE2, FREE2 = corpus("rose2"), corpus("free2")
POINT = Graph.from_edges(["w"], [], "point")


def V(g, text):
    return vector(g, text)


class TestEquality:
    def test_examples(self):
        r = monoid_equal(ROSE2, V(ROSE2, "v"), V(ROSE2, "2v"))
        assert r.found and r.depth == 1 and verify_equal(ROSE2, V(ROSE2, "v"), V(ROSE2, "2v"), r)
        r = monoid_equal(FREE2, V(FREE2, "u"), V(FREE2, "v"), bound=30)
        assert r.outcome == "unknown"
        r = monoid_equal(ROSE2, V(ROSE2, "3v"), V(ROSE2, "3v"))
        assert r.found and r.depth == 0

    def test_verifier_rejects_bad_chain(self):
        t = corpus("toeplitz")
        assert verify_chain(t, [V(t, "v"), V(t, "v + w")])
        assert not verify_chain(t, [V(t, "v"), V(t, "w")])
        assert not verify_chain(t, [V(t, "v"), V(t, "2v + w")])

    def test_negative_multiplicity(self):
        with pytest.raises(MonoidError):
            MonoidVector({"v": -1})


class TestOrder:
    def test_examples(self):
        r = monoid_leq(ROSE2, V(ROSE2, "2v"), V(ROSE2, "v"))
        assert r.found and r.witness["z"].is_zero()
        assert verify_leq(ROSE2, V(ROSE2, "2v"), V(ROSE2, "v"), r)
        r = monoid_leq(FREE2, V(FREE2, "u"), V(FREE2, "u + v"))
        assert r.found and r.witness["z"] == V(FREE2, "v")
        assert monoid_leq(FREE2, V(FREE2, "u"), V(FREE2, "v")).outcome == "unknown"

    @given(small_graphs())
    @settings(max_examples=100, deadline=None)
    def test_two_paths_give_doubling(self, g):
        for v in g.vertices:
            if csp_at_least_two(g, v):
                x = V(g, v)
                assert verify_leq(g, x * 2, x, monoid_leq(g, x * 2, x, bound=6))


class TestRefinement:
    def test_free(self):
        r = refine(FREE2, V(FREE2, "u + v"), V(FREE2, "v"), V(FREE2, "u"), V(FREE2, "2v"))
        assert r.witness["matrix"] == [[V(FREE2, "u"), V(FREE2, "v")], [V(FREE2, "0"), V(FREE2, "v")]]

    def test_zero(self):
        z = MonoidVector()
        r = refine(FREE2, z, z, z, z)
        assert all(c.is_zero() for row in r.witness["matrix"] for c in row)

    def test_rose2(self):
        v = V(ROSE2, "v")
        r = refine(ROSE2, v, v, v, v)
        assert r.witness["matrix"] == [[v, MonoidVector()], [MonoidVector(), v]]

    def test_precondition(self):
        with pytest.raises(MonoidError, match="precondition"):
            refine(FREE2, V(FREE2, "u"), V(FREE2, "0"), V(FREE2, "v"), V(FREE2, "0"))

    @given(small_graphs(), st.integers(0, 10**6))
    @settings(max_examples=80, deadline=None)
    def test_random_instances(self, g, seed):
        rng = random.Random(seed)
        x1, x2 = (MonoidVector({rng.choice(g.vertices): rng.randint(0, 2)}) for _ in range(2))
        total = random_walk(g, rng, x1 + x2, 2)
        keep = rng.sample(g.vertices, rng.randint(0, len(g.vertices)))
        y1 = total.restrict(keep)
        y2 = total - y1
        r = refine(g, x1, x2, y1, y2, bound=8)
        if r.found:
            (a, b), (c, d) = r.witness["matrix"]
            assert verify_refinement(g, x1, x2, y1, y2, RefinementMatrix(a, b, c, d))


class TestFred:
    def test_naturals(self):
        w = V(POINT, "w")
        r = fred_decompose(POINT, 2, w * 3, w * 4, w * 2)
        assert r.witness["parts"] == [w, MonoidVector(), w * 2]
        assert (1, 0, 2) in oracles.fred_in_naturals(2, 3, 4, 2)
        assert verify_fred(POINT, 2, w * 3, w * 4, w * 2, r.witness)

    def test_n_one(self):
        x = V(FREE2, "u + 2v")
        r = fred_decompose(FREE2, 1, x, x, MonoidVector())
        assert r.witness["parts"] == [MonoidVector(), x]

    def test_rose2(self):
        v = V(ROSE2, "v")
        r = fred_decompose(ROSE2, 2, v, v, v)
        assert verify_fred(ROSE2, 2, v, v, v, r.witness)

    def test_precondition(self):
        w = V(POINT, "w")
        with pytest.raises(MonoidError):
            fred_decompose(POINT, 2, w, w, w * 5)


class TestDecompose23:
    def test_rose2(self):
        v = V(ROSE2, "v")
        r = decompose_2x_3y(ROSE2, v)
        assert (r.witness["x"], r.witness["y"]) == (v, v)
        assert verify_2x_3y(ROSE2, v, r.witness)

    def test_naturals(self):
        w = V(POINT, "w")
        r = decompose_2x_3y(POINT, w * 5)
        assert (r.witness["x"], r.witness["y"]) == (w, w)

    def test_hypothesis_fails(self):
        with pytest.raises(HypothesisFailure, match="irreducible"):
            decompose_2x_3y(POINT, V(POINT, "w"))


class TestQuotients:
    def test_irreducible(self):
        w = V(POINT, "w")
        assert is_irreducible_in_quotient(POINT, w).outcome == "irreducible"
        r = is_irreducible_in_quotient(POINT, w * 2)
        assert r.outcome == "reducible" and (r.witness["a"], r.witness["b"]) == (w, w)
        r = is_irreducible_in_quotient(ROSE2, V(ROSE2, "v"))
        assert r.outcome == "reducible" and verify_reducible(ROSE2, V(ROSE2, "v"), r.witness)
        assert is_irreducible_in_quotient(ROSE2, V(ROSE2, "v"), {"v"}).outcome == "zero"

    def test_abelian(self):
        w = V(POINT, "w")
        assert is_abelian_in_quotient(POINT, w).outcome == "abelian"
        r = is_abelian_in_quotient(ROSE2, V(ROSE2, "v"))
        assert r.outcome == "not_abelian" and r.witness["a"] == V(ROSE2, "v")
        assert verify_not_abelian(ROSE2, V(ROSE2, "v"), r.witness)
        r = is_abelian_in_quotient(POINT, w * 2)
        assert r.outcome == "not_abelian" and r.witness["a"] == w

    def test_projection(self):
        t = corpus("toeplitz")
        assert project_to_quotient(t, {"w"}, V(t, "v + 2w")) == V(t, "v")
        assert project_to_quotient(t, set(), V(t, "v + 2w")) == V(t, "v + 2w")
        tw = corpus("twin-roses")
        assert project_to_quotient(tw, {"w"}, V(tw, "w")).is_zero()
        with pytest.raises(GraphError):
            project_to_quotient(t, {"v"}, V(t, "v"))

    @given(small_graphs(), st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_multiple_lift(self, g, seed):
        rng = random.Random(seed)
        full = frozenset(g.vertices)
        hs = [h for h in all_hereditary_saturated(g) if h != full]
        h = rng.choice(hs)
        q = quotient_graph(g, h)
        x = MonoidVector({rng.choice(g.vertices): 1})
        u = random_walk(g, rng, x * 2 + MonoidVector({rng.choice(g.vertices): 1}), 2)
        xb, ub = project_to_quotient(g, h, x), project_to_quotient(g, h, u)
        if not monoid_leq(q, xb * 2, ub, 8).found:
            return
        r = lift_multiple_leq(g, h, 2, x, u, bound=8)
        assert r.found
        xp, c = r.witness["x_prime"], r.witness["c"]
        assert set(c) <= h and verify_chain(g, r.witness["chain"])
        assert r.witness["chain"][0] == xp + c and r.witness["chain"][-1] == x
        assert verify_leq(g, xp * 2, u, monoid_leq(g, xp * 2, u, 8))

    @given(small_graphs(), st.integers(0, 10**6))
    @settings(max_examples=60, deadline=None)
    def test_decomposition_lift(self, g, seed):
        rng = random.Random(seed)
        full = frozenset(g.vertices)
        h = rng.choice([h for h in all_hereditary_saturated(g) if h != full])
        xs = [MonoidVector({rng.choice(g.vertices): 1}) for _ in range(2)]
        ns = [1, 2]
        u = random_walk(g, rng, xs[0] + xs[1] * 2 + MonoidVector({rng.choice(g.vertices): 1}), 2)
        q = quotient_graph(g, h)
        ub = project_to_quotient(g, h, u)
        rhs = sum((project_to_quotient(g, h, x) * n for n, x in zip(ns, xs)), MonoidVector())
        if not monoid_equal(q, ub, rhs, 8).found:
            return
        r = lift_decomposition(g, h, ns, xs, u, bound=8)
        assert r.found
        ys = r.witness["ys"]
        for y, x in zip(ys, xs):
            yb, xb = project_to_quotient(g, h, y), project_to_quotient(g, h, x)
            assert verify_equal(q, yb, xb, monoid_equal(q, yb, xb, 8))
        total = ys[0] + ys[1] * 2
        assert verify_leq(g, total, u, monoid_leq(g, total, u, 8))


@given(small_graphs(), st.integers(0, 10**6))
@settings(max_examples=100, deadline=None)
def test_conical(g, seed):
    """A class containing 0 is {0}: no relation move starts from 0 and none
    ends there from a nonzero vector."""
    rng = random.Random(seed)
    x = MonoidVector({rng.choice(g.vertices): rng.randint(1, 2)})
    assert monoid_equal(g, x, MonoidVector(), bound=6).outcome == "unknown"
    assert random_walk(g, rng, x, 4).size >= 1
