"""Property suite run against a single graph (``leavitt selfcheck``)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from . import oracles
from .classify import EquivalenceViolation, is_purely_infinite, is_purely_infinite_simple
from .config import Bounds, SelfcheckConfig
from .graph import (Graph, all_hereditary_saturated, condition_K, condition_L,
                    csp_at_least_two, hereditary_saturated_closure, is_hereditary_saturated,
                    maximal_tails, quotient_graph, simple_cycles)
from .kernel import (Element, diag, reduce_to_vertex, scalar, vertex_properly_infinite_witness,
                     verify_K_membership, verify_precsim)
from .kernel.algebra import normalize
from .literals import format_element
from .monoid import (MonoidVector, RefinementMatrix, monoid_equal, monoid_leq, random_walk, refine,
                     verify_equal, verify_leq, verify_refinement)
from .sampling import random_element, random_raw, random_vector


@dataclass
class PropertyResult:
    name: str
    passed: bool
    checked: int = 0
    counterexample: str = ""

    def to_json(self) -> dict:
        out = {"property": self.name, "passed": self.passed, "checked": self.checked}
        if self.counterexample:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class _Check:
    name: str
    checked: int = 0
    failure: str = ""

    def ok(self, cond: bool, detail) -> bool:
        self.checked += 1
        if not cond and not self.failure:
            self.failure = detail() if callable(detail) else str(detail)
        return cond

    def result(self) -> PropertyResult:
        return PropertyResult(self.name, not self.failure, self.checked, self.failure)


def _subsets(g: Graph):
    for k in range(len(g.vertices) + 1):
        yield from (frozenset(c) for c in combinations(g.vertices, k))


def _graph_properties(g: Graph, b: Bounds) -> list[PropertyResult]:
    out = []
    c = _Check("closure is the least hereditary saturated superset")
    for s in _subsets(g):
        h = hereditary_saturated_closure(g, s)
        c.ok(h == oracles.closure(g, s) and hereditary_saturated_closure(g, h) == h
             and is_hereditary_saturated(g, h), lambda: f"s={sorted(s)}")
    out.append(c.result())

    c = _Check("lattice and maximal tails match brute force")
    c.ok(set(all_hereditary_saturated(g, b.lattice_cap)) == set(oracles.hereditary_saturated_sets(g)),
         "lattice differs")
    c.ok(set(maximal_tails(g, b.lattice_cap)) == set(oracles.tails(g)), "maximal tails differ")
    out.append(c.result())

    c = _Check("simple cycles match brute force")
    mine = simple_cycles(g)
    c.ok(len(mine) == len(oracles.cycles(g)) and
         {tuple(sorted(x)) for x in mine} == oracles.cycles(g), "cycle sets differ")
    out.append(c.result())

    c = _Check("tail and Condition (K) criteria agree; purely infinite simple cross-check")
    try:
        pi = is_purely_infinite(g, b.lattice_cap).value
        pis = is_purely_infinite_simple(g, b.lattice_cap).value
        c.ok(True, "")
    except EquivalenceViolation as exc:
        c.ok(False, str(exc))
        pi = pis = False
    out.append(c.result())

    c = _Check("quotients: (K) gives (L); pure infiniteness passes down")
    full = frozenset(g.vertices)
    for h in all_hereditary_saturated(g, b.lattice_cap):
        if h == full:
            continue
        q = quotient_graph(g, h)
        c.ok(not condition_K(g) or condition_L(q), lambda: f"H={sorted(h)}")
        c.ok(not pi or is_purely_infinite(q, b.lattice_cap).value, lambda: f"H={sorted(h)}")
    if pis:
        c.ok(maximal_tails(g, b.lattice_cap) == [full], "E^0 is not the only maximal tail")
    out.append(c.result())
    return out


def _algebra_properties(g: Graph, cfg: SelfcheckConfig, rng: random.Random) -> list[PropertyResult]:
    out = []
    c = _Check("normal form is order independent and matches the expansion oracle")
    for _ in range(cfg.samples):
        raw = random_raw(g, rng, cfg.max_terms, cfg.max_len)
        x = normalize(g, raw)
        y = normalize(g, raw, rng=random.Random(rng.random()))
        c.ok(x == y, lambda: f"orders disagree on {raw}")
        c.ok(oracles.equal_in_algebra(g, [(m, k) for k, m in raw], x.terms.items()),
             lambda: f"oracle disagrees on {raw}")
    out.append(c.result())

    c = _Check("ring laws and involution")
    for _ in range(cfg.samples):
        x, y, z = (random_element(g, rng, cfg.max_terms, cfg.max_len) for _ in range(3))
        c.ok((x * y) * z == x * (y * z), lambda: f"associativity: {x} | {y} | {z}")
        c.ok(x * (y + z) == x * y + x * z, lambda: f"distributivity: {x} | {y} | {z}")
        c.ok((x * y).star() == y.star() * x.star() and x.star().star() == x,
             lambda: f"involution: {x} | {y}")
    out.append(c.result())

    c = _Check("relations: sum ee* = v, orthogonal range projections")
    for v in g.vertices:
        outs = g.out_edges[v]
        if not outs:
            continue
        total = Element.zero(g)
        for e in outs:
            total = total + Element.path(g, [e]) * Element.ghost(g, [e])
        c.ok(total == Element.vertex(g, v), lambda: f"at {v}: {format_element(total)}")
        for e, f in combinations(outs, 2):
            pe = Element.path(g, [e]) * Element.ghost(g, [e])
            pf = Element.path(g, [f]) * Element.ghost(g, [f])
            c.ok(not (pe * pf), lambda: f"{e}, {f}")
    out.append(c.result())

    c = _Check("vertex witnesses verify, including the 2x2 identity")
    for v in g.vertices:
        if csp_at_least_two(g, v):
            w = vertex_properly_infinite_witness(g, v)
            a = Element.vertex(g, v)
            c.ok(verify_precsim(g, diag(g, [a, a]), scalar(a), w), lambda: f"vertex {v}")
            c.ok(verify_K_membership(g, a, a, w), lambda: f"2x2 identity at {v}")
    out.append(c.result())

    if condition_L(g):
        c = _Check("reduce_to_vertex witnesses verify")
        for _ in range(cfg.samples):
            x = random_element(g, rng, cfg.max_terms, cfg.max_len, nonzero=True)
            w, v = reduce_to_vertex(g, x)
            c.ok(verify_precsim(g, scalar(Element.vertex(g, v)), scalar(x), w), lambda: str(x))
        out.append(c.result())
    return out


def _monoid_properties(g: Graph, cfg: SelfcheckConfig, b: Bounds,
                       rng: random.Random) -> list[PropertyResult]:
    out = []
    c = _Check("two closed simple paths give 2v <= v")
    for v in g.vertices:
        if csp_at_least_two(g, v):
            vv = MonoidVector({v: 1})
            r = monoid_leq(g, vv * 2, vv, 4, b.search_cap)
            c.ok(verify_leq(g, vv * 2, vv, r), lambda: f"vertex {v}")
    out.append(c.result())

    c = _Check("found equalities, orders and refinements re-verify")
    for _ in range(cfg.samples):
        x = random_vector(g, rng)
        y = random_walk(g, rng, x, rng.randint(0, 3))
        r = monoid_equal(g, x, y, b.eq_depth, b.search_cap)
        c.ok(verify_equal(g, x, y, r), lambda: f"{x.format(g)} = {y.format(g)}")
        if y.is_zero():
            c.ok(x.is_zero(), lambda: f"conicality: {x.format(g)} = 0")
        part = random_vector(g, rng, 2)
        r = monoid_leq(g, part, y + part, b.eq_depth, b.search_cap)
        c.ok(verify_leq(g, part, y + part, r), lambda: f"{part.format(g)} <= ...")
        x2 = random_vector(g, rng, 2)
        total = random_walk(g, rng, x + x2, rng.randint(0, 2))
        y1 = total.restrict(rng.sample(g.vertices, rng.randint(0, len(g.vertices))))
        y2 = total - y1
        z = refine(g, x, x2, y1, y2, b.eq_depth, b.search_cap)
        if z.found:
            (z11, z12), (z21, z22) = z.witness["matrix"]
            c.ok(verify_refinement(g, x, x2, y1, y2, RefinementMatrix(z11, z12, z21, z22),
                                   b.eq_depth), lambda: "refinement")
    out.append(c.result())
    return out


def run_selfcheck(g: Graph, cfg: SelfcheckConfig = SelfcheckConfig(),
                  bounds: Bounds = Bounds()) -> list[PropertyResult]:
    rng = random.Random(cfg.seed)
    return (_graph_properties(g, bounds) + _algebra_properties(g, cfg, rng)
            + _monoid_properties(g, cfg, bounds, rng))
