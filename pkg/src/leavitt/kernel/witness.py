"""Witness construction for ≾, K(a) and proper infiniteness in L_K(E).

Everything returned here is an explicit pair of matrices; callers are
expected to re-check them with ``verify_precsim`` rather than trust the
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from ..graph import Graph, closed_simple_paths, condition_L, csp_at_least_two, is_path
from .algebra import Element, KernelError, Monomial
from .matrix import Witness, column, diag, row, scalar, verify_precsim, witness_block_sum


class PreconditionError(KernelError):
    pass


@dataclass(frozen=True)
class Unknown:
    """Inconclusive search outcome; never a claim that no witness exists."""

    reason: str
    explored: int = 0


def _path(g: Graph, p: Sequence[str], v: str | None = None) -> Element:
    return Element.monomial(g, p=p, v=v)


def _ghost(g: Graph, p: Sequence[str], v: str | None = None) -> Element:
    return Element.monomial(g, q=p, v=v)


def identity_witness(x: Element) -> Witness:
    """x ≾ x through x = 1 x 1."""
    one = Element.one(x.graph)
    return Witness(scalar(one), scalar(one))


def two_csps(g: Graph, v: str) -> tuple[tuple[str, ...], tuple[str, ...]]:
    if not csp_at_least_two(g, v):
        raise PreconditionError(f"|CSP({v})| < 2: no properly infinite witness from closed paths")
    found = []
    for p in closed_simple_paths(g, v, 3 * len(g.vertices) + 1):
        found.append(p)
        if len(found) == 2:
            return found[0], found[1]
    raise KernelError(f"internal: could not locate two closed simple paths at {v}")


def vertex_properly_infinite_witness(g: Graph, v: str) -> Witness:
    """v ⊕ v ≾ v from two distinct closed simple paths mu, nu at v:
    alpha = col(mu*, nu*), beta = row(mu, nu)."""
    mu, nu = two_csps(g, v)
    return Witness(column(g, [_ghost(g, mu), _ghost(g, nu)]),
                   row(g, [_path(g, mu), _path(g, nu)]))


def subequivalence_from_path(g: Graph, p: Sequence[str], v: str | None = None) -> Witness:
    """For a path p from v to w, the witness (p*, p) of w ≾ v.

    A trivial path is given as ``p=()`` together with its vertex."""
    p = tuple(p)
    if p and not is_path(g, p):
        raise KernelError(f"malformed path {'.'.join(p)}")
    if not p and v not in g.vertex_index:
        raise KernelError("trivial path needs a vertex")
    if p and v is not None and g.s(p[0]) != v:
        raise KernelError(f"path does not start at {v}")
    return Witness(scalar(_ghost(g, p, v)), scalar(_path(g, p, v)))


# -- reduction of an arbitrary element to a vertex ---------------------------

def _path_key(g: Graph, m: Monomial):
    return (len(m.p), [g.edge_index[e] for e in m.p])


def reduce_to_vertex(g: Graph, x: Element, start: str | None = None) -> tuple[Witness, str]:
    """Find alpha, beta with alpha x beta = v for a vertex v (1x1 witness of v ≾ x).

    Needs every cycle to have an exit.  ``start`` picks the vertex used for
    the initial right multiplication; default is the first vertex u in
    declaration order with x u != 0.
    """
    if not x:
        raise PreconditionError("cannot reduce the zero element")
    if not condition_L(g):
        raise PreconditionError("Condition (L) fails: some cycle has no exit")
    alpha = Element.one(g)
    beta = Element.one(g)
    budget = x.ghost_length() + len(x) + 4
    steps = 0

    def tick():
        nonlocal steps
        steps += 1
        if steps > budget:
            raise KernelError("internal: reduce_to_vertex exceeded its step budget")

    # (1) right-multiply by a vertex
    candidates = [start] if start is not None else list(g.vertices)
    for u in candidates:
        y = x * Element.vertex(g, u)
        if y:
            x, beta, w = y, Element.vertex(g, u), u
            break
    else:
        raise PreconditionError(f"x * {start} = 0")

    # (2) strip ghost edges by right-multiplying with real edges
    while not x.is_real():
        tick()
        for e in g.out_edges[w]:
            y = x * _path(g, (e,))
            if y:
                x, beta, w = y, beta * _path(g, (e,)), g.r(e)
                break
        else:
            raise KernelError("internal: no edge keeps x nonzero")

    # (3) left-multiply by p1* for a minimal-degree path p1
    p1 = min(x.terms, key=lambda m: _path_key(g, m)).p
    if p1:
        tick()
        x = _ghost(g, p1) * x
        alpha = _ghost(g, p1) * alpha
    # (4) conjugate by the base vertex
    wv = Element.vertex(g, w)
    x = wv * x * wv
    alpha, beta = wv * alpha, beta * wv

    # (5) cut away closed paths through exits until one term remains
    while len(x) > 1:
        tick()
        p2 = min((m for m in x.terms if m.p), key=lambda m: _path_key(g, m)).p
        first_return = next(i for i, e in enumerate(p2) if g.r(e) == w)
        simple = p2[:first_return + 1]
        for i, e in enumerate(simple):
            others = [f for f in g.out_edges[g.s(e)] if f != e]
            if others:
                q, f = simple[:i], others[0]
                break
        else:
            raise KernelError(f"internal: closed simple path {'.'.join(simple)} has no exit")
        left = _ghost(g, q + (f,))
        right = _path(g, q + (f,))
        x = left * x * right
        alpha, beta = left * alpha, beta * right
        w = g.r(f)
    (m, c), = x.terms.items()
    if m != Monomial((), (), w):
        raise KernelError("internal: reduction did not end at a vertex")
    alpha = alpha.scale(Fraction(1) / c)
    return Witness(scalar(alpha), scalar(beta)), w


# -- proper infiniteness -----------------------------------------------------

def vertex_expansion(g: Graph, z: str) -> list[tuple[tuple[str, ...], str]] | None:
    """Write z = sum_l p_l u_l p_l* with every u_l based at two closed simple
    paths, by repeated use of v = sum ee*.  Returns [(p_l, u_l)] or None if
    some branch runs into a sink or fails to reach such a vertex."""
    good: dict[str, bool] = {}

    def is_good(u):
        if u not in good:
            good[u] = csp_at_least_two(g, u)
        return good[u]

    leaves = []
    stack = [((), z)]
    limit = len(g.vertices)
    while stack:
        p, u = stack.pop()
        if is_good(u):
            leaves.append((p, u))
            continue
        if g.is_sink(u) or len(p) >= limit:
            return None
        for e in reversed(g.out_edges[u]):
            stack.append((p + (e,), g.r(e)))
    return leaves


def vertex_double_witness(g: Graph, z: str) -> Witness | None:
    """z ⊕ z ≾ z for a vertex z, possibly not itself on two closed simple
    paths, by pushing the two-closed-path witnesses of the expansion leaves
    back to z."""
    leaves = vertex_expansion(g, z)
    if leaves is None:
        return None
    zero = Element.zero(g)
    a1 = a2 = b1 = b2 = zero
    for p, u in leaves:
        mu, nu = two_csps(g, u)
        pe, ps = _path(g, p, u), _ghost(g, p, u)
        a1 = a1 + pe * _ghost(g, mu) * ps
        a2 = a2 + pe * _ghost(g, nu) * ps
        b1 = b1 + pe * _path(g, mu) * ps
        b2 = b2 + pe * _path(g, nu) * ps
    return Witness(column(g, [a1, a2]), row(g, [b1, b2]))


def ideal_expressions(g: Graph, z: str) -> dict[str, list[tuple[Element, Element]]]:
    """For each vertex u in the hereditary saturated closure of {z}, pairs
    (X_i, Y_i) with u = sum_i X_i z Y_i."""
    zv = Element.vertex(g, z)
    expr: dict[str, list[tuple[Element, Element]]] = {z: [(zv, zv)]}
    changed = True
    while changed:
        changed = False
        for u in list(expr):
            for e in g.out_edges[u]:
                w = g.r(e)
                if w not in expr:
                    es, ep = _ghost(g, (e,)), _path(g, (e,))
                    expr[w] = [(es * X, Y * ep) for X, Y in expr[u]]
                    changed = True
        for v in g.vertices:
            if v in expr or g.is_sink(v):
                continue
            if all(g.r(e) in expr for e in g.out_edges[v]):
                pairs = []
                for e in g.out_edges[v]:
                    es, ep = _ghost(g, (e,)), _path(g, (e,))
                    pairs.extend((ep * X, Y * es) for X, Y in expr[g.r(e)])
                expr[v] = pairs
                changed = True
    return expr


def power_witness(g: Graph, z: Element, double: Witness, n: int) -> Witness:
    """z^{⊕n} ≾ z from a witness of z ⊕ z ≾ z."""
    w = identity_witness(z)
    ident = identity_witness(z)
    for _ in range(n - 1):
        w = witness_block_sum([w, ident]).then(double)
    return w


def constructive_properly_infinite(g: Graph, a: Element) -> Witness | None:
    """a ⊕ a ≾ a along v ≾ a (reduction), a ≾ v^{⊕N} (a lies in the ideal
    of v) and v^{⊕N} ≾ v (v properly infinite).  None if no start vertex
    makes all three available."""
    if not condition_L(g):
        return None
    for start in g.vertices:
        if not a * Element.vertex(g, start):
            continue
        w_va, z = reduce_to_vertex(g, a, start)
        double = vertex_double_witness(g, z)
        if double is None:
            continue
        expr = ideal_expressions(g, z)
        xs, ys = [], []
        for m, c in a.sorted_terms():
            u = m.v
            if u not in expr:
                break
            pe = Element(g, {Monomial(m.p, (), u): c})
            qs = Element(g, {Monomial((), m.q, u): Fraction(1)})
            for X, Y in expr[u]:
                xs.append(pe * X)
                ys.append(Y * qs)
        else:
            n = len(xs)
            zv = Element.vertex(g, z)
            a_in_z = Witness(row(g, xs), column(g, ys))  # a ≾ z^{⊕n}
            two = witness_block_sum([a_in_z, a_in_z])      # a ⊕ a ≾ z^{⊕2n}
            return two.then(power_witness(g, zv, double, 2 * n)).then(w_va)
    return None


@dataclass(frozen=True)
class SearchBudget:
    max_len: int = 2
    max_candidates: int = 20_000


def _monomials_up_to(g: Graph, max_len: int) -> list[Element]:
    paths: list[tuple[tuple[str, ...], str]] = [((), v) for v in g.vertices]
    frontier = list(paths)
    for _ in range(max_len):
        frontier = [(p + (e,), g.r(e)) for p, u in frontier for e in g.out_edges[u]]
        paths.extend(frontier)
    out = []
    for (p, u), (q, w) in product(paths, paths):
        if u == w and (len(p) + len(q)) <= max_len:
            out.append(Element.monomial(g, p, q, u))
    return [m for m in dict.fromkeys(out) if m]


def bounded_properly_infinite_search(g: Graph, a: Element,
                                     budget: SearchBudget = SearchBudget()) -> Witness | Unknown:
    """A verified witness for a ⊕ a ≾ a, or Unknown.

    Constructive routes go first: two closed simple paths when a is a
    vertex, otherwise reduction to a vertex (needs Condition (L)).  Brute
    force over single-monomial entries of length <= ``budget.max_len`` is
    the fallback.
    """
    if not a:
        raise PreconditionError("a = 0 is never properly infinite")
    target = diag(g, [a, a])
    ya = scalar(a)
    if len(a) == 1:
        (m0, c0), = a.terms.items()
        if not m0.p and not m0.q and c0 == 1 and csp_at_least_two(g, m0.v):
            w = vertex_properly_infinite_witness(g, m0.v)
            if verify_precsim(g, target, ya, w):
                return w
    w = constructive_properly_infinite(g, a)
    if w is not None and verify_precsim(g, target, ya, w):
        return w
    cands = _monomials_up_to(g, budget.max_len)
    explored = 0
    good = []
    for X, Y in product(cands, cands):
        explored += 1
        if explored > budget.max_candidates:
            return Unknown("candidate budget exhausted", explored)
        if X * a * Y == a:
            good.append((X, Y))
    zero = Element.zero(g)
    for (x1, y1), (x2, y2) in product(good, good):
        if x1 * a * y2 == zero and x2 * a * y1 == zero:
            w = Witness(column(g, [x1, x2]), row(g, [y1, y2]))
            if verify_precsim(g, target, ya, w):
                return w
    return Unknown("no witness among bounded monomial candidates", explored)
