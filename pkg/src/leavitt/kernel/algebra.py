"""Exact arithmetic in the Leavitt path algebra L_K(E) over the rationals.

Elements are sparse linear combinations of monomials ``p q*`` where p and q
are paths (possibly trivial) ending at a common vertex.  Every stored
monomial is in normal form: p and q do not both end in the special edge of
that edge's source (the special edge of a non-sink is its first-declared
out-edge).  The normal monomials form a basis, so equality of Elements is
equality of their coefficient maps.

Coefficients are ``fractions.Fraction`` by default.  Nothing here touches
them except through ``+``, ``-``, ``*`` and ``/``, so another exact field
type (e.g. integers mod p) can be passed in as coefficients directly.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, NamedTuple

from ..graph import Graph, GraphError


class Monomial(NamedTuple):
    """``p q*`` with r(p) = r(q) = ``v``; q is stored unreversed."""

    p: tuple[str, ...]
    q: tuple[str, ...]
    v: str


class KernelError(ValueError):
    pass


def path_source(g: Graph, p: tuple[str, ...], v: str) -> str:
    return g.s(p[0]) if p else v


def path_range(g: Graph, p: tuple[str, ...], v: str | None = None) -> str:
    return g.r(p[-1]) if p else v


def make_monomial(g: Graph, p: Iterable[str] = (), q: Iterable[str] = (),
                  v: str | None = None) -> Monomial:
    """Validate and build ``p q*``.  ``v`` is required only if both paths
    are trivial."""
    p, q = tuple(p), tuple(q)
    for path in (p, q):
        for e in path:
            if e not in g.edge:
                raise KernelError(f"unknown edge {e!r}")
        for a, b in zip(path, path[1:]):
            if g.r(a) != g.s(b):
                raise KernelError(f"edges {a!r}, {b!r} do not compose")
    ends = {g.r(path[-1]) for path in (p, q) if path}
    if v is not None:
        if v not in g.vertex_index:
            raise KernelError(f"unknown vertex {v!r}")
        ends.add(v)
    if len(ends) != 1:
        if not ends:
            raise KernelError("trivial monomial needs a vertex")
        raise KernelError(f"malformed term: r(p) != r(q) ({' vs '.join(sorted(ends))})")
    return Monomial(p, q, ends.pop())


def is_normal(g: Graph, m: Monomial) -> bool:
    if not m.p or not m.q or m.p[-1] != m.q[-1]:
        return True
    e = m.p[-1]
    return g.special_edge[g.s(e)] != e


def rewrite_step(g: Graph, m: Monomial) -> list[tuple[Monomial, int]]:
    """One application of ``(p'c)(q'c)* -> p'q'* - sum_{e != c} (p'e)(q'e)*``
    where c is the special edge of its source."""
    c = m.p[-1]
    u = g.s(c)
    p1, q1 = m.p[:-1], m.q[:-1]
    out = [(Monomial(p1, q1, u), 1)]
    for e in g.out_edges[u]:
        if e != c:
            out.append((Monomial(p1 + (e,), q1 + (e,), g.r(e)), -1))
    return out


def normal_terms(g: Graph, m: Monomial) -> list[tuple[Monomial, int]]:
    """Normal form of a single monomial as (monomial, sign) pairs.

    The side terms produced by a rewrite end in a non-special edge and are
    already normal, so only the shortened monomial needs further work.
    """
    out = []
    while not is_normal(g, m):
        head, *rest = rewrite_step(g, m)
        out.extend((t, -1) for t, _ in rest)
        m = head[0]
    out.append((m, 1))
    return out


def _sort_key(g: Graph, m: Monomial):
    return (len(m.p) + len(m.q), len(m.p),
            [g.edge_index[e] for e in m.p], [g.edge_index[e] for e in m.q],
            g.vertex_index[m.v])


class Element:
    """Immutable element of L_K(E)."""

    __slots__ = ("graph", "terms")

    def __init__(self, graph: Graph, terms: dict[Monomial, Fraction] | None = None):
        self.graph = graph
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, g: Graph) -> "Element":
        return cls(g)

    @classmethod
    def one(cls, g: Graph) -> "Element":
        return cls(g, {Monomial((), (), v): Fraction(1) for v in g.vertices})

    @classmethod
    def vertex(cls, g: Graph, v: str) -> "Element":
        return cls.monomial(g, v=v)

    @classmethod
    def path(cls, g: Graph, p: Iterable[str]) -> "Element":
        return cls.monomial(g, p=p)

    @classmethod
    def ghost(cls, g: Graph, q: Iterable[str]) -> "Element":
        """The ghost path q*."""
        return cls.monomial(g, q=q)

    @classmethod
    def monomial(cls, g: Graph, p: Iterable[str] = (), q: Iterable[str] = (),
                 v: str | None = None, coef=1) -> "Element":
        return normalize(g, [(coef, make_monomial(g, p, q, v))])

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Element"):
        if not isinstance(other, Element):
            return NotImplemented
        if other.graph is not self.graph and other.graph != self.graph:
            raise KernelError("graph mismatch between operands")

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Element(self.graph, terms)

    def __neg__(self):
        return Element(self.graph, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Element":
        return Element(self.graph, {m: c * a for m, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return mul(self.graph, self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def star(self) -> "Element":
        return Element(self.graph, {Monomial(m.q, m.p, m.v): c for m, c in self.terms.items()})

    # -- comparison / inspection -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (self.graph is other.graph or self.graph == other.graph) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _sort_key(self.graph, t[0]))

    def ghost_length(self) -> int:
        return max((len(m.q) for m in self.terms), default=0)

    def is_real(self) -> bool:
        """True if every monomial is a path (no ghost edges)."""
        return all(not m.q for m in self.terms)

    def __repr__(self):
        from ..literals import format_element
        return f"Element({format_element(self)!r})"

    def __str__(self):
        from ..literals import format_element
        return format_element(self)


def normalize(g: Graph, raw: Iterable[tuple[object, Monomial]],
              rng: random.Random | None = None) -> Element:
    """Bring a raw combination of ``p q*`` terms to normal form.

    With ``rng`` the rewrite order is randomized: at each step one
    reducible term is picked at random, rewritten a single step, and like
    terms are merged before the next pick.  Without it every monomial is
    reduced independently.  Both routes must agree (confluence).
    """
    acc: dict[Monomial, object] = {}
    for c, m in raw:
        if not isinstance(m, Monomial):
            m = make_monomial(g, *m)
        elif path_range(g, m.p, m.v) != m.v or path_range(g, m.q, m.v) != m.v:
            raise KernelError("malformed term: r(p) != r(q)")
        acc[m] = acc.get(m, 0) + c
    if rng is None:
        out: dict[Monomial, object] = {}
        for m, c in acc.items():
            if c == 0:
                continue
            for t, sign in normal_terms(g, m):
                out[t] = out.get(t, 0) + sign * c
        return Element(g, {m: Fraction(c) if isinstance(c, int) else c for m, c in out.items()})
    while True:
        acc = {m: c for m, c in acc.items() if c != 0}
        reducible = [m for m in acc if not is_normal(g, m)]
        if not reducible:
            return Element(g, {m: Fraction(c) if isinstance(c, int) else c for m, c in acc.items()})
        reducible.sort(key=lambda m: _sort_key(g, m))
        m = rng.choice(reducible)
        c = acc.pop(m)
        for t, sign in rewrite_step(g, m):
            acc[t] = acc.get(t, 0) + sign * c


def mul_monomials(g: Graph, a: Monomial, b: Monomial) -> Monomial | None:
    """(p q*)(r s*) as a single (possibly non-normal) monomial, or None."""
    p, q, v = a
    r, s, w = b
    if path_source(g, q, v) != path_source(g, r, w):
        return None
    if r[:len(q)] == q:
        return Monomial(p + r[len(q):], s, w)
    if q[:len(r)] == r:
        return Monomial(p, s + q[len(r):], v)
    return None


def mul(g: Graph, x: Element, y: Element) -> Element:
    for z in (x, y):
        if z.graph is not g and z.graph != g:
            raise KernelError("graph mismatch between operands")
    raw = []
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            m = mul_monomials(g, a, b)
            if m is not None:
                raw.append((ca * cb, m))
    return normalize(g, raw)


def star(x: Element) -> Element:
    return x.star()


def vertex(g: Graph, v: str) -> Element:
    return Element.vertex(g, v)


def check_graph(g: Graph, *xs: Element):
    for x in xs:
        if x.graph != g:
            raise GraphError("element belongs to a different graph")
