"""Brute-force reference computations used to cross-check the fast paths.

Nothing here shares code with the routines it checks beyond the Graph
container itself: reachability, cycles, closures and algebra equality are
all recomputed from scratch.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product


def reachability(g) -> dict[str, set[str]]:
    """Reflexive-transitive closure by Floyd-Warshall on a boolean matrix."""
    vs = list(g.vertices)
    n = len(vs)
    r = [[i == j for j in range(n)] for i in range(n)]
    pos = {v: i for i, v in enumerate(vs)}
    for e in g.edges:
        r[pos[e.src]][pos[e.rng]] = True
    for k in range(n):
        for i in range(n):
            if r[i][k]:
                for j in range(n):
                    if r[k][j]:
                        r[i][j] = True
    return {vs[i]: {vs[j] for j in range(n) if r[i][j]} for i in range(n)}


def _hs(g, h, reach) -> bool:
    for v in h:
        if not reach[v] <= h:
            return False
    for v in g.vertices:
        outs = [e.rng for e in g.edges if e.src == v]
        if v not in h and outs and all(w in h for w in outs):
            return False
    return True


def hereditary_saturated_sets(g) -> list[frozenset[str]]:
    reach = reachability(g)
    out = []
    for k in range(len(g.vertices) + 1):
        for c in combinations(g.vertices, k):
            if _hs(g, set(c), reach):
                out.append(frozenset(c))
    return out


def closure(g, s) -> frozenset[str]:
    """Intersection of all hereditary saturated supersets of s."""
    s = set(s)
    full = frozenset(g.vertices)
    best = full
    for h in hereditary_saturated_sets(g):
        if s <= h:
            best = best & h
    return best


def tails(g) -> list[frozenset[str]]:
    reach = reachability(g)
    full = frozenset(g.vertices)
    out = []
    for h in hereditary_saturated_sets(g):
        m = full - h
        if m and all(reach[a] & reach[b] & m for a in m for b in m):
            out.append(m)
    return out


def cycles(g) -> set[frozenset]:
    """Cycles as (frozenset of edges, length) keyed sets, by walking every
    edge sequence with distinct source vertices."""
    found = set()
    out = {v: [e for e in g.edges if e.src == v] for v in g.vertices}

    def walk(start, v, path, seen):
        for e in out[v]:
            if e.rng == start:
                found.add(tuple(sorted(x.id for x in path + [e])))
            elif e.rng not in seen:
                walk(start, e.rng, path + [e], seen | {e.rng})

    for v in g.vertices:
        walk(v, v, [], {v})
    return found


# -- algebra -----------------------------------------------------------------

def expansion_form(g, terms, level: int | None = None) -> dict:
    """Expand each p q* through v = sum_e e e* until min(|p|, |q|) reaches
    ``level`` or the base vertex is a sink.  Such monomials are linearly
    independent, so two combinations are equal iff their expansions to a
    common level coincide.  ``terms`` is an iterable of ((p, q, v), coef).
    """
    terms = [(tuple(m), c) for m, c in terms]
    if level is None:
        level = max((min(len(m[0]), len(m[1])) for m, _ in terms), default=0)
    out = {e.src: [] for e in g.edges}
    for e in g.edges:
        out[e.src].append(e)
    acc: dict = {}
    stack = list(terms)
    while stack:
        (p, q, v), c = stack.pop()
        if min(len(p), len(q)) >= level or v not in out:
            key = (tuple(p), tuple(q), v)
            acc[key] = acc.get(key, 0) + Fraction(c)
            continue
        for e in out[v]:
            stack.append(((tuple(p) + (e.id,), tuple(q) + (e.id,), e.rng), c))
    return {k: c for k, c in acc.items() if c != 0}


def equal_in_algebra(g, terms_a, terms_b) -> bool:
    ta, tb = list(terms_a), list(terms_b)
    level = max((min(len(m[0]), len(m[1])) for m, _ in ta + tb), default=0)
    return expansion_form(g, ta, level) == expansion_form(g, tb, level)


# -- natural-number monoid ----------------------------------------------------

def fred_in_naturals(n: int, x: int, y: int, z: int) -> list[tuple[int, ...]]:
    """All (x_0..x_n) in N^{n+1} meeting the three identities."""
    sols = []
    for xs in product(range(x + 1), repeat=n + 1):
        if (sum(xs) == x and sum(i * a for i, a in enumerate(xs)) == y
                and sum((n - i) * a for i, a in enumerate(xs)) == z):
            sols.append(xs)
    return sols


# -- graph monoid --------------------------------------------------------------

def monoid_chain_valid(g, chain) -> bool:
    """Re-check a rewrite chain from the edge list alone: consecutive count
    vectors differ by exactly -v + sum r(e) (or its reverse) for a non-sink v."""
    rhs: dict[str, dict[str, int]] = {}
    for e in g.edges:
        rhs.setdefault(e.src, {})
        rhs[e.src][e.rng] = rhs[e.src].get(e.rng, 0) + 1
    for a, b in zip(chain, chain[1:]):
        a, b = dict(a), dict(b)
        diff = {v: b.get(v, 0) - a.get(v, 0) for v in g.vertices}
        ok = False
        for v, r in rhs.items():
            step = {w: r.get(w, 0) - (w == v) for w in g.vertices}
            for sign in (1, -1):
                if all(diff[w] == sign * step[w] for w in g.vertices):
                    ok = any(step.values())
        if not ok:
            return False
    return all(min(dict(x).values(), default=0) >= 0 for x in chain)
