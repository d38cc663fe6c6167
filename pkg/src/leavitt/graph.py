"""Finite directed multigraphs and the combinatorial predicates used to
classify their Leavitt path algebras.

Vertex and edge ids are opaque strings.  Declaration order is significant:
it is the tie-break key for every choice made anywhere in the package
(special edges, cycle rotations, search order).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from pathlib import Path as FsPath
from typing import Iterable, Iterator, Sequence

DEFAULT_LATTICE_CAP = 20


class GraphError(ValueError):
    """Malformed graph input or an unmet precondition on a vertex set."""


class LatticeTooLarge(GraphError):
    pass


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    rng: str


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    name: str = "graph"

    def __post_init__(self):
        if not self.vertices:
            raise GraphError("empty graph: at least one vertex is required")
        if len(set(self.vertices)) != len(self.vertices):
            dup = _first_duplicate(self.vertices)
            raise GraphError(f"duplicate vertex id {dup!r}")
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise GraphError(f"duplicate edge id {_first_duplicate(ids)!r}")
        clash = set(ids) & set(self.vertices)
        if clash:
            raise GraphError(f"id used both as vertex and edge: {sorted(clash)[0]!r}")
        vs = set(self.vertices)
        for i, e in enumerate(self.edges):
            for end in (e.src, e.rng):
                if end not in vs:
                    raise GraphError(
                        f"dangling endpoint {end!r} in edge {e.id!r} (edges[{i}])"
                    )

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]],
                   name: str = "graph") -> "Graph":
        return cls(tuple(vertices), tuple(Edge(*e) for e in edges), name)

    # -- lookups -----------------------------------------------------------

    @cached_property
    def edge(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def out_edges(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e.id)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def in_edges(self) -> dict[str, tuple[str, ...]]:
        inc: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.rng].append(e.id)
        return {v: tuple(es) for v, es in inc.items()}

    @cached_property
    def special_edge(self) -> dict[str, str]:
        """First-declared edge out of each non-sink."""
        return {v: es[0] for v, es in self.out_edges.items() if es}

    @cached_property
    def successors(self) -> dict[str, tuple[str, ...]]:
        return {v: tuple(self.edge[e].rng for e in es) for v, es in self.out_edges.items()}

    def is_sink(self, v: str) -> bool:
        return not self.out_edges[v]

    def s(self, e: str) -> str:
        return self.edge[e].src

    def r(self, e: str) -> str:
        return self.edge[e].rng

    @cached_property
    def reach(self) -> dict[str, frozenset[str]]:
        """v -> {w : v >= w}, reflexive."""
        out = {}
        for v in self.vertices:
            seen = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in self.successors[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out[v] = frozenset(seen)
        return out

    def geq(self, v: str, w: str) -> bool:
        return w in self.reach[v]

    def sort_vertices(self, vs: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(vs, key=self.vertex_index.__getitem__))

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "src": e.src, "rng": e.rng} for e in self.edges],
        }

    def __repr__(self):
        es = ", ".join(f"{e.id}:{e.src}->{e.rng}" for e in self.edges)
        return f"Graph({self.name!r}; {list(self.vertices)}; {es})"


def _first_duplicate(items):
    seen = set()
    for x in items:
        if x in seen:
            return x
        seen.add(x)


# -- serialization -----------------------------------------------------------

def load_graph(text: str, name: str = "graph") -> Graph:
    """Parse the JSON graph format.

    ``{"vertices": ["v", ...], "edges": [{"id": "e1", "src": "v", "rng": "w"}, ...]}``
    An optional top-level ``"name"`` overrides ``name``.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"parse failure at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise GraphError("parse failure: top level must be an object")
    verts = data.get("vertices")
    if not isinstance(verts, list):
        raise GraphError("parse failure: 'vertices' must be a list")
    for i, v in enumerate(verts):
        if not isinstance(v, str) or not v:
            raise GraphError(f"parse failure: vertices[{i}] must be a nonempty string")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise GraphError("parse failure: 'edges' must be a list")
    parsed = []
    for i, e in enumerate(edges):
        if not isinstance(e, dict):
            raise GraphError(f"parse failure: edges[{i}] must be an object")
        try:
            fields = e["id"], e["src"], e["rng"]
        except KeyError as k:
            raise GraphError(f"parse failure: edges[{i}] lacks key {k.args[0]!r}") from None
        if not all(isinstance(f, str) and f for f in fields):
            raise GraphError(f"parse failure: edges[{i}] fields must be nonempty strings")
        parsed.append(Edge(*fields))
    return Graph(tuple(verts), tuple(parsed), str(data.get("name", name)))


def read_graph(path) -> Graph:
    path = FsPath(path)
    return load_graph(path.read_text(encoding="utf-8"), name=path.stem)


# -- hereditary / saturated --------------------------------------------------

def _check_subset(g: Graph, s: Iterable[str]) -> frozenset[str]:
    s = frozenset(s)
    bad = s - set(g.vertices)
    if bad:
        raise GraphError(f"unknown vertex {sorted(bad)[0]!r}")
    return s


def is_hereditary(g: Graph, h: Iterable[str]) -> bool:
    h = frozenset(h)
    return all(g.reach[v] <= h for v in h)


def is_saturated(g: Graph, h: Iterable[str]) -> bool:
    h = frozenset(h)
    for v in g.vertices:
        if v not in h and not g.is_sink(v) and all(w in h for w in g.successors[v]):
            return False
    return True


def is_hereditary_saturated(g: Graph, h: Iterable[str]) -> bool:
    h = frozenset(h)
    return is_hereditary(g, h) and is_saturated(g, h)


def hereditary_saturated_closure(g: Graph, s: Iterable[str]) -> frozenset[str]:
    """Smallest hereditary saturated set containing ``s``."""
    cur = set(_check_subset(g, s))
    changed = True
    while changed:
        changed = False
        for v in list(cur):
            new = g.reach[v] - cur
            if new:
                cur |= new
                changed = True
        for v in g.vertices:
            if v not in cur and not g.is_sink(v) and all(w in cur for w in g.successors[v]):
                cur.add(v)
                changed = True
    return frozenset(cur)


def _check_cap(g: Graph, cap: int):
    if len(g.vertices) > cap:
        raise LatticeTooLarge(
            f"graph too large for exhaustive lattice: {len(g.vertices)} vertices > cap {cap}"
        )


def all_hereditary_saturated(g: Graph, cap: int = DEFAULT_LATTICE_CAP) -> list[frozenset[str]]:
    """Every hereditary saturated subset, by filtering all subsets.

    Ordered by size, then by declaration order of members.
    """
    _check_cap(g, cap)
    out = []
    for k in range(len(g.vertices) + 1):
        for combo in combinations(g.vertices, k):
            if is_hereditary_saturated(g, combo):
                out.append(frozenset(combo))
    return out


def is_downward_directed(g: Graph, m: Iterable[str]) -> bool:
    m = frozenset(m)
    for v, w in combinations(sorted(m, key=g.vertex_index.__getitem__), 2):
        if not (g.reach[v] & g.reach[w] & m):
            return False
    return True


def maximal_tails(g: Graph, cap: int = DEFAULT_LATTICE_CAP) -> list[frozenset[str]]:
    vs = frozenset(g.vertices)
    tails = []
    for h in all_hereditary_saturated(g, cap):
        m = vs - h
        if m and is_downward_directed(g, m):
            tails.append(m)
    return tails


def quotient_graph(g: Graph, h: Iterable[str]) -> Graph:
    """E/H: drop H and every edge ranging into it."""
    h = _check_subset(g, h)
    if not is_hereditary_saturated(g, h):
        raise GraphError("quotient needs a hereditary saturated set")
    if h == frozenset(g.vertices):
        raise GraphError("quotient by all of E^0 is the zero algebra")
    return Graph(
        tuple(v for v in g.vertices if v not in h),
        tuple(e for e in g.edges if e.rng not in h),
        f"{g.name}/{{{','.join(g.sort_vertices(h))}}}" if h else g.name,
    )


def restriction_graph(g: Graph, h: Iterable[str]) -> Graph:
    """E_H: keep H and the edges leaving it."""
    h = _check_subset(g, h)
    if not is_hereditary(g, h):
        raise GraphError("restriction needs a hereditary set")
    if not h:
        raise GraphError("restriction to the empty set is the zero algebra")
    return Graph(
        tuple(v for v in g.vertices if v in h),
        tuple(e for e in g.edges if e.src in h),
        f"{g.name}_{{{','.join(g.sort_vertices(h))}}}",
    )


def induced_subgraph(g: Graph, m: Iterable[str]) -> Graph:
    m = frozenset(m)
    return Graph(
        tuple(v for v in g.vertices if v in m),
        tuple(e for e in g.edges if e.src in m and e.rng in m),
        g.name,
    )


# -- paths and cycles --------------------------------------------------------

def is_path(g: Graph, p: Sequence[str]) -> bool:
    if not p or any(e not in g.edge for e in p):
        return False
    return all(g.r(a) == g.s(b) for a, b in zip(p, p[1:]))


def path_vertices(g: Graph, p: Sequence[str]) -> list[str]:
    return [g.s(p[0])] + [g.r(e) for e in p]


def is_cycle(g: Graph, p: Sequence[str]) -> bool:
    if not is_path(g, p) or g.s(p[0]) != g.r(p[-1]):
        return False
    srcs = [g.s(e) for e in p]
    return len(set(srcs)) == len(srcs)


def _canonical_rotation(g: Graph, cyc: Sequence[str]) -> tuple[str, ...]:
    key = [g.edge_index[e] for e in cyc]
    best = min(range(len(cyc)), key=lambda i: key[i:] + key[:i])
    return tuple(cyc[best:]) + tuple(cyc[:best])


def simple_cycles(g: Graph) -> list[tuple[str, ...]]:
    """All cycles (no repeated source vertex), one rotation each.

    Each cycle is reported in its lexicographically least rotation under
    edge declaration order; the list is sorted by (length, that key).
    A cycle is enumerated from its least-indexed vertex only, which makes
    every cycle appear exactly once.
    """
    idx = g.vertex_index
    found = []
    for start in g.vertices:
        lo = idx[start]
        # DFS over edge sequences through vertices with index > lo
        stack = [(start, (), frozenset([start]))]
        while stack:
            u, path, seen = stack.pop()
            for e in g.out_edges[u]:
                w = g.r(e)
                if w == start:
                    found.append(path + (e,))
                elif idx[w] > lo and w not in seen:
                    stack.append((w, path + (e,), seen | {w}))
    cycles = {_canonical_rotation(g, c) for c in found}
    return sorted(cycles, key=lambda c: (len(c), [g.edge_index[e] for e in c]))


def cycles_in(g: Graph, m: Iterable[str]) -> list[tuple[str, ...]]:
    m = frozenset(m)
    return [c for c in simple_cycles(g) if all(g.s(e) in m for e in c)]


def exits(g: Graph, c: Sequence[str]) -> list[str]:
    on = set(c)
    srcs = {g.s(e) for e in c}
    return [e.id for e in g.edges if e.src in srcs and e.id not in on]


def cycle_has_exit_in(g: Graph, c: Sequence[str], m: Iterable[str]) -> bool:
    m = frozenset(m)
    if not is_cycle(g, c):
        raise GraphError(f"not a cycle: {'.'.join(c)}")
    if not set(path_vertices(g, c)) <= m:
        raise GraphError("cycle must lie in the given vertex set")
    return any(g.r(f) in m for f in exits(g, c))


def closed_simple_paths(g: Graph, v: str, max_len: int) -> Iterator[tuple[str, ...]]:
    """CSP(v) members up to ``max_len`` edges, shortest first, then by
    edge declaration order."""
    # dist[u]: fewest edges from u back to v without passing through v
    dist = {v: 0}
    frontier = [v]
    while frontier:
        nxt = []
        for w in frontier:
            for e in g.in_edges[w]:
                u = g.s(e)
                if u not in dist:
                    dist[u] = dist[w] + 1
                    nxt.append(u)
        frontier = nxt
    frontier = [((e,), g.r(e)) for e in g.out_edges[v] if g.r(e) in dist]
    length = 1
    while frontier and length <= max_len:
        nxt = []
        for p, u in frontier:
            if u == v:
                yield p
                continue
            for e in g.out_edges[u]:
                w = g.r(e)
                if w in dist and length + 1 + dist[w] <= max_len:
                    nxt.append((p + (e,), w))
        frontier = nxt
        length += 1


def csp_at_least_two(g: Graph, v: str) -> bool:
    """Whether v is the base of two distinct closed simple paths."""
    if v not in g.vertex_index:
        raise GraphError(f"unknown vertex {v!r}")
    # S: vertices u != v on some v-based closed walk avoiding v internally
    sub = induced_subgraph(g, set(g.vertices) - {v}) if len(g.vertices) > 1 else None
    out_of_v = {g.r(e) for e in g.out_edges[v]} - {v}
    s = set()
    if sub is not None:
        fwd = set().union(*(sub.reach[x] for x in out_of_v)) if out_of_v else set()
        back = {u for u in sub.vertices if any(w == v for w in g.successors[u])}
        s = {u for u in fwd if sub.reach[u] & back}
        on_cycle = {x for c in simple_cycles(sub) for x in (sub.s(e) for e in c)}
        if s & on_cycle:
            return True
    count = 0
    for c in simple_cycles(g):
        if v in {g.s(e) for e in c}:
            count += 1
            if count >= 2:
                return True
    return False


def on_closed_path(g: Graph, v: str) -> bool:
    return any(v in g.reach[g.r(e)] for e in g.out_edges[v])


def condition_K(g: Graph) -> bool:
    return all(csp_at_least_two(g, v) for v in g.vertices if on_closed_path(g, v))


def condition_L(g: Graph) -> bool:
    return all(exits(g, c) for c in simple_cycles(g))


def connects_to_cycle_in(g: Graph, v: str, m: Iterable[str]) -> bool:
    m = frozenset(m)
    if v not in m:
        raise GraphError(f"vertex {v!r} not in the given set")
    if not is_hereditary_saturated(g, frozenset(g.vertices) - m):
        raise GraphError("complement of the given set must be hereditary saturated")
    sub = induced_subgraph(g, m)
    on_cycle = {sub.s(e) for c in simple_cycles(sub) for e in c}
    return bool(sub.reach[v] & on_cycle)


def connects_to_cycle(g: Graph, v: str) -> bool:
    return connects_to_cycle_in(g, v, g.vertices)


def shortest_path(g: Graph, v: str, targets: Iterable[str]) -> tuple[str, ...] | None:
    """Shortest edge path from v into ``targets`` (empty tuple if v is a
    target); BFS in edge declaration order."""
    targets = frozenset(targets)
    if v in targets:
        return ()
    prev: dict[str, tuple[str, str]] = {}
    frontier = [v]
    seen = {v}
    while frontier:
        nxt = []
        for u in frontier:
            for e in g.out_edges[u]:
                w = g.r(e)
                if w in seen:
                    continue
                seen.add(w)
                prev[w] = (u, e)
                if w in targets:
                    path = []
                    while w != v:
                        u2, e2 = prev[w]
                        path.append(e2)
                        w = u2
                    return tuple(reversed(path))
                nxt.append(w)
        frontier = nxt
    return None
