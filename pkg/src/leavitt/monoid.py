"""The graph monoid M_E = V(L_K(E)): the free commutative monoid on E^0
modulo v = sum_{e in s^-1(v)} r(e) at every non-sink v.

All searches are bounded and three-valued.  A positive answer always
carries a payload that ``verify_chain`` (or the dedicated verifiers below)
re-checks from the graph alone, without touching search state.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
import random
from itertools import product
from typing import Iterator, Sequence

from .graph import (Graph, GraphError, all_hereditary_saturated, is_hereditary_saturated,
                    quotient_graph)
from .literals import format_vector, parse_vector

DEFAULT_EQ_DEPTH = 12
DEFAULT_SEARCH_CAP = 50_000


class MonoidError(ValueError):
    pass


class HypothesisFailure(MonoidError):
    """The 2x+3y hypothesis is refuted: u is irreducible in some quotient."""

    def __init__(self, h, quotient, msg):
        super().__init__(msg)
        self.h = h
        self.quotient = quotient


class MonoidVector(Mapping):
    """Finitely supported map vertex -> positive multiplicity (immutable)."""

    __slots__ = ("_d", "_hash")

    def __init__(self, counts: Mapping[str, int] | None = None, **kw):
        d = {}
        for v, n in {**(counts or {}), **kw}.items():
            if n < 0:
                raise MonoidError(f"negative multiplicity for {v!r}")
            if n:
                d[v] = int(n)
        self._d = d
        self._hash = None

    def __getitem__(self, v):
        return self._d[v]

    def get(self, v, default=0):
        return self._d.get(v, default)

    def __iter__(self):
        return iter(self._d)

    def __len__(self):
        return len(self._d)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._d.items()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, MonoidVector):
            return self._d == other._d
        return NotImplemented

    def __add__(self, other: "MonoidVector") -> "MonoidVector":
        d = dict(self._d)
        for v, n in other.items():
            d[v] = d.get(v, 0) + n
        return MonoidVector(d)

    def __mul__(self, k: int) -> "MonoidVector":
        return MonoidVector({v: k * n for v, n in self._d.items()})

    __rmul__ = __mul__

    def __sub__(self, other: "MonoidVector") -> "MonoidVector":
        """Componentwise difference in the free monoid; needs dominance."""
        if not self.dominates(other):
            raise MonoidError("componentwise subtraction would go negative")
        return MonoidVector({v: n - other.get(v) for v, n in self._d.items()})

    def dominates(self, other: "MonoidVector") -> bool:
        return all(self.get(v) >= n for v, n in other.items())

    def restrict(self, keep) -> "MonoidVector":
        keep = set(keep)
        return MonoidVector({v: n for v, n in self._d.items() if v in keep})

    @property
    def size(self) -> int:
        return sum(self._d.values())

    def is_zero(self) -> bool:
        return not self._d

    def format(self, g: Graph | None = None) -> str:
        order = g.vertices if g is not None else sorted(self._d)
        return format_vector(order, self._d)

    def to_json(self, g: Graph | None = None) -> dict:
        order = g.vertices if g is not None else sorted(self._d)
        return {v: self._d[v] for v in order if v in self._d}

    def __repr__(self):
        return f"MonoidVector({self.format()!r})"


def vector(g: Graph, text_or_map) -> MonoidVector:
    if isinstance(text_or_map, str):
        return MonoidVector(parse_vector(g.vertices, text_or_map))
    vec = MonoidVector(text_or_map)
    bad = set(vec) - set(g.vertices)
    if bad:
        raise MonoidError(f"support outside E^0: {sorted(bad)}")
    return vec


def relation(g: Graph, v: str) -> MonoidVector:
    """Right-hand side of v = sum r(e) for a non-sink v."""
    out: dict[str, int] = {}
    for w in g.successors[v]:
        out[w] = out.get(w, 0) + 1
    return MonoidVector(out)


# -- verdicts ----------------------------------------------------------------

@dataclass
class SearchVerdict:
    outcome: str                      # "found" | "unknown" (or op-specific labels)
    witness: dict | None = None
    explored: int = 0
    depth: int = 0
    note: str = ""

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_json(self, g: Graph | None = None) -> dict:
        return {
            "outcome": self.outcome,
            "witness": _jsonable(self.witness, g),
            "statistics": {"states_explored": self.explored, "depth": self.depth},
            **({"note": self.note} if self.note else {}),
        }


def _jsonable(obj, g):
    if isinstance(obj, MonoidVector):
        return obj.format(g)
    if isinstance(obj, dict):
        return {k: _jsonable(v, g) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v, g) for v in obj]
    if isinstance(obj, frozenset):
        return list(g.sort_vertices(obj)) if g is not None else sorted(obj)
    return obj


# -- search engine -----------------------------------------------------------

class _Engine:
    """Vertex-indexed tuple states and single-relation moves, in a fixed order
    (vertices in declaration order; expansion before contraction)."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = len(g.vertices)
        self.idx = g.vertex_index
        self.rels = []
        for v in g.vertices:
            if not g.is_sink(v):
                rhs = [0] * self.n
                for w in g.successors[v]:
                    rhs[self.idx[w]] += 1
                self.rels.append((self.idx[v], tuple(rhs)))

    def state(self, x: MonoidVector) -> tuple[int, ...]:
        s = [0] * self.n
        for v, k in x.items():
            if v not in self.idx:
                raise MonoidError(f"support outside E^0: {v!r}")
            s[self.idx[v]] = k
        return tuple(s)

    def vec(self, s: tuple[int, ...]) -> MonoidVector:
        return MonoidVector({self.g.vertices[i]: k for i, k in enumerate(s) if k})

    def moves(self, s, expand=True, contract=True):
        for i, rhs in self.rels:
            if expand and s[i]:
                t = list(s)
                t[i] -= 1
                for j, k in enumerate(rhs):
                    t[j] += k
                t = tuple(t)
                if t != s:
                    yield t
            if contract and all(a >= b for a, b in zip(s, rhs)):
                t = [a - b for a, b in zip(s, rhs)]
                t[i] += 1
                t = tuple(t)
                if t != s:
                    yield t


def random_walk(g: Graph, rng: random.Random, x: MonoidVector, steps: int) -> MonoidVector:
    """A random member of the class of x, at most ``steps`` moves away."""
    eng = _Engine(g)
    s = eng.state(x)
    for _ in range(steps):
        moves = list(eng.moves(s))
        if not moves:
            break
        s = rng.choice(moves)
    return eng.vec(s)


def _trace(parents, s):
    out = [s]
    while parents[s] is not None:
        s = parents[s]
        out.append(s)
    return out


def class_states(g: Graph, x: MonoidVector, depth: int = DEFAULT_EQ_DEPTH,
                 cap: int = DEFAULT_SEARCH_CAP, size_cap: int | None = None,
                 engine: _Engine | None = None):
    """BFS over the congruence class of x.

    Yields (vector, depth, chain) with ``chain`` running from x to the
    state.  A final ``(None, d, None)`` sentinel means the whole class was
    enumerated without hitting any bound.
    """
    eng = engine or _Engine(g)
    s0 = eng.state(x)
    parents = {s0: None}
    frontier = [s0]
    d = 0
    yield eng.vec(s0), 0, [eng.vec(s0)]
    truncated = False
    while frontier:
        if d >= depth:
            truncated = True
            break
        nxt = []
        for s in frontier:
            for t in eng.moves(s):
                if t in parents:
                    continue
                if size_cap is not None and sum(t) > size_cap:
                    truncated = True
                    continue
                if len(parents) >= cap:
                    truncated = True
                    break
                parents[t] = s
                nxt.append(t)
                yield eng.vec(t), d + 1, [eng.vec(u) for u in reversed(_trace(parents, t))]
        frontier = nxt
        d += 1
    if not truncated:
        yield None, d, None


def monoid_equal(g: Graph, x: MonoidVector, y: MonoidVector,
                 bound: int = DEFAULT_EQ_DEPTH, cap: int = DEFAULT_SEARCH_CAP) -> SearchVerdict:
    """Bidirectional BFS over single relation applications (either
    direction).  Found carries the rewrite chain from x to y."""
    eng = _Engine(g)
    sx, sy = eng.state(x), eng.state(y)
    if sx == sy:
        return SearchVerdict("found", {"chain": [x]}, 1, 0)
    par = ({sx: None}, {sy: None})
    front = ([sx], [sy])
    depth = [0, 0]
    explored = 2
    while front[0] and front[1] and depth[0] + depth[1] < bound:
        side = 0 if len(front[0]) <= len(front[1]) else 1
        mine, other = par[side], par[1 - side]
        nxt = []
        for s in front[side]:
            for t in eng.moves(s):
                if t in mine:
                    continue
                mine[t] = s
                explored += 1
                if t in other:
                    a = _trace(par[0], t)
                    b = _trace(par[1], t)
                    chain = [eng.vec(u) for u in list(reversed(a)) + b[1:]]
                    return SearchVerdict("found", {"chain": chain}, explored, len(chain) - 1)
                nxt.append(t)
                if explored >= cap:
                    return SearchVerdict("unknown", None, explored, sum(depth),
                                         "state cap reached")
        front[side][:] = nxt
        depth[side] += 1
    note = "a congruence class was exhausted" if not (front[0] and front[1]) else "depth bound reached"
    return SearchVerdict("unknown", None, explored, sum(depth), note)


def verify_chain(g: Graph, chain: Sequence[MonoidVector]) -> bool:
    """Each consecutive pair differs by exactly one relation v <-> sum r(e)."""
    rels = {v: relation(g, v) for v in g.vertices if not g.is_sink(v)}
    for a, b in zip(chain, chain[1:]):
        ok = False
        for v, rhs in rels.items():
            for src, dst in ((a, b), (b, a)):
                if src.get(v) and (src - MonoidVector({v: 1})) + rhs == dst:
                    ok = True
        if not ok:
            return False
    return all(set(x) <= set(g.vertices) for x in chain)


def verify_equal(g: Graph, x: MonoidVector, y: MonoidVector, verdict: SearchVerdict) -> bool:
    if not verdict.found:
        return False
    chain = verdict.witness["chain"]
    return chain[0] == x and chain[-1] == y and verify_chain(g, chain)


def monoid_leq(g: Graph, x: MonoidVector, y: MonoidVector,
               bound: int = DEFAULT_EQ_DEPTH, cap: int = DEFAULT_SEARCH_CAP) -> SearchVerdict:
    """Search z with x + z ≡ y.  Any such z makes x + z a member of the
    class of y dominating x, so enumerating that class suffices."""
    explored = 0
    for s, d, chain in class_states(g, y, bound, cap):
        if s is None:
            return SearchVerdict("unknown", None, explored, d, "class of y exhausted")
        explored += 1
        if s.dominates(x):
            z = s - x
            return SearchVerdict("found", {"z": z, "chain": list(reversed(chain))}, explored, d)
    return SearchVerdict("unknown", None, explored, bound, "depth or state bound reached")


def verify_leq(g: Graph, x: MonoidVector, y: MonoidVector, verdict: SearchVerdict) -> bool:
    if not verdict.found:
        return False
    z, chain = verdict.witness["z"], verdict.witness["chain"]
    return chain[0] == x + z and chain[-1] == y and verify_chain(g, chain)


# -- refinement ---------------------------------------------------------------

def _expansion_pairs(eng: _Engine, a, b, depth: int, cap: int):
    """Pairs reachable from (a, b) by expansion moves on either part."""
    start = (a, b)
    seen = {start: 0}
    frontier = [start]
    yield start
    for d in range(depth):
        nxt = []
        for p, q in frontier:
            for t in eng.moves(p, contract=False):
                if (t, q) not in seen and len(seen) < cap:
                    seen[(t, q)] = d + 1
                    nxt.append((t, q))
                    yield (t, q)
            for t in eng.moves(q, contract=False):
                if (p, t) not in seen and len(seen) < cap:
                    seen[(p, t)] = d + 1
                    nxt.append((p, t))
                    yield (p, t)
        frontier = nxt


def _refine_free(a1, a2, b1, b2):
    """Refinement in N^V of a1 + a2 = b1 + b2."""
    z11 = tuple(min(p, q) for p, q in zip(a1, b1))
    z12 = tuple(p - q for p, q in zip(a1, z11))
    z21 = tuple(p - q for p, q in zip(b1, z11))
    z22 = tuple(p - q for p, q in zip(a2, z21))
    return z11, z12, z21, z22


@dataclass
class RefinementMatrix:
    z11: MonoidVector
    z12: MonoidVector
    z21: MonoidVector
    z22: MonoidVector

    def as_rows(self):
        return [[self.z11, self.z12], [self.z21, self.z22]]


def verify_refinement(g: Graph, x1, x2, y1, y2, z: RefinementMatrix,
                      bound: int = DEFAULT_EQ_DEPTH) -> bool:
    checks = [(z.z11 + z.z12, x1), (z.z21 + z.z22, x2), (z.z11 + z.z21, y1), (z.z12 + z.z22, y2)]
    return all(verify_equal(g, a, b, monoid_equal(g, a, b, bound)) for a, b in checks)


def refine(g: Graph, x1: MonoidVector, x2: MonoidVector, y1: MonoidVector, y2: MonoidVector,
           bound: int = DEFAULT_EQ_DEPTH, cap: int = DEFAULT_SEARCH_CAP) -> SearchVerdict:
    """Refinement matrix for x1 + x2 ≡ y1 + y2.

    Both sides are expanded (v -> sum r(e) only) part by part until they
    reach a common vector; the free-monoid refinement of the two splits of
    that vector is then re-verified against the original four sums.
    """
    pre = monoid_equal(g, x1 + x2, y1 + y2, bound, cap)
    if not pre.found:
        raise MonoidError("precondition not established: x1 + x2 ≡ y1 + y2 not found")
    eng = _Engine(g)
    half = max(1, bound // 2)
    left: dict[tuple, tuple] = {}
    for p, q in _expansion_pairs(eng, eng.state(x1), eng.state(x2), half, cap):
        left.setdefault(tuple(a + b for a, b in zip(p, q)), (p, q))
    explored = len(left)
    for p, q in _expansion_pairs(eng, eng.state(y1), eng.state(y2), half, cap):
        explored += 1
        hit = left.get(tuple(a + b for a, b in zip(p, q)))
        if hit is None:
            continue
        zs = _refine_free(hit[0], hit[1], p, q)
        z = RefinementMatrix(*(eng.vec(t) for t in zs))
        if verify_refinement(g, x1, x2, y1, y2, z, bound):
            return SearchVerdict("found", {"matrix": z.as_rows()}, explored, half)
    return SearchVerdict("unknown", None, explored, half, "no common expansion within bound")


# -- decompositions ------------------------------------------------------------

def _default_size_cap(g: Graph, u: MonoidVector) -> int:
    return max(5 * max(u.size, 1), 3 * len(g.vertices))


def _splits(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of ``total`` into ``parts`` nonnegative pieces,
    last piece largest first."""
    if parts == 1:
        yield (total,)
        return
    for last in range(total, -1, -1):
        for rest in _splits(total - last, parts - 1):
            yield rest + (last,)


def _vector_splits(eng: _Engine, s: tuple[int, ...], parts: int):
    per_coord = [list(_splits(k, parts)) for k in s]
    for choice in product(*per_coord):
        yield [tuple(c[j] for c in choice) for j in range(parts)]


def fred_decompose(g: Graph, n: int, x: MonoidVector, y: MonoidVector, z: MonoidVector,
                   bound: int = DEFAULT_EQ_DEPTH, cap: int = DEFAULT_SEARCH_CAP,
                   size_cap: int | None = None) -> SearchVerdict:
    """x = x_0 + ... + x_n with x_1 + 2x_2 + ... + n x_n ≡ y and
    n x_0 + (n-1) x_1 + ... + x_{n-1} ≡ z, given n x ≡ y + z."""
    if n < 1:
        raise MonoidError("n must be positive")
    pre = monoid_equal(g, x * n, y + z, bound, cap)
    if not pre.found:
        raise MonoidError("precondition not established: n x ≡ y + z not found")
    eng = _Engine(g)
    size_cap = size_cap or _default_size_cap(g, x)
    explored = 0
    for s, d, chain in class_states(g, x, bound, cap, size_cap, eng):
        if s is None:
            break
        for parts in _vector_splits(eng, eng.state(s), n + 1):
            explored += 1
            if explored > cap:
                return SearchVerdict("unknown", None, explored, d, "state cap reached")
            xs = [eng.vec(p) for p in parts]
            ysum = MonoidVector()
            zsum = MonoidVector()
            for i, xi in enumerate(xs):
                ysum = ysum + xi * i
                zsum = zsum + xi * (n - i)
            ey = monoid_equal(g, ysum, y, bound, cap)
            if not ey.found:
                continue
            ez = monoid_equal(g, zsum, z, bound, cap)
            if not ez.found:
                continue
            w = {"parts": xs, "sum_chain": list(reversed(chain)),
                 "y_chain": ey.witness["chain"], "z_chain": ez.witness["chain"]}
            return SearchVerdict("found", w, explored, d)
    return SearchVerdict("unknown", None, explored, bound, "no decomposition within bounds")


def verify_fred(g: Graph, n: int, x, y, z, witness: dict) -> bool:
    xs = witness["parts"]
    if len(xs) != n + 1:
        return False
    total = sum(xs, MonoidVector())
    ysum = sum((xi * i for i, xi in enumerate(xs)), MonoidVector())
    zsum = sum((xi * (n - i) for i, xi in enumerate(xs)), MonoidVector())
    for chain, a, b in ((witness["sum_chain"], total, x), (witness["y_chain"], ysum, y),
                        (witness["z_chain"], zsum, z)):
        if chain[0] != a or chain[-1] != b or not verify_chain(g, chain):
            return False
    return True


# -- quotients, irreducibility, abelian elements ---------------------------------

def _check_h(g: Graph, h) -> frozenset[str]:
    h = frozenset(h)
    if not h <= set(g.vertices) or not is_hereditary_saturated(g, h):
        raise GraphError("H must be hereditary and saturated")
    return h


def project_to_quotient(g: Graph, h, x: MonoidVector) -> MonoidVector:
    """Image of x in the monoid of E/H: drop the coordinates in H."""
    h = _check_h(g, h)
    return x.restrict(set(g.vertices) - h)


def _quotient(g: Graph, h: frozenset[str]) -> Graph | None:
    return None if h == frozenset(g.vertices) else quotient_graph(g, h)


def is_irreducible_in_quotient(g: Graph, u: MonoidVector, h=frozenset(),
                               bound: int = DEFAULT_EQ_DEPTH,
                               cap: int = DEFAULT_SEARCH_CAP) -> SearchVerdict:
    """Outcome is "irreducible", "reducible" (witness a, b, chain), "zero"
    (the image is 0, which is a unit) or "unknown".  Irreducible is reported
    only when the whole congruence class was enumerated."""
    h = _check_h(g, h)
    ubar = project_to_quotient(g, h, u)
    q = _quotient(g, h)
    if ubar.is_zero() or q is None:
        return SearchVerdict("zero", None, 0, 0)
    explored = 0
    for s, d, chain in class_states(q, ubar, bound, cap):
        if s is None:
            return SearchVerdict("irreducible", None, explored, d, "class exhausted")
        explored += 1
        if s.size >= 2:
            first = next(v for v in q.vertices if s.get(v))
            a = MonoidVector({first: 1})
            w = {"a": a, "b": s - a, "chain": list(reversed(chain)), "H": h}
            return SearchVerdict("reducible", w, explored, d)
    return SearchVerdict("unknown", None, explored, bound)


def is_abelian_in_quotient(g: Graph, u: MonoidVector, h=frozenset(),
                           bound: int = DEFAULT_EQ_DEPTH,
                           cap: int = DEFAULT_SEARCH_CAP) -> SearchVerdict:
    """Outcome "abelian", "not_abelian" (witness a with 2a ≤ ū) or "unknown"."""
    h = _check_h(g, h)
    ubar = project_to_quotient(g, h, u)
    q = _quotient(g, h)
    if ubar.is_zero() or q is None:
        return SearchVerdict("abelian", None, 0, 0, "image is 0")
    explored = 0
    for s, d, chain in class_states(q, ubar, bound, cap):
        if s is None:
            return SearchVerdict("abelian", None, explored, d, "class exhausted")
        explored += 1
        big = [v for v in q.vertices if s.get(v) >= 2]
        if big:
            a = MonoidVector({big[0]: 1})
            w = {"a": a, "z": s - a * 2, "chain": list(reversed(chain)), "H": h}
            return SearchVerdict("not_abelian", w, explored, d)
    return SearchVerdict("unknown", None, explored, bound)


def verify_reducible(g: Graph, u: MonoidVector, witness: dict) -> bool:
    """ū ≡ a + b in M_{E/H} with a, b nonzero."""
    h = _check_h(g, witness["H"])
    q, chain = _quotient(g, h), witness["chain"]
    a, b = witness["a"], witness["b"]
    return (q is not None and not a.is_zero() and not b.is_zero() and chain[0] == a + b
            and chain[-1] == project_to_quotient(g, h, u) and verify_chain(q, chain))


def verify_not_abelian(g: Graph, u: MonoidVector, witness: dict) -> bool:
    """2a + z ≡ ū in M_{E/H} with a nonzero."""
    h = _check_h(g, witness["H"])
    q, chain = _quotient(g, h), witness["chain"]
    a, z = witness["a"], witness["z"]
    return (q is not None and not a.is_zero() and chain[0] == a * 2 + z
            and chain[-1] == project_to_quotient(g, h, u) and verify_chain(q, chain))


def decompose_2x_3y(g: Graph, u: MonoidVector, bound: int = DEFAULT_EQ_DEPTH,
                    cap: int = DEFAULT_SEARCH_CAP, size_cap: int | None = None,
                    check_hypothesis: bool = True) -> SearchVerdict:
    """Search x, y with u ≡ 2x + 3y.

    The hypothesis (ū not irreducible in any quotient E/H) is checked
    first; a certified irreducible image raises ``HypothesisFailure``.
    Splits with both x and y nonzero are preferred over degenerate ones.
    """
    notes = []
    if check_hypothesis:
        for h in all_hereditary_saturated(g):
            v = is_irreducible_in_quotient(g, u, h, bound, cap)
            if v.outcome == "irreducible":
                q = _quotient(g, h)
                hs = "{" + ",".join(g.sort_vertices(h)) + "}"
                raise HypothesisFailure(
                    h, q, f"hypothesis fails: image of {u.format(g)} is irreducible in E/H for H={hs}")
            if v.outcome == "unknown":
                notes.append("irreducibility undecided for H={" + ",".join(g.sort_vertices(h)) + "}")
    eng = _Engine(g)
    size_cap = size_cap or _default_size_cap(g, u)
    explored = 0
    for strict in (True, False):
        for s, d, chain in class_states(g, u, bound, cap, size_cap, eng):
            if s is None:
                break
            explored += 1
            st = eng.state(s)
            options = []
            for k in st:
                opts = [(a, (k - 2 * a) // 3) for a in range(k // 2, -1, -1) if (k - 2 * a) % 3 == 0]
                options.append(opts)
            for choice in product(*options):
                x = eng.vec(tuple(a for a, _ in choice))
                y = eng.vec(tuple(b for _, b in choice))
                if strict and (x.is_zero() or y.is_zero()):
                    continue
                w = {"x": x, "y": y, "chain": list(reversed(chain))}
                return SearchVerdict("found", w, explored, d, "; ".join(notes))
    return SearchVerdict("unknown", None, explored, bound, "; ".join(notes) or "no split within bounds")


def verify_2x_3y(g: Graph, u: MonoidVector, witness: dict) -> bool:
    chain = witness["chain"]
    return (chain[0] == witness["x"] * 2 + witness["y"] * 3 and chain[-1] == u
            and verify_chain(g, chain))


# -- lifting along quotients -------------------------------------------------

def lift_multiple_leq(g: Graph, h, n: int, x: MonoidVector, u: MonoidVector,
                      bound: int = DEFAULT_EQ_DEPTH, cap: int = DEFAULT_SEARCH_CAP) -> SearchVerdict:
    """Given n x̄ ≤ ū in M_{E/H}, find x ≡ x' + c with c supported in H and
    n x' ≤ u in M_E."""
    h = _check_h(g, h)
    q = _quotient(g, h)
    if q is None:
        raise MonoidError("H = E^0 leaves nothing to lift")
    pre = monoid_leq(q, project_to_quotient(g, h, x) * n, project_to_quotient(g, h, u), bound, cap)
    if not pre.found:
        raise MonoidError("precondition not established: n x̄ ≤ ū not found in E/H")
    keep = set(g.vertices) - h
    explored = 0
    for s, d, chain in class_states(g, x, bound, cap):
        if s is None:
            break
        explored += 1
        xp, c = s.restrict(keep), s.restrict(h)
        leq = monoid_leq(g, xp * n, u, bound, cap)
        if leq.found:
            w = {"x_prime": xp, "c": c, "chain": list(reversed(chain)), "leq": leq.witness}
            return SearchVerdict("found", w, explored, d)
    return SearchVerdict("unknown", None, explored, bound)


def lift_decomposition(g: Graph, h, ns: Sequence[int], xs: Sequence[MonoidVector],
                       u: MonoidVector, bound: int = DEFAULT_EQ_DEPTH,
                       cap: int = DEFAULT_SEARCH_CAP, per_term: int = 8) -> SearchVerdict:
    """Given ū ≡ sum n_i x̄_i in M_{E/H}, find y_i with ȳ_i ≡ x̄_i and
    sum n_i y_i ≤ u in M_E.  Candidates for y_i are the first ``per_term``
    members of the class of x_i with their H-part removed."""
    h = _check_h(g, h)
    q = _quotient(g, h)
    if q is None:
        raise MonoidError("H = E^0 leaves nothing to lift")
    if len(ns) != len(xs):
        raise MonoidError("ns and xs differ in length")
    keep = set(g.vertices) - h
    rhs = sum((project_to_quotient(g, h, xi) * ni for ni, xi in zip(ns, xs)), MonoidVector())
    pre = monoid_equal(q, project_to_quotient(g, h, u), rhs, bound, cap)
    if not pre.found:
        raise MonoidError("precondition not established in E/H")
    pools = []
    for xi in xs:
        pool = []
        for s, _, _ in class_states(g, xi, bound, cap):
            if s is None:
                break
            cand = s.restrict(keep)
            if cand not in pool:
                pool.append(cand)
            if len(pool) >= per_term:
                break
        pools.append(pool)
    explored = 0
    for ys in product(*pools):
        explored += 1
        total = sum((y * ni for ni, y in zip(ns, ys)), MonoidVector())
        leq = monoid_leq(g, total, u, bound, cap)
        if leq.found:
            return SearchVerdict("found", {"ys": list(ys), "leq": leq.witness}, explored, 0)
    return SearchVerdict("unknown", None, explored, bound)
