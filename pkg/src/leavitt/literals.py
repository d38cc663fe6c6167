"""Text syntax for Elements of L_K(E) and for graph-monoid vectors.

Element literals are sums of terms separated by ``+`` / ``-``::

    term  := [coef "*"] atom
    coef  := INT | INT "/" INT
    atom  := path [";" "g(" path ")"]  |  "g(" path ")"
    path  := ID ("." ID)*                 (edge ids, or a single vertex id)

``3/2 * e1.e2 ; g(e3)`` is (3/2)·e1 e2 e3*.  ``g(q)`` alone is the ghost
path q*.  A lone vertex id is that vertex.  Ids may not contain whitespace
or any of ``+-*/;.()``.

Monoid literals are ``2*v + w`` (``0`` for the empty vector).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .graph import Graph
from .kernel.algebra import Element, KernelError, Monomial, make_monomial, normalize

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<id>[^\s+\-*/;.()]+)|(?P<op>[+\-*;.()]))")


class LiteralError(ValueError):
    pass


def _tokens(text: str):
    pos = 0
    text = text.rstrip()
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise LiteralError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else (None, None, len(self.text))

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise LiteralError(f"expected {want} at {tok[2]} in {self.text!r}")
        self.i += 1
        return tok

    def at_end(self):
        return self.i >= len(self.toks)

    def signed_terms(self, term):
        out = []
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        out.append((sign, term()))
        while not self.at_end():
            op = self.take("op")[1]
            if op not in ("+", "-"):
                raise LiteralError(f"expected + or - at {self.toks[self.i - 1][2]} in {self.text!r}")
            out.append((-1 if op == "-" else 1, term()))
        return out

    def coef(self):
        if self.peek()[0] == "num" and self.peek(1)[1] == "*":
            c = Fraction(self.take()[1])
            self.take("op", "*")
            return c
        return Fraction(1)

    def path(self):
        ids = [self.take("id")[1]]
        while self.peek()[1] == ".":
            self.take()
            ids.append(self.take("id")[1])
        return ids


def _split_path(g: Graph, ids: list[str]):
    """Returns (edge tuple, vertex or None)."""
    if len(ids) == 1 and ids[0] in g.vertex_index:
        return (), ids[0]
    for x in ids:
        if x not in g.edge:
            raise LiteralError(f"unknown id {x!r}")
    return tuple(ids), None


def parse_element(g: Graph, text: str) -> Element:
    text = text.strip()
    if text == "0":
        return Element.zero(g)
    ps = _Parser(text)

    def term():
        c = ps.coef()
        if ps.peek()[1] == "g" and ps.peek(1)[1] == "(" and "g" not in g.vertex_index:
            p, v = (), None
            q, qv = _ghost_part(ps)
        else:
            p, v = _split_path(g, ps.path())
            q, qv = ((), None)
            if ps.peek()[1] == ";":
                ps.take()
                q, qv = _ghost_part(ps)
        vs = {x for x in (v, qv) if x is not None}
        if len(vs) > 1:
            raise LiteralError(f"vertices {sorted(vs)} disagree in one term")
        try:
            return c, make_monomial(g, p, q, vs.pop() if vs else None)
        except KernelError as exc:
            raise LiteralError(str(exc)) from None

    def _ghost_part(ps):
        ps.take("id", "g")
        ps.take("op", "(")
        q, qv = _split_path(g, ps.path())
        ps.take("op", ")")
        return q, qv

    raw = [(sign * c, m) for sign, (c, m) in ps.signed_terms(term)]
    return normalize(g, raw)


def _format_coef(c) -> str:
    return str(c)


def format_monomial(m: Monomial) -> str:
    real = ".".join(m.p) if m.p else m.v
    if not m.q:
        return real
    ghost = f"g({'.'.join(m.q)})"
    return ghost if not m.p else f"{real} ; {ghost}"


def format_element(x: Element) -> str:
    if not x:
        return "0"
    parts = []
    for m, c in x.sorted_terms():
        mag = -c if c < 0 else c
        body = format_monomial(m)
        if mag != 1:
            body = f"{_format_coef(mag)} * {body}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


# -- monoid vectors ----------------------------------------------------------

def parse_vector(vertices, text: str) -> dict[str, int]:
    """``2*v + w`` -> {"v": 2, "w": 1}; ids must be in ``vertices``."""
    vertices = set(vertices)
    text = text.strip()
    if text == "0":
        return {}
    out: dict[str, int] = {}
    for chunk in text.split("+"):
        chunk = chunk.strip()
        m = re.fullmatch(r"(?:(\d+)\s*\*?\s*)?([^\s+*]+)", chunk)
        if not m:
            raise LiteralError(f"bad monoid term {chunk!r}")
        n, v = int(m.group(1) or 1), m.group(2)
        if v.isdigit() and m.group(1) is None:
            if int(v) == 0:
                continue
            raise LiteralError(f"bad monoid term {chunk!r}")
        if v not in vertices:
            raise LiteralError(f"unknown vertex {v!r}")
        out[v] = out.get(v, 0) + n
    return {v: n for v, n in out.items() if n}


def format_vector(order, counts: dict[str, int]) -> str:
    parts = [v if counts[v] == 1 else f"{counts[v]}*{v}" for v in order if counts.get(v)]
    return " + ".join(parts) if parts else "0"
