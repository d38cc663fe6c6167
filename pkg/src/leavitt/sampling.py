"""Seeded random generators for Elements and monoid vectors."""

from __future__ import annotations

import random
from fractions import Fraction

from .graph import Graph
from .kernel.algebra import Element, Monomial, normalize
from .monoid import MonoidVector


def random_path_to(g: Graph, rng: random.Random, v: str, length: int) -> tuple[str, ...]:
    """A random path of at most ``length`` edges ending at v (walks backwards,
    stopping early at a source)."""
    p: list[str] = []
    u = v
    for _ in range(length):
        ins = g.in_edges[u]
        if not ins:
            break
        e = rng.choice(ins)
        p.insert(0, e)
        u = g.s(e)
    return tuple(p)


def random_monomial(g: Graph, rng: random.Random, max_len: int = 3) -> Monomial:
    v = rng.choice(g.vertices)
    p = random_path_to(g, rng, v, rng.randint(0, max_len))
    q = random_path_to(g, rng, v, rng.randint(0, max_len))
    return Monomial(p, q, v)


def random_coef(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))


def random_raw(g: Graph, rng: random.Random, max_terms: int = 5, max_len: int = 3):
    return [(random_coef(rng), random_monomial(g, rng, max_len))
            for _ in range(rng.randint(1, max_terms))]


def random_element(g: Graph, rng: random.Random, max_terms: int = 5, max_len: int = 3,
                   nonzero: bool = False) -> Element:
    while True:
        x = normalize(g, random_raw(g, rng, max_terms, max_len))
        if x or not nonzero:
            return x


def random_vector(g: Graph, rng: random.Random, max_total: int = 3) -> MonoidVector:
    counts: dict[str, int] = {}
    for _ in range(rng.randint(0, max_total)):
        v = rng.choice(g.vertices)
        counts[v] = counts.get(v, 0) + 1
    return MonoidVector(counts)
