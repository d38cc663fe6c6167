"""Shared fixtures and hypothesis strategies."""

from pathlib import Path

import pytest
from hypothesis import strategies as st

from leavitt.graph import Graph, read_graph
from leavitt.kernel.algebra import Monomial

CORPUS = Path(__file__).resolve().parents[1] / "src" / "leavitt" / "corpus"


def corpus(name: str) -> Graph:
    return read_graph(CORPUS / f"{name}.json")


@pytest.fixture(scope="session")
def named():
    return {p.stem: read_graph(p) for p in sorted(CORPUS.glob("*.json"))}


@st.composite
def small_graphs(draw, max_vertices=3, max_parallel=2):
    n = draw(st.integers(1, max_vertices))
    vs = [f"v{i}" for i in range(n)]
    edges = []
    for a in range(n):
        for b in range(n):
            for j in range(draw(st.integers(0, max_parallel))):
                edges.append((f"e{a}{b}_{j}", vs[a], vs[b]))
    return Graph.from_edges(vs, edges, "drawn")


@st.composite
def monomials(draw, g: Graph, max_len=3):
    """p q* with r(p) = r(q), built by walking backwards from a vertex."""
    v = draw(st.sampled_from(g.vertices))
    paths = []
    for _ in range(2):
        p, u = [], v
        for _ in range(draw(st.integers(0, max_len))):
            ins = g.in_edges[u]
            if not ins:
                break
            e = draw(st.sampled_from(ins))
            p.insert(0, e)
            u = g.s(e)
        paths.append(tuple(p))
    return Monomial(paths[0], paths[1], v)


def raw_terms(g: Graph, max_terms=4, max_len=3):
    coef = st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool)
    return st.lists(st.tuples(coef, monomials(g, max_len)), min_size=1, max_size=max_terms)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
