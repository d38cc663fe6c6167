import pytest
from hypothesis import given, settings, strategies as st

from leavitt.kernel import normalize
from leavitt.literals import LiteralError, format_element, format_vector, parse_element, parse_vector

from conftest import corpus, raw_terms, small_graphs


def test_grammar():
    g = corpus("rose2")
    x = parse_element(g, "3/2 * e1.e2 ; g(e1) - g(e2) + v")
    assert format_element(parse_element(g, format_element(x))) == format_element(x)
    assert parse_element(g, "0") == parse_element(g, "v - v")


@pytest.mark.parametrize("bad", ["e3", "e1 +", "g(e1", "2 * ", "e1 ; e2", "v ; g(e1).x"])
def test_rejects(bad):
    with pytest.raises(LiteralError):
        parse_element(corpus("rose2"), bad)


def test_vertex_mismatch():
    with pytest.raises(LiteralError):
        parse_element(corpus("toeplitz"), "f ; g(e)")


@given(st.data())
@settings(max_examples=100, deadline=None)
def test_round_trip(data):
    g = data.draw(small_graphs(max_vertices=2))
    x = normalize(g, data.draw(raw_terms(g)))
    assert parse_element(g, format_element(x)) == x


def test_vectors():
    assert parse_vector(["v", "w"], "2*v + w") == {"v": 2, "w": 1}
    assert parse_vector(["v"], "2v") == {"v": 2}
    assert parse_vector(["v"], "0") == {}
    assert format_vector(["v", "w"], {"w": 1, "v": 3}) == "3*v + w"
    with pytest.raises(LiteralError):
        parse_vector(["v"], "2*x")
