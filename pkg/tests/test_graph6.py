import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from abcindex.enumeration import EnumerationTask, enumerate_connected
from abcindex.graph import complete, empty, from_mask, is_isomorphic, star
from abcindex.graph6 import Graph6Error, parse_graph6, write_graph6

from conftest import to_nx


def test_known_strings():
    assert parse_graph6("C~") == complete(4)
    assert write_graph6(complete(4)) == "C~"
    assert parse_graph6("D??") == empty(5)
    assert write_graph6(complete(1)) == "@"
    assert parse_graph6("@") == complete(1)


def test_star_round_trip():
    s = write_graph6(star(4))
    assert is_isomorphic(parse_graph6(s), star(4))
    assert write_graph6(parse_graph6(s)) == s


def test_trailing_newline_tolerated():
    assert parse_graph6("C~\n") == complete(4)


@pytest.mark.parametrize("n", range(1, 6))
def test_round_trip_all_connected(n):
    for g in enumerate_connected(EnumerationTask(n)) if n >= 2 else [complete(1)]:
        s = write_graph6(g)
        assert parse_graph6(s) == g
        assert write_graph6(parse_graph6(s)) == s


@given(st.integers(1, 32).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1))))
def test_matches_networkx_encoder(args):
    g = from_mask(*args)
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert write_graph6(g) == ref
    assert parse_graph6(ref) == g


@pytest.mark.parametrize("text,offset", [
    ("", 0),
    (">>graph6<<C~", 0),
    (" ", 0),
    ("~??", 0),
    ("?", 0),
    ("C", 1),
    ("C~~", 2),
    ("D?\x7f", 2),
    ("B@", 1),
])
def test_errors(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_capacity_size_byte():
    # n = 33 fits in one size byte but exceeds the vertex capacity
    with pytest.raises(Graph6Error):
        parse_graph6(chr(33 + 63) + "?" * 88)
