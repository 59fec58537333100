import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dqslab import families as F
from dqslab.cli_io.graph6 import Graph6Error, decode_graph6, encode_graph6
from dqslab.enumerate import canonical_form
from dqslab.graph_core import Graph
from helpers import classes, random_graph, to_nx


def test_examples():
    assert encode_graph6(F.complete(2)) == "A_"
    assert encode_graph6(Graph.empty(1)) == "@"
    assert encode_graph6(Graph.empty(0)) == "?"


def test_round_trip_order_5():
    for g in classes(5):
        assert decode_graph6(encode_graph6(g)) == g


def test_canonical_codes_survive_round_trip():
    for n in range(1, 7):
        for g in classes(n):
            assert canonical_form(decode_graph6(encode_graph6(g))) == canonical_form(g)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_bit_exact_against_networkx(data):
    g = random_graph(data.draw, st, nmax=20)
    ours = encode_graph6(g)
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == ref
    back = nx.from_graph6_bytes(ours.encode())
    assert sorted(map(sorted, back.edges())) == sorted(map(list, g.edges()))
    assert decode_graph6(">>graph6<<" + ours) == g


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("A", 1),
    ("A_?", 2),
    ("A`", 1),
    ("A\x7f", 1),
    ("~??", 0),
])
def test_malformed(text, offset):
    with pytest.raises(Graph6Error) as exc:
        decode_graph6(text)
    assert exc.value.offset == offset


def test_order_above_graph_cap():
    # valid graph6 for 40 isolated vertices, but beyond the in-memory order cap
    text = chr(63 + 40) + "?" * ((40 * 39 // 2 + 5) // 6)
    with pytest.raises(ValueError):
        decode_graph6(text)
