from __future__ import annotations

import pytest

from graphbialg.formats import (
    FormatError,
    emit_digraph6,
    emit_graph6,
    mixed_from_json,
    mixed_to_json,
    parse_any,
    parse_digraph6,
    parse_graph6,
)
from graphbialg.graphs import MixedGraph, OrientedGraph, SimpleGraph, complete_graph, oriented_isoclasses, simple_isoclasses


def test_known_strings():
    assert emit_graph6(complete_graph(3)) == "Bw"
    assert parse_graph6("A_").edges == {(0, 1)}
    assert parse_graph6("?").n == 0
    assert emit_graph6(SimpleGraph(0, [])) == "?"


def test_header_is_accepted():
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)


def test_round_trip_all_small():
    for g in simple_isoclasses(6):
        assert parse_graph6(emit_graph6(g)) == g
    for g in oriented_isoclasses(4):
        assert parse_digraph6(emit_digraph6(g)) == g


def test_large_n_encoding():
    g = SimpleGraph(63, [(0, 62)])
    assert parse_graph6(emit_graph6(g)) == g


@pytest.mark.parametrize("bad", ["B~~", "B", "\x7f", "A\x7f"])
def test_malformed(bad):
    with pytest.raises(FormatError):
        parse_graph6(bad)


def test_digraph_loop_rejected():
    # one vertex with its loop bit set
    with pytest.raises(FormatError):
        parse_digraph6("&@_")


def test_parse_any_dispatches():
    assert isinstance(parse_any(emit_digraph6(OrientedGraph(2, [(0, 1)]))), OrientedGraph)
    assert isinstance(parse_any("A_"), SimpleGraph)


def test_mixed_json_round_trip():
    h = MixedGraph(3, [(0, 1)], [(2, 1)])
    assert mixed_from_json(mixed_to_json(h)) == h


def test_cross_check_networkx():
    nx = pytest.importorskip("networkx")
    for g in simple_isoclasses(5):
        h = nx.from_graph6_bytes(emit_graph6(g).encode())
        assert {tuple(sorted(e)) for e in h.edges()} == g.edges
        assert h.number_of_nodes() == g.n or g.n == 0
