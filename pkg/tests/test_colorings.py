from __future__ import annotations

import pytest

from graphbialg.colorings import (
    ColoringRangeError,
    compatible_pair_count,
    compatible_pair_signed_sum,
    iter_opc_triples,
    iter_pair_colorings,
    opc_signed_sum,
    proper_coloring_count,
    tutte_negative_check,
)
from graphbialg.graphs import complete_graph, edgeless_graph, gr0, simple_isoclasses_upto
from graphbialg.invariants import fk_polynomial, tutte_polynomial

K2, K3 = complete_graph(2), complete_graph(3)
DOT = edgeless_graph(1)


def test_proper_counts():
    assert proper_coloring_count(K3, 3) == 6
    assert proper_coloring_count(K3, 2) == 0
    assert proper_coloring_count(edgeless_graph(3), 2) == 8


def test_pair_count_examples():
    assert compatible_pair_count(K2, 2, 2) == 6
    assert compatible_pair_count(K3, 0, 2) == 0
    assert compatible_pair_count(edgeless_graph(3), 2, 5) == 8


def test_signed_examples():
    assert compatible_pair_signed_sum(K2, 2, 2) == 0
    assert compatible_pair_signed_sum(edgeless_graph(2), 3, 4) == 9
    assert compatible_pair_signed_sum(K3, 1, 1) == 0


def test_opc_examples():
    assert opc_signed_sum(K2, 1, 1, "nonneg") == 0
    assert opc_signed_sum(DOT, 2, 0, "nonneg") == -2
    assert opc_signed_sum(K3, 1, 1, "negative") == -6


def test_tutte_quadrant_examples():
    assert tutte_negative_check(K3, 2, 2, "pos") == 8
    assert tutte_negative_check(edgeless_graph(2), 2, 2, "pos") == 1
    assert tutte_negative_check(K2, 1, 2, "negx") == tutte_polynomial(K2)(-1, 2)


def test_range_errors():
    with pytest.raises(ColoringRangeError):
        compatible_pair_count(K2, -1, 0)
    with pytest.raises(ColoringRangeError):
        opc_signed_sum(K2, 1, 0, "negative")
    with pytest.raises(ColoringRangeError):
        tutte_negative_check(K2, 1, 1, "pos")


def test_materialized_pairs_match_counts():
    # micro-oracle: enumerate the pairs themselves
    for g in simple_isoclasses_upto(4):
        if g.num_edges > 4:
            continue
        for x in range(3):
            for y in range(3):
                pcs = list(iter_pair_colorings(g, x, y))
                assert len(pcs) == compatible_pair_count(g, x, y)
                signed = sum((-1) ** sum(1 for v in pc.edge_values.values() if v) for pc in iter_pair_colorings(g, x, y))
                if y >= 0:
                    assert signed == compatible_pair_signed_sum(g, x, y + 1)


def test_materialized_opc_match_sums():
    z_cache = {}
    for g in simple_isoclasses_upto(3):
        z = z_cache.setdefault(g, fk_polynomial(g))
        for x in range(3):
            for y in (-1, 0, 1):
                s = sum((-1) ** gr0(t.h).cc for t in iter_opc_triples(g, x, y + 1))
                assert s == opc_signed_sum(g, x, y, "nonneg") == z(-x, y)
            for y in (1, 2):
                s = sum(
                    (-1) ** (gr0(t.h).cc + sum(1 for v in t.coloring.edge_values.values() if v))
                    for t in iter_opc_triples(g, x, y - 1)
                )
                assert s == opc_signed_sum(g, x, y, "negative") == z(-x, -y)
