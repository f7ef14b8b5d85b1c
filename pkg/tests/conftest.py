from __future__ import annotations

import pytest

from graphbialg.graphs import SimpleGraph, complete_graph, edgeless_graph, path_graph


@pytest.fixture
def k2() -> SimpleGraph:
    return complete_graph(2)


@pytest.fixture
def k3() -> SimpleGraph:
    return complete_graph(3)


@pytest.fixture
def p3() -> SimpleGraph:
    return path_graph(3)


@pytest.fixture
def dot() -> SimpleGraph:
    return edgeless_graph(1)
