"""Shared fixture graphs.

The small named graphs exercised throughout the suite:

* triple_edge: two vertices joined by three parallel edges
* k4: complete graph on four vertices
* k33: complete bipartite 3+3
* prism: two triangles joined by a perfect matching
* bridged8: smallest bridged cubic multigraph (3-vertex double-edge
  block, bridge, 5-vertex subdivided-K4 block); no simple bridged cubic
  graph exists below 10 vertices
* bridged10: two subdivided-K4 blocks joined by a bridge (simple)
* heawood: the 14-vertex girth-6 graph, taken from networkx
"""

from __future__ import annotations

import networkx as nx
import pytest

from cubicscan.graphs import CubicGraph, from_edge_list, petersen


@pytest.fixture(scope="session")
def triple_edge() -> CubicGraph:
    return from_edge_list(2, [(0, 1), (0, 1), (0, 1)])


@pytest.fixture(scope="session")
def k4() -> CubicGraph:
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture(scope="session")
def k33() -> CubicGraph:
    return from_edge_list(
        6, [(u, v) for u in range(3) for v in range(3, 6)]
    )


@pytest.fixture(scope="session")
def prism() -> CubicGraph:
    return from_edge_list(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )


@pytest.fixture(scope="session")
def petersen_graph() -> CubicGraph:
    return petersen()


def _subdivided_k4_block(offset: int) -> list[tuple[int, int]]:
    """Five-vertex block: K4 on offset+1..offset+4 with the edge between
    the first two replaced by a path through the attachment vertex."""
    s, a, b, c, d = range(offset, offset + 5)
    return [(s, a), (s, b), (a, c), (a, d), (b, c), (b, d), (c, d)]


@pytest.fixture(scope="session")
def bridged8() -> CubicGraph:
    edges = [(0, 1), (0, 2), (1, 2), (1, 2), (0, 3)] + _subdivided_k4_block(3)
    return from_edge_list(8, edges)


@pytest.fixture(scope="session")
def bridged10() -> CubicGraph:
    edges = _subdivided_k4_block(0) + _subdivided_k4_block(5) + [(0, 5)]
    return from_edge_list(10, edges)


@pytest.fixture(scope="session")
def heawood() -> CubicGraph:
    g = nx.heawood_graph()
    return from_edge_list(g.number_of_nodes(), list(g.edges()))


@pytest.fixture(scope="session")
def two_k4s_disconnected_edges() -> list[tuple[int, int]]:
    block = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return block + [(u + 4, v + 4) for u, v in block]
