"""Cuts, connectivity, girth, and small-cycle pattern detectors.

All functions are pure and operate on immutable graphs. Detectors
return the lexicographically smallest witness so that reports and
golden tests are stable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DisconnectedError
from .graphs import CubicGraph

__all__ = [
    "CutSet",
    "is_connected",
    "bridges",
    "edge_connectivity",
    "girth",
    "find_two_cycle",
    "find_adjacent_triangles",
    "find_square_triangle_pair",
    "find_cycle_of_length",
    "enumerate_3_edge_cuts",
    "has_only_trivial_3_edge_cuts",
]


@dataclass(frozen=True)
class CutSet:
    """An edge cut of size 3 together with the two sides it separates.

    Removing ``edges`` disconnects ``side_u`` from ``side_ubar``; the
    sides partition the vertex set and every cut edge crosses between
    them.
    """

    edges: frozenset[int]
    side_u: tuple[int, ...]
    side_ubar: tuple[int, ...]

    @property
    def is_vertex_star(self) -> bool:
        return len(self.side_u) == 1 or len(self.side_ubar) == 1


def is_connected(g: CubicGraph) -> bool:
    seen = _component_from(g, 0, excluded_edge=None)
    return len(seen) == g.n


def _component_from(g: CubicGraph, start: int, excluded_edge: int | None) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w, eid in g.adjacency[u]:
            if eid == excluded_edge or w in seen:
                continue
            seen.add(w)
            queue.append(w)
    return seen


def bridges(g: CubicGraph) -> list[int]:
    """Edge ids whose removal increases the component count, ascending."""
    # DFS low-link; an edge is a bridge iff no back edge (other than
    # itself) spans it, which makes parallel copies non-bridges.
    preorder = [-1] * g.n
    low = [0] * g.n
    found: list[int] = []
    counter = 0

    def visit(root: int) -> None:
        nonlocal counter
        stack: list[tuple[int, int | None, int]] = [(root, None, 0)]
        preorder[root] = low[root] = counter
        counter += 1
        while stack:
            u, via, idx = stack.pop()
            entries = g.adjacency[u]
            if idx < len(entries):
                stack.append((u, via, idx + 1))
                w, eid = entries[idx]
                if eid == via:
                    continue
                if preorder[w] < 0:
                    preorder[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, 0))
                else:
                    low[u] = min(low[u], preorder[w])
            else:
                if via is not None:
                    parent = g.other_endpoint(via, u)
                    low[parent] = min(low[parent], low[u])
                    if low[u] == preorder[u]:
                        found.append(via)

    for v in range(g.n):
        if preorder[v] < 0:
            visit(v)
    return sorted(found)


def edge_connectivity(g: CubicGraph) -> int:
    """Size of a minimum edge cut; in {1, 2, 3} for connected cubic graphs.

    Computed as the minimum over targets t of the maximum number of
    edge-disjoint 0-t paths (unit-capacity max-flow).
    """
    if not is_connected(g):
        raise DisconnectedError("edge connectivity requires a connected graph")
    best = 3  # min degree bounds any cut
    for t in range(1, g.n):
        best = min(best, _max_edge_disjoint_paths(g, 0, t, stop_at=best))
        if best == 1:
            break
    return best


def _max_edge_disjoint_paths(g: CubicGraph, s: int, t: int, stop_at: int = 3) -> int:
    # residual capacity per (edge id, direction); an undirected edge is a
    # pair of opposite unit arcs, flow cancellation handles reuse
    cap: dict[tuple[int, int], int] = {}
    for eid, (u, v) in enumerate(g.edges):
        cap[(eid, u)] = 1  # arc u -> v
        cap[(eid, v)] = 1  # arc v -> u
    flow = 0
    while flow < stop_at:
        parent: dict[int, tuple[int, int]] = {s: (-1, s)}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for w, eid in g.adjacency[u]:
                if w not in parent and cap[(eid, u)] > 0:
                    parent[w] = (eid, u)
                    queue.append(w)
        if t not in parent:
            break
        node = t
        while node != s:
            eid, prev = parent[node]
            cap[(eid, prev)] -= 1
            cap[(eid, node)] += 1
            node = prev
        flow += 1
    return flow


def girth(g: CubicGraph) -> int:
    """Length of the shortest cycle; a parallel edge pair has girth 2."""
    if g.has_parallel_edges:
        return 2
    best = g.n + 1
    for start in range(g.n):
        dist = [-1] * g.n
        via = [-1] * g.n
        dist[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                continue
            for w, eid in g.adjacency[u]:
                if eid == via[u]:
                    continue
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    via[w] = eid
                    queue.append(w)
                else:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def find_two_cycle(g: CubicGraph) -> tuple[int, int] | None:
    """Smallest pair of parallel edge ids, or None if the graph is simple."""
    seen: dict[tuple[int, int], int] = {}
    for eid, pair in enumerate(g.edges):
        if pair in seen:
            return (seen[pair], eid)
        seen[pair] = eid
    return None


def _simple_neighbor_sets(g: CubicGraph) -> list[set[int]]:
    return [set(nbrs) for nbrs in g.neighbor_lists]


def find_adjacent_triangles(g: CubicGraph) -> tuple[int, int, tuple[int, int]] | None:
    """Two triangles sharing an edge, as (u, u', shared edge (v, w))."""
    nbr = _simple_neighbor_sets(g)
    for v, w in sorted(set(g.edges)):
        commons = sorted(nbr[v] & nbr[w])
        if len(commons) >= 2:
            return (commons[0], commons[1], (v, w))
    return None


def find_square_triangle_pair(
    g: CubicGraph,
) -> tuple[tuple[int, int, int, int], tuple[int, int, int], tuple[int, int]] | None:
    """A 4-cycle and a triangle on five distinct vertices sharing one edge.

    Returns (square as cycle u-v-x-w, triangle as cycle v-y-x, shared
    edge (v, x)), lexicographically smallest in (v, x, y, u, w).
    """
    nbr = _simple_neighbor_sets(g)
    for v, x in sorted(set(g.edges)):
        apexes = sorted(nbr[v] & nbr[x])
        if not apexes:
            continue
        for y in apexes:
            for u in sorted(nbr[v] - {x, y}):
                for w in sorted(nbr[x] - {v, y, u}):
                    if u in nbr[w]:
                        return ((u, v, x, w), (v, y, x), (v, x))
    return None


def find_cycle_of_length(g: CubicGraph, k: int) -> tuple[int, ...] | None:
    """Lexicographically smallest cycle on k distinct vertices, k in {3, 4}."""
    if k not in (3, 4):
        raise ValueError(f"k must be 3 or 4, got {k}")
    nbr = _simple_neighbor_sets(g)
    if k == 3:
        for a in range(g.n):
            for b in sorted(nbr[a]):
                if b <= a:
                    continue
                for c in sorted(nbr[a] & nbr[b]):
                    if c > b:
                        return (a, b, c)
        return None
    for a in range(g.n):
        for b in sorted(nbr[a]):
            if b <= a:
                continue
            for c in sorted(nbr[b]):
                if c <= a or c == b:
                    continue
                for d in sorted(nbr[c] & nbr[a]):
                    # b < d keeps one orientation of the cycle a-b-c-d
                    if d <= b or d == a or d == c:
                        continue
                    return (a, b, c, d)
    return None


def enumerate_3_edge_cuts(g: CubicGraph) -> list[CutSet]:
    """All edge cuts of size exactly 3, each with its two sides.

    Enumerates vertex bipartitions (U, V-U) with a 3-edge boundary;
    sides need not be connected, which matters below 3-edge-connectivity.
    Ordered by sorted cut edge ids.
    """
    if not is_connected(g):
        raise DisconnectedError("cut enumeration requires a connected graph")
    cuts = []
    # masks with bit 0 set cover each bipartition exactly once; the
    # all-ones mask (empty complement) is excluded by the range bound
    for mask in range(1, (1 << g.n) - 1, 2):
        boundary = [
            eid
            for eid, (u, v) in enumerate(g.edges)
            if ((mask >> u) & 1) != ((mask >> v) & 1)
        ]
        if len(boundary) != 3:
            continue
        side_u = tuple(v for v in range(g.n) if (mask >> v) & 1)
        side_ubar = tuple(v for v in range(g.n) if not (mask >> v) & 1)
        cuts.append(CutSet(edges=frozenset(boundary), side_u=side_u, side_ubar=side_ubar))
    return sorted(cuts, key=lambda c: sorted(c.edges))


def has_only_trivial_3_edge_cuts(g: CubicGraph) -> bool:
    """True iff every 3-edge-cut isolates a single vertex (is a vertex star)."""
    return all(cut.is_vertex_star for cut in enumerate_3_edge_cuts(g))
