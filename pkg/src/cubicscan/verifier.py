"""Structural claim checks on a single graph, and the 10-vertex
uniqueness check for the all-5-cycle property.

``verify_claims`` evaluates every claim predicate unconditionally, so
the resulting report doubles as a structural profile of the graph even
when the all-5-cycle premise fails. When the premise holds, the claim
chain C1..C8 plus the final neighborhood check must all hold; the scan
in :mod:`cubicscan.enumeration` asserts exactly that.

Claim ids:
  C1  no cycle of length two (no parallel edge pair)
  C2  no two triangles sharing an edge
  C3  no square and triangle sharing an edge
  C4  no triangle
  C5  girth is exactly five
  C6  3-edge-connected
  C7  every 3-edge-cut is a vertex star
  C8  every 3-edge path extends to a perfect matching through its
      outer edges
  FINAL  5-cycle neighborhood structure (see verify_neighborhood_structure)
  PROP4  a 10-vertex girth-5 graph must be the Petersen graph
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from . import connectivity, matching
from .errors import DisconnectedError, DuplicateGraphError, PreconditionError
from .graphs import CubicGraph, canonical_form, is_isomorphic, petersen

__all__ = [
    "CLAIM_IDS",
    "ClaimResult",
    "ClaimReport",
    "verify_claims",
    "verify_neighborhood_structure",
    "verify_petersen_uniqueness",
]

CLAIM_IDS = ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "FINAL", "PROP4")


@dataclass(frozen=True)
class ClaimResult:
    holds: bool
    witness: object = None


@dataclass(frozen=True)
class ClaimReport:
    """Per-graph record of every claim predicate plus the premise."""

    graph_certificate: str
    premise_holds: bool
    premise_witness: dict | None
    claim_results: dict[str, ClaimResult] = field(compare=False)
    is_petersen: bool = False

    def to_json_dict(self) -> dict:
        return {
            "graph_certificate": self.graph_certificate,
            "premise_holds": self.premise_holds,
            "premise_witness": self.premise_witness,
            "claims": {
                cid: {"holds": res.holds, "witness": res.witness}
                for cid, res in sorted(self.claim_results.items())
            },
            "is_petersen": self.is_petersen,
        }


def _three_edge_paths(g: CubicGraph) -> Iterator[tuple[int, int, int, int]]:
    """All paths u-v-w-x on four distinct vertices, one orientation each."""
    nbr = g.neighbor_lists
    for v in range(g.n):
        for w in set(nbr[v]):
            if w < v:
                continue  # orient the middle edge
            for u in set(nbr[v]) - {w}:
                for x in set(nbr[w]) - {v, u}:
                    if u != x:
                        yield (u, v, w, x)


def _two_edge_paths(g: CubicGraph) -> Iterator[tuple[int, int, int]]:
    """All paths u-v-w on three distinct vertices, with u < w."""
    nbr = g.neighbor_lists
    for v in range(g.n):
        candidates = sorted(set(nbr[v]))
        for i, u in enumerate(candidates):
            for w in candidates[i + 1 :]:
                yield (u, v, w)


def _count_five_cycles_through_path(g: CubicGraph, u: int, v: int, w: int) -> int:
    """Number of distinct 5-cycles containing the path u-v-w."""
    nbr = [set(row) for row in g.neighbor_lists]
    count = 0
    for x in nbr[w] - {u, v}:
        for y in nbr[u] - {v, w, x}:
            if x in nbr[y]:
                count += 1
    return count


def _check_c8(g: CubicGraph) -> ClaimResult:
    pair_sets = [
        frozenset(g.edges[eid] for eid in m)
        for m in matching.enumerate_perfect_matchings(g)
    ]
    for u, v, w, x in _three_edge_paths(g):
        first = (min(u, v), max(u, v))
        second = (min(w, x), max(w, x))
        if not any(first in pairs and second in pairs for pairs in pair_sets):
            return ClaimResult(False, {"path": [u, v, w, x]})
    return ClaimResult(True)


def _neighborhood_structure(g: CubicGraph) -> tuple[bool, dict | None]:
    nbr = [set(row) for row in g.neighbor_lists]
    for u, v, w, x in _three_edge_paths(g):
        if not any(y in nbr[u] for y in nbr[x] - {u, v, w}):
            return False, {"check": "3-edge path not on a 5-cycle", "path": [u, v, w, x]}
    for u, v, w in _two_edge_paths(g):
        if _count_five_cycles_through_path(g, u, v, w) < 2:
            return False, {
                "check": "2-edge path on fewer than two 5-cycles",
                "path": [u, v, w],
            }
    for u in range(g.n):
        v, w, x = sorted(nbr[u])
        blocks = [sorted(nbr[b] - {u}) for b in (v, w, x)]
        names = [u, v, w, x] + [vertex for block in blocks for vertex in block]
        if len(set(names)) != 10:
            return False, {
                "check": "closed second neighborhood is not 10 distinct vertices",
                "vertex": u,
            }
        for i in range(3):
            for j in range(i + 1, 3):
                between = sum(
                    1
                    for a, b in g.edges
                    if (a in blocks[i] and b in blocks[j])
                    or (a in blocks[j] and b in blocks[i])
                )
                if between != 2:
                    return False, {
                        "check": "second-neighborhood blocks not joined by exactly two edges",
                        "vertex": u,
                        "blocks": [blocks[i], blocks[j]],
                        "edges_between": between,
                    }
    return True, None


class NeighborhoodCheck(NamedTuple):
    holds: bool
    witness: dict | None


def verify_neighborhood_structure(g: CubicGraph) -> NeighborhoodCheck:
    """Check the three 5-cycle neighborhood conditions on a girth-5 graph.

    (a) every 3-edge path lies on a 5-cycle; (b) every 2-edge path lies
    on at least two distinct 5-cycles; (c) each closed second
    neighborhood has 10 distinct vertices with exactly two edges
    between each pair of second-neighborhood blocks.
    """
    girth_value = connectivity.girth(g)
    if girth_value != 5:
        raise PreconditionError(
            f"neighborhood structure needs girth 5, got {girth_value}"
        )
    return NeighborhoodCheck(*_neighborhood_structure(g))


def _min_cut_witness(g: CubicGraph) -> list[int]:
    """Edge ids of some minimum cut of size < 3 (deterministic)."""
    bridge_list = connectivity.bridges(g)
    if bridge_list:
        return [bridge_list[0]]
    m = len(g.edges)
    for first in range(m):
        for second in range(first + 1, m):
            seen = {0}
            stack = [0]
            while stack:
                node = stack.pop()
                for nbr, eid in g.adjacency[node]:
                    if eid in (first, second) or nbr in seen:
                        continue
                    seen.add(nbr)
                    stack.append(nbr)
            if len(seen) != g.n:
                return [first, second]
    return []


def verify_claims(g: CubicGraph) -> ClaimReport:
    """Evaluate the premise and every claim predicate on one graph."""
    if not connectivity.is_connected(g):
        raise DisconnectedError("claim verification requires a connected graph")

    results: dict[str, ClaimResult] = {}

    two_cycle = connectivity.find_two_cycle(g)
    results["C1"] = ClaimResult(
        two_cycle is None,
        None if two_cycle is None else {"parallel_edge_ids": list(two_cycle)},
    )

    adjacent = connectivity.find_adjacent_triangles(g)
    results["C2"] = ClaimResult(
        adjacent is None,
        None
        if adjacent is None
        else {"apexes": [adjacent[0], adjacent[1]], "shared_edge": list(adjacent[2])},
    )

    square_triangle = connectivity.find_square_triangle_pair(g)
    results["C3"] = ClaimResult(
        square_triangle is None,
        None
        if square_triangle is None
        else {
            "square": list(square_triangle[0]),
            "triangle": list(square_triangle[1]),
            "shared_edge": list(square_triangle[2]),
        },
    )

    triangle = connectivity.find_cycle_of_length(g, 3)
    results["C4"] = ClaimResult(
        triangle is None, None if triangle is None else {"cycle": list(triangle)}
    )

    girth_value = connectivity.girth(g)
    if girth_value == 5:
        results["C5"] = ClaimResult(True)
    else:
        short: object = None
        if girth_value == 2 and two_cycle is not None:
            short = {"parallel_edge_ids": list(two_cycle)}
        elif girth_value == 3 and triangle is not None:
            short = {"cycle": list(triangle)}
        elif girth_value == 4:
            square = connectivity.find_cycle_of_length(g, 4)
            short = None if square is None else {"cycle": list(square)}
        results["C5"] = ClaimResult(False, {"girth": girth_value, "witness": short})

    lam = connectivity.edge_connectivity(g)
    results["C6"] = ClaimResult(
        lam == 3,
        None if lam == 3 else {"edge_connectivity": lam, "cut": _min_cut_witness(g)},
    )

    nonstar = next(
        (c for c in connectivity.enumerate_3_edge_cuts(g) if not c.is_vertex_star), None
    )
    results["C7"] = ClaimResult(
        nonstar is None,
        None
        if nonstar is None
        else {"cut_edges": sorted(nonstar.edges), "side": list(nonstar.side_u)},
    )

    results["C8"] = _check_c8(g)

    if girth_value == 5:
        holds, witness = _neighborhood_structure(g)
        results["FINAL"] = ClaimResult(holds, witness)
    else:
        results["FINAL"] = ClaimResult(False, {"girth": girth_value})

    petersen_like = is_isomorphic(g, petersen())
    results["PROP4"] = ClaimResult(not (g.n == 10 and girth_value == 5) or petersen_like)

    premise = True
    premise_witness: dict | None = None
    matchings = matching.enumerate_perfect_matchings(g)
    if not matchings:
        premise = False
        premise_witness = {"reason": "no perfect matching"}
    else:
        for m in matchings:
            spectrum = matching.cycle_spectrum(matching.complementary_two_factor(g, m))
            if any(length != 5 for length in spectrum):
                premise = False
                premise_witness = {"matching": sorted(m), "spectrum": list(spectrum)}
                break

    return ClaimReport(
        graph_certificate=canonical_form(g).certificate.decode("ascii"),
        premise_holds=premise,
        premise_witness=premise_witness,
        claim_results=results,
        is_petersen=petersen_like,
    )


def verify_petersen_uniqueness(stream: Iterable[CubicGraph]) -> bool:
    """Among all connected cubic simple graphs on 10 vertices, exactly one
    has girth 5 and it is the Petersen graph.

    The stream must be duplicate-free up to isomorphism; duplicate
    certificates raise DuplicateGraphError.
    """
    seen: set[bytes] = set()
    girth_five: list[CubicGraph] = []
    for g in stream:
        cert = canonical_form(g).certificate
        if cert in seen:
            raise DuplicateGraphError("stream contains isomorphic duplicates")
        seen.add(cert)
        if connectivity.girth(g) == 5:
            girth_five.append(g)
    return len(girth_five) == 1 and is_isomorphic(girth_five[0], petersen())
