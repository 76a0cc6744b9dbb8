"""Orderly generation of connected cubic graphs and the exhaustive scan.

Generation enumerates "block-wise" labeled graphs: vertices are
completed in label order and a new vertex may only enter as the
smallest unused label. Every lexicographically minimal labeling has
this shape, so accepting exactly the graphs that equal their own
canonical form (orderly generation) emits one representative per
isomorphism class. Completeness is cross-checked against brute-force
labeled enumeration in the test suite.

The scan runs the all-5-cycle premise over every generated connected
bridgeless graph and reports the graphs that satisfy it.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import connectivity, matching
from .errors import GenerationLimitError, OddVertexCountError
from .formats import emit_sparse6
from .graphs import CubicGraph, canonical_form, is_canonical_labeling, petersen

__all__ = [
    "DEFAULT_SIMPLE_LIMIT",
    "DEFAULT_MULTI_LIMIT",
    "PositiveRecord",
    "NScanStats",
    "ScanReport",
    "generate_cubic_graphs",
    "filter_bridgeless",
    "scan_theorem",
    "scan_corpus",
]

DEFAULT_SIMPLE_LIMIT = 14
DEFAULT_MULTI_LIMIT = 10


def _check_generation_bounds(n: int, allow_multi: bool, limit: int | None) -> None:
    if n % 2:
        raise OddVertexCountError(f"no cubic graph has an odd vertex count (n={n})")
    floor = 2 if allow_multi else 4
    if n < floor:
        raise GenerationLimitError(
            f"n={n} is below the smallest {'multigraph' if allow_multi else 'simple graph'} ({floor})"
        )
    cap = limit if limit is not None else (
        DEFAULT_MULTI_LIMIT if allow_multi else DEFAULT_SIMPLE_LIMIT
    )
    if n > cap:
        raise GenerationLimitError(f"n={n} exceeds the configured limit {cap}")


def _blockwise_labeled_graphs(n: int, allow_multi: bool) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield edge lists of all block-wise labeled connected cubic graphs.

    Vertex t's remaining edges go to higher labels, chosen as a
    non-decreasing multiset; an unused label may only be targeted if it
    is the smallest unused one. Connectivity is implied: every vertex
    beyond 0 is first reached from a smaller label.
    """
    deg = [0] * n
    blocks: list[tuple[int, ...]] = []

    def fill(t: int, next_new: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if t == n:
            yield tuple((u, v) for u, blk in enumerate(blocks) for v in blk)
            return
        if t > 0 and t >= next_new:
            return  # vertex t untouched by smaller labels: disconnected
        need = 3 - deg[t]
        chosen: list[int] = []

        def choose(minimum: int, left: int, frontier: int) -> Iterator[tuple[tuple[int, int], ...]]:
            if left == 0:
                blocks.append(tuple(chosen))
                yield from fill(t + 1, frontier)
                blocks.pop()
                return
            for w in range(max(minimum, t + 1), min(frontier, n - 1) + 1):
                if w < frontier and deg[w] >= 3:
                    continue
                multiplicity = chosen.count(w)
                if multiplicity >= (1 if not allow_multi else 3):
                    continue
                if multiplicity == 2 and n != 2:
                    continue  # a triple edge saturates both endpoints
                deg[w] += 1
                chosen.append(w)
                yield from choose(w, left - 1, frontier + 1 if w == frontier else frontier)
                chosen.pop()
                deg[w] -= 1

        yield from choose(t + 1, need, next_new if t > 0 else 1)

    yield from fill(0, 0)


def generate_cubic_graphs(
    n: int, allow_multi: bool = False, limit: int | None = None
) -> Iterator[CubicGraph]:
    """All connected cubic (multi)graphs on n vertices, one per
    isomorphism class, in ascending canonical edge-list order."""
    _check_generation_bounds(n, allow_multi, limit)
    for edges in _blockwise_labeled_graphs(n, allow_multi):
        g = CubicGraph(n=n, edges=edges)
        if is_canonical_labeling(g):
            yield g


def filter_bridgeless(stream: Iterable[CubicGraph]) -> Iterator[CubicGraph]:
    """Pass exactly the graphs with no bridge."""
    for g in stream:
        if not connectivity.bridges(g):
            yield g


@dataclass(frozen=True)
class PositiveRecord:
    """One graph satisfying the all-5-cycle premise."""

    n: int
    certificate: str
    sparse6: str
    is_petersen: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "certificate": self.certificate,
            "sparse6": self.sparse6,
            "is_petersen": self.is_petersen,
        }


@dataclass(frozen=True)
class NScanStats:
    generated: int
    bridgeless: int
    premise_positive: tuple[PositiveRecord, ...]
    elapsed_seconds: float

    def to_json_dict(self) -> dict:
        return {
            "generated": self.generated,
            "bridgeless": self.bridgeless,
            "premise_positive": [p.to_json_dict() for p in self.premise_positive],
            "elapsed_seconds": self.elapsed_seconds,
        }


@dataclass(frozen=True)
class ScanReport:
    n_range: tuple[int, ...]
    allow_multi: bool
    per_n: dict[int, NScanStats]
    elapsed_seconds: float

    @property
    def positives(self) -> tuple[PositiveRecord, ...]:
        return tuple(p for n in self.n_range for p in self.per_n[n].premise_positive)

    def to_json_dict(self) -> dict:
        return {
            "n_range": list(self.n_range),
            "allow_multi": self.allow_multi,
            "per_n": {str(n): stats.to_json_dict() for n, stats in sorted(self.per_n.items())},
            "positives": [p.to_json_dict() for p in self.positives],
            "elapsed_seconds": self.elapsed_seconds,
        }


def _premise_worker(g: CubicGraph) -> bool:
    return matching.all_two_factors_are_five_cycles(g)


def _premise_map(graphs: list[CubicGraph], jobs: int) -> list[bool]:
    if jobs <= 1 or len(graphs) < 2:
        return [_premise_worker(g) for g in graphs]
    with multiprocessing.Pool(processes=jobs) as pool:
        return pool.map(_premise_worker, graphs, chunksize=16)


def _scan_one_n(graphs: list[CubicGraph], n: int, jobs: int) -> NScanStats:
    started = time.perf_counter()
    bridgeless = list(filter_bridgeless(graphs))
    petersen_cert = canonical_form(petersen()).certificate
    positives = []
    verdicts = _premise_map(bridgeless, jobs)
    for g, positive in zip(bridgeless, verdicts):
        if not positive:
            continue
        cert = canonical_form(g).certificate
        positives.append(
            PositiveRecord(
                n=n,
                certificate=cert.decode("ascii"),
                sparse6=emit_sparse6(g).decode("ascii"),
                is_petersen=cert == petersen_cert,
            )
        )
    positives.sort(key=lambda p: p.certificate)
    return NScanStats(
        generated=len(graphs),
        bridgeless=len(bridgeless),
        premise_positive=tuple(positives),
        elapsed_seconds=round(time.perf_counter() - started, 6),
    )


def scan_theorem(n_max: int, allow_multi: bool = False, jobs: int = 1) -> ScanReport:
    """Run the all-5-cycle premise over every connected bridgeless cubic
    (multi)graph with up to n_max vertices.

    The expected outcome is a single positive, at n = 10, isomorphic to
    the Petersen graph (none at all when n_max < 10).
    """
    _check_generation_bounds(n_max, allow_multi, None)
    started = time.perf_counter()
    lowest = 2 if allow_multi else 4
    n_range = tuple(range(lowest, n_max + 1, 2))
    per_n = {}
    for n in n_range:
        graphs = list(generate_cubic_graphs(n, allow_multi))
        per_n[n] = _scan_one_n(graphs, n, jobs)
    return ScanReport(
        n_range=n_range,
        allow_multi=allow_multi,
        per_n=per_n,
        elapsed_seconds=round(time.perf_counter() - started, 6),
    )


def scan_corpus(graphs: Iterable[CubicGraph], jobs: int = 1) -> ScanReport:
    """Scan a user-supplied corpus instead of the internal generator."""
    started = time.perf_counter()
    by_n: dict[int, list[CubicGraph]] = {}
    any_multi = False
    for g in graphs:
        by_n.setdefault(g.n, []).append(g)
        any_multi = any_multi or g.has_parallel_edges
    n_range = tuple(sorted(by_n))
    per_n = {n: _scan_one_n(by_n[n], n, jobs) for n in n_range}
    return ScanReport(
        n_range=n_range,
        allow_multi=any_multi,
        per_n=per_n,
        elapsed_seconds=round(time.perf_counter() - started, 6),
    )
