"""Generator completeness, bridgeless filtering, and the scan."""

import pytest

from cubicscan.enumeration import (
    filter_bridgeless,
    generate_cubic_graphs,
    scan_corpus,
    scan_theorem,
)
from cubicscan.errors import GenerationLimitError, OddVertexCountError
from cubicscan.graphs import canonical_form, is_canonical_labeling, petersen
from oracles import isomorphism_classes

SIMPLE_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}
MULTI_COUNTS = {2: 1, 4: 2, 6: 6, 8: 20, 10: 91}


def test_generator_matches_brute_force_classes_simple():
    for n in (4, 6, 8):
        generated = {g.edges for g in generate_cubic_graphs(n)}
        assert generated == isomorphism_classes(n, False)


def test_generator_matches_brute_force_classes_multi():
    for n in (2, 4, 6):
        generated = {g.edges for g in generate_cubic_graphs(n, allow_multi=True)}
        assert generated == isomorphism_classes(n, True)


def test_generator_counts():
    for n, count in SIMPLE_COUNTS.items():
        assert sum(1 for _ in generate_cubic_graphs(n)) == count
    for n, count in MULTI_COUNTS.items():
        assert sum(1 for _ in generate_cubic_graphs(n, allow_multi=True)) == count


def test_generator_emits_canonical_representatives_without_duplicates():
    for n in (6, 8):
        graphs = list(generate_cubic_graphs(n, allow_multi=True))
        certs = {canonical_form(g).certificate for g in graphs}
        assert len(certs) == len(graphs)
        assert all(is_canonical_labeling(g) for g in graphs)
        edge_lists = [g.edges for g in graphs]
        assert edge_lists == sorted(edge_lists)


def test_generator_bounds():
    with pytest.raises(OddVertexCountError):
        list(generate_cubic_graphs(7))
    with pytest.raises(GenerationLimitError):
        list(generate_cubic_graphs(2))  # simple graphs start at 4
    with pytest.raises(GenerationLimitError):
        list(generate_cubic_graphs(16))
    with pytest.raises(GenerationLimitError):
        list(generate_cubic_graphs(12, allow_multi=True))
    # an explicit limit overrides the default cap
    assert sum(1 for _ in generate_cubic_graphs(12, allow_multi=True, limit=12)) > 91


def test_filter_bridgeless(k4, triple_edge, bridged8):
    assert list(filter_bridgeless([k4])) == [k4]
    assert list(filter_bridgeless([triple_edge])) == [triple_edge]
    assert list(filter_bridgeless([bridged8])) == []


def test_scan_small_has_no_positives():
    report = scan_theorem(8)
    assert report.n_range == (4, 6, 8)
    assert not report.positives
    assert report.per_n[8].generated == 5
    assert report.per_n[8].bridgeless == 5


def test_scan_to_ten_finds_exactly_petersen():
    report = scan_theorem(10)
    assert [p.n for p in report.positives] == [10]
    assert report.positives[0].is_petersen
    expected = canonical_form(petersen()).certificate.decode("ascii")
    assert report.positives[0].certificate == expected


def test_scan_multigraphs_to_six():
    report = scan_theorem(6, allow_multi=True)
    assert report.n_range == (2, 4, 6)
    assert report.per_n[2].generated == 1
    assert report.per_n[2].bridgeless == 1  # triple edge survives the filter
    assert not report.positives


def test_scan_repeats_identically_modulo_timing():
    a = scan_theorem(8).to_json_dict()
    b = scan_theorem(8).to_json_dict()

    def strip(d):
        d.pop("elapsed_seconds", None)
        for stats in d.get("per_n", {}).values():
            stats.pop("elapsed_seconds", None)
        return d

    assert strip(a) == strip(b)


def test_scan_parallel_jobs_match_serial():
    serial = scan_theorem(8, jobs=1).to_json_dict()
    parallel = scan_theorem(8, jobs=2).to_json_dict()
    for d in (serial, parallel):
        d.pop("elapsed_seconds")
        for stats in d["per_n"].values():
            stats.pop("elapsed_seconds")
    assert serial == parallel


def test_scan_corpus_mode(petersen_graph, k4, prism):
    report = scan_corpus([k4, prism, petersen_graph])
    assert report.n_range == (4, 6, 10)
    assert [p.is_petersen for p in report.positives] == [True]


def test_scan_rejects_odd_or_oversized_bounds():
    with pytest.raises(OddVertexCountError):
        scan_theorem(9)
    with pytest.raises(GenerationLimitError):
        scan_theorem(12, allow_multi=True)
