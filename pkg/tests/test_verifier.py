"""Claim reports, the neighborhood check, and 10-vertex uniqueness."""

import pytest

from cubicscan.connectivity import girth
from cubicscan.enumeration import generate_cubic_graphs
from cubicscan.errors import DisconnectedError, DuplicateGraphError, PreconditionError
from cubicscan.graphs import CubicGraph, canonical_form, is_isomorphic, relabeled
from cubicscan.verifier import (
    CLAIM_IDS,
    verify_claims,
    verify_neighborhood_structure,
    verify_petersen_uniqueness,
)


def test_petersen_report_all_claims_hold(petersen_graph):
    report = verify_claims(petersen_graph)
    assert report.premise_holds
    assert report.premise_witness is None
    assert report.is_petersen
    assert set(report.claim_results) == set(CLAIM_IDS)
    assert all(res.holds for res in report.claim_results.values())


def test_k4_report(k4):
    report = verify_claims(k4)
    assert not report.premise_holds
    assert report.premise_witness is not None
    assert report.premise_witness["spectrum"] == [4]
    assert not report.claim_results["C4"].holds
    assert report.claim_results["C4"].witness == {"cycle": [0, 1, 2]}
    assert not report.claim_results["C5"].holds
    assert not report.is_petersen
    # vacuously fine: C8 and C6/C7 hold on K4
    assert report.claim_results["C6"].holds
    assert report.claim_results["C7"].holds
    assert report.claim_results["C8"].holds


def test_prism_report_flags_non_star_cut(prism):
    report = verify_claims(prism)
    assert not report.premise_holds
    assert not report.claim_results["C7"].holds
    witness = report.claim_results["C7"].witness
    assert witness is not None
    cut_edges = witness["cut_edges"]
    assert [prism.edges[eid] for eid in cut_edges] == [(0, 3), (1, 4), (2, 5)]


def test_bridged_report_flags_c6(bridged8):
    report = verify_claims(bridged8)
    assert not report.claim_results["C6"].holds
    witness = report.claim_results["C6"].witness
    assert witness == {"edge_connectivity": 1, "cut": [4]}
    assert not report.claim_results["C1"].holds


def test_triple_edge_report(triple_edge):
    report = verify_claims(triple_edge)
    assert not report.premise_holds
    assert report.premise_witness["spectrum"] == [2]
    assert not report.claim_results["C1"].holds
    assert report.claim_results["C1"].witness == {"parallel_edge_ids": [0, 1]}


def test_heawood_report(heawood):
    # girth 6: all short-cycle claims hold, C5 and FINAL fail, premise
    # fails because a bipartite graph has only even factor cycles
    report = verify_claims(heawood)
    assert not report.premise_holds
    assert report.premise_witness is not None
    assert all(length % 2 == 0 for length in report.premise_witness["spectrum"])
    for cid in ("C1", "C2", "C3", "C4"):
        assert report.claim_results[cid].holds
    assert not report.claim_results["C5"].holds
    assert report.claim_results["C5"].witness["girth"] == 6
    assert not report.claim_results["FINAL"].holds
    assert not report.is_petersen
    assert report.claim_results["PROP4"].holds


def test_premise_failure_always_carries_a_matching_witness():
    for n in (4, 6, 8):
        for g in generate_cubic_graphs(n, allow_multi=True):
            report = verify_claims(g)
            if not report.premise_holds and report.premise_witness is not None:
                if "matching" in report.premise_witness:
                    spectrum = report.premise_witness["spectrum"]
                    assert any(length != 5 for length in spectrum)
                    assert sum(spectrum) == g.n


def test_report_is_relabeling_invariant(petersen_graph, prism):
    import random

    rng = random.Random(5)
    for g in (petersen_graph, prism):
        perm = list(range(g.n))
        rng.shuffle(perm)
        a = verify_claims(g)
        b = verify_claims(relabeled(g, perm))
        assert a.graph_certificate == b.graph_certificate
        assert {k: v.holds for k, v in a.claim_results.items()} == {
            k: v.holds for k, v in b.claim_results.items()
        }


def test_verify_claims_rejects_disconnected(two_k4s_disconnected_edges):
    g = CubicGraph(n=8, edges=tuple(two_k4s_disconnected_edges))
    with pytest.raises(DisconnectedError):
        verify_claims(g)


def test_neighborhood_structure_on_petersen(petersen_graph):
    check = verify_neighborhood_structure(petersen_graph)
    assert check.holds and check.witness is None


def test_neighborhood_structure_preconditions(k33, heawood):
    with pytest.raises(PreconditionError):
        verify_neighborhood_structure(k33)  # girth 4
    with pytest.raises(PreconditionError):
        verify_neighborhood_structure(heawood)  # girth 6, no 5-cycles at all


def test_neighborhood_structure_fails_on_other_girth5_graphs():
    # every 12-vertex girth-5 cubic graph must fail some sub-check
    found = 0
    for g in generate_cubic_graphs(12):
        if girth(g) == 5:
            found += 1
            check = verify_neighborhood_structure(g)
            assert not check.holds
            assert check.witness is not None
    assert found > 0


def test_uniqueness_on_the_full_stream():
    stream = list(generate_cubic_graphs(10))
    assert len(stream) == 19
    assert verify_petersen_uniqueness(stream)


def test_uniqueness_fails_without_petersen(petersen_graph):
    stream = [
        g for g in generate_cubic_graphs(10) if not is_isomorphic(g, petersen_graph)
    ]
    assert len(stream) == 18
    assert not verify_petersen_uniqueness(stream)


def test_uniqueness_rejects_duplicates(petersen_graph):
    stream = list(generate_cubic_graphs(10))
    perm = list(reversed(range(10)))
    stream.append(relabeled(petersen_graph, perm))
    with pytest.raises(DuplicateGraphError):
        verify_petersen_uniqueness(stream)


def test_report_json_shape(petersen_graph):
    payload = verify_claims(petersen_graph).to_json_dict()
    assert payload["is_petersen"] is True
    assert set(payload["claims"]) == set(CLAIM_IDS)
    assert payload["graph_certificate"] == canonical_form(petersen_graph).certificate.decode(
        "ascii"
    )
