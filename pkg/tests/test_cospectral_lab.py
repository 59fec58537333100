from collections import defaultdict

import networkx as nx
import numpy as np
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from dqslab import families as F
from dqslab.cli_io.graph6 import decode_graph6, encode_graph6
from dqslab.cli_io.textforms import parse_params
from dqslab.cospectral_lab import (
    DETERMINED,
    NOT_DETERMINED,
    OUT_OF_SCOPE,
    HypothesisViolation,
    hunt_mates,
    load_table,
    prefilter,
    registry_lookup,
    run_row,
    verify_dqs,
    verify_theorem,
)
from dqslab.cospectral_lab.registry import instances_up_to
from dqslab.enumerate import canonical_form
from dqslab.exact_spectra import charpoly, matrix
from dqslab.exact_spectra import polynomial as P
from dqslab.graph_core import is_connected
from helpers import classes, to_nx

K3K1 = F.disjoint_union([F.complete(3), F.empty(1)])
C4_2P3 = F.disjoint_union([F.cycle(4), F.path(3), F.path(3)])
C6_2K2 = F.disjoint_union([F.cycle(6), F.copies(F.complete(2), 2)])


def numpy_spectrum(g, kind="Q"):
    return np.sort(np.linalg.eigvalsh(np.array(matrix(g, kind), dtype=float)))


def test_prefilter_examples():
    target = F.disjoint_union([F.cycle(7), F.complete(2)])
    assert target.m == 8
    assert not prefilter(target, F.lollipop(9, 5))
    assert prefilter(F.star(4), K3K1)
    assert prefilter(C4_2P3, C6_2K2)


def _oracle_mates(n, kind):
    groups = defaultdict(list)
    for g in classes(n):
        groups[charpoly(g, kind).coeffs].append(g)
    return groups


@pytest.mark.parametrize("kind, top", [("Q", 6), ("L", 6), ("A", 5)])
def test_prefilter_completeness(kind, top):
    for n in range(1, top + 1):
        groups = _oracle_mates(n, kind)
        for g in classes(n):
            want = sorted(canonical_form(h) for h in groups[charpoly(g, kind).coeffs] if h != g)
            fast = hunt_mates(g, kind)
            assert sorted(canonical_form(h) for h in fast.mates) == want
            if n <= 5:
                slow = hunt_mates(g, kind, use_prefilter=False, edge_prune=False)
                assert [canonical_form(h) for h in slow.mates] == [canonical_form(h) for h in fast.mates]
                assert slow.candidates_examined == len(classes(n))


def test_report_soundness_order_7():
    for g in classes(7)[::7]:
        rep = hunt_mates(g, "Q")
        assert rep.candidates_examined >= rep.prefilter_survivors >= len(rep.mates)
        codes = [canonical_form(h) for h in rep.mates]
        assert len(set(codes)) == len(codes)
        for h in rep.mates:
            assert charpoly(h, "Q") == charpoly(g, "Q")
            assert not nx.is_isomorphic(to_nx(g), to_nx(h))
            assert np.allclose(numpy_spectrum(g), numpy_spectrum(h))


def test_hunt_examples():
    rep = hunt_mates(F.star(4), "Q")
    assert [canonical_form(h) for h in rep.mates] == [canonical_form(K3K1)]
    assert hunt_mates(F.path(5), "Q").mates == []
    rep = hunt_mates(C6_2K2, "Q")
    assert canonical_form(C4_2P3) in {canonical_form(h) for h in rep.mates}


def test_parallel_hunt_matches_serial():
    g = F.disjoint_union([F.cycle(4), F.path(3)])
    a = hunt_mates(g, "Q", jobs=1)
    b = hunt_mates(g, "Q", jobs=2)
    assert a.mate_graph6() == b.mate_graph6()
    assert (a.candidates_examined, a.prefilter_survivors) == (b.candidates_examined, b.prefilter_survivors)


def test_verdict_examples():
    assert verify_dqs(F.friendship(2)).verdict == DETERMINED
    assert verify_dqs(F.complete(5)).verdict == DETERMINED
    v = verify_dqs(F.bundle(4, 0))
    assert v.verdict == NOT_DETERMINED
    assert [canonical_form(w) for w in v.witnesses] == [canonical_form(K3K1)]
    assert verify_dqs(F.path(11)).verdict == OUT_OF_SCOPE


def test_registry_examples():
    assert any(mt.claim.key == "basic" and mt.instance == "cycle(8)" for mt in registry_lookup(F.cycle(8)))
    assert not any(mt.claim.key == "kite" for mt in registry_lookup(F.kite(5, 4)))
    assert any(mt.claim.key == "bundle" for mt in registry_lookup(F.bundle(9, 3)))
    assert registry_lookup(F.bundle(4, 0)) == []


@pytest.fixture(scope="module")
def registry_failures():
    seen = {}
    for claim, label, g in instances_up_to(8):
        seen.setdefault(canonical_form(g), (claim.key, label, g))
    out = []
    for key, label, g in seen.values():
        v = verify_dqs(g, "Q")
        if not v.determined:
            out.append((key, label, encode_graph6(g), [encode_graph6(w) for w in v.witnesses]))
    return len(seen), sorted(out)


@pytest.mark.xfail(strict=True, reason="two registered instances have Q-cospectral mates; "
                                       "see test_registry_exceptions_up_to_order_8")
def test_registry_all_determined_up_to_order_8(registry_failures):
    _, failures = registry_failures
    assert failures == []


def test_registry_exceptions_up_to_order_8(registry_failures):
    total, failures = registry_failures
    assert total == 195
    assert failures == [
        ("starlike4", "starlike(2,2,2,1)", "GkE?K?", ["G_?GhK"]),
        ("t_shape_line", "line_graph(t_shape(1,1,3))", "G{O_GC", ["G@CcA["]),
    ]
    # independent confirmation of each mate
    for _, _, g6, mates in failures:
        g, h = decode_graph6(g6), decode_graph6(mates[0])
        assert np.allclose(numpy_spectrum(g), numpy_spectrum(h))
        assert not nx.is_isomorphic(to_nx(g), to_nx(h))
    assert decode_graph6("GkE?K?") == F.starlike(2, 2, 2, 1)
    mate = decode_graph6("G_?GhK")
    assert nx.is_isomorphic(to_nx(mate), to_nx(F.disjoint_union([F.complete(2), F.corona(F.cycle(3), F.empty(1))])))


def test_known_exceptions_have_witnesses():
    assert verify_dqs(F.bundle(4, 0)).verdict == NOT_DETERMINED
    v = verify_dqs(C6_2K2)
    assert v.verdict == NOT_DETERMINED
    assert canonical_form(C4_2P3) in {canonical_form(w) for w in v.witnesses}


def test_no_pendant_extension_adds_eigenvalue_2():
    for n in range(2, 6):
        for g in classes(n):
            if not is_connected(g):
                continue
            target = P.mul(list(charpoly(g, "Q").coeffs), [-2, 1])
            for v in range(n):
                assert list(charpoly(g.add_vertex([v]), "Q").coeffs) != target
            for h in classes(n + 1, g.m + 1):
                if list(charpoly(h, "Q").coeffs) == target:
                    assert not GraphMatcher(to_nx(h), to_nx(g)).subgraph_is_monomorphic()


def test_eigenvalue_2_extension_of_single_vertex():
    # K2 = K1 plus a pendant edge, and Spec(K2) = Spec(K1) + [2]: the claim needs an edge
    k1 = F.complete(1)
    assert list(charpoly(F.complete(2), "Q").coeffs) == P.mul(list(charpoly(k1, "Q").coeffs), [-2, 1])


def test_theorem_examples():
    rep = verify_theorem("thm3.1", {"T": F.path(5), "r": 1})
    assert rep.passed and len(rep.conclusions) == 3
    assert verify_theorem("thm3.4", {"G": F.complete(4), "r": 1}).passed
    assert verify_theorem("thm3.4", {"G": F.friendship(2), "r": 1}).passed


def test_theorem_odd_cycle_order_9():
    assert verify_theorem("thm3.2", {"G": F.cycle(7), "r": 1}).passed


def test_hypothesis_violation():
    with pytest.raises(HypothesisViolation) as exc:
        verify_theorem("thm3.2", {"G": F.cycle(6), "r": 2})
    assert "G is odd unicyclic" in exc.value.report.failed_hypotheses
    with pytest.raises(HypothesisViolation):
        verify_theorem("thm3.4", {"G": F.cycle(4), "r": 1})
    with pytest.raises(KeyError):
        verify_theorem("thm9.9", {"G": F.cycle(4)})


def test_probe_even_cycle_witness():
    rep = verify_theorem("thm3.2", {"G": F.cycle(6), "r": 2}, probe=True)
    assert not rep.hypotheses_hold and not rep.passed
    witnesses = {canonical_form(w) for v in rep.verdicts for w in v.witnesses}
    assert canonical_form(C4_2P3) in witnesses


def test_instance_table():
    rows = load_table()
    assert {r.theorem for r in rows} == {"thm3.1", "thm3.2", "thm3.3", "thm3.4"}
    for row in rows:
        ok, rep = run_row(row, parse_params)
        assert ok, row
        assert rep.instance is None or rep.instance.n == row.order
