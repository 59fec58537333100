from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dqslab import families as F
from dqslab.enumerate import (
    EXHAUSTIVE_CAP,
    ScopeError,
    canonical_form,
    canonical_graph,
    count,
    generate,
    map_subtrees,
)
from dqslab.enumerate.canon import automorphism_orbits
from dqslab.graph_core import Graph, is_connected
from helpers import classes, labeled_dedupe_classes, labeled_dedupe_count, mask_graph, random_graph, to_nx


def test_small_counts():
    assert sum(1 for _ in generate(4)) == 11
    assert sum(1 for _ in generate(1)) == 1
    assert sum(1 for _ in generate(0)) == 1


def test_totals_against_oracle():
    for n in range(1, 7):
        assert count(n) == labeled_dedupe_count(n)


def test_edge_filter_against_oracle():
    for n in range(1, 7):
        for m in range(n * (n - 1) // 2 + 1):
            assert count(n, m) == labeled_dedupe_count(n, m)


def test_order_7_by_extension_with_networkx():
    # extend each 6-vertex class by one vertex in every way; dedupe with networkx
    buckets = {}
    for mask in labeled_dedupe_classes(6):
        g = mask_graph(6, mask)
        for s in range(1 << 6):
            h = to_nx(g.add_vertex([v for v in range(6) if s >> v & 1]))
            key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
            reps = buckets.setdefault(key, [])
            if not any(nx.is_isomorphic(h, r) for r in reps):
                reps.append(h)
    assert sum(map(len, buckets.values())) == count(7) == 1044


def test_sum_over_edge_counts():
    for n in range(1, 8):
        assert sum(count(n, m) for m in range(n * (n - 1) // 2 + 1)) == count(n)


def test_range_filter():
    assert count(7, (5, 8)) == sum(count(7, m) for m in range(5, 9))


def test_complement_symmetry():
    for n in range(1, 8):
        top = n * (n - 1) // 2
        for m in range(top + 1):
            assert count(n, m) == count(n, top - m)


def test_codes_unique_within_run():
    for n in range(1, 8):
        codes = [canonical_form(g) for g in classes(n)]
        assert len(set(codes)) == len(codes)


def test_pairwise_non_isomorphic_order_5():
    gs = [to_nx(g) for g in classes(5)]
    for i in range(len(gs)):
        for j in range(i):
            assert not nx.is_isomorphic(gs[i], gs[j])


def test_predicate_and_scope():
    connected = list(generate(6, predicate=is_connected))
    assert len(connected) == 112
    with pytest.raises(ScopeError):
        next(generate(EXHAUSTIVE_CAP + 1))


def test_parallel_matches_serial():
    serial = [canonical_form(g) for g in generate(7, 10)]
    parallel = [canonical_form(g) for g in generate(7, 10, jobs=2, split_depth=5)]
    assert serial == parallel
    parts = map_subtrees(lambda it: sum(1 for _ in it), 7, 10, jobs=1)
    assert sum(parts) == len(serial)


def test_subtree_partition_covers_stream():
    parts = map_subtrees(_count_stream, 7, None, jobs=2, split_depth=5)
    assert len(parts) > 1 and sum(parts) == 1044


def _count_stream(it):
    return sum(1 for _ in it)


def test_canonical_examples():
    p3 = F.path(3)
    assert len({canonical_form(p3.relabel(p)) for p in permutations(range(3))}) == 1
    assert canonical_form(F.complete(3)) != canonical_form(F.path(3))
    a = F.disjoint_union([F.cycle(4), F.path(3), F.path(3)])
    b = F.disjoint_union([F.cycle(6), F.copies(F.complete(2), 2)])
    assert canonical_form(a) != canonical_form(b)


def test_code_length_depends_on_order_only():
    for n in range(1, 7):
        assert len({len(canonical_form(g)) for g in classes(n)}) == 1


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_canonical_form_is_complete_invariant(data):
    g = random_graph(data.draw, st, nmax=9)
    perm = data.draw(st.permutations(range(g.n)))
    assert canonical_form(g.relabel(perm)) == canonical_form(g)
    c = canonical_graph(g)
    assert nx.is_isomorphic(to_nx(c), to_nx(g))
    h = random_graph(data.draw, st, nmax=9)
    same = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert (canonical_form(g) == canonical_form(h)) == same


def test_hard_regular_graphs():
    # vertex-transitive and strongly regular inputs stress refinement
    petersen = F.complement(F.line_graph(F.complete(5)))
    shrink = F.line_graph(F.complete_bipartite(4, 4))
    for g in (petersen, shrink, F.cycle(10), F.complete_bipartite(5, 5)):
        base = canonical_form(g)
        for p in (list(range(g.n))[::-1], [(3 * i + 1) % g.n for i in range(g.n)]):
            if len(set(p)) == g.n:
                assert canonical_form(g.relabel(p)) == base
    assert canonical_form(F.cycle(10)) != canonical_form(F.copies(F.cycle(5), 2))


def _nx_orbits(g):
    G = to_nx(g)
    orbit = {v: {v} for v in range(g.n)}
    for phi in nx.algorithms.isomorphism.GraphMatcher(G, G).isomorphisms_iter():
        for v, w in phi.items():
            orbit[v].add(w)
    return sorted({tuple(sorted(o)) for o in orbit.values()})


def test_automorphism_orbits_against_networkx():
    for g in list(classes(5)) + [F.lollipop(7, 4), F.theta(3, 3, 4), F.dumbbell(3, 1, 3)]:
        assert sorted(tuple(sorted(o)) for o in automorphism_orbits(g)) == _nx_orbits(g)


def test_empty_and_single():
    assert canonical_form(Graph.empty(0)) == canonical_form(Graph.empty(0))
    assert canonical_graph(Graph.empty(1)) == Graph.empty(1)
