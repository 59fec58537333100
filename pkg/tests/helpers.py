"""Shared fixtures: cached class lists and independent oracles."""
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx

from dqslab.enumerate import generate
from dqslab.graph_core import Graph

# filled by the acceptance tests, echoed in the terminal summary
ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def classes(n, m=None):
    return tuple(generate(n, m))


def all_up_to(order, start=1):
    for n in range(start, order + 1):
        yield from classes(n)


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def labeled_dedupe_classes(n):
    """Isomorphism classes by brute force over labelled graphs: each class is
    found at its smallest labelled bitmask and all its relabellings are
    marked, so every one of the 2^C(n,2) labelled graphs is visited once.

    Returns the minimal bitmask of each class; bit i is the i-th pair of
    ``combinations(range(n), 2)``.
    """
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    images = []
    for perm in permutations(range(n)):
        images.append([index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs])
    seen = bytearray(1 << len(pairs))
    reps = []
    for mask in range(1 << len(pairs)):
        if seen[mask]:
            continue
        reps.append(mask)
        bits = [i for i in range(len(pairs)) if mask >> i & 1]
        for img in images:
            seen[sum(1 << img[i] for i in bits)] = 1
    return reps


def labeled_dedupe_count(n, m=None):
    reps = labeled_dedupe_classes(n)
    if m is None:
        return len(reps)
    return sum(1 for r in reps if bin(r).count("1") == m)


def mask_graph(n, mask):
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def random_graph(data_draw, st, nmax=8):
    n = data_draw(st.integers(0, nmax))
    pairs = list(combinations(range(n), 2))
    bits = data_draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])
