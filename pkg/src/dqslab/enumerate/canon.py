"""Canonical labelling by equitable refinement and individualisation.

The search follows the usual nauty scheme in miniature: the unit partition
is refined to an equitable ordered partition, a non-singleton cell is chosen,
each of its vertices is individualised in turn and the result refined again,
until the partition is discrete.  Each discrete partition is a relabelling;
the canonical one is the relabelling whose adjacency bitstring (graph6 order)
is smallest.  Automorphisms discovered on the way (equal leaves, plus
transpositions of twin vertices found up front) prune sibling branches that
lie in one orbit of the pointwise stabiliser of the current prefix.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from dqslab.cli_io.graph6 import encode_graph6
from dqslab.graph_core import Graph


def refine(rows, n, lab, ends, queue):
    """Refine the ordered partition ``(lab, ends)`` in place to an equitable one.

    ``lab`` lists the vertices cell by cell; ``ends[s]`` is the end (exclusive)
    of the cell starting at position ``s``.  ``queue`` holds start positions of
    the cells to split against.
    """
    pending = deque(queue)
    queued = set(queue)
    ncells = sum(1 for s in range(n) if ends[s] != -1)
    while pending and ncells < n:
        s = pending.popleft()
        queued.discard(s)
        mask = 0
        for v in lab[s:ends[s]]:
            mask |= 1 << v
        start = 0
        while start < n:
            end = ends[start]
            if end - start > 1:
                cell = lab[start:end]
                counts = [(rows[v] & mask).bit_count() for v in cell]
                lo = min(counts)
                if lo != max(counts):
                    groups = {}
                    for v, c in zip(cell, counts):
                        groups.setdefault(c, []).append(v)
                    keys = sorted(groups)
                    pos = start
                    starts = []
                    big, big_size = start, -1
                    for k in keys:
                        grp = groups[k]
                        lab[pos:pos + len(grp)] = grp
                        ends[pos] = pos + len(grp)
                        starts.append(pos)
                        if len(grp) > big_size:
                            big, big_size = pos, len(grp)
                        pos += len(grp)
                    for p in range(start + 1, end):
                        if p not in starts:
                            ends[p] = -1
                    ncells += len(keys) - 1
                    if start in queued:
                        new = starts[1:]
                    else:
                        new = [p for p in starts if p != big]
                    for p in new:
                        if p not in queued:
                            queued.add(p)
                            pending.append(p)
            start = end


def _leaf_code(rows, lab):
    code = 0
    for j in range(1, len(lab)):
        r = rows[lab[j]]
        for i in range(j):
            code = code << 1 | (r >> lab[i] & 1)
    return code


def _twin_transpositions(rows, n):
    gens = []
    for u in range(n):
        for v in range(u + 1, n):
            if rows[u] & ~(1 << v) == rows[v] & ~(1 << u):
                p = list(range(n))
                p[u], p[v] = v, u
                gens.append(p)
    return gens


def _orbit_rep(gens, fixed, n):
    """Union-find parents for the group generated by ``gens`` fixing ``fixed``."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        if any(p[v] != v for v in fixed):
            continue
        for x in range(n):
            a, b = find(x), find(p[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return find


@dataclass
class Labelling:
    """Result of the canonical search.

    ``perm[i]`` is the input vertex placed at canonical position ``i``;
    ``generators`` are automorphisms found during the search (as vertex maps).
    """
    perm: list[int]
    code: int
    generators: list[list[int]]


def canonical_labelling(g: Graph) -> Labelling:
    n = g.n
    rows = g.rows
    if n <= 1:
        return Labelling(list(range(n)), 0, [])
    lab = list(range(n))
    ends = [-1] * n
    ends[0] = n
    refine(rows, n, lab, ends, [0])

    gens = _twin_transpositions(rows, n)
    state = {"first": None, "best": None, "best_code": None, "first_code": None}

    def leaf(lab):
        code = _leaf_code(rows, lab)
        if state["first"] is None:
            state["first"] = state["best"] = list(lab)
            state["first_code"] = state["best_code"] = code
            return
        for key, ckey in (("first", "first_code"), ("best", "best_code")):
            if code == state[ckey]:
                ref = state[key]
                p = [0] * n
                for i in range(n):
                    p[ref[i]] = lab[i]
                gens.append(p)
                return
        if code < state["best_code"]:
            state["best"] = list(lab)
            state["best_code"] = code

    def search(lab, ends, fixed):
        target = -1
        size = n + 1
        start = 0
        while start < n:
            end = ends[start]
            if 1 < end - start < size:
                target, size = start, end - start
                if size == 2:
                    break
            start = end
        if target < 0:
            leaf(lab)
            return
        t_end = ends[target]
        tried = []
        for w in sorted(lab[target:t_end]):
            if tried:
                find = _orbit_rep(gens, fixed, n)
                rw = find(w)
                if any(find(x) == rw for x in tried):
                    continue
            lab2 = list(lab)
            ends2 = list(ends)
            i = lab2.index(w, target, t_end)
            lab2[i], lab2[target] = lab2[target], w
            ends2[target] = target + 1
            ends2[target + 1] = t_end
            refine(rows, n, lab2, ends2, [target])
            search(lab2, ends2, fixed + [w])
            tried.append(w)

    search(lab, ends, [])
    return Labelling(state["best"], state["best_code"], gens)


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labelling(g).perm)


def canonical_form(g: Graph) -> bytes:
    """Graph6 bytes of the canonically relabelled graph; equal iff isomorphic."""
    return encode_graph6(canonical_graph(g)).encode("ascii")


def automorphism_orbits(g: Graph) -> list[list[int]]:
    """Orbits of the automorphism group generated by the search's generators."""
    lab = canonical_labelling(g)
    find = _orbit_rep(lab.generators, [], g.n)
    orbits = {}
    for v in range(g.n):
        orbits.setdefault(find(v), []).append(v)
    return sorted(orbits.values())
