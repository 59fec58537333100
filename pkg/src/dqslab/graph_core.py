"""Simple undirected graphs stored as per-vertex neighbourhood bitsets.

Vertices are the integers ``0..n-1``.  Bit ``j`` of ``rows[i]`` is set iff
``i`` and ``j`` are adjacent.  Graphs are immutable; every operation that
"changes" a graph returns a new one.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

#: Largest order accepted by :class:`Graph`.  Override with ``DQSLAB_ORDER_CAP``.
ORDER_CAP = int(os.environ.get("DQSLAB_ORDER_CAP", "32"))

FOREST = "forest"
UNICYCLIC_ODD = "unicyclic-odd"
UNICYCLIC_EVEN = "unicyclic-even"
BICYCLIC = "bicyclic"
OTHER = "other"


class GraphError(ValueError):
    """Malformed adjacency data or an order above the cap."""


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    _m: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative order")
        if self.n > ORDER_CAP:
            raise GraphError(f"order {self.n} exceeds cap {ORDER_CAP}")
        rows = tuple(self.rows)
        if len(rows) != self.n:
            raise GraphError(f"expected {self.n} rows, got {len(rows)}")
        full = (1 << self.n) - 1
        for i, r in enumerate(rows):
            if r & ~full:
                raise GraphError(f"row {i} has bits outside 0..{self.n - 1}")
            if r >> i & 1:
                raise GraphError(f"loop at vertex {i}")
            rest = r
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not rows[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")
                rest ^= low
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_m", sum(r.bit_count() for r in rows) // 2)

    # construction -------------------------------------------------------

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...], m: int | None = None) -> Graph:
        """Skip validation; for rows already known to be symmetric and loop-free."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        if m is None:
            m = sum(r.bit_count() for r in rows) // 2
        object.__setattr__(g, "_m", m)
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> Graph:
        n = len(matrix)
        rows = []
        for i, line in enumerate(matrix):
            if len(line) != n:
                raise GraphError("adjacency matrix is not square")
            rows.append(sum(1 << j for j, x in enumerate(line) if x))
        return cls(n, tuple(rows))

    # basic queries ------------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    # derived graphs -----------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``perm[i]`` becomes new vertex ``i``."""
        inv = [0] * self.n
        for new, old in enumerate(perm):
            inv[old] = new
        rows = []
        for old in perm:
            r = 0
            for j in iter_bits(self.rows[old]):
                r |= 1 << inv[j]
            rows.append(r)
        return Graph._trusted(self.n, tuple(rows), self._m)

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled ``0..k-1`` in the order given."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            r = 0
            for j in iter_bits(self.rows[v]):
                if j in index:
                    r |= 1 << index[j]
            rows.append(r)
        return Graph(len(vertices), tuple(rows))

    def remove_vertex(self, v: int) -> Graph:
        return self.induced([u for u in range(self.n) if u != v])

    def add_edge(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> Graph:
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_vertex(self, neighbours: Iterable[int] = ()) -> Graph:
        """Append vertex ``n`` adjacent to ``neighbours``."""
        rows = list(self.rows)
        mask = 0
        for u in neighbours:
            if not 0 <= u < self.n:
                raise GraphError(f"vertex {u} out of range")
            rows[u] |= 1 << self.n
            mask |= 1 << u
        rows.append(mask)
        if self.n + 1 > ORDER_CAP:
            raise GraphError(f"order {self.n + 1} exceeds cap {ORDER_CAP}")
        return Graph._trusted(self.n + 1, tuple(rows), self._m + mask.bit_count())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# structure ---------------------------------------------------------------


@dataclass(frozen=True)
class StructuralProfile:
    n: int
    m: int
    degrees: tuple[int, ...]
    t: int
    components: int
    bipartite_components: int
    classes: tuple[str, ...]

    @property
    def degree_multiset(self) -> Counter:
        return Counter(self.degrees)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by least vertex."""
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.rows[v]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        comps.append(list(iter_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def _two_colourable(g: Graph, comp: Sequence[int]) -> bool:
    colour = {comp[0]: 0}
    stack = [comp[0]]
    while stack:
        v = stack.pop()
        for u in iter_bits(g.rows[v]):
            if u not in colour:
                colour[u] = 1 - colour[v]
                stack.append(u)
            elif colour[u] == colour[v]:
                return False
    return True


def bipartite_component_count(g: Graph) -> int:
    return sum(_two_colourable(g, c) for c in connected_components(g))


def is_bipartite(g: Graph) -> bool:
    return all(_two_colourable(g, c) for c in connected_components(g))


def triangle_count(g: Graph) -> int:
    return sum((g.rows[u] & g.rows[v]).bit_count() for u, v in g.edges()) // 3


def _classify(g: Graph, comp: Sequence[int]) -> str:
    k = len(comp)
    e = sum(g.rows[v].bit_count() for v in comp) // 2
    if e == k - 1:
        return FOREST
    if e == k + 1:
        return BICYCLIC
    if e != k:
        return OTHER
    # strip leaves; what survives is the unique cycle
    alive = 0
    for v in comp:
        alive |= 1 << v
    degs = {v: g.rows[v].bit_count() for v in comp}
    leaves = [v for v in comp if degs[v] == 1]
    while leaves:
        v = leaves.pop()
        alive &= ~(1 << v)
        for u in iter_bits(g.rows[v] & alive):
            degs[u] -= 1
            if degs[u] == 1:
                leaves.append(u)
    return UNICYCLIC_ODD if alive.bit_count() % 2 else UNICYCLIC_EVEN


def component_class(g: Graph) -> list[str]:
    """Label each component (in :func:`connected_components` order).

    A component with ``k`` vertices and ``e`` edges is a forest if
    ``e == k - 1``, unicyclic if ``e == k`` (odd or even by the length of its
    cycle), bicyclic if ``e == k + 1`` and ``other`` otherwise.
    """
    return [_classify(g, c) for c in connected_components(g)]


def profile(g: Graph) -> StructuralProfile:
    comps = connected_components(g)
    degs = tuple(g.degrees())
    assert sum(degs) == 2 * g.m
    return StructuralProfile(
        n=g.n,
        m=g.m,
        degrees=degs,
        t=triangle_count(g),
        components=len(comps),
        bipartite_components=sum(_two_colourable(g, c) for c in comps),
        classes=tuple(_classify(g, c) for c in comps),
    )


def has_induced_C4(g: Graph) -> bool:
    """True iff some four vertices induce exactly a 4-cycle."""
    # an induced C4 is a pair of non-adjacent vertices with two
    # non-adjacent common neighbours
    for u, v in combinations(range(g.n), 2):
        if g.rows[u] >> v & 1:
            continue
        common = list(iter_bits(g.rows[u] & g.rows[v]))
        for a, b in combinations(common, 2):
            if not g.rows[a] >> b & 1:
                return True
    return False


def has_C4_subgraph(g: Graph) -> bool:
    """True iff the graph contains a 4-cycle, chords allowed."""
    return any((g.rows[u] & g.rows[v]).bit_count() >= 2
               for u, v in combinations(range(g.n), 2))


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) <= 1


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    from dqslab.enumerate.canon import canonical_form

    return canonical_form(g) == canonical_form(h)
