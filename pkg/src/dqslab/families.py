"""Named graph families and graph operators.

Every constructor fixes an explicit labelling, documented on the function,
so that tests and reports are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from dqslab import graph_core
from dqslab.graph_core import Graph, GraphError


class ParameterError(ValueError):
    """Family parameters violate the constructor's preconditions."""


def _require(cond: bool, kind: str, constraint: str):
    if not cond:
        raise ParameterError(f"{kind}: requires {constraint}")


def _check_order(n: int):
    if n > graph_core.ORDER_CAP:
        raise GraphError(f"order {n} exceeds cap {graph_core.ORDER_CAP}")


# basic families ------------------------------------------------------------


def empty(n: int) -> Graph:
    _require(n >= 0, "empty", "n >= 0")
    return Graph.empty(n)


def path(n: int) -> Graph:
    """P_n: ``0 - 1 - ... - n-1``."""
    _require(n >= 0, "path", "n >= 0")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """C_n: ``0 - 1 - ... - n-1 - 0``."""
    _require(n >= 3, "cycle", "n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 0, "complete", "n >= 0")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t}: parts ``0..s-1`` and ``s..s+t-1``."""
    _require(s >= 0 and t >= 0, "complete_bipartite", "s, t >= 0")
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def star(n: int) -> Graph:
    """K_{1,n-1} on ``n`` vertices, centre 0."""
    _require(n >= 1, "star", "n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def wheel(k: int) -> Graph:
    """K_1 joined to C_k; hub is vertex 0, rim ``1..k``."""
    _require(k >= 3, "wheel", "k >= 3")
    return join(complete(1), cycle(k))


def complete_split(n: int, alpha: int) -> Graph:
    """CS(n, alpha): clique ``0..n-alpha-1``, independent set ``n-alpha..n-1``."""
    _require(1 <= alpha <= n - 1, "complete_split", "1 <= alpha <= n-1")
    return join(complete(n - alpha), empty(alpha))


def friendship(k: int) -> Graph:
    """F_k: centre 0, triangles ``{0, 2i+1, 2i+2}``."""
    _require(k >= 0, "friendship", "k >= 0")
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * k + 1, edges)


def lollipop(n: int, p: int) -> Graph:
    """H_{n,p}: cycle ``0..p-1`` with the path ``p-1, p, ..., n-1`` hanging off vertex ``p-1``."""
    _require(3 <= p <= n, "lollipop", "3 <= p <= n")
    edges = [(i, (i + 1) % p) for i in range(p)]
    edges += [(i, i + 1) for i in range(p - 1, n - 1)]
    return Graph.from_edges(n, edges)


def kite(n: int, w: int) -> Graph:
    """Ki_{n,w}: clique ``0..w-1`` with the path ``w-1, w, ..., n-1``."""
    _require(2 <= w <= n, "kite", "2 <= w <= n")
    edges = list(combinations(range(w), 2))
    edges += [(i, i + 1) for i in range(w - 1, n - 1)]
    return Graph.from_edges(n, edges)


def starlike(*arms: int) -> Graph:
    """Tree with centre 0 and pendant paths of the given lengths, laid out arm after arm."""
    _require(len(arms) >= 3, "starlike", "at least three arms")
    _require(all(a >= 1 for a in arms), "starlike", "arm lengths >= 1")
    edges = []
    nxt = 1
    for a in arms:
        prev = 0
        for _ in range(a):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def t_shape(a: int, b: int, c: int) -> Graph:
    """T(a, b, c): the starlike tree with arms ``a+1, b+1, c+1``."""
    _require(min(a, b, c) >= 0, "t_shape", "a, b, c >= 0")
    return starlike(a + 1, b + 1, c + 1)


def u_graph(r: int, n: int) -> Graph:
    """U_{r,n-r}: cycle ``0..r-1`` with pendant vertices ``r..n-1`` on vertex 0."""
    _require(r >= 3 and n > r, "u_graph", "r >= 3 and n > r")
    edges = [(i, (i + 1) % r) for i in range(r)] + [(0, j) for j in range(r, n)]
    return Graph.from_edges(n, edges)


def bundle(n: int, c: int) -> Graph:
    """S(n, c): centre 0, triangles on ``(2i+1, 2i+2)``, pendants ``2c+1..n-1``."""
    _require(c >= 0 and n >= 2 * c + 1, "bundle", "c >= 0 and n >= 2c+1")
    return join(complete(1), disjoint_union([copies(complete(2), c), empty(n - 2 * c - 1)]))


def dumbbell(p: int, k: int, q: int) -> Graph:
    """D_{p,k,q}: cycle ``0..p-1``, path of ``k`` inner vertices from vertex 0, cycle on the far end.

    The second cycle occupies ``p+k..p+k+q-1`` and is entered at ``p+k``;
    ``k = 0`` joins the two cycles by a single edge.
    """
    _require(p >= 3 and q >= 3 and k >= 0, "dumbbell", "p, q >= 3 and k >= 0")
    n = p + k + q
    edges = [(i, (i + 1) % p) for i in range(p)]
    chain = [0] + list(range(p, p + k)) + [p + k]
    edges += list(zip(chain, chain[1:]))
    base = p + k
    edges += [(base + i, base + (i + 1) % q) for i in range(q)]
    return Graph.from_edges(n, edges)


def theta(r: int, s: int, t: int) -> Graph:
    """Theta_{r,s,t}: poles 0 and 1 joined by paths with r, s, t vertices (poles included)."""
    _require(min(r, s, t) >= 2, "theta", "r, s, t >= 2")
    _require(sorted((r, s, t))[1] > 2, "theta", "at most one of r, s, t equal to 2")
    edges = []
    nxt = 2
    for length in (r, s, t):
        inner = list(range(nxt, nxt + length - 2))
        nxt += length - 2
        chain = [0] + inner + [1]
        edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(nxt, edges)


def kn_minus_matching(n: int, s: int) -> Graph:
    """K_n with the edges ``{0,1}, {2,3}, ..., {2s-2, 2s-1}`` removed."""
    _require(n >= 0 and 0 <= s <= n // 2, "kn_minus_matching", "0 <= s <= n/2")
    removed = {(2 * i, 2 * i + 1) for i in range(s)}
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if e not in removed])


# operators -----------------------------------------------------------------


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Summand ``i`` is shifted by the total order of summands ``0..i-1``."""
    total = sum(g.n for g in gs)
    _check_order(total)
    rows = []
    off = 0
    for g in gs:
        rows.extend(r << off for r in g.rows)
        off += g.n
    return Graph(total, tuple(rows))


def copies(g: Graph, r: int) -> Graph:
    if r < 0:
        raise ParameterError("copies: requires r >= 0")
    return disjoint_union([g] * r)


def join(g: Graph, h: Graph) -> Graph:
    """g on ``0..|g|-1``, h shifted after it, every cross pair adjacent."""
    n = g.n + h.n
    _check_order(n)
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [r | hmask for r in g.rows] + [(r << g.n) | gmask for r in h.rows]
    return Graph(n, tuple(rows))


def corona(g: Graph, h: Graph) -> Graph:
    """g on ``0..n-1``; the copy of h for vertex ``i`` sits at ``n + i*|h|``."""
    n, k = g.n, h.n
    _check_order(n + n * k)
    edges = list(g.edges())
    for i in range(n):
        off = n + i * k
        edges += [(off + a, off + b) for a, b in h.edges()]
        edges += [(i, off + a) for a in range(k)]
    return Graph.from_edges(n + n * k, edges)


def coalescence(g: Graph, v_g: int, h: Graph, v_h: int) -> Graph:
    """Identify ``v_g`` with ``v_h``; g keeps its labels, h's other vertices follow in order."""
    if not 0 <= v_g < g.n:
        raise ParameterError(f"coalescence: vertex {v_g} not in first graph")
    if not 0 <= v_h < h.n:
        raise ParameterError(f"coalescence: vertex {v_h} not in second graph")
    n = g.n + h.n - 1
    _check_order(n)
    index = {}
    nxt = g.n
    for v in range(h.n):
        if v == v_h:
            index[v] = v_g
        else:
            index[v] = nxt
            nxt += 1
    edges = list(g.edges()) + [(index[a], index[b]) for a, b in h.edges()]
    return Graph.from_edges(n, edges)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(g.rows)))


def line_graph(g: Graph) -> Graph:
    """Vertex ``i`` is the ``i``-th edge of ``g.edges()``."""
    es = g.edges()
    _check_order(len(es))
    edges = [(i, j) for (i, e), (j, f) in combinations(enumerate(es), 2) if set(e) & set(f)]
    return Graph.from_edges(len(es), edges)


# tagged descriptors --------------------------------------------------------

# kind -> (constructor, arity; None for variadic)
CONSTRUCTORS: dict[str, tuple[Callable[..., Graph], int | None]] = {
    "empty": (empty, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "complete_split": (complete_split, 2),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "friendship": (friendship, 1),
    "lollipop": (lollipop, 2),
    "kite": (kite, 2),
    "t_shape": (t_shape, 3),
    "starlike": (starlike, None),
    "u_graph": (u_graph, 2),
    "bundle": (bundle, 2),
    "dumbbell": (dumbbell, 3),
    "theta": (theta, 3),
    "kn_minus_matching": (kn_minus_matching, 2),
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in CONSTRUCTORS:
            raise ParameterError(f"unknown family {self.kind!r}")
        arity = CONSTRUCTORS[self.kind][1]
        if arity is not None and len(self.params) != arity:
            raise ParameterError(f"{self.kind}: expects {arity} parameters, got {len(self.params)}")
        if any(p < 0 for p in self.params):
            raise ParameterError(f"{self.kind}: parameters must be non-negative")

    def text(self) -> str:
        return f"{self.kind}({','.join(map(str, self.params))})"

    def __str__(self) -> str:
        return self.text()


def build(spec: FamilySpec) -> Graph:
    return CONSTRUCTORS[spec.kind][0](*spec.params)
