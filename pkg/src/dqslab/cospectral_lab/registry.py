"""Registry of graph families known to be determined by their Q-spectrum.

Each claim carries a generator that lists its admissible instances of a
given order (side conditions already applied); membership is decided by
isomorphism against those instances.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from dqslab import families as F
from dqslab.enumerate.canon import canonical_form
from dqslab.graph_core import Graph

Instances = Iterator[tuple[str, Graph]]


@dataclass(frozen=True)
class Claim:
    key: str
    family: str
    condition: str
    instances: Callable[[int], Instances]


@dataclass(frozen=True)
class Match:
    claim: Claim
    instance: str


def partitions(n: int, smallest: int = 1, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` into parts in ``[smallest, largest]``, parts non-increasing."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), smallest - 1, -1):
        for rest in partitions(n - first, smallest, first):
            yield (first,) + rest


def _basic(n: int) -> Instances:
    if n >= 1:
        yield f"path({n})", F.path(n)
        yield f"complete({n})", F.complete(n)
    if n >= 3:
        yield f"cycle({n})", F.cycle(n)
    if n >= 2 and n % 2 == 0:
        yield f"complete_bipartite({n // 2},{n // 2})", F.complete_bipartite(n // 2, n // 2)
    for k in range(1, n + 1):
        if n % k == 0:
            yield f"{n // k}*complete({k})", F.copies(F.complete(k), n // k)
    for parts in partitions(n):
        if len(parts) > 1:
            yield "+".join(f"path({p})" for p in parts), F.disjoint_union([F.path(p) for p in parts])
    for parts in partitions(n, 3):
        if len(parts) > 1:
            yield "+".join(f"cycle({p})" for p in parts), F.disjoint_union([F.cycle(p) for p in parts])


def _wheel(n: int) -> Instances:
    if n >= 4:
        yield f"wheel({n - 1})", F.wheel(n - 1)


def _lollipop(n: int) -> Instances:
    for p in range(3, n):
        yield f"lollipop({n},{p})", F.lollipop(n, p)


def _kite(n: int) -> Instances:
    if n >= 4 and n != 5:
        yield f"kite({n},{n - 1})", F.kite(n, n - 1)


def _friendship(n: int) -> Instances:
    if n % 2 == 1:
        yield f"friendship({n // 2})", F.friendship(n // 2)


def _cycle_corona(n: int) -> Instances:
    for t in (1, 2):
        if n % (t + 1) == 0:
            k = n // (t + 1)
            if k >= 3 and k not in (32, 64):
                yield f"corona(cycle({k}),{t}*K1)", F.corona(F.cycle(k), F.empty(t))


def _t_shape_line(n: int) -> Instances:
    # L(T(a,b,c)) has a+b+c+3 vertices
    s = n - 3
    for a in range(s + 1):
        for b in range(a, s - a + 1):
            c = s - a - b
            if c < b:
                continue
            if any(x == y and z == 2 * x + 1 and x > 1 for x, y, z in
                   ((a, b, c), (a, c, b), (b, c, a))):
                continue
            yield f"line_graph(t_shape({a},{b},{c}))", F.line_graph(F.t_shape(a, b, c))


def _starlike4(n: int) -> Instances:
    for arms in partitions(n - 1):
        if len(arms) == 4:
            yield f"starlike({','.join(map(str, arms))})", F.starlike(*arms)


def _u_graph(n: int) -> Instances:
    for r in range(3, n):
        yield f"u_graph({r},{n})", F.u_graph(r, n)


def _complete_split(n: int) -> Instances:
    for alpha in range(1, n):
        if alpha != 3:
            yield f"complete_split({n},{alpha})", F.complete_split(n, alpha)


def _bundle(n: int) -> Instances:
    for c in range(0, (n - 1) // 2 + 1):
        if c == 0 and n == 4:
            continue
        g = F.bundle(n, c)
        yield f"bundle({n},{c})", g
        yield f"complement(bundle({n},{c}))", F.complement(g)


def _star(n: int) -> Instances:
    if n >= 1 and n != 4:
        yield f"star({n})", F.star(n)


def _joins(n: int) -> Instances:
    # (k-2)-regular graphs on k vertices are K_k minus a perfect matching
    for k in range(2, n, 2):
        m = n - k
        yield (f"join(kn_minus_matching({k},{k // 2}),complete({m}))",
               F.join(F.kn_minus_matching(k, k // 2), F.complete(m)))
    if n >= 3 and n - 2 != 3:
        yield f"join(empty({n - 2}),complete(2))", F.join(F.empty(n - 2), F.complete(2))


def _dumbbell_theta(n: int) -> Instances:
    for p in range(3, n + 1):
        for q in range(p, n + 1):
            k = n - p - q
            if k < 0:
                continue
            if k == 0 and (p == 3 * q or q == 3 * p):
                continue
            yield f"dumbbell({p},{k},{q})", F.dumbbell(p, k, q)
    # theta: r + s + t - 4 = n
    total = n + 4
    for r in range(2, total):
        for s in range(r, total):
            t = total - r - s
            if t < s:
                continue
            if sorted((r, s, t))[1] == 2:
                continue
            yield f"theta({r},{s},{t})", F.theta(r, s, t)


CLAIMS: tuple[Claim, ...] = (
    Claim("basic", "P_n, C_n, K_n, K_{m,m}, rK_n, unions of paths, unions of cycles",
          "none", _basic),
    Claim("wheel", "wheel K_1 + C_n", "none", _wheel),
    Claim("lollipop", "lollipop H_{n,p}", "none", _lollipop),
    Claim("kite", "kite Ki_{n,n-1}", "n >= 4 and n != 5", _kite),
    Claim("friendship", "friendship F_n", "none", _friendship),
    Claim("cycle_corona", "C_n o tK_1", "n not in {32, 64}, t in {1, 2}", _cycle_corona),
    Claim("t_shape_line", "line graph of T(a,b,c)", "not T(t,t,2t+1) with t > 1",
          _t_shape_line),
    Claim("starlike4", "starlike tree with maximum degree 4", "none", _starlike4),
    Claim("u_graph", "U_{r,n-r}", "r >= 3", _u_graph),
    Claim("complete_split", "CS(n, alpha)", "1 <= alpha <= n-1 and alpha != 3",
          _complete_split),
    Claim("bundle", "S(n,c) and its complement", "n >= 2c+1, c >= 0, not (c = 0 and n = 4)", _bundle),
    Claim("star", "K_{1,n-1}", "n != 4", _star),
    Claim("join", "G + K_m with G (n-2)-regular; complement(K_n) + K_2", "second form n != 3", _joins),
    Claim("dumbbell_theta", "dumbbells other than D_{3q,0,q}; all theta graphs", "none", _dumbbell_theta),
)


def registry_lookup(g: Graph) -> list[Match]:
    """Registered claims whose admissible instances at ``g``'s order include ``g``."""
    code = None
    degs = sorted(g.degrees())
    out = []
    for claim in CLAIMS:
        for label, h in claim.instances(g.n):
            if h.m != g.m or sorted(h.degrees()) != degs:
                continue
            if code is None:
                code = canonical_form(g)
            if canonical_form(h) == code:
                out.append(Match(claim, label))
                break
    return out


def instances_up_to(order: int) -> list[tuple[Claim, str, Graph]]:
    """Every admissible registered instance of order ``1..order``."""
    return [(c, label, g) for n in range(1, order + 1) for c in CLAIMS
            for label, g in c.instances(n)]
