"""Exhaustive search for cospectral mates at a fixed order."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, partial
from typing import Iterable, Optional

from dqslab.cli_io.graph6 import encode_graph6
from dqslab.enumerate.canon import canonical_form
from dqslab.enumerate.generate import EXHAUSTIVE_CAP, ScopeError, generate, map_subtrees
from dqslab.exact_spectra.charpoly import charpoly
from dqslab.graph_core import (
    Graph,
    bipartite_component_count,
    connected_components,
    triangle_count,
)

DETERMINED = "determined-in-scope"
NOT_DETERMINED = "not-determined"
OUT_OF_SCOPE = "out-of-scope"


def digest(g: Graph, kind: str) -> tuple:
    """Quantities fixed by the ``kind``-spectrum: order, size, low power sums, and
    the bipartite-component count (Q) or component count (L).

    Power sums are those of the kind's own matrix: ``tr M^2`` and ``tr M^3``.
    """
    d = g.degrees()
    s2 = sum(x * x for x in d)
    s3 = sum(x ** 3 for x in d)
    t = triangle_count(g)
    if kind == "Q":
        return (g.n, g.m, 2 * g.m + s2, 6 * t + 3 * s2 + s3, bipartite_component_count(g))
    if kind == "L":
        return (g.n, g.m, 2 * g.m + s2, s3 + 3 * s2 - 6 * t, len(connected_components(g)))
    return (g.n, g.m, 6 * t)


def prefilter(target: Graph, candidate: Graph, kind: str = "Q") -> bool:
    """False only when the two graphs cannot be ``kind``-cospectral."""
    if target.n != candidate.n or target.m != candidate.m:
        return False
    return digest(target, kind) == digest(candidate, kind)


@dataclass
class MateReport:
    target: Graph
    kind: str
    scope: str
    candidates_examined: int
    prefilter_survivors: int
    mates: list[Graph] = field(default_factory=list)

    @property
    def target_graph6(self) -> str:
        return encode_graph6(self.target)

    def mate_graph6(self) -> list[str]:
        return [encode_graph6(h) for h in self.mates]


@dataclass
class DqsVerdict:
    target: Graph
    kind: str
    verdict: str
    scope: str
    witnesses: list[Graph] = field(default_factory=list)
    report: Optional[MateReport] = None

    @property
    def determined(self) -> bool:
        return self.verdict == DETERMINED


def _scan(candidates: Iterable[Graph], target_digest, target_poly: tuple,
          target_code: bytes, kind: str, use_prefilter: bool):
    examined = survivors = 0
    mates = []
    for h in candidates:
        examined += 1
        if use_prefilter and digest(h, kind) != target_digest:
            continue
        survivors += 1
        if charpoly(h, kind).coeffs != target_poly:
            continue
        code = canonical_form(h)
        if code != target_code:
            mates.append((code, h))
    return examined, survivors, mates


@lru_cache(maxsize=32)
def _candidates(n: int, m: Optional[int]) -> tuple[Graph, ...]:
    return tuple(generate(n, m))


def hunt_mates(target: Graph, kind: str = "Q", *, use_prefilter: bool = True,
               edge_prune: bool = True, jobs: int = 1,
               candidates: Optional[Iterable[Graph]] = None) -> MateReport:
    """All graphs of the target's order that are ``kind``-cospectral but not isomorphic to it.

    Cospectral graphs share their edge count, so by default only classes with
    ``target.m`` edges are generated (``edge_prune``).  ``candidates`` replaces
    the enumeration, e.g. with graphs read from a cache file.
    """
    n = target.n
    if n > EXHAUSTIVE_CAP and candidates is None:
        raise ScopeError(f"order {n} exceeds the exhaustive cap {EXHAUSTIVE_CAP}")
    m_filter = target.m if edge_prune else None
    tpoly = charpoly(target, kind).coeffs
    tcode = canonical_form(target)
    tdig = digest(target, kind)
    scope = f"all graphs of order {n}" + (f" with {target.m} edges" if edge_prune else "")
    if candidates is not None:
        results = [_scan(candidates, tdig, tpoly, tcode, kind, use_prefilter)]
        scope = f"supplied candidates of order {n}"
    elif jobs == 1 and n <= 8:
        results = [_scan(_candidates(n, m_filter), tdig, tpoly, tcode, kind, use_prefilter)]
    else:
        fn = partial(_scan, target_digest=tdig, target_poly=tpoly, target_code=tcode,
                     kind=kind, use_prefilter=use_prefilter)
        results = map_subtrees(fn, n, m_filter, jobs=jobs)
    examined = sum(r[0] for r in results)
    survivors = sum(r[1] for r in results)
    found = {}
    for r in results:
        for code, h in r[2]:
            found.setdefault(code, h)
    mates = [found[c] for c in sorted(found)]
    return MateReport(target, kind, scope, examined, survivors, mates)


def verify_dqs(target: Graph, kind: str = "Q", **kwargs) -> DqsVerdict:
    """Decide spectral determination among all graphs of the target's order.

    Mates must have the same order, so scanning that order settles the full
    question.  Orders above the enumeration cap give ``out-of-scope``.
    """
    if target.n > EXHAUSTIVE_CAP:
        return DqsVerdict(target, kind, OUT_OF_SCOPE,
                          f"order {target.n} above exhaustive cap {EXHAUSTIVE_CAP}")
    rep = hunt_mates(target, kind, **kwargs)
    verdict = NOT_DETERMINED if rep.mates else DETERMINED
    return DqsVerdict(target, kind, verdict, rep.scope, list(rep.mates), rep)

