"""Enumeration cache: one tab-separated record per graph.

Columns: graph6, Q polynomial text, L polynomial text, n, m, T2, T3,
bipartite component count.  A leading ``#`` line records what was
enumerated, so a reader can tell whether the file is a complete class list.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from dqslab.cli_io.graph6 import decode_graph6, encode_graph6
from dqslab.exact_spectra.charpoly import charpoly
from dqslab.graph_core import Graph, bipartite_component_count, triangle_count

CACHE_ENV = "DQSLAB_CACHE_DIR"


@dataclass(frozen=True)
class CacheRecord:
    graph6: str
    qpoly: str
    lpoly: str
    n: int
    m: int
    t2: int
    t3: int
    bipartite_components: int

    @classmethod
    def of(cls, g: Graph) -> CacheRecord:
        d = g.degrees()
        s2 = sum(x * x for x in d)
        s3 = sum(x ** 3 for x in d)
        return cls(encode_graph6(g), charpoly(g, "Q").text(), charpoly(g, "L").text(),
                   g.n, g.m, 2 * g.m + s2, 6 * triangle_count(g) + 3 * s2 + s3,
                   bipartite_component_count(g))

    def line(self) -> str:
        return "\t".join(map(str, (self.graph6, self.qpoly, self.lpoly, self.n, self.m,
                                   self.t2, self.t3, self.bipartite_components)))

    @classmethod
    def parse(cls, line: str) -> CacheRecord:
        f = line.rstrip("\n").split("\t")
        if len(f) != 8:
            raise ValueError(f"cache record needs 8 fields, got {len(f)}")
        return cls(f[0], f[1], f[2], *(int(x) for x in f[3:]))

    def graph(self) -> Graph:
        return decode_graph6(self.graph6)


def default_dir() -> Optional[Path]:
    d = os.environ.get(CACHE_ENV)
    return Path(d) if d else None


def cache_name(n: int, m: Optional[int] = None) -> str:
    return f"n{n}.tsv" if m is None else f"n{n}_m{m}.tsv"


def header(n: int, m: Optional[int], count: int) -> str:
    return f"# n={n} m={'all' if m is None else m} count={count}"


def write_cache(path, graphs: Iterable[Graph], n: int, m: Optional[int] = None) -> int:
    """Write records for ``graphs``; returns the number written."""
    lines = [CacheRecord.of(g).line() for g in graphs]
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".part")
    with open(tmp, "w") as fh:
        fh.write(header(n, m, len(lines)) + "\n")
        for ln in lines:
            fh.write(ln + "\n")
    os.replace(tmp, path)
    return len(lines)


def read_cache(path) -> tuple[dict, list[CacheRecord]]:
    """Header fields and records; the record count is checked against the header."""
    meta, recs = {}, []
    with open(path) as fh:
        for ln in fh:
            if ln.startswith("#"):
                meta.update(kv.split("=", 1) for kv in ln[1:].split())
            elif ln.strip():
                recs.append(CacheRecord.parse(ln))
    if "count" in meta and int(meta["count"]) != len(recs):
        raise ValueError(f"{path}: header says {meta['count']} records, found {len(recs)}")
    return meta, recs


def validate(records: list[CacheRecord], sample: Optional[int] = None, seed: int = 0) -> list[str]:
    """Recompute a sample of records (all when ``sample`` is None); returns mismatching graph6 strings."""
    pool = records
    if sample is not None and sample < len(records):
        pool = random.Random(seed).sample(records, sample)
    return [r.graph6 for r in pool if CacheRecord.of(r.graph()) != r]


def find_cache(directory, n: int, m: Optional[int]) -> Optional[Path]:
    """A complete cache covering order ``n`` (and edge count ``m``), if present."""
    if directory is None:
        return None
    directory = Path(directory)
    for name in ([cache_name(n, m)] if m is not None else []) + [cache_name(n)]:
        p = directory / name
        if p.exists():
            return p
    return None
