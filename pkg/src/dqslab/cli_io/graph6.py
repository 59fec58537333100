"""graph6 encoding for orders up to 62 (single header byte)."""
from __future__ import annotations

from dqslab.graph_core import Graph

MAX_GRAPH6_ORDER = 62


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_GRAPH6_ORDER:
        raise ValueError(f"graph6 header supports n <= {MAX_GRAPH6_ORDER}, got {n}")
    rows = g.rows
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        r = rows[j]
        for i in range(j):
            acc = acc << 1 | (r >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", pos)
    n = ord(text[0]) - 63
    if n > MAX_GRAPH6_ORDER:
        raise Graph6Error("multi-byte order headers are not supported", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(text) - 1 != need:
        offset = len(text) if len(text) - 1 < need else need + 1
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(text) - 1}", offset)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(text[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and nbits % 6:
        pad = (ord(text[need]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("non-zero padding bits", need)
    return Graph(n, tuple(rows))
