"""Spectrum-determined invariants of the signless Laplacian."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from dqslab.exact_spectra.charpoly import charpoly, matrix, spanning_tree_count
from dqslab.graph_core import Graph, is_connected, triangle_count


@dataclass(frozen=True)
class QInvariants:
    n: int
    m: int
    T: tuple[int, int, int, int]
    detQ: int
    P_Q: int
    P_L: int
    zero_mult_Q: int
    tau: Optional[int]

    def as_lines(self) -> list[str]:
        return [
            f"n={self.n}",
            f"m={self.m}",
            *(f"T{k}={t}" for k, t in enumerate(self.T)),
            f"detQ={self.detQ}",
            f"P_Q={self.P_Q}",
            f"P_L={self.P_L}",
            f"zero_mult_Q={self.zero_mult_Q}",
            f"tau={'absent' if self.tau is None else self.tau}",
        ]


def _matmul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(a[i], bt[j])) for j in range(n)] for i in range(n)]


def power_sums(g: Graph) -> tuple[int, int, int, int]:
    """``T_k = trace(Q^k)`` for ``k = 0..3`` by exact matrix powers."""
    q = matrix(g, "Q")
    if g.n == 0:
        return (0, 0, 0, 0)
    q2 = _matmul(q, q)
    t1 = sum(q[i][i] for i in range(g.n))
    t2 = sum(q2[i][i] for i in range(g.n))
    t3 = sum(q2[i][j] * q[j][i] for i in range(g.n) for j in range(g.n))
    return (g.n, t1, t2, t3)


def power_sums_closed_form(g: Graph) -> tuple[int, int, int, int]:
    """``(n, 2m, 2m + sum d^2, 6t + 3 sum d^2 + sum d^3)`` from counts alone."""
    d = g.degrees()
    s2 = sum(x * x for x in d)
    s3 = sum(x ** 3 for x in d)
    return (g.n, 2 * g.m, 2 * g.m + s2, 6 * triangle_count(g) + 3 * s2 + s3)


def q_invariants(g: Graph) -> QInvariants:
    qp = charpoly(g, "Q")
    lp = charpoly(g, "L")
    z = qp.zero_multiplicity()
    return QInvariants(
        n=g.n,
        m=g.m,
        T=power_sums(g),
        detQ=(-1) ** g.n * qp.coeffs[0],
        P_Q=abs(qp.lowest_nonzero()),
        P_L=abs(lp.lowest_nonzero()),
        zero_mult_Q=z,
        tau=spanning_tree_count(g) if g.n > 0 and is_connected(g) else None,
    )
