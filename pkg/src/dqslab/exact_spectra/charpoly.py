"""Characteristic polynomials of A, L = D - A and Q = D + A over the integers."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from dqslab.exact_spectra import polynomial as P
from dqslab.graph_core import Graph, iter_bits

KINDS = ("A", "L", "Q")


@dataclass(frozen=True)
class CharPoly:
    """Monic ``det(xI - M)``; ``coeffs[i]`` is the coefficient of ``x**i``."""
    kind: str
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown matrix kind {self.kind!r}")
        if not self.coeffs or self.coeffs[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return P.evaluate(self.coeffs, x)

    def text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, kind: str, text: str) -> CharPoly:
        return cls(kind, tuple(int(t) for t in text.split(",")))

    def zero_multiplicity(self) -> int:
        return next(i for i, c in enumerate(self.coeffs) if c != 0)

    def lowest_nonzero(self) -> int:
        return self.coeffs[self.zero_multiplicity()]

    def power_sums(self, kmax: int) -> list[int]:
        """Root power sums ``p_0..p_kmax`` from Newton's identities."""
        n = self.degree
        # a[j] = coefficient of x^(n-j)
        a = [self.coeffs[n - j] if j <= n else 0 for j in range(kmax + 1)]
        p = [n]
        for k in range(1, kmax + 1):
            s = k * a[k]
            for i in range(1, k):
                s += a[i] * p[k - i]
            p.append(-s)
        return p

    def multiply(self, other: CharPoly) -> CharPoly:
        if self.kind != other.kind:
            raise ValueError("cannot multiply polynomials of different kinds")
        return CharPoly(self.kind, tuple(P.mul(self.coeffs, other.coeffs)))


def matrix(g: Graph, kind: str) -> list[list[int]]:
    """Dense integer matrix A, L or Q of ``g``."""
    sign = {"A": 1, "L": -1, "Q": 1}[kind]
    out = []
    for i, r in enumerate(g.rows):
        row = [sign * (r >> j & 1) for j in range(g.n)]
        if kind != "A":
            row[i] = r.bit_count()
        out.append(row)
    return out


def faddeev_leverrier(g: Graph, kind: str) -> list[int]:
    """Coefficients of ``det(xI - M)`` with every division checked exact.

    ``M_1 = I``; ``c_{n-k} = -tr(M M_k) / k``; ``M_{k+1} = M M_k + c_{n-k} I``.
    The product ``M X`` is formed row by row from the sparse structure of ``M``.
    """
    n = g.n
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    if n == 0:
        return coeffs
    diag = [0] * n if kind == "A" else [r.bit_count() for r in g.rows]
    sign = -1 if kind == "L" else 1
    nbrs = [list(iter_bits(r)) for r in g.rows]
    cur = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        prod = []
        for i in range(n):
            d = diag[i]
            row = [d * x for x in cur[i]] if d else [0] * n
            for j in nbrs[i]:
                cj = cur[j]
                if sign > 0:
                    for t in range(n):
                        row[t] += cj[t]
                else:
                    for t in range(n):
                        row[t] -= cj[t]
            prod.append(row)
        tr = sum(prod[i][i] for i in range(n))
        c, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("inexact Faddeev-LeVerrier division")
        coeffs[n - k] = c
        for i in range(n):
            prod[i][i] += c
        cur = prod
    return coeffs


def charpoly(g: Graph, kind: str = "Q") -> CharPoly:
    if kind not in KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}")
    return CharPoly(kind, tuple(faddeev_leverrier(g, kind)))


def bareiss_determinant(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; exact for integer matrices."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def spanning_tree_count(g: Graph) -> int:
    """Matrix-Tree theorem: determinant of L with the last row and column removed."""
    if g.n <= 1:
        return 1
    lap = matrix(g, "L")
    minor = [row[:-1] for row in lap[:-1]]
    return bareiss_determinant(minor)


def count_roots_geq(p: CharPoly, threshold, strict: bool = False) -> int:
    """Eigenvalues ``>= threshold`` (``>`` if ``strict``) with multiplicity, by Sturm counting."""
    return P.count_roots_geq(p.coeffs, Fraction(threshold), strict=strict)


def is_cospectral(g: Graph, h: Graph, kind: str = "Q") -> bool:
    if g.n != h.n:
        return False
    return charpoly(g, kind).coeffs == charpoly(h, kind).coeffs


def eigenvalues(p: CharPoly, width=Fraction(1, 1 << 30)) -> list[tuple[Fraction, Fraction, int]]:
    """Isolated eigenvalues, largest first, as ``(lo, hi, multiplicity)``."""
    return P.isolate_roots(p.coeffs, width)


def spectrum_text(p: CharPoly, digits: int = 6) -> str:
    """Root multiset like ``[4]^1 [1]^2 [0]^1``; irrational roots as decimals."""
    parts = []
    for lo, hi, mult in eigenvalues(p):
        if lo == hi:
            val = str(lo) if lo.denominator != 1 else str(lo.numerator)
        else:
            val = f"{float((lo + hi) / 2):.{digits}f}"
        parts.append(f"[{val}]^{mult}")
    return " ".join(parts)
