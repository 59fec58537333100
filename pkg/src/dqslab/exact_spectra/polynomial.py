"""Exact univariate polynomial arithmetic and Sturm root counting.

Polynomials are coefficient lists, constant term first.  Integer lists are
the normal currency; :class:`fractions.Fraction` appears only inside
division steps and in thresholds.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence, Union

Rational = Union[int, Fraction]
INF = float("inf")


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    return len(trim(p)) - 1


def evaluate(p: Sequence, x: Rational):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_at(p: Sequence[int], x) -> int:
    """Sign of ``p(x)`` for rational ``x`` or ``x = +-inf``."""
    p = trim(p)
    if not p:
        return 0
    if x == INF:
        return 1 if p[-1] > 0 else -1
    if x == -INF:
        s = 1 if p[-1] > 0 else -1
        return s if (len(p) - 1) % 2 == 0 else -s
    x = Fraction(x)
    a, b = x.numerator, x.denominator
    # b^deg * p(a/b) is an integer with the sign of p(a/b)
    val = 0
    bpow = 1
    for c in reversed(p):
        val = val * a + c * bpow
        bpow *= b
    return (val > 0) - (val < 0)


def derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


def primitive(p):
    """Integer multiple of ``p`` with coprime integer coefficients and positive leading coefficient."""
    p = trim(p)
    if not p:
        return []
    den = 1
    for c in p:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    q = [int(c * den) for c in p]
    g = 0
    for c in q:
        g = gcd(g, c)
    q = [c // g for c in q]
    if q[-1] < 0:
        q = [-c for c in q]
    return q


def divmod_poly(a, b):
    """Quotient and remainder over the rationals."""
    a = [Fraction(c) for c in trim(a)]
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lead = Fraction(b[-1])
    if len(a) - 1 < db:
        return [], a
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return trim(q), trim(a[:db])


def poly_gcd(a, b):
    """Primitive gcd of two integer polynomials."""
    a, b = primitive(a), primitive(b)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, primitive(r)
    return a


def exact_quotient(a, b):
    q, r = divmod_poly(a, b)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


def squarefree_decomposition(p) -> list[tuple[list[int], int]]:
    """Yun's algorithm: pairs ``(f_i, i)`` with ``p = c * prod f_i^i``, each ``f_i`` squarefree.

    Only factors of positive degree are returned.
    """
    p = primitive(p)
    if len(p) <= 1:
        return []
    out = []
    dp = derivative(p)
    a = poly_gcd(p, dp)
    # b and c must share one scale for d = c - b' to hold; no normalising here
    b = exact_quotient(p, a)
    c = exact_quotient(dp, a)
    i = 1
    while len(b) > 1:
        d = trim(x - y for x, y in _pad(c, derivative(b)))
        a = poly_gcd(b, d) if d else primitive(b)
        if len(a) > 1:
            out.append((a, i))
        b = exact_quotient(b, a)
        c = exact_quotient(d, a) if d else []
        i += 1
    return out


def _pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return zip(a, b)


def squarefree_part(p) -> list[int]:
    p = primitive(p)
    if len(p) <= 1:
        return p
    return primitive(exact_quotient(p, poly_gcd(p, derivative(p))))


def sturm_chain(p) -> list[list[int]]:
    """Sturm sequence of ``p``; each member is rescaled by a positive constant."""
    p = primitive(p)
    chain = [p]
    if len(p) <= 1:
        return chain
    chain.append(primitive(derivative(p)))
    while len(chain[-1]) > 1:
        _, r = divmod_poly(chain[-2], chain[-1])
        if not r:
            break
        neg = [-c for c in r]
        # primitive() may flip the sign; undo that to keep the negated remainder's sign
        pr = primitive(neg)
        if neg[-1] < 0:
            pr = [-c for c in pr]
        chain.append(pr)
    return chain


def variations(chain, x) -> int:
    signs = [s for s in (sign_at(q, x) for q in chain) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_distinct_roots(p, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval ``(lo, hi]``."""
    chain = sturm_chain(squarefree_part(p))
    return variations(chain, lo) - variations(chain, hi)


def count_roots_geq(p, threshold: Rational, strict: bool = False) -> int:
    """Real roots ``>= threshold`` (``>`` if ``strict``), counted with multiplicity."""
    total = 0
    for f, mult in squarefree_decomposition(p):
        chain = sturm_chain(f)
        above = variations(chain, threshold) - variations(chain, INF)
        if not strict and sign_at(f, threshold) == 0:
            above += 1
        total += mult * above
    return total


def count_real_roots(p) -> int:
    """Real roots counted with multiplicity."""
    total = 0
    for f, mult in squarefree_decomposition(p):
        chain = sturm_chain(f)
        total += mult * (variations(chain, -INF) - variations(chain, INF))
    return total


def root_bound(p) -> int:
    """Integer ``B`` with every root inside ``(-B, B)`` (Cauchy)."""
    p = trim(p)
    lead = abs(p[-1])
    return 1 + max((abs(Fraction(c) / lead) for c in p[:-1]), default=0).__ceil__()


def isolate_roots(p, width: Rational = Fraction(1, 1 << 20)) -> list[tuple[Fraction, Fraction, int]]:
    """Real roots as ``(lo, hi, multiplicity)`` with ``lo == hi`` for exact rational roots.

    Irrational roots come in disjoint intervals ``(lo, hi]`` of size at most
    ``width``.  Sorted in decreasing order.
    """
    out = []
    width = Fraction(width)
    for f, mult in squarefree_decomposition(p):
        chain = sturm_chain(f)
        b = Fraction(root_bound(f))
        stack = [(-b, b)]
        while stack:
            lo, hi = stack.pop()
            k = variations(chain, lo) - variations(chain, hi)
            if k == 0:
                continue
            if k == 1 and sign_at(f, hi) == 0:
                out.append((hi, hi, mult))
                continue
            if k == 1 and hi - lo <= width:
                exact = _rational_root_in(f, lo, hi)
                out.append((exact, exact, mult) if exact is not None else (lo, hi, mult))
                continue
            mid = (lo + hi) / 2
            stack.append((lo, mid))
            stack.append((mid, hi))
    out.sort(key=lambda t: t[1], reverse=True)
    return out


def _rational_root_in(f, lo, hi):
    """The rational root of integer ``f`` in ``(lo, hi]``, if one exists."""
    lead = abs(f[-1])
    mid = (lo + hi) / 2
    for q in range(1, lead + 1):
        if lead % q:
            continue
        cand = Fraction(round(mid * q), q)
        if lo < cand <= hi and sign_at(f, cand) == 0:
            return cand
    return None


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out
