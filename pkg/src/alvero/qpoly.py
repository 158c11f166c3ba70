"""Exact univariate polynomials over Q, represented as tuples of Fraction.

Coefficients run from the constant term upward and the tuple is trimmed so
the last entry is nonzero; the zero polynomial is the empty tuple.  These are
the specialized polynomials obtained by substituting rational values for the
a-variables, plus the exact machinery (gcd, square-free split, resultant over
the field) used as independent oracles and for multiplicity-aware root work.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

QPoly = tuple[Fraction, ...]


def qpoly(coeffs: Iterable[Fraction | int | float]) -> QPoly:
    out = [Fraction(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def qdegree(p: QPoly) -> int:
    return len(p) - 1


def qeval(p: QPoly, x: Fraction | int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def qadd(p: QPoly, q: QPoly) -> QPoly:
    n = max(len(p), len(q))
    return qpoly(
        [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
    )


def qscale(p: QPoly, c: Fraction | int) -> QPoly:
    c = Fraction(c)
    if not c:
        return ()
    return tuple(v * c for v in p)


def qmul(p: QPoly, q: QPoly) -> QPoly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return qpoly(out)


def qderiv(p: QPoly) -> QPoly:
    return qpoly([k * p[k] for k in range(1, len(p))])


def qhasse(p: QPoly, k: int) -> QPoly:
    """k-th Hasse derivative: sum_j C(j, k) p_j x^{j-k}; exact."""
    if k < 0 or k > qdegree(p):
        raise ValueError(f"derivative index {k} out of range for degree {qdegree(p)}")
    return qpoly([comb(j, k) * p[j] for j in range(k, len(p))])


def qmonic(p: QPoly) -> QPoly:
    if not p:
        return ()
    lc = p[-1]
    if lc == 1:
        return p
    return tuple(c / lc for c in p)


def qdivmod(p: QPoly, q: QPoly) -> tuple[QPoly, QPoly]:
    """Euclidean division over the field Q."""
    if not q:
        raise ZeroDivisionError("division by zero polynomial")
    rem = list(p)
    dq = qdegree(q)
    lc = q[-1]
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    while len(rem) - 1 >= dq and rem:
        k = len(rem) - 1 - dq
        c = rem[-1] / lc
        quot[k] = c
        for j in range(dq + 1):
            rem[k + j] -= c * q[j]
        while rem and not rem[-1]:
            rem.pop()
    return qpoly(quot), qpoly(rem)


def qgcd(p: QPoly, q: QPoly) -> QPoly:
    """Monic gcd via the Euclidean algorithm, remainders kept monic for size control."""
    a, b = qmonic(p), qmonic(q)
    while b:
        _, r = qdivmod(a, b)
        a, b = b, qmonic(r)
    return a


def qsquarefree(p: QPoly) -> list[tuple[QPoly, int]]:
    """Yun's square-free decomposition: returns [(factor, multiplicity), ...].

    Each factor is monic and square-free, factors are pairwise coprime, and
    p = lc * prod factor^multiplicity.  Factors of degree zero are dropped.
    """
    if qdegree(p) < 1:
        return []
    p = qmonic(p)
    d = qderiv(p)
    a = qgcd(p, d)
    b, _ = qdivmod(p, a)
    c, _ = qdivmod(d, a)
    out: list[tuple[QPoly, int]] = []
    i = 1
    while qdegree(b) > 0:
        # c - b' has the next factor split off via gcd with b
        diff = qadd(c, qscale(qderiv(b), -1))
        g = qgcd(b, diff)
        if qdegree(g) > 0:
            out.append((g, i))
        b, _ = qdivmod(b, g)
        c, _ = qdivmod(diff, g)
        i += 1
    return out


def qroot_multiplicity(p: QPoly, r: Fraction) -> int:
    """Exact multiplicity of the rational root r in p."""
    mult = 0
    while p and not qeval(p, r):
        p, rem = qdivmod(p, qpoly([-r, 1]))
        assert not rem
        mult += 1
    return mult


def from_roots(roots: Sequence[Fraction | int], multiplicities: Sequence[int] | None = None) -> QPoly:
    """Exact monic polynomial with the given roots (with multiplicity)."""
    p: QPoly = (Fraction(1),)
    if multiplicities is None:
        multiplicities = [1] * len(roots)
    for r, m in zip(roots, multiplicities):
        lin = qpoly([-Fraction(r), 1])
        for _ in range(m):
            p = qmul(p, lin)
    return p


def quni_resultant(p: QPoly, q: QPoly) -> Fraction:
    """Resultant of two univariate polynomials over Q.

    Determinant of the Sylvester matrix by Gaussian elimination over the
    field; independent of the fraction-free polynomial-matrix path, so it
    serves as a commutation oracle for specialized multivariate resultants.
    """
    m, n = qdegree(p), qdegree(q)
    if m < 1 or n < 1:
        raise ValueError("resultant requires two polynomials of degree >= 1")
    size = m + n
    rows: list[list[Fraction]] = []
    prow = [p[m - j] if 0 <= m - j <= m else Fraction(0) for j in range(size)]
    qrow = [q[n - j] if 0 <= n - j <= n else Fraction(0) for j in range(size)]
    for k in range(n):
        rows.append([Fraction(0)] * k + prow[: size - k])
    for k in range(m):
        rows.append([Fraction(0)] * k + qrow[: size - k])
    det = Fraction(1)
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        pv = rows[col][col]
        det *= pv
        for r in range(col + 1, size):
            factor = rows[r][col] / pv
            if factor:
                for c in range(col, size):
                    rows[r][c] -= factor * rows[col][c]
    return det
