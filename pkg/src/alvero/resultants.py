"""Sylvester matrices and exact resultants over the multivariate coefficient ring.

The production determinant path is fraction-free Bareiss elimination, whose
intermediate entries stay in the polynomial ring; recursive cofactor expansion
is kept as an independent oracle.  ``casas_resultants`` produces the family
R_i = Res(f, H_i(f)) for the generic monic polynomial with constant term zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from heapq import heapify, heappop, heappush
from math import gcd

from .budget import Budget
from .polycore import (
    Monomial,
    MultiPoly,
    UniPoly,
    generic_casas_polynomial,
    hasse_derivative,
    mono_div,
    mono_divides,
    mono_mul,
)

Matrix = list[list[MultiPoly]]
_ZTerms = dict[Monomial, int]


@dataclass(frozen=True)
class SylvesterMatrix:
    """(m+n) x (m+n) matrix of shifted coefficient rows, m = deg f, n = deg g."""

    entries: tuple[tuple[MultiPoly, ...], ...]
    nvars: int
    deg_f: int
    deg_g: int

    @property
    def size(self) -> int:
        return self.deg_f + self.deg_g

    def rows(self) -> Matrix:
        return [list(row) for row in self.entries]


def sylvester_matrix(f: UniPoly, g: UniPoly) -> SylvesterMatrix:
    """Classical Sylvester matrix: deg g shifted rows of f, then deg f rows of g.

    Highest-degree coefficients sit leftmost; the determinant of this
    arrangement fixes the sign convention of the resultant.
    """
    if f.nvars != g.nvars:
        raise ValueError("ambient mismatch between f and g")
    m, n = f.degree, g.degree
    if m < 1 or n < 1:
        raise ValueError("sylvester matrix requires both degrees >= 1")
    nvars = f.nvars
    size = m + n
    zero = MultiPoly.zero(nvars)
    f_rev = [f.coefficient(m - j) for j in range(m + 1)]
    g_rev = [g.coefficient(n - j) for j in range(n + 1)]
    rows: list[tuple[MultiPoly, ...]] = []
    for k in range(n):
        row = [zero] * k + f_rev + [zero] * (size - m - 1 - k)
        rows.append(tuple(row))
    for k in range(m):
        row = [zero] * k + g_rev + [zero] * (size - n - 1 - k)
        rows.append(tuple(row))
    return SylvesterMatrix(tuple(rows), nvars, m, n)


def det_cofactor(rows: Matrix, budget: Budget | None = None) -> MultiPoly:
    """Determinant by recursive cofactor expansion along the first row (oracle path)."""
    size = len(rows)
    if size == 0 or any(len(r) != size for r in rows):
        raise ValueError("matrix must be square and non-empty")
    nvars = rows[0][0].nvars

    def rec(active_rows: list[int], active_cols: list[int]) -> MultiPoly:
        if len(active_rows) == 1:
            return rows[active_rows[0]][active_cols[0]]
        r0 = active_rows[0]
        rest = active_rows[1:]
        acc = MultiPoly.zero(nvars)
        for k, col in enumerate(active_cols):
            entry = rows[r0][col]
            if entry.is_zero:
                continue
            sub_cols = active_cols[:k] + active_cols[k + 1 :]
            minor = rec(rest, sub_cols)
            if budget is not None:
                budget.charge(len(entry.terms) * max(len(minor.terms), 1))
            term = entry * minor
            acc = acc + term if k % 2 == 0 else acc - term
        return acc

    return rec(list(range(size)), list(range(size)))


def _heap_key(mono: Monomial):
    """Key under which heapq pops monomials in descending grevlex order."""
    return (-sum(mono), tuple(reversed(mono)))


def _zmul_sub(a: _ZTerms, b: _ZTerms, c: _ZTerms, d: _ZTerms) -> _ZTerms:
    """a*b - c*d over integer term dicts."""
    out: _ZTerms = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            mono = mono_mul(m1, m2)
            acc = out.get(mono, 0) + c1 * c2
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
    for m1, c1 in c.items():
        for m2, c2 in d.items():
            mono = mono_mul(m1, m2)
            acc = out.get(mono, 0) - c1 * c2
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
    return out


def _zdivide_exact(num: _ZTerms, den: _ZTerms) -> _ZTerms:
    """Exact division in Z[a]; the heap tracks the current leading monomial."""
    if not num:
        return {}
    den_lm = min(den, key=_heap_key)
    den_lc = den[den_lm]
    den_tail = [(m, c) for m, c in den.items() if m != den_lm]
    rem = dict(num)
    heap = [(_heap_key(m), m) for m in rem]
    heapify(heap)
    quot: _ZTerms = {}
    while heap:
        _, mono = heappop(heap)
        c = rem.pop(mono, 0)
        if not c:
            continue
        if not mono_divides(den_lm, mono):
            raise ValueError("inexact polynomial division")
        q, r = divmod(c, den_lc)
        if r:
            raise ValueError("inexact polynomial division")
        q_mono = mono_div(mono, den_lm)
        quot[q_mono] = q
        for m2, c2 in den_tail:
            mm = mono_mul(q_mono, m2)
            old = rem.get(mm)
            if old is None:
                rem[mm] = -q * c2
                heappush(heap, (_heap_key(mm), mm))
            else:
                old -= q * c2
                if old:
                    rem[mm] = old
                else:
                    del rem[mm]
    if rem:
        raise ValueError("inexact polynomial division")
    return quot


def det_bareiss(rows: Matrix, budget: Budget | None = None) -> MultiPoly:
    """Fraction-free determinant (Bareiss): every division is exact in the ring.

    Intermediate entries equal minors of the input, which bounds coefficient
    swell compared to naive elimination over the fraction field.  Rows with
    rational coefficients are scaled to integers up front and the accumulated
    scale is divided out of the final determinant.
    """
    size = len(rows)
    if size == 0 or any(len(r) != size for r in rows):
        raise ValueError("matrix must be square and non-empty")
    nvars = rows[0][0].nvars
    denom = 1
    m: list[list[_ZTerms]] = []
    for row in rows:
        row_den = 1
        for p in row:
            for c in p.terms.values():
                row_den = row_den * c.denominator // gcd(row_den, c.denominator)
        denom *= row_den
        m.append(
            [
                {
                    mo: c.numerator * (row_den // c.denominator)
                    for mo, c in p.terms.items()
                }
                for p in row
            ]
        )
    sign = 1
    prev: _ZTerms = {(0,) * nvars: 1}
    for k in range(size - 1):
        pivot_row = None
        for r in range(k, size):
            if m[r][k]:
                pivot_row = r
                break
        if pivot_row is None:
            return MultiPoly.zero(nvars)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, size):
                a, b = row_i[j], m[k][j]
                if budget is not None:
                    budget.charge(
                        len(a) * len(pivot) + len(lead) * len(b) + 1
                    )
                num = _zmul_sub(a, pivot, lead, b)
                row_i[j] = _zdivide_exact(num, prev) if k else num
            row_i[k] = {}
        prev = pivot
    result = m[size - 1][size - 1]
    return MultiPoly(
        nvars, {mo: Fraction(sign * c, denom) for mo, c in result.items()}
    )


def resultant(f: UniPoly, g: UniPoly, budget: Budget | None = None) -> MultiPoly:
    """Res(f, g): Bareiss determinant of the Sylvester matrix."""
    return det_bareiss(sylvester_matrix(f, g).rows(), budget)


@dataclass(frozen=True)
class ResultantFamily:
    """The family (R_1, ..., R_{d-1}) in d-1 variables; members[i-1] is R_i."""

    degree: int
    members: tuple[MultiPoly, ...]

    def member(self, i: int) -> MultiPoly:
        if not 1 <= i <= len(self.members):
            raise ValueError(f"index {i} out of range 1..{len(self.members)}")
        return self.members[i - 1]

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def casas_resultants(d: int, budget: Budget | None = None) -> ResultantFamily:
    """R_i = Res(f, H_i(f)) for the generic monic degree-d polynomial, i = 1..d-1."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    f = generic_casas_polynomial(d)
    members = []
    for i in range(1, d):
        if budget is not None:
            budget.enter(f"resultant R_{i} at degree {d}")
        members.append(resultant(f, hasse_derivative(f, i), budget))
    return ResultantFamily(d, tuple(members))
