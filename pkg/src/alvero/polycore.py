"""Exact sparse polynomial arithmetic over the rationals.

Two layers: ``MultiPoly`` is a sparse multivariate polynomial in the
coefficient variables a1..a{n} with ``fractions.Fraction`` coefficients,
and ``UniPoly`` is a univariate polynomial in x whose coefficients are
``MultiPoly``.  The generic monic polynomial with constant term zero and
its Hasse derivatives live here.

Monomials are plain tuples of non-negative exponents, one slot per
variable.  Everything is immutable after construction; all operations are
pure functions and exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


def grevlex_key(mono: Monomial):
    """Sort key realizing graded reverse lexicographic order (larger key = larger monomial)."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


def total_degree(mono: Monomial) -> int:
    return sum(mono)


def weighted_degree(mono: Monomial) -> int:
    """Weighted degree with weight(a_j) = j (1-based variable weights)."""
    return sum((j + 1) * e for j, e in enumerate(mono))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class MultiPoly:
    """Sparse multivariate polynomial over Q in a fixed number of variables.

    Canonical form: the term map stores no zero coefficients, so two
    polynomials are equal iff their maps are equal.  The variable count is
    carried explicitly and checked on every binary operation; silently mixing
    ambient rings is the bug class this guards against.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Scalar] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != nvars:
                    raise ValueError(
                        f"monomial {mono} has {len(mono)} exponents, expected {nvars}"
                    )
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in monomial {mono}")
                c = Fraction(coeff)
                if c:
                    acc = clean.get(mono)
                    clean[mono] = c if acc is None else acc + c
                    if not clean[mono]:
                        del clean[mono]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> MultiPoly:
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, value: Scalar) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> MultiPoly:
        """The variable a_{index+1} (0-based index into the exponent tuple)."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        mono = tuple(1 if j == index else 0 for j in range(nvars))
        return cls(nvars, {mono: Fraction(1)})

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, Fraction]) -> MultiPoly:
        # Internal fast path: terms already canonical.
        self = object.__new__(cls)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", terms)
        return self

    # -- predicates and views ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(total_degree(m) == 0 for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def total_deg(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((total_degree(m) for m in self.terms), default=-1)

    def weighted_degrees(self) -> set[int]:
        """Set of weighted degrees (weight(a_j) = j) over all monomials."""
        return {weighted_degree(m) for m in self.terms}

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending grevlex order (the canonical iteration order)."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_monomial(self, key=grevlex_key) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=key)

    # -- ring operations -----------------------------------------------------

    def _check_same_ring(self, other: MultiPoly) -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"ambient mismatch: {self.nvars} vs {other.nvars} variables"
            )

    def __add__(self, other: MultiPoly | Scalar) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_ring(other)
        res = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = res.get(mono)
            if acc is None:
                res[mono] = coeff
            else:
                acc = acc + coeff
                if acc:
                    res[mono] = acc
                else:
                    del res[mono]
        return MultiPoly._raw(self.nvars, res)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: MultiPoly | Scalar) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other: MultiPoly | Scalar) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw(self.nvars, {m: c * v for m, v in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_same_ring(other)
        res: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = mono_mul(m1, m2)
                acc = res.get(mono)
                if acc is None:
                    res[mono] = c1 * c2
                else:
                    acc = acc + c1 * c2
                    if acc:
                        res[mono] = acc
                    else:
                        del res[mono]
        return MultiPoly._raw(self.nvars, res)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- specialization and ring moves ---------------------------------------

    def specialize(self, point: Sequence[Scalar]) -> Fraction:
        """Substitute a_j := point[j-1]; exact evaluation."""
        if len(point) != self.nvars:
            raise ValueError(
                f"point has {len(point)} coordinates, expected {self.nvars}"
            )
        vals = [Fraction(v) for v in point]
        acc = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for v, e in zip(vals, mono):
                if e:
                    term *= v**e
            acc += term
        return acc

    def extend(self, extra: int) -> MultiPoly:
        """Same polynomial viewed in a ring with `extra` more (trailing) variables."""
        if extra < 0:
            raise ValueError("extra must be non-negative")
        if extra == 0:
            return self
        pad = (0,) * extra
        return MultiPoly._raw(
            self.nvars + extra, {m + pad: c for m, c in self.terms.items()}
        )

    def __str__(self) -> str:
        from . import textform

        return textform.format_multipoly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {str(self)!r})"


def exact_divide(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Exact quotient p / q in Q[a]; raises if q does not divide p.

    Over an integral domain the leading term of p is always divisible by the
    leading term of q whenever q | p, so repeated leading-term cancellation
    terminates with zero remainder exactly in that case.
    """
    p._check_same_ring(q)
    if q.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    quot: dict[Monomial, Fraction] = {}
    rem = dict(p.terms)
    q_lm = q.leading_monomial()
    q_lc = q.terms[q_lm]
    while rem:
        lm = max(rem, key=grevlex_key)
        if not mono_divides(q_lm, lm):
            raise ValueError("inexact polynomial division")
        t_mono = mono_div(lm, q_lm)
        t_coeff = rem[lm] / q_lc
        quot[t_mono] = t_coeff
        for m2, c2 in q.terms.items():
            mono = mono_mul(t_mono, m2)
            acc = rem.get(mono, Fraction(0)) - t_coeff * c2
            if acc:
                rem[mono] = acc
            else:
                rem.pop(mono, None)
    return MultiPoly._raw(p.nvars, quot)


class UniPoly:
    """Univariate polynomial in x over the ring of MultiPoly coefficients.

    ``coeffs[k]`` is the coefficient of x^k; the list is trimmed so the last
    entry is nonzero (the zero polynomial has an empty list and degree -1).
    """

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Iterable[MultiPoly | Scalar]):
        lifted: list[MultiPoly] = []
        for c in coeffs:
            if isinstance(c, (int, Fraction)):
                c = MultiPoly.const(nvars, c)
            if c.nvars != nvars:
                raise ValueError("coefficient ambient mismatch")
            lifted.append(c)
        while lifted and lifted[-1].is_zero:
            lifted.pop()
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "coeffs", tuple(lifted))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> MultiPoly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return MultiPoly.zero(self.nvars)

    def leading_coefficient(self) -> MultiPoly:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return not self.is_zero and self.leading_coefficient() == 1

    def _check_same_ring(self, other: UniPoly) -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"ambient mismatch: {self.nvars} vs {other.nvars} variables"
            )

    def __add__(self, other: UniPoly) -> UniPoly:
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check_same_ring(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.nvars, [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        )

    def __neg__(self) -> UniPoly:
        return UniPoly(self.nvars, [-c for c in self.coeffs])

    def __sub__(self, other: UniPoly) -> UniPoly:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: UniPoly | MultiPoly | Scalar) -> UniPoly:
        if isinstance(other, (int, Fraction, MultiPoly)):
            return UniPoly(self.nvars, [c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check_same_ring(other)
        if self.is_zero or other.is_zero:
            return UniPoly(self.nvars, [])
        res = [MultiPoly.zero(self.nvars) for _ in range(self.degree + other.degree + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero:
                    continue
                res[i + j] = res[i + j] + a * b
        return UniPoly(self.nvars, res)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.nvars, self.coeffs))

    def specialize(self, point: Sequence[Scalar]) -> tuple[Fraction, ...]:
        """Substitute the a-variables; returns exact x-coefficients, low to high."""
        out = [c.specialize(point) for c in self.coeffs]
        while out and not out[-1]:
            out.pop()
        return tuple(out)

    def extend(self, extra: int) -> UniPoly:
        return UniPoly(self.nvars + extra, [c.extend(extra) for c in self.coeffs])

    def __str__(self) -> str:
        from . import textform

        return textform.format_unipoly(self)

    def __repr__(self) -> str:
        return f"UniPoly({self.nvars}, {str(self)!r})"


def generic_casas_polynomial(d: int) -> UniPoly:
    """Monic degree-d polynomial x^d + a1*x^{d-1} + ... + a{d-1}*x over Q[a1..a{d-1}].

    The constant term is zero: after translating one root to the origin the
    last coefficient drops out, so the ambient ring has d-1 variables.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    nvars = d - 1
    coeffs = [MultiPoly.zero(nvars) for _ in range(d + 1)]
    coeffs[d] = MultiPoly.const(nvars, 1)
    for k in range(1, d):
        coeffs[d - k] = MultiPoly.variable(nvars, k - 1)
    return UniPoly(nvars, coeffs)


def hasse_derivative(f: UniPoly, i: int) -> UniPoly:
    """i-th Hasse derivative: sum_k C(k, i) * coeff_k(f) * x^{k-i}.

    In characteristic zero this equals the i-th classical derivative divided
    by i!.  Binomial coefficients are exact integers.
    """
    if i < 0:
        raise ValueError("derivative index must be non-negative")
    if i > f.degree:
        raise ValueError(f"derivative index {i} exceeds degree {f.degree}")
    return UniPoly(
        f.nvars, [comb(k, i) * f.coeffs[k] for k in range(i, f.degree + 1)]
    )
