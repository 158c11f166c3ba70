"""Buchberger's algorithm, normal forms, and ideal/radical membership.

The basis computation runs on an integer kernel: generators are scaled to
primitive integer form and reductions are fraction-free (cross-multiplied),
with periodic content stripping.  This only changes elements by nonzero
rational scalars, so the reduced basis, taken monic at the end, is the
canonical one.  Pair bookkeeping uses the Gebauer-Moller update, which
realizes Buchberger's coprimality and chain criteria; selection is the
normal strategy (smallest lcm first).

Radical membership is decided by the Rabinowitsch trick: p lies in the
radical of I iff 1 lies in I + (1 - t*p) after adjoining a fresh variable t.
Explicit exponents for positive verdicts come from a separate bounded search.

A slower Fraction-arithmetic path tracks cofactors when ideal-membership
certificates are requested; every certificate is re-verified by exact
arithmetic before it is returned.
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
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class MonomialOrder:
    """Total order on monomials, compatible with multiplication, 1 least.

    kind is "lex" or "grevlex"; an optional permutation reorders variable
    priorities (perm[0] is the most significant variable index).
    """

    __slots__ = ("kind", "perm", "_cache")

    def __init__(self, kind: str, perm: tuple[int, ...] | None = None):
        if kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order kind {kind!r}")
        if perm is not None:
            perm = tuple(perm)
            if sorted(perm) != list(range(len(perm))):
                raise ValueError(f"invalid variable permutation {perm}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("MonomialOrder is immutable")

    def key(self, mono: Monomial):
        """Sort key: larger key means larger monomial."""
        k = self._cache.get(mono)
        if k is None:
            m = mono if self.perm is None else tuple(mono[p] for p in self.perm)
            if self.kind == "lex":
                k = m
            else:
                k = (sum(m), tuple(-e for e in reversed(m)))
            self._cache[mono] = k
        return k

    def extended(self) -> MonomialOrder:
        """Same order with one fresh trailing variable (lowest priority)."""
        if self.perm is None:
            return MonomialOrder(self.kind)
        return MonomialOrder(self.kind, self.perm + (len(self.perm),))

    @property
    def tag(self) -> str:
        if self.perm is None:
            return self.kind
        return f"{self.kind}[{','.join(str(p) for p in self.perm)}]"

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialOrder):
            return NotImplemented
        return self.kind == other.kind and self.perm == other.perm

    def __hash__(self) -> int:
        return hash((self.kind, self.perm))

    def __repr__(self) -> str:
        return f"MonomialOrder({self.tag!r})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


@dataclass
class BuchbergerStats:
    s_pairs: int = 0
    reduction_steps: int = 0


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis with provenance.

    basis is auto-reduced and monic, sorted by ascending leading monomial.
    When certificates were requested, cofactors[i] expresses basis[i] as a
    combination of generators_in.
    """

    generators_in: tuple[MultiPoly, ...]
    basis: tuple[MultiPoly, ...]
    order: MonomialOrder
    stats: BuchbergerStats
    cofactors: tuple[tuple[MultiPoly, ...], ...] | None = None

    @property
    def nvars(self) -> int:
        return self.generators_in[0].nvars

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order.key) for g in self.basis]

    def is_unit_ideal(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant() and not self.basis[0].is_zero


@dataclass(frozen=True)
class MembershipCertificate:
    """Verdict plus optional witnesses.

    For ideal membership, cofactors h_k with p = sum h_k * g_k (re-verified
    exactly before emission).  For radical membership, the exponent N with
    p^N in the ideal when the bounded search found one; exponent_capped
    marks a positive radical verdict whose N exceeded the search bound.
    """

    verdict: bool
    cofactors: tuple[MultiPoly, ...] | None = None
    exponent: int | None = None
    exponent_capped: bool = False


# --------------------------------------------------------------------------
# integer kernel
# --------------------------------------------------------------------------


class _KPoly:
    """Primitive integer polynomial with cached leading data."""

    __slots__ = ("terms", "lm", "lc", "tail")

    def __init__(self, terms: dict[Monomial, int], keyf):
        self.terms = terms
        self.lm = max(terms, key=keyf)
        self.lc = terms[self.lm]
        self.tail = [(m, c) for m, c in terms.items() if m != self.lm]


def _content_strip(terms: dict[Monomial, int], budget: Budget | None = None) -> None:
    if budget is not None:
        # gcd cost grows superlinearly with coefficient size: quadratic in words
        budget.charge(
            sum(max(1, c.bit_length() >> 6) ** 2 for c in terms.values())
        )
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            return
    if g > 1:
        for m in terms:
            terms[m] //= g


def _knorm(
    terms: dict[Monomial, int], keyf, budget: Budget | None = None
) -> _KPoly | None:
    terms = {m: c for m, c in terms.items() if c}
    if not terms:
        return None
    _content_strip(terms, budget)
    lm = max(terms, key=keyf)
    if terms[lm] < 0:
        terms = {m: -c for m, c in terms.items()}
    return _KPoly(terms, keyf)


def _to_int_terms(p: MultiPoly) -> dict[Monomial, int]:
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {m: c.numerator * (den // c.denominator) for m, c in p.terms.items()}


def _spoly_terms(f: _KPoly, g: _KPoly) -> dict[Monomial, int]:
    l = mono_lcm(f.lm, g.lm)
    g0 = gcd(f.lc, g.lc)
    mf, mg = g.lc // g0, f.lc // g0
    sf, sg = mono_div(l, f.lm), mono_div(l, g.lm)
    out: dict[Monomial, int] = {}
    for m, c in f.terms.items():
        out[mono_mul(sf, m)] = mf * c
    for m, c in g.terms.items():
        mm = mono_mul(sg, m)
        acc = out.get(mm, 0) - mg * c
        if acc:
            out[mm] = acc
        else:
            out.pop(mm, None)
    return out


def _heap_key(mono: Monomial):
    """heapq pops monomials in descending grevlex order under this key."""
    return (-sum(mono), tuple(reversed(mono)))


def _reduce_full(
    terms: dict[Monomial, int],
    reducers: list[_KPoly],
    keyf,
    budget: Budget | None,
    stats: BuchbergerStats,
) -> dict[Monomial, int]:
    """Fraction-free full normal form; remainder is unique up to a positive scalar.

    A heap tracks the current leading monomial of the work polynomial;
    entries going stale through cancellation are skipped on pop.
    """
    work = {m: c for m, c in terms.items() if c}
    rem: dict[Monomial, int] = {}
    heap = [(_heap_key(m), m) for m in work]
    heapify(heap)
    steps = 0
    while heap:
        _, mono = heappop(heap)
        c = work.pop(mono, 0)
        if not c:
            continue
        for g in reducers:
            if mono_divides(g.lm, mono):
                stats.reduction_steps += 1
                g0 = gcd(c, g.lc)
                scale = g.lc // g0
                mult = c // g0
                if budget is not None:
                    extra = 0
                    if scale != 1:
                        extra = (len(work) + len(rem)) * max(
                            1, scale.bit_length() >> 6
                        )
                    budget.charge(
                        len(g.tail) + 1 + extra + (mult.bit_length() >> 6)
                    )
                if scale != 1:
                    for k in work:
                        work[k] *= scale
                    for k in rem:
                        rem[k] *= scale
                shift = mono_div(mono, g.lm)
                for m2, c2 in g.tail:
                    mm = mono_mul(shift, m2)
                    old = work.get(mm)
                    if old is None:
                        work[mm] = -mult * c2
                        heappush(heap, (_heap_key(mm), mm))
                    else:
                        old -= mult * c2
                        if old:
                            work[mm] = old
                        else:
                            del work[mm]
                steps += 1
                if steps % 32 == 0:
                    # joint content strip keeps cross-multiplied coefficients small
                    if budget is not None:
                        bits = sum(v.bit_length() for v in work.values())
                        bits += sum(v.bit_length() for v in rem.values())
                        budget.charge(bits >> 6)
                    g_all = 0
                    for v in work.values():
                        g_all = gcd(g_all, v)
                        if g_all == 1:
                            break
                    if g_all != 1:
                        for v in rem.values():
                            g_all = gcd(g_all, v)
                            if g_all == 1:
                                break
                    if g_all > 1:
                        for k in work:
                            work[k] //= g_all
                        for k in rem:
                            rem[k] //= g_all
                break
        else:
            rem[mono] = c
    return rem


def _update_pairs(lms: list[Monomial], pairs: list, t: int, keyf) -> list:
    """Gebauer-Moller pair update after appending element index t.

    Pairs are stored as (lcm, degree, key, i, j) with i < j.
    """
    lm_t = lms[t]
    C = [(mono_lcm(lms[i], lm_t), i) for i in range(t)]
    D: list[tuple[Monomial, int]] = []
    while C:
        l, i = C.pop()
        coprime = all(a == 0 or b == 0 for a, b in zip(lms[i], lm_t))
        if coprime or (
            not any(mono_divides(l2, l) for l2, _ in C)
            and not any(mono_divides(l2, l) for l2, _ in D)
        ):
            D.append((l, i))
    # coprime leading monomials: S-polynomial reduces to zero, drop
    E = [
        (l, i)
        for l, i in D
        if not all(a == 0 or b == 0 for a, b in zip(lms[i], lm_t))
    ]
    kept = []
    for entry in pairs:
        l, _deg, _key, i, j = entry
        if (
            not mono_divides(lm_t, l)
            or mono_lcm(lms[i], lm_t) == l
            or mono_lcm(lms[j], lm_t) == l
        ):
            kept.append(entry)
    for l, i in E:
        kept.append((l, sum(l), keyf(l), i, t))
    return kept


def _autoreduce(
    polys: list[_KPoly], keyf, budget: Budget | None, stats: BuchbergerStats
) -> list[_KPoly]:
    polys = sorted(polys, key=lambda p: keyf(p.lm))
    kept: list[_KPoly] = []
    for p in polys:
        if not any(mono_divides(q.lm, p.lm) for q in kept):
            kept.append(p)
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1 :]
            r = _reduce_full(dict(kept[i].terms), others, keyf, budget, stats)
            kp = _knorm(r, keyf, budget)
            assert kp is not None, "minimal basis element reduced to zero"
            if kp.terms != kept[i].terms:
                kept[i] = kp
                changed = True
    return kept


def buchberger(
    gens: list[MultiPoly] | tuple[MultiPoly, ...],
    order: MonomialOrder = GREVLEX,
    *,
    budget: Budget | None = None,
    certificates: bool = False,
) -> GroebnerBasis:
    """Reduced Groebner basis of (gens); deterministic for fixed input and order."""
    gens = tuple(gens)
    if not gens:
        raise ValueError("generator list must be nonempty")
    nvars = gens[0].nvars
    for g in gens:
        if g.nvars != nvars:
            raise ValueError("ambient mismatch among generators")
    if certificates:
        return _buchberger_tracked(gens, order, budget)
    keyf = order.key
    stats = BuchbergerStats()
    G: list[_KPoly] = []
    lms: list[Monomial] = []
    pairs: list = []
    for g in gens:
        if g.is_zero:
            continue
        r = _reduce_full(_to_int_terms(g), G, keyf, budget, stats)
        kp = _knorm(r, keyf, budget)
        if kp is None:
            continue
        G.append(kp)
        lms.append(kp.lm)
        pairs = _update_pairs(lms, pairs, len(G) - 1, keyf)
    while pairs:
        best = min(range(len(pairs)), key=lambda k: pairs[k][1:])
        l, _deg, _key, i, j = pairs.pop(best)
        stats.s_pairs += 1
        s = _spoly_terms(G[i], G[j])
        r = _reduce_full(s, G, keyf, budget, stats)
        kp = _knorm(r, keyf, budget)
        if kp is not None:
            G.append(kp)
            lms.append(kp.lm)
            pairs = _update_pairs(lms, pairs, len(G) - 1, keyf)
    if not G:
        return GroebnerBasis(gens, (), order, stats)
    reduced = _autoreduce(G, keyf, budget, stats)
    basis = tuple(
        MultiPoly(nvars, {m: Fraction(c, p.lc) for m, c in p.terms.items()})
        for p in reduced
    )
    return GroebnerBasis(gens, basis, order, stats)


# --------------------------------------------------------------------------
# exact-arithmetic operations on a computed basis
# --------------------------------------------------------------------------


def normal_form(p: MultiPoly, gb: GroebnerBasis) -> MultiPoly:
    """Remainder of p modulo the reduced basis: no monomial of the result is
    divisible by any basis leading monomial, and p - result lies in the ideal."""
    if p.nvars != gb.nvars:
        raise ValueError("ambient mismatch")
    keyf = gb.order.key
    reducers = [
        (g.leading_monomial(keyf), g.terms[g.leading_monomial(keyf)], g)
        for g in gb.basis
    ]
    work = dict(p.terms)
    rem: dict[Monomial, Fraction] = {}
    while work:
        mono = max(work, key=keyf)
        c = work.pop(mono)
        if not c:
            continue
        for lm, lc, g in reducers:
            if mono_divides(lm, mono):
                t = c / lc
                shift = mono_div(mono, lm)
                for m2, c2 in g.terms.items():
                    if m2 == lm:
                        continue
                    mm = mono_mul(shift, m2)
                    acc = work.get(mm, Fraction(0)) - t * c2
                    if acc:
                        work[mm] = acc
                    else:
                        work.pop(mm, None)
                break
        else:
            rem[mono] = c
    return MultiPoly(p.nvars, rem)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: MonomialOrder = GREVLEX) -> MultiPoly:
    """S-polynomial over Q (used by the post-hoc correctness checks)."""
    f._check_same_ring(g)
    keyf = order.key
    lmf, lmg = f.leading_monomial(keyf), g.leading_monomial(keyf)
    l = mono_lcm(lmf, lmg)
    tf = MultiPoly(f.nvars, {mono_div(l, lmf): 1 / f.terms[lmf]})
    tg = MultiPoly(g.nvars, {mono_div(l, lmg): 1 / g.terms[lmg]})
    return tf * f - tg * g


def ideal_membership(
    p: MultiPoly,
    gens: list[MultiPoly] | tuple[MultiPoly, ...],
    order: MonomialOrder = GREVLEX,
    *,
    budget: Budget | None = None,
    certificates: bool = False,
    basis: GroebnerBasis | None = None,
) -> MembershipCertificate:
    """Decide p in (gens); with certificates, return cofactors over gens."""
    gb = basis if basis is not None else buchberger(
        gens, order, budget=budget, certificates=certificates
    )
    if certificates and gb.cofactors is None:
        gb = buchberger(gens, order, budget=budget, certificates=True)
    r = normal_form(p, gb)
    if not r.is_zero:
        return MembershipCertificate(False)
    if not certificates:
        return MembershipCertificate(True)
    _, quotients = _divide_with_quotients(p, gb)
    n = len(gb.generators_in)
    nvars = p.nvars
    hs = [MultiPoly.zero(nvars) for _ in range(n)]
    for q, cof_row in zip(quotients, gb.cofactors):
        if q.is_zero:
            continue
        for k in range(n):
            hs[k] = hs[k] + q * cof_row[k]
    check = MultiPoly.zero(nvars)
    for h, g in zip(hs, gb.generators_in):
        check = check + h * g
    if check != p:
        raise AssertionError("cofactor witness failed exact re-verification")
    return MembershipCertificate(True, cofactors=tuple(hs))


def radical_membership(
    p: MultiPoly,
    gens: list[MultiPoly] | tuple[MultiPoly, ...],
    order: MonomialOrder = GREVLEX,
    *,
    budget: Budget | None = None,
) -> MembershipCertificate:
    """Rabinowitsch test: p in sqrt((gens)) iff 1 in (gens, 1 - t*p)."""
    gens = tuple(g for g in gens)
    if p.is_zero:
        return MembershipCertificate(True)
    if not gens or all(g.is_zero for g in gens):
        # radical of the zero ideal
        return MembershipCertificate(p.is_zero)
    nvars = p.nvars
    ext_order = order.extended()
    lifted = [g.extend(1) for g in gens]
    t = MultiPoly.variable(nvars + 1, nvars)
    rab = MultiPoly.const(nvars + 1, 1) - t * p.extend(1)
    gb = buchberger(lifted + [rab], ext_order, budget=budget)
    return MembershipCertificate(gb.is_unit_ideal())


def radical_exponent(
    p: MultiPoly,
    gens: list[MultiPoly] | tuple[MultiPoly, ...],
    order: MonomialOrder = GREVLEX,
    *,
    n_max: int = 64,
    budget: Budget | None = None,
    basis: GroebnerBasis | None = None,
) -> int | None:
    """Smallest N in 1, 2, 4, ... <= n_max with p^N in (gens), else None."""
    gb = basis if basis is not None else buchberger(gens, order, budget=budget)
    n = 1
    while n <= n_max:
        if normal_form(p**n, gb).is_zero:
            return n
        n *= 2
    return None


def krull_dimension(gb: GroebnerBasis) -> int:
    """Dimension of the quotient ring: the largest subset S of variables such
    that no basis leading monomial involves only variables from S (exhaustive
    subset search; fine at desk scale)."""
    if not gb.basis:
        raise ValueError("basis must be nonempty")
    if gb.is_unit_ideal():
        raise ValueError("unit ideal: quotient ring is zero, dimension undefined")
    nvars = gb.nvars
    supports = []
    for lm in gb.leading_monomials():
        supports.append(frozenset(i for i, e in enumerate(lm) if e))
    best = 0
    for mask in range(1 << nvars):
        s = {i for i in range(nvars) if mask >> i & 1}
        if len(s) <= best:
            continue
        if all(not sup <= s for sup in supports):
            best = len(s)
    return best


# --------------------------------------------------------------------------
# tracked (certificate) path: exact Fraction arithmetic with cofactors
# --------------------------------------------------------------------------


def _tracked_reduce(
    p: MultiPoly,
    cof: list[MultiPoly],
    others: list[tuple[Monomial, Fraction, MultiPoly, list[MultiPoly]]],
    keyf,
    budget: Budget | None,
    stats: BuchbergerStats,
) -> tuple[MultiPoly, list[MultiPoly]]:
    nvars = p.nvars
    work = dict(p.terms)
    rem: dict[Monomial, Fraction] = {}
    cof = list(cof)
    while work:
        mono = max(work, key=keyf)
        c = work.pop(mono)
        if not c:
            continue
        for lm, lc, g, gcof in others:
            if mono_divides(lm, mono):
                stats.reduction_steps += 1
                if budget is not None:
                    budget.charge(len(g.terms))
                t_coeff = c / lc
                shift = mono_div(mono, lm)
                for m2, c2 in g.terms.items():
                    if m2 == lm:
                        continue
                    mm = mono_mul(shift, m2)
                    acc = work.get(mm, Fraction(0)) - t_coeff * c2
                    if acc:
                        work[mm] = acc
                    else:
                        work.pop(mm, None)
                t_poly = MultiPoly(nvars, {shift: t_coeff})
                for k in range(len(cof)):
                    if not gcof[k].is_zero:
                        cof[k] = cof[k] - t_poly * gcof[k]
                break
        else:
            rem[mono] = c
    return MultiPoly(nvars, rem), cof


def _buchberger_tracked(
    gens: tuple[MultiPoly, ...], order: MonomialOrder, budget: Budget | None
) -> GroebnerBasis:
    keyf = order.key
    nvars = gens[0].nvars
    n = len(gens)
    stats = BuchbergerStats()
    zero = MultiPoly.zero(nvars)

    def unit(k):
        return [MultiPoly.const(nvars, 1) if j == k else zero for j in range(n)]

    elems: list[tuple[MultiPoly, list[MultiPoly]]] = []
    lms: list[Monomial] = []
    pairs: list = []

    def entry(e):
        poly, cof = e
        lm = poly.leading_monomial(keyf)
        return (lm, poly.terms[lm], poly, cof)

    for k, g in enumerate(gens):
        if g.is_zero:
            continue
        p, cof = _tracked_reduce(
            g, unit(k), [entry(e) for e in elems], keyf, budget, stats
        )
        if p.is_zero:
            continue
        elems.append((p, cof))
        lms.append(p.leading_monomial(keyf))
        pairs = _update_pairs(lms, pairs, len(elems) - 1, keyf)
    while pairs:
        best = min(range(len(pairs)), key=lambda k: pairs[k][1:])
        l, _deg, _key, i, j = pairs.pop(best)
        stats.s_pairs += 1
        fi, ci = elems[i]
        fj, cj = elems[j]
        lmi, lmj = lms[i], lms[j]
        ti = MultiPoly(nvars, {mono_div(l, lmi): 1 / fi.terms[lmi]})
        tj = MultiPoly(nvars, {mono_div(l, lmj): 1 / fj.terms[lmj]})
        s = ti * fi - tj * fj
        scof = [ti * a - tj * b for a, b in zip(ci, cj)]
        r, rcof = _tracked_reduce(s, scof, [entry(e) for e in elems], keyf, budget, stats)
        if not r.is_zero:
            elems.append((r, rcof))
            lms.append(r.leading_monomial(keyf))
            pairs = _update_pairs(lms, pairs, len(elems) - 1, keyf)
    if not elems:
        return GroebnerBasis(gens, (), order, stats, cofactors=())
    # minimal basis, then tail-reduce with tracking
    elems.sort(key=lambda e: keyf(e[0].leading_monomial(keyf)))
    kept: list[tuple[MultiPoly, list[MultiPoly]]] = []
    for e in elems:
        lm = e[0].leading_monomial(keyf)
        if not any(
            mono_divides(q[0].leading_monomial(keyf), lm) for q in kept
        ):
            kept.append(e)
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = [entry(kept[j]) for j in range(len(kept)) if j != i]
            r, rcof = _tracked_reduce(kept[i][0], kept[i][1], others, keyf, budget, stats)
            if r != kept[i][0]:
                kept[i] = (r, rcof)
                changed = True
    # monic normalization
    basis = []
    cofactors = []
    for p, cof in kept:
        lc = p.terms[p.leading_monomial(keyf)]
        inv = 1 / lc
        basis.append(p * inv)
        cofactors.append(tuple(c * inv for c in cof))
    for b, row in zip(basis, cofactors):
        acc = MultiPoly.zero(nvars)
        for h, g in zip(row, gens):
            acc = acc + h * g
        if acc != b:
            raise AssertionError("tracked basis cofactors failed re-verification")
    return GroebnerBasis(gens, tuple(basis), order, stats, cofactors=tuple(cofactors))


def _divide_with_quotients(
    p: MultiPoly, gb: GroebnerBasis
) -> tuple[MultiPoly, list[MultiPoly]]:
    """Division remainder plus per-basis-element quotients over Q."""
    keyf = gb.order.key
    nvars = p.nvars
    reducers = [
        (g.leading_monomial(keyf), g.terms[g.leading_monomial(keyf)], g)
        for g in gb.basis
    ]
    work = dict(p.terms)
    rem: dict[Monomial, Fraction] = {}
    quotients = [MultiPoly.zero(nvars) for _ in gb.basis]
    while work:
        mono = max(work, key=keyf)
        c = work.pop(mono)
        if not c:
            continue
        for idx, (lm, lc, g) in enumerate(reducers):
            if mono_divides(lm, mono):
                t_coeff = c / lc
                shift = mono_div(mono, lm)
                quotients[idx] = quotients[idx] + MultiPoly(nvars, {shift: t_coeff})
                for m2, c2 in g.terms.items():
                    if m2 == lm:
                        continue
                    mm = mono_mul(shift, m2)
                    acc = work.get(mm, Fraction(0)) - t_coeff * c2
                    if acc:
                        work[mm] = acc
                    else:
                        work.pop(mm, None)
                break
        else:
            rem[mono] = c
    return MultiPoly(nvars, rem), quotients
