"""Report-level checks: conjecture verification, main-theorem confirmation,
and regular-sequence prefix dimensions, all at a given small degree.

Each function returns a JSON-ready dict with the common fields
{degree, check, verdict, exponents, timings, budget_used}; heavy Groebner
runs are routed through the optional disk cache.
"""

from __future__ import annotations

import time
from itertools import permutations

from .budget import Budget
from .cache import BasisCache
from .groebner import (
    GREVLEX,
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    radical_exponent,
    radical_membership,
    krull_dimension,
)
from .polycore import MultiPoly
from .resultants import casas_resultants


def cached_buchberger(
    gens,
    order: MonomialOrder,
    *,
    budget: Budget | None = None,
    cache: BasisCache | None = None,
) -> GroebnerBasis:
    gens = tuple(gens)
    if cache is not None:
        hit = cache.get(gens, order)
        if hit is not None:
            return hit
    gb = buchberger(gens, order, budget=budget)
    if cache is not None:
        cache.put(gb)
    return gb


def _pure_power_variables(gb: GroebnerBasis) -> dict[int, int | None]:
    """For each variable index, the exponent of a basis leading monomial that
    is a pure power of it, or None if no such element exists."""
    out: dict[int, int | None] = {j: None for j in range(gb.nvars)}
    for lm in gb.leading_monomials():
        support = [j for j, e in enumerate(lm) if e]
        if len(support) == 1:
            j = support[0]
            e = lm[j]
            if out[j] is None or e < out[j]:
                out[j] = e
    return out


def verify_conjecture(
    d: int,
    order: MonomialOrder = GREVLEX,
    *,
    budget: Budget | None = None,
    cache: BasisCache | None = None,
    exponent_bound: int = 64,
) -> dict:
    """Check, at degree d, that every a_j lies in the radical of (R_1..R_{d-1}).

    Two verdicts are reported separately: the rigorous per-variable
    Rabinowitsch test, and the leading-monomial condition that the reduced
    basis contains, for every variable, an element whose leading monomial is
    a pure power of it.  The bounded search for explicit exponents N with
    a_j^N in the ideal is best-effort; a positive radical verdict whose
    exponent exceeds the bound is reported as capped, not as a failure.
    """
    if d < 2:
        raise ValueError("degree must be at least 2")
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    family = casas_resultants(d, budget)
    timings["resultants_s"] = time.perf_counter() - t0

    gens = list(family.members)
    t0 = time.perf_counter()
    if budget is not None:
        budget.enter(f"groebner basis of the degree-{d} family")
    gb = cached_buchberger(gens, order, budget=budget, cache=cache)
    timings["basis_s"] = time.perf_counter() - t0

    pure = _pure_power_variables(gb)
    leading_ok = all(e is not None for e in pure.values())

    per_variable = []
    radical_ok = True
    t0 = time.perf_counter()
    for j in range(d - 1):
        aj = MultiPoly.variable(d - 1, j)
        if budget is not None:
            budget.enter(f"radical membership of a{j + 1} at degree {d}")
        member = radical_membership(aj, gens, order, budget=budget).verdict
        exponent = None
        if member:
            exponent = radical_exponent(
                aj, gens, order, n_max=exponent_bound, budget=budget, basis=gb
            )
        radical_ok = radical_ok and member
        per_variable.append(
            {
                "variable": f"a{j + 1}",
                "in_radical": member,
                "exponent": exponent,
                "exponent_capped": bool(member and exponent is None),
                "pure_power_leading_exponent": pure[j],
            }
        )
    timings["radical_s"] = time.perf_counter() - t0

    return {
        "degree": d,
        "check": "conjecture",
        "order": order.tag,
        "verdict": bool(radical_ok and leading_ok),
        "radical_verdict": bool(radical_ok),
        "leading_power_verdict": bool(leading_ok),
        "exponents": [row["exponent"] for row in per_variable],
        "per_variable": per_variable,
        "basis_size": len(gb.basis),
        "stats": {
            "s_pairs": gb.stats.s_pairs,
            "reduction_steps": gb.stats.reduction_steps,
        },
        "timings": timings,
        "budget_used": budget.used if budget is not None else None,
    }


def theorem_index_set(d: int) -> list[int]:
    """{d-3, d-2, d-1} intersected with the valid range 1..d-1."""
    return sorted({i for i in (d - 3, d - 2, d - 1) if 1 <= i <= d - 1})


def verify_main_theorem(
    d: int,
    order: MonomialOrder = GREVLEX,
    *,
    budget: Budget | None = None,
    cache: BasisCache | None = None,
    jobs: int = 1,
) -> dict:
    """Confirm R_i not in sqrt((R_j : j != i)) for each i in {d-3, d-2, d-1}."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    family = casas_resultants(d, budget)
    timings["resultants_s"] = time.perf_counter() - t0

    indices = theorem_index_set(d)
    per_index = []
    t0 = time.perf_counter()
    if jobs > 1 and len(indices) > 1:
        from concurrent.futures import ProcessPoolExecutor

        args = [(d, i) for i in indices]
        with ProcessPoolExecutor(max_workers=min(jobs, len(indices))) as pool:
            members = list(pool.map(_theorem_single, args))
        results = dict(zip(indices, members))
    else:
        results = {}
        for i in indices:
            others = [family.member(k) for k in range(1, d) if k != i]
            if budget is not None:
                budget.enter(f"radical membership of R_{i} at degree {d}")
            results[i] = radical_membership(
                family.member(i), others, order, budget=budget
            ).verdict
    timings["radical_s"] = time.perf_counter() - t0

    verdict = True
    for i in indices:
        member = results[i]
        per_index.append(
            {"index": i, "in_radical_of_others": member, "ok": not member}
        )
        verdict = verdict and not member

    return {
        "degree": d,
        "check": "main-theorem",
        "order": order.tag,
        "indices": indices,
        "verdict": bool(verdict),
        "per_index": per_index,
        "timings": timings,
        "budget_used": budget.used if budget is not None else None,
    }


def _theorem_single(arg: tuple[int, int]) -> bool:
    d, i = arg
    family = casas_resultants(d)
    others = [family.member(k) for k in range(1, d) if k != i]
    return radical_membership(family.member(i), others).verdict


def check_regular_sequence(
    d: int,
    permutation: tuple[int, ...] | None = None,
    order: MonomialOrder = GREVLEX,
    *,
    budget: Budget | None = None,
    cache: BasisCache | None = None,
) -> dict:
    """Quotient dimensions along prefixes of the (permuted) resultant family.

    A length-k prefix of a regular sequence in d-1 variables leaves quotient
    dimension d-1-k; the report flags the first prefix that misses it.
    When permutation is None, the identity and the reversed numbering are
    both checked (the verdict should not depend on the numbering).
    """
    if d < 2:
        raise ValueError("degree must be at least 2")
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    family = casas_resultants(d, budget)
    timings["resultants_s"] = time.perf_counter() - t0

    if permutation is not None:
        perms = [tuple(permutation)]
    else:
        identity = tuple(range(1, d))
        perms = [identity]
        if d > 2:
            perms.append(tuple(reversed(identity)))
    for perm in perms:
        if sorted(perm) != list(range(1, d)):
            raise ValueError(f"permutation {perm} must reorder 1..{d - 1}")

    runs = []
    verdict = True
    t0 = time.perf_counter()
    for perm in perms:
        dims = []
        ok = True
        first_failure = None
        for k in range(1, d):
            prefix = [family.member(i) for i in perm[:k]]
            if budget is not None:
                budget.enter(
                    f"prefix basis ({','.join(f'R{i}' for i in perm[:k])}) at degree {d}"
                )
            gb = cached_buchberger(prefix, order, budget=budget, cache=cache)
            dim = krull_dimension(gb)
            dims.append(dim)
            if dim != d - 1 - k and first_failure is None:
                first_failure = k
                ok = False
        runs.append(
            {
                "permutation": list(perm),
                "dimensions": dims,
                "expected": [d - 1 - k for k in range(1, d)],
                "ok": ok,
                "first_failure_prefix": first_failure,
            }
        )
        verdict = verdict and ok
    timings["prefixes_s"] = time.perf_counter() - t0

    return {
        "degree": d,
        "check": "regular-sequence",
        "order": order.tag,
        "verdict": bool(verdict),
        "runs": runs,
        "timings": timings,
        "budget_used": budget.used if budget is not None else None,
    }
