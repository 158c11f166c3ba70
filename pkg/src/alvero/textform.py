"""Text format for exact polynomials.

Grammar: a sum of terms, where a term is a product of factors joined by `*`;
a factor is an integer, a rational `num/den`, or a variable `x`, `a1`..`a9`
optionally raised with `^`.  Whitespace is insignificant.  Examples:

    3*x^2 + 2*a1*x + a2
    -a1^2
    1/2*a1*a2 - 3

The printer emits a canonical form (x-degree descending, then grevlex
descending on the a-monomial) and ``parse(print(p)) == p`` exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polycore import Monomial, MultiPoly, UniPoly, grevlex_key

_TOKEN = re.compile(
    r"\s*(?:(?P<rat>\d+(?:\s*/\s*\d+)?)|(?P<var>x|a[1-9])|(?P<op>[+\-*^]))"
)


class PolyParseError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise PolyParseError(f"unexpected character at position {pos}: {text[pos:]!r}")
        if m.group("rat") is not None:
            tokens.append(("rat", m.group("rat").replace(" ", "")))
        elif m.group("var") is not None:
            tokens.append(("var", m.group("var")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


def _parse_terms(text: str, nvars: int) -> dict[tuple[int, Monomial], Fraction]:
    """Parse into a map (x-degree, a-monomial) -> coefficient."""
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial text")
    terms: dict[tuple[int, Monomial], Fraction] = {}
    i = 0
    n = len(tokens)

    def take_factor(i):
        # returns (kind, payload, next_i); payload is Fraction or (var, exp)
        kind, value = tokens[i]
        if kind == "rat":
            return "coeff", Fraction(value), i + 1
        if kind == "var":
            exp = 1
            if i + 1 < n and tokens[i + 1] == ("op", "^"):
                if i + 2 >= n or tokens[i + 2][0] != "rat":
                    raise PolyParseError("expected integer exponent after '^'")
                e = Fraction(tokens[i + 2][1])
                if e.denominator != 1 or e < 1:
                    raise PolyParseError(f"invalid exponent {tokens[i + 2][1]}")
                exp = int(e)
                i += 2
            return "power", (value, exp), i + 1
        raise PolyParseError(f"expected a factor, got {value!r}")

    while i < n:
        sign = 1
        while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise PolyParseError("dangling sign at end of input")
        coeff = Fraction(sign)
        xdeg = 0
        exps = [0] * nvars
        while True:
            kind, payload, i = take_factor(i)
            if kind == "coeff":
                coeff *= payload
            else:
                var, exp = payload
                if var == "x":
                    xdeg += exp
                else:
                    idx = int(var[1:]) - 1
                    if idx >= nvars:
                        raise PolyParseError(
                            f"variable {var} out of range for {nvars} ambient variables"
                        )
                    exps[idx] += exp
            if i < n and tokens[i] == ("op", "*"):
                i += 1
                if i >= n:
                    raise PolyParseError("dangling '*' at end of input")
                continue
            break
        key = (xdeg, tuple(exps))
        acc = terms.get(key, Fraction(0)) + coeff
        if acc:
            terms[key] = acc
        else:
            terms.pop(key, None)
        if i < n and not (tokens[i][0] == "op" and tokens[i][1] in "+-"):
            raise PolyParseError(f"expected '+' or '-' between terms, got {tokens[i][1]!r}")
    return terms


def parse_multipoly(text: str, nvars: int) -> MultiPoly:
    """Parse a polynomial in a1..a{nvars}; rejects any use of x."""
    terms = _parse_terms(text, nvars)
    out: dict[Monomial, Fraction] = {}
    for (xdeg, mono), coeff in terms.items():
        if xdeg:
            raise PolyParseError("variable x not allowed in a coefficient polynomial")
        out[mono] = coeff
    return MultiPoly(nvars, out)


def parse_unipoly(text: str, nvars: int) -> UniPoly:
    terms = _parse_terms(text, nvars)
    if not terms:
        return UniPoly(nvars, [])
    top = max(xdeg for xdeg, _ in terms)
    per_degree: list[dict[Monomial, Fraction]] = [{} for _ in range(top + 1)]
    for (xdeg, mono), coeff in terms.items():
        per_degree[xdeg][mono] = coeff
    return UniPoly(nvars, [MultiPoly(nvars, t) for t in per_degree])


def _format_monomial_part(xdeg: int, mono: Monomial) -> list[str]:
    parts = []
    for j, e in enumerate(mono):
        if e == 1:
            parts.append(f"a{j + 1}")
        elif e > 1:
            parts.append(f"a{j + 1}^{e}")
    if xdeg == 1:
        parts.append("x")
    elif xdeg > 1:
        parts.append(f"x^{xdeg}")
    return parts


def _format_flat(terms: list[tuple[int, Monomial, Fraction]]) -> str:
    if not terms:
        return "0"
    chunks: list[str] = []
    for k, (xdeg, mono, coeff) in enumerate(terms):
        neg = coeff < 0
        mag = -coeff if neg else coeff
        factors = _format_monomial_part(xdeg, mono)
        if not factors or mag != 1:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if k == 0:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"{' - ' if neg else ' + '}{body}")
    return "".join(chunks)


def format_multipoly(p: MultiPoly) -> str:
    if p.nvars > 9:
        raise ValueError("text format supports at most 9 ambient variables")
    terms = [(0, mono, coeff) for mono, coeff in p.sorted_terms()]
    return _format_flat(terms)


def format_unipoly(f: UniPoly) -> str:
    """Flat expanded form: x-degree descending, grevlex descending within."""
    if f.nvars > 9:
        raise ValueError("text format supports at most 9 ambient variables")
    terms: list[tuple[int, Monomial, Fraction]] = []
    for xdeg in range(f.degree, -1, -1):
        for mono, coeff in f.coefficient(xdeg).sorted_terms():
            terms.append((xdeg, mono, coeff))
    return _format_flat(terms)
