"""Multiplication of large Laurent polynomials through FLINT's ``fmpz_mpoly``.

Each factor is shifted to non-negative exponents (one variable per lattice
point in either support), multiplied in FLINT, and shifted back.  The result is
exactly the product computed term by term, only faster.
"""

from __future__ import annotations

import flint

__all__ = ["context", "laurent_product", "sums_of_products_equal"]


def context(nvars: int) -> "flint.fmpz_mpoly_ctx":
    return flint.fmpz_mpoly_ctx.get(("y", max(nvars, 1)), "lex")


def _encode(terms: dict, index: dict, ctx) -> tuple["flint.fmpz_mpoly", list[int]]:
    n = len(index)
    low = [0] * n
    rows = []
    for m, c in terms.items():
        vec = [0] * n
        for p, e in m._exps.items():
            j = index[p]
            vec[j] = e
            if e < low[j]:
                low[j] = e
        rows.append((vec, c))
    data = {tuple(v - s for v, s in zip(vec, low)): c for vec, c in rows}
    return ctx.from_dict(data), low


def laurent_product(a_terms: dict, b_terms: dict, rank: int, monomial_cls) -> dict:
    """Product of two ``{LoopMonomial: coeff}`` maps."""
    points = sorted({p for m in a_terms for p in m._exps} | {p for m in b_terms for p in m._exps})
    index = {p: j for j, p in enumerate(points)}
    ctx = context(len(points))
    pa, la = _encode(a_terms, index, ctx)
    pb, lb = _encode(b_terms, index, ctx)
    shift = [x + y for x, y in zip(la, lb)]
    out = {}
    raw = monomial_cls._raw
    for vec, c in (pa * pb).to_dict().items():
        exps = {}
        for j, v in enumerate(vec):
            e = int(v) + shift[j]
            if e:
                exps[points[j]] = e
        out[raw(rank, exps)] = int(c)
    return out


def sums_of_products_equal(lhs: list[tuple], rhs: list[tuple]) -> bool:
    """Decide ``sum_t prod(lhs[t]) == sum_t prod(rhs[t])`` for LoopPolynomial factors.

    Every factor is encoded with one common exponent offset, and products are
    padded to the same number of factors, so all terms share a single shift.
    """
    groups = list(lhs) + list(rhs)
    width = max((len(g) for g in groups), default=0)
    polys = [f for g in groups for f in g]
    points = sorted({p for f in polys for m in f._terms for p in m._exps})
    index = {p: j for j, p in enumerate(points)}
    n = len(points)
    low = [0] * n
    for f in polys:
        for m in f._terms:
            for p, e in m._exps.items():
                j = index[p]
                if e < low[j]:
                    low[j] = e
    ctx = context(n)
    one = ctx.from_dict({tuple(-x for x in low): 1})
    cache: dict[int, object] = {}

    def enc(f):
        key = id(f)
        if key not in cache:
            data = {}
            for m, c in f._terms.items():
                vec = [-x for x in low]
                for p, e in m._exps.items():
                    vec[index[p]] += e
                data[tuple(vec)] = c
            cache[key] = ctx.from_dict(data)
        return cache[key]

    def side(gs):
        total = ctx.from_dict({})
        for g in gs:
            term = ctx.from_dict({(0,) * n: 1})
            for f in g:
                term = term * enc(f)
            for _ in range(width - len(g)):
                term = term * one
            total = total + term
        return total

    return side(lhs) == side(rhs)
