"""Exact Laurent polynomials in ``q`` and truncated power series over them.

Everything here is integer arithmetic: a :class:`QLaurent` is a finitely
supported map ``exponent -> coefficient`` with zero coefficients stripped, so
two values are equal exactly when their term dictionaries are equal.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "QLaurent",
    "TruncatedSeries",
    "q_number",
    "q_factorial",
    "q_binomial",
    "series_mul",
    "series_equal",
    "Q",
    "ONE",
    "ZERO",
]

IntLike = Union[int, "QLaurent"]


class QLaurent:
    """An element of ``Z[q, q^-1]``.

    >>> q = QLaurent.monomial(1)
    >>> str((q + q**-1) ** 2)
    'q^2 + 2 + q^-2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "QLaurent":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QLaurent":
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def coerce(cls, value: IntLike) -> "QLaurent":
        if isinstance(value, QLaurent):
            return value
        if isinstance(value, int):
            return cls._raw({0: value} if value else {})
        raise TypeError(f"cannot coerce {type(value).__name__} to QLaurent")

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero has no valuation")
        return min(self._terms)

    def is_unit(self) -> bool:
        """True for ``+-q^e``, the units of ``Z[q, q^-1]``."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def at_one(self) -> int:
        """Specialise ``q = 1``."""
        return sum(self._terms.values())

    def bar(self) -> "QLaurent":
        """The involution ``q -> q^-1``."""
        return QLaurent._raw({-e: c for e, c in self._terms.items()})

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: IntLike) -> "QLaurent":
        try:
            other = QLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return QLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: IntLike) -> "QLaurent":
        try:
            other = QLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: IntLike) -> "QLaurent":
        return QLaurent.coerce(other) - self

    def __mul__(self, other: IntLike) -> "QLaurent":
        try:
            other = QLaurent.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QLaurent._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QLaurent":
        if n < 0:
            if not self.is_unit():
                raise ValueError("only units can be raised to negative powers")
            (e, c), = self._terms.items()
            return QLaurent._raw({e * n: c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "QLaurent":
        """Multiply by ``q^k``."""
        return QLaurent._raw({e + k: c for e, c in self._terms.items()})

    def exact_unit_div(self, unit: "QLaurent") -> "QLaurent":
        """Divide by a unit ``+-q^e``."""
        if not unit.is_unit():
            raise ZeroDivisionError("divisor is not a unit of Z[q, q^-1]")
        (e, c), = unit._terms.items()
        return QLaurent._raw({k - e: v * c for k, v in self._terms.items()})

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QLaurent.coerce(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"QLaurent({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self.items():
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            elif a == 1:
                body = f"q^{e}"
            else:
                body = f"{a}*q^{e}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self.items()]


ZERO = QLaurent()
ONE = QLaurent.monomial(0)
Q = QLaurent.monomial(1)


def q_number(n: int) -> QLaurent:
    """``[n]_q = (q^n - q^-n) / (q - q^-1)``; ``[-n]_q = -[n]_q``."""
    if n < 0:
        return -q_number(-n)
    return QLaurent._raw({n - 1 - 2 * j: 1 for j in range(n)})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QLaurent:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_number(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QLaurent:
    """Balanced Gaussian binomial via ``[n,k] = q^-k [n-1,k] + q^(n-k) [n-1,k-1]``."""
    if k < 0 or n < k:
        raise ValueError(f"q_binomial needs n >= k >= 0, got n={n}, k={k}")
    if k == 0 or k == n:
        return ONE
    return q_binomial(n - 1, k).shift(-k) + q_binomial(n - 1, k - 1).shift(n - k)


class TruncatedSeries:
    """Power series ``sum_j c_j u^j`` in ``Z[q, q^-1][[u]]`` modulo ``u^(order+1)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[IntLike], order: int | None = None):
        cs = [QLaurent.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: tuple[QLaurent, ...] = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([ONE], order)

    @classmethod
    def linear(cls, constant: IntLike, slope: IntLike, order: int) -> "TruncatedSeries":
        """``constant + slope * u``."""
        return cls([constant, slope], order)

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"truncation order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __mul__(self, other: Union["TruncatedSeries", IntLike]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            c = QLaurent.coerce(other)
            return TruncatedSeries([a * c for a in self.coeffs], self.order)
        self._check(other)
        n = self.order
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be ``+-q^e``."""
        c0 = self.coeffs[0]
        if not c0.is_unit():
            raise ZeroDivisionError("constant term is not a unit of Z[q, q^-1]")
        inv: list[QLaurent] = [ONE.exact_unit_div(c0)]
        for n in range(1, self.order + 1):
            acc = ZERO
            for j in range(1, n + 1):
                acc = acc + self.coeffs[j] * inv[n - j]
            inv.append((-acc).exact_unit_div(c0))
        return TruncatedSeries(inv, self.order)

    def substitute_scale(self, factor: QLaurent) -> "TruncatedSeries":
        """The series in ``factor * u``: ``c_j -> c_j * factor^j``."""
        out = []
        power = ONE
        for c in self.coeffs:
            out.append(c * power)
            power = power * factor
        return TruncatedSeries(out, self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*u^{j}" for j, c in enumerate(self.coeffs) if c)
        return f"TruncatedSeries({body or '0'}; O(u^{self.order + 1}))"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_equal(a: TruncatedSeries, b: TruncatedSeries) -> bool:
    a._check(b)
    return a.coeffs == b.coeffs
