"""Loop-weight lattice of type ``A_l`` restricted to spectral parameters ``q^k``.

``Y[i,k]`` stands for the fundamental loop-weight ``1 - q^k u_i``.  Monomials in
the ``Y[i,k]^{+-1}`` form a free abelian group; integer combinations of
monomials form the ring that houses q-characters.

Points ``(i, k)`` are split into two parity classes by ``(i - k) mod 2``.
Class 0 is the lattice used by the cluster construction; every operation here
works verbatim in either class, since the shift ``k -> k + 1`` is an
automorphism of the whole theory.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

__all__ = [
    "LatticePoint",
    "LoopMonomial",
    "LoopPolynomial",
    "parity_class",
    "in_X",
    "in_W",
    "affine_root",
    "wt",
    "is_dominant",
    "is_antidominant",
    "factor_into_roots",
    "mul",
    "pow",
    "poly_mul",
    "poly_eval_at_q1",
    "simple_root_weight",
    "parse_monomial",
    "parse_polynomial",
]


class LatticePoint(NamedTuple):
    i: int
    k: int


def parity_class(point: Sequence[int]) -> int:
    return (point[0] - point[1]) % 2


def in_X(point: Sequence[int], rank: int | None = None) -> bool:
    """Membership in the reference set ``{(i, k) : i - k even}``."""
    i, k = point
    if rank is not None and not 1 <= i <= rank:
        return False
    return (i - k) % 2 == 0


def in_W(point: Sequence[int], rank: int | None = None) -> bool:
    i, k = point
    return in_X((i, k - 1), rank)


def _check_node(i: int, rank: int) -> None:
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if not 1 <= i <= rank:
        raise ValueError(f"node {i} out of range 1..{rank}")

# products with more term pairs than this go through FLINT
_FLINT_THRESHOLD = 4000


class LoopMonomial:
    """A Laurent monomial ``prod Y[i,k]^e`` of fixed rank.

    Values are immutable and hashable; ``*``, ``/`` and ``**`` are the group
    operations.
    """

    __slots__ = ("rank", "_exps", "_key", "_hash")

    def __init__(self, exponents: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = (),
                 rank: int = 1):
        if rank < 1:
            raise ValueError(f"rank must be >= 1, got {rank}")
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[LatticePoint, int] = {}
        for (i, k), e in items:
            if not 1 <= i <= rank:
                raise ValueError(f"node {i} out of range 1..{rank}")
            p = LatticePoint(int(i), int(k))
            acc[p] = acc.get(p, 0) + int(e)
        self._set(rank, {p: e for p, e in acc.items() if e})

    def _set(self, rank: int, exps: dict) -> None:
        self.rank = rank
        self._exps = exps
        self._key = tuple(sorted(exps.items()))
        self._hash = hash((rank, self._key))

    @classmethod
    def _raw(cls, rank: int, exps: dict) -> "LoopMonomial":
        obj = cls.__new__(cls)
        obj._set(rank, exps)
        return obj

    @classmethod
    def identity(cls, rank: int) -> "LoopMonomial":
        return cls._raw(rank, {})

    @classmethod
    def Y(cls, i: int, k: int, rank: int, e: int = 1) -> "LoopMonomial":
        _check_node(i, rank)
        return cls._raw(rank, {LatticePoint(i, k): e} if e else {})

    # -- inspection ---------------------------------------------------------

    @property
    def exponents(self) -> dict[LatticePoint, int]:
        return dict(self._exps)

    def items(self) -> Iterator[tuple[LatticePoint, int]]:
        return iter(self._key)

    def exponent(self, i: int, k: int) -> int:
        return self._exps.get((i, k), 0)

    def support(self) -> list[LatticePoint]:
        return [p for p, _ in self._key]

    def is_identity(self) -> bool:
        return not self._exps

    def degree(self) -> int:
        """Sum of all exponents."""
        return sum(self._exps.values())

    # -- group operations ---------------------------------------------------

    def _same_rank(self, other: "LoopMonomial") -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __mul__(self, other: "LoopMonomial") -> "LoopMonomial":
        if isinstance(other, LoopPolynomial):
            return NotImplemented
        if not isinstance(other, LoopMonomial):
            return NotImplemented
        self._same_rank(other)
        if len(other._exps) > len(self._exps):
            a, b = other._exps, self._exps
        else:
            a, b = self._exps, other._exps
        out = dict(a)
        for p, e in b.items():
            v = out.get(p, 0) + e
            if v:
                out[p] = v
            else:
                del out[p]
        return LoopMonomial._raw(self.rank, out)

    def inverse(self) -> "LoopMonomial":
        return LoopMonomial._raw(self.rank, {p: -e for p, e in self._exps.items()})

    def __truediv__(self, other: "LoopMonomial") -> "LoopMonomial":
        if not isinstance(other, LoopMonomial):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> "LoopMonomial":
        if n == 0:
            return LoopMonomial.identity(self.rank)
        return LoopMonomial._raw(self.rank, {p: e * n for p, e in self._exps.items()})

    def shift(self, dk: int) -> "LoopMonomial":
        """Spectral shift ``Y[i,k] -> Y[i,k+dk]``."""
        return LoopMonomial._raw(self.rank, {LatticePoint(p.i, p.k + dk): e for p, e in self._exps.items()})

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LoopMonomial):
            return NotImplemented
        return self.rank == other.rank and self._key == other._key

    def __lt__(self, other: "LoopMonomial") -> bool:
        return self._key < other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"LoopMonomial({self}, rank={self.rank})"

    def __str__(self) -> str:
        if not self._key:
            return "1"
        return "*".join(f"Y[{i},{k}]" if e == 1 else f"Y[{i},{k}]^{e}" for (i, k), e in self._key)

    def to_json(self) -> list[list[int]]:
        return [[i, k, e] for (i, k), e in self._key]


class LoopPolynomial:
    """Integer combination of :class:`LoopMonomial` of a fixed rank."""

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, terms: Mapping[LoopMonomial, int] | Iterable[tuple[LoopMonomial, int]] = (),
                 rank: int | None = None):
        items = list(terms.items() if isinstance(terms, Mapping) else terms)
        if rank is None:
            if not items:
                raise ValueError("rank is required for an empty polynomial")
            rank = items[0][0].rank
        acc: dict[LoopMonomial, int] = {}
        for m, c in items:
            if m.rank != rank:
                raise ValueError(f"rank mismatch: {m.rank} vs {rank}")
            acc[m] = acc.get(m, 0) + int(c)
        self.rank = rank
        self._terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "LoopPolynomial":
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, rank: int) -> "LoopPolynomial":
        return cls._raw(rank, {})

    @classmethod
    def one(cls, rank: int) -> "LoopPolynomial":
        return cls._raw(rank, {LoopMonomial.identity(rank): 1})

    @classmethod
    def from_monomial(cls, m: LoopMonomial, coeff: int = 1) -> "LoopPolynomial":
        return cls._raw(m.rank, {m: coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int, rank: int) -> "LoopPolynomial":
        return cls.from_monomial(LoopMonomial.identity(rank), c)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[LoopMonomial, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[LoopMonomial, int]]:
        return sorted(self._terms.items(), key=lambda t: t[0]._key)

    def monomials(self) -> list[LoopMonomial]:
        return [m for m, _ in self.items()]

    def coefficient(self, m: LoopMonomial) -> int:
        return self._terms.get(m, 0)

    def coefficients(self) -> list[int]:
        return list(self._terms.values())

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, m: LoopMonomial) -> bool:
        return m in self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def dominant_monomials(self) -> list[LoopMonomial]:
        return [m for m in self.monomials() if is_dominant(m)]

    def antidominant_monomials(self) -> list[LoopMonomial]:
        return [m for m in self.monomials() if is_antidominant(m)]

    def eval_at_q1(self) -> int:
        return sum(self._terms.values())

    def weight_multiplicities(self) -> dict[tuple[int, ...], int]:
        """Image under ``wt``: weight vector -> summed coefficient."""
        out: dict[tuple[int, ...], int] = {}
        for m, c in self._terms.items():
            w = wt(m)
            out[w] = out.get(w, 0) + c
        return {w: c for w, c in out.items() if c}

    # -- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "LoopPolynomial":
        if isinstance(other, LoopPolynomial):
            if other.rank != self.rank:
                raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
            return other
        if isinstance(other, LoopMonomial):
            if other.rank != self.rank:
                raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
            return LoopPolynomial.from_monomial(other)
        if isinstance(other, int):
            return LoopPolynomial.constant(other, self.rank)
        raise TypeError(f"cannot combine LoopPolynomial with {type(other).__name__}")

    def __add__(self, other) -> "LoopPolynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return LoopPolynomial._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self) -> "LoopPolynomial":
        return LoopPolynomial._raw(self.rank, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "LoopPolynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LoopPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LoopPolynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(self._terms) * len(other._terms) > _FLINT_THRESHOLD:
            from ._flintbridge import laurent_product
            return LoopPolynomial._raw(
                self.rank, laurent_product(self._terms, other._terms, self.rank, LoopMonomial))
        out: dict[LoopMonomial, int] = {}
        get = out.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = get(m, 0) + c1 * c2
        return LoopPolynomial._raw(self.rank, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LoopPolynomial":
        if n < 0:
            raise ValueError("negative powers of polynomials are not supported")
        result = LoopPolynomial.one(self.rank)
        for _ in range(n):
            result = result * self
        return result

    def scale_monomial(self, m: LoopMonomial) -> "LoopPolynomial":
        return LoopPolynomial._raw(self.rank, {t * m: c for t, c in self._terms.items()})

    def shift(self, dk: int) -> "LoopPolynomial":
        return LoopPolynomial._raw(self.rank, {t.shift(dk): c for t, c in self._terms.items()})

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LoopPolynomial.constant(other, self.rank)
        if isinstance(other, LoopMonomial):
            other = LoopPolynomial.from_monomial(other)
        if not isinstance(other, LoopPolynomial):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LoopPolynomial({self}, rank={self.rank})"

    def __str__(self) -> str:
        items = self.items()
        if not items:
            return "0"
        out = ""
        for n, (m, c) in enumerate(items):
            body = str(m) if abs(c) == 1 and not m.is_identity() else (
                str(abs(c)) if m.is_identity() else f"{abs(c)}*{m}")
            if n == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_json(self) -> dict:
        return {"rank": self.rank,
                "terms": [{"coeff": c, "monomial": m.to_json()} for m, c in self.items()]}

    @classmethod
    def from_json(cls, data: dict | str) -> "LoopPolynomial":
        if isinstance(data, str):
            data = json.loads(data)
        rank = int(data["rank"])
        terms = [(LoopMonomial({(i, k): e for i, k, e in t["monomial"]}, rank), int(t["coeff"]))
                 for t in data["terms"]]
        return cls(terms, rank)


# -- module-level operations ------------------------------------------------

def affine_root(i: int, k: int, l: int) -> LoopMonomial:
    """``A[i,k] = Y[i,k+1] Y[i,k-1] / prod_{|j-i|=1} Y[j,k]``."""
    _check_node(i, l)
    exps = {LatticePoint(i, k + 1): 1, LatticePoint(i, k - 1): 1}
    for j in (i - 1, i + 1):
        if 1 <= j <= l:
            exps[LatticePoint(j, k)] = -1
    return LoopMonomial._raw(l, exps)


def wt(m: LoopMonomial) -> tuple[int, ...]:
    """Weight of a monomial in the fundamental-weight basis."""
    v = [0] * m.rank
    for (i, _), e in m.items():
        v[i - 1] += e
    return tuple(v)


def simple_root_weight(i: int, l: int) -> tuple[int, ...]:
    """``alpha_i = 2 w_i - w_(i-1) - w_(i+1)`` in the fundamental-weight basis."""
    _check_node(i, l)
    v = [0] * l
    v[i - 1] = 2
    if i > 1:
        v[i - 2] = -1
    if i < l:
        v[i] = -1
    return tuple(v)


def is_dominant(m: LoopMonomial) -> bool:
    return all(e > 0 for _, e in m.items())


def is_antidominant(m: LoopMonomial) -> bool:
    return all(e < 0 for _, e in m.items())


def factor_into_roots(m: LoopMonomial, reference: LoopMonomial) -> dict[LatticePoint, int] | None:
    """Exponents ``c`` with ``m = reference * prod A[j,s]^c[j,s]``, or ``None``.

    The quotient is eliminated from its largest spectral index downwards:
    ``Y[i,k_max]`` can only be produced by ``A[i,k_max-1]``.
    """
    m._same_rank(reference)
    l = m.rank
    d = dict((m / reference)._exps)
    if not d:
        return {}
    k_floor = min(k for _, k in d)
    out: dict[LatticePoint, int] = {}
    while d:
        k_max = max(k for _, k in d)
        s = k_max - 1
        # every root used satisfies s - 1 >= lowest index of the original quotient
        if s - 1 < k_floor:
            return None
        for (i, _), e in [(p, e) for p, e in d.items() if p[1] == k_max]:
            key = LatticePoint(i, s)
            out[key] = out.get(key, 0) + e
            # divide by A[i,s]^e
            for p, de in ((LatticePoint(i, s + 1), -e), (LatticePoint(i, s - 1), -e),
                          (LatticePoint(i - 1, s), e), (LatticePoint(i + 1, s), e)):
                if not 1 <= p[0] <= l:
                    continue
                v = d.get(p, 0) + de
                if v:
                    d[p] = v
                else:
                    d.pop(p, None)
    return {p: c for p, c in out.items() if c}


def mul(a: LoopMonomial, b: LoopMonomial) -> LoopMonomial:
    return a * b


def pow(m: LoopMonomial, n: int) -> LoopMonomial:  # noqa: A001 - mirrors the ring API
    return m ** n


def poly_mul(a: LoopPolynomial, b: LoopPolynomial) -> LoopPolynomial:
    return a * b


def poly_eval_at_q1(p: LoopPolynomial) -> int:
    """Total coefficient sum, i.e. the dimension when ``p`` is a character."""
    return p.eval_at_q1()


# -- text grammar -----------------------------------------------------------

_FACTOR = re.compile(r"Y\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\](?:\^(-?\d+))?")


def parse_monomial(text: str, rank: int) -> LoopMonomial:
    """Inverse of ``str(LoopMonomial)``: ``Y[1,0]*Y[2,3]^-1`` or ``1``."""
    text = text.strip()
    if text == "1":
        return LoopMonomial.identity(rank)
    exps: dict[tuple[int, int], int] = {}
    for factor in text.split("*"):
        match = _FACTOR.fullmatch(factor.strip())
        if match is None:
            raise ValueError(f"bad monomial factor {factor!r}")
        i, k, e = int(match[1]), int(match[2]), int(match[3] or 1)
        exps[(i, k)] = exps.get((i, k), 0) + e
    return LoopMonomial(exps, rank)


def parse_polynomial(text: str, rank: int) -> LoopPolynomial:
    """Inverse of ``str(LoopPolynomial)``."""
    text = text.strip()
    if text == "0":
        return LoopPolynomial.zero(rank)
    # split on top-level +/- separated by spaces (exponents never have spaces)
    tokens = re.split(r"\s+([+-])\s+", text)
    signs = [1]
    chunks = [tokens[0]]
    for sign, chunk in zip(tokens[1::2], tokens[2::2]):
        signs.append(1 if sign == "+" else -1)
        chunks.append(chunk)
    terms: list[tuple[LoopMonomial, int]] = []
    for sign, chunk in zip(signs, chunks):
        chunk = chunk.strip()
        if chunk.startswith("-"):
            sign, chunk = -sign, chunk[1:]
        coeff_match = re.match(r"^(\d+)(?:\*(.*))?$", chunk)
        if coeff_match:
            coeff = int(coeff_match[1])
            mono = parse_monomial(coeff_match[2], rank) if coeff_match[2] else LoopMonomial.identity(rank)
        else:
            coeff, mono = 1, parse_monomial(chunk, rank)
        terms.append((mono, sign * coeff))
    return LoopPolynomial(terms, rank)
