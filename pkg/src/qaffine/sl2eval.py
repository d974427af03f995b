"""Evaluation modules ``V^(r)(a)`` of quantum affine sl2 with ``a = q^s``.

The module has basis ``v_0, ..., v_r`` (``v_0`` highest).  The Drinfeld
generators act by explicit shift matrices whose entries live in ``Z[q, q^-1]``,
so every relation below is checked as an exact identity of QLaurent matrices.

Matrices are indexed ``[row][col]``; ``X+`` sends ``v_k`` to a multiple of
``v_{k-1}`` and therefore has its entries at ``[k-1][k]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .loopalg import LoopMonomial, LoopPolynomial
from .qarith import ONE, Q, ZERO, QLaurent, TruncatedSeries, q_number

__all__ = [
    "EvalModule",
    "GeneratorMatrix",
    "generator_matrix",
    "phi_matrix",
    "phi_eigenvalue",
    "check_drinfeld_relations",
    "check_k_conjugation",
    "drinfeld_polynomial",
    "loop_weight",
    "q_character_closed",
    "eigenvalue_series",
    "drinfeld_series_check",
    "SpecialPosition",
    "special_position",
    "tensor_identity_check",
    "general_position_dominant_count",
]

Tag = Literal["X+", "X-", "K", "Phi+", "Phi-"]

# q - q^-1, the ubiquitous normalising factor
QQ = Q - Q ** -1


@dataclass(frozen=True)
class EvalModule:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r}")

    @property
    def dim(self) -> int:
        return self.r + 1

    def check_parity(self) -> None:
        """Loop-weights ``Y[1, s+r-1], ...`` must sit on the class ``k`` odd."""
        if self.r and (self.s + self.r) % 2:
            raise ValueError(
                f"V^({self.r})(q^{self.s}) has q-string off the lattice: s + r must be even")

    def __str__(self) -> str:
        return f"V^({self.r})(q^{self.s})"


class GeneratorMatrix:
    """A square matrix of QLaurent entries tagged with the generator it represents."""

    def __init__(self, entries: list[list[QLaurent]], tag: str = "", p: int | None = None):
        self.entries = entries
        self.tag = tag
        self.p = p

    @classmethod
    def zeros(cls, n: int) -> "GeneratorMatrix":
        return cls([[ZERO] * n for _ in range(n)])

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, idx: tuple[int, int]) -> QLaurent:
        i, j = idx
        return self.entries[i][j]

    def __add__(self, other: "GeneratorMatrix") -> "GeneratorMatrix":
        return GeneratorMatrix([[a + b for a, b in zip(ra, rb)]
                                for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: "GeneratorMatrix") -> "GeneratorMatrix":
        return GeneratorMatrix([[a - b for a, b in zip(ra, rb)]
                                for ra, rb in zip(self.entries, other.entries)])

    def scale(self, c: QLaurent | int) -> "GeneratorMatrix":
        c = QLaurent.coerce(c)
        return GeneratorMatrix([[a * c for a in row] for row in self.entries])

    def __matmul__(self, other: "GeneratorMatrix") -> "GeneratorMatrix":
        n = self.size
        out = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for k in range(n):
                a = self.entries[i][k]
                if a.is_zero():
                    continue
                for j in range(n):
                    b = other.entries[k][j]
                    if not b.is_zero():
                        out[i][j] = out[i][j] + a * b
        return GeneratorMatrix(out)

    def commutator(self, other: "GeneratorMatrix") -> "GeneratorMatrix":
        return self @ other - other @ self

    def is_diagonal(self) -> bool:
        return all(self.entries[i][j].is_zero()
                   for i in range(self.size) for j in range(self.size) if i != j)

    def diagonal(self) -> list[QLaurent]:
        return [self.entries[i][i] for i in range(self.size)]

    def band(self) -> set[int]:
        """Offsets ``col - row`` carrying nonzero entries."""
        return {j - i for i, row in enumerate(self.entries) for j, a in enumerate(row) if a}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneratorMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self) -> str:
        return f"GeneratorMatrix({self.tag}, p={self.p}, n={self.size})"


def generator_matrix(m: EvalModule, tag: Tag, p: int = 0) -> GeneratorMatrix:
    """Matrix of ``X+_{1,p}``, ``X-_{1,p}`` or ``K_1`` on ``V^(r)(q^s)``."""
    r, s = m.r, m.s
    out = GeneratorMatrix.zeros(r + 1)
    e = out.entries
    if tag == "K":
        for k in range(r + 1):
            e[k][k] = QLaurent.monomial(r - 2 * k)
        out.tag, out.p = "K", None
        return out
    if tag == "X+":
        for k in range(1, r + 1):
            e[k - 1][k] = q_number(r - k + 1).shift(s * p + p * (r - 2 * k + 1))
    elif tag == "X-":
        for k in range(r):
            e[k + 1][k] = q_number(k + 1).shift(s * p + p * (r - 2 * k - 1))
    elif tag in ("Phi+", "Phi-"):
        return phi_matrix(m, tag[-1], p)
    else:
        raise ValueError(f"unknown generator tag {tag!r}")
    out.tag, out.p = tag, p
    return out


def phi_matrix(m: EvalModule, sign: str, p: int) -> GeneratorMatrix:
    """``Phi+_{1,p}`` (``p >= 0``) or ``Phi-_{1,-p}`` (pass ``p >= 0``) via commutators.

    ``Phi+_p = (q - q^-1)[X+_p, X-_0]`` and ``Phi-_{-p} = -(q - q^-1)[X+_{-p}, X-_0]``
    for ``p > 0``; ``p = 0`` gives ``K^{+-1}``.
    """
    if p < 0:
        raise ValueError("pass the absolute mode number p >= 0")
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    if p == 0:
        K = generator_matrix(m, "K")
        if sign == "-":
            K = GeneratorMatrix([[a ** -1 if a else a for a in row] for row in K.entries])
        K.tag, K.p = "Phi" + sign, 0
        return K
    xm0 = generator_matrix(m, "X-", 0)
    if sign == "+":
        out = generator_matrix(m, "X+", p).commutator(xm0).scale(QQ)
    else:
        out = generator_matrix(m, "X+", -p).commutator(xm0).scale(-QQ)
    out.tag, out.p = "Phi" + sign, p if sign == "+" else -p
    return out


def phi_eigenvalue(m: EvalModule, k: int, p: int) -> QLaurent:
    """Closed form of the ``Phi+_{1,p}`` eigenvalue on ``v_k``."""
    r, s = m.r, m.s
    if p == 0:
        return QLaurent.monomial(r - 2 * k)
    t1 = q_number(k + 1) * q_number(r - k) * QLaurent.monomial(p * (s + r - 2 * k - 1))
    t2 = q_number(k) * q_number(r - k + 1) * QLaurent.monomial(p * (s + r - 2 * k + 1))
    return QQ * (t1 - t2)


def _phi_plus(m: EvalModule, n: int) -> GeneratorMatrix:
    return GeneratorMatrix.zeros(m.dim) if n < 0 else phi_matrix(m, "+", n)


def _phi_minus(m: EvalModule, n: int) -> GeneratorMatrix:
    return GeneratorMatrix.zeros(m.dim) if n > 0 else phi_matrix(m, "-", -n)


def check_drinfeld_relations(m: EvalModule, bound: int = 2) -> list[tuple[str, bool]]:
    """Check the relations relating X+, X- and Phi on ``m`` for ``|p|, |q| <= bound``.

    Returns ``(label, ok)`` pairs covering band structure, diagonal Phi with the
    closed eigenvalues, the Phi- consistency of the two commutator routes, and
    ``(q - q^-1)[X+_p, X-_m] = Phi+_{p+m} - Phi-_{p+m}``.
    """
    results: list[tuple[str, bool]] = []
    r = m.r
    for p in range(-bound, bound + 1):
        xp, xm = generator_matrix(m, "X+", p), generator_matrix(m, "X-", p)
        results.append((f"band X+_{p}", xp.band() <= {1}))
        results.append((f"band X-_{p}", xm.band() <= {-1}))
    for n in range(0, 2 * bound + 1):
        ph = phi_matrix(m, "+", n)
        ok = ph.is_diagonal() and ph.diagonal() == [phi_eigenvalue(m, k, n) for k in range(r + 1)]
        results.append((f"Phi+_{n} diagonal with closed eigenvalues", ok))
        pm = phi_matrix(m, "-", n)
        alt = (generator_matrix(m, "X+", 0).commutator(generator_matrix(m, "X-", -n)).scale(-QQ)
               if n else pm)
        results.append((f"Phi-_{-n} diagonal and route-independent", pm.is_diagonal() and pm == alt))
    for p in range(-bound, bound + 1):
        for q_ in range(-bound, bound + 1):
            lhs = generator_matrix(m, "X+", p).commutator(generator_matrix(m, "X-", q_)).scale(QQ)
            rhs = _phi_plus(m, p + q_) - _phi_minus(m, p + q_)
            results.append((f"[X+_{p}, X-_{q_}]", lhs == rhs))
    return results


def check_k_conjugation(m: EvalModule, bound: int = 2) -> bool:
    """``K X+_p K^-1 = q^2 X+_p`` and ``K X-_p K^-1 = q^-2 X-_p``."""
    K = generator_matrix(m, "K")
    Kinv = phi_matrix(m, "-", 0)
    for p in range(-bound, bound + 1):
        xp, xm = generator_matrix(m, "X+", p), generator_matrix(m, "X-", p)
        if K @ xp @ Kinv != xp.scale(Q ** 2) or K @ xm @ Kinv != xm.scale(Q ** -2):
            return False
    return True


def drinfeld_polynomial(m: EvalModule) -> LoopMonomial:
    """``Y[1,s+r-1] Y[1,s+r-3] ... Y[1,s-r+1]``."""
    m.check_parity()
    return LoopMonomial({(1, m.s + m.r - 2 * j + 1): 1 for j in range(1, m.r + 1)}, 1)


def loop_weight(m: EvalModule, k: int) -> LoopMonomial:
    """Loop-weight of ``v_k`` as ``Q_k R_k^-1`` in Y-notation."""
    m.check_parity()
    r, s = m.r, m.s
    if not 0 <= k <= r:
        raise ValueError(f"basis index {k} out of range 0..{r}")
    exps: dict = {}
    for j in range(k + 1, r + 1):
        key = (1, s + r - 2 * j + 1)
        exps[key] = exps.get(key, 0) + 1
    for j in range(1, k + 1):
        key = (1, s + r - 2 * j + 3)
        exps[key] = exps.get(key, 0) - 1
    return LoopMonomial(exps, 1)


def q_character_closed(m: EvalModule) -> LoopPolynomial:
    return LoopPolynomial({loop_weight(m, k): 1 for k in range(m.r + 1)}, 1)


def eigenvalue_series(m: EvalModule, k: int, order: int) -> TruncatedSeries:
    """``sum_p (Phi+_p eigenvalue on v_k) u^p`` read off the commutator matrices."""
    return TruncatedSeries([phi_matrix(m, "+", p)[k, k] for p in range(order + 1)], order)


def _y_factor_series(mono: LoopMonomial, sign: int, order: int) -> TruncatedSeries:
    """Product of ``(1 - q^j u)`` over factors ``Y[1,j]`` with exponent of the given sign."""
    out = TruncatedSeries.one(order)
    for (_, j), e in mono.items():
        if e * sign > 0:
            for _ in range(abs(e)):
                out = out * TruncatedSeries.linear(ONE, -QLaurent.monomial(j), order)
    return out


def drinfeld_series_check(m: EvalModule, k: int, order: int = 10) -> bool:
    """Compare the eigenvalue series with ``q^(deg Q - deg R) Q(q^-2 u) R(u) / (Q(u) R(q^-2 u))``.

    Both sides are cross-multiplied so only polynomial products in ``u`` occur.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    lw = loop_weight(m, k)
    Qs = _y_factor_series(lw, +1, order)
    Rs = _y_factor_series(lw, -1, order)
    degQ = sum(e for _, e in lw.items() if e > 0)
    degR = -sum(e for _, e in lw.items() if e < 0)
    shrink = QLaurent.monomial(-2)
    psi = eigenvalue_series(m, k, order)
    lhs = psi * Qs * Rs.substitute_scale(shrink)
    rhs = Qs.substitute_scale(shrink) * Rs * QLaurent.monomial(degQ - degR)
    return lhs == rhs


# -- special position -------------------------------------------------------

@dataclass(frozen=True)
class SpecialPosition:
    """Outcome of the special-position test for ``V^(k)(q^s1) (x) V^(l)(q^s2)``.

    ``sub`` and ``quotient`` are the pairs of evaluation modules whose tensor
    products give the submodule and the quotient.
    """

    left: EvalModule
    right: EvalModule
    case: str
    p: int
    sub: tuple[EvalModule, EvalModule]
    quotient: tuple[EvalModule, EvalModule]


def special_position(r1: int, r2: int, s1: int, s2: int) -> SpecialPosition | None:
    """Return the decomposition data, or ``None`` in general position."""
    left, right = EvalModule(r1, s1), EvalModule(r2, s2)
    left.check_parity()
    right.check_parity()
    k, l = r1, r2
    delta = s2 - s1
    for p in range(min(k, l)):
        gap = k + l - 2 * p
        if delta == gap:
            sub = (EvalModule(k - p - 1, s1 - p - 1), EvalModule(l - p - 1, s2 + p + 1))
            quo = (EvalModule(p, s1 + k - p), EvalModule(k + l - p, s2 - (k - p)))
            return SpecialPosition(left, right, "+", p, sub, quo)
        if delta == -gap:
            sub = (EvalModule(p, s1 - (k - p)), EvalModule(k + l - p, s2 + k - p))
            quo = (EvalModule(k - p - 1, s1 + p + 1), EvalModule(l - p - 1, s2 - p - 1))
            return SpecialPosition(left, right, "-", p, sub, quo)
    return None


def _chi_pair(pair: tuple[EvalModule, EvalModule]) -> LoopPolynomial:
    return q_character_closed(pair[0]) * q_character_closed(pair[1])


def tensor_identity_check(d: SpecialPosition) -> bool:
    """``chi(left) chi(right) == chi(sub) + chi(quotient)`` exactly."""
    lhs = q_character_closed(d.left) * q_character_closed(d.right)
    return lhs == _chi_pair(d.sub) + _chi_pair(d.quotient)


def general_position_dominant_count(r1: int, r2: int, s1: int, s2: int) -> int:
    """Number of dominant monomials in ``chi(V^(r1)(q^s1)) chi(V^(r2)(q^s2))``."""
    prod = q_character_closed(EvalModule(r1, s1)) * q_character_closed(EvalModule(r2, s2))
    return len(prod.dominant_monomials())
