"""T-system relations checked inside the image of the q-character map.

Since the q-character is an injective ring homomorphism on the Grothendieck
ring, each relation among classes of modules is tested as an equality of
LoopPolynomials computed by the path formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._flintbridge import sums_of_products_equal
from .loopalg import LoopPolynomial
from .paths import q_character
from .snakes import Snake, is_prime_snake, neighbouring_snakes, snake_of_kr

__all__ = [
    "IdentityReport",
    "kr_character",
    "t_system_sides",
    "verify_t_system",
    "extended_t_system_sides",
    "verify_extended_t_system",
    "kr_determinant_sl2",
    "one_dominant_heuristic",
]


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of an identity, each a sum of products of characters."""

    lhs_groups: tuple[tuple[LoopPolynomial, ...], ...]
    rhs_groups: tuple[tuple[LoopPolynomial, ...], ...]

    @property
    def ok(self) -> bool:
        return sums_of_products_equal(self.lhs_groups, self.rhs_groups)

    @staticmethod
    def _expand(groups) -> LoopPolynomial:
        rank = groups[0][0].rank
        total = LoopPolynomial.zero(rank)
        for g in groups:
            term = LoopPolynomial.one(rank)
            for f in g:
                term = term * f
            total = total + term
        return total

    @property
    def lhs(self) -> LoopPolynomial:
        return self._expand(self.lhs_groups)

    @property
    def rhs(self) -> LoopPolynomial:
        return self._expand(self.rhs_groups)

    def factors(self):
        for g in self.lhs_groups + self.rhs_groups:
            yield from g

    def __bool__(self) -> bool:
        return self.ok


def kr_character(i: int, k: int, r: int, l: int) -> LoopPolynomial:
    """``chi(W_i^(r)(q^k))``; ``r = 0`` is the unit."""
    if r == 0:
        return LoopPolynomial.one(l)
    return q_character(snake_of_kr(i, k, r, l))


def t_system_sides(i: int, k: int, r: int, l: int) -> IdentityReport:
    if not 1 <= i <= l:
        raise ValueError(f"node {i} out of range 1..{l}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    lhs = (kr_character(i, k, r, l), kr_character(i, k + 2, r, l))
    first = (kr_character(i, k, r + 1, l), kr_character(i, k + 2, r - 1, l))
    second = tuple(kr_character(j, k + 1, r, l) for j in (i - 1, i + 1) if 1 <= j <= l)
    return IdentityReport((lhs,), (first, second))


def verify_t_system(i: int, k: int, r: int, l: int) -> bool:
    """``W(q^k) W(q^{k+2}) = W^(r+1)(q^k) W^(r-1)(q^{k+2}) + prod_j W_j^(r)(q^{k+1})``."""
    return t_system_sides(i, k, r, l).ok


def extended_t_system_sides(s: Snake, l: int | None = None) -> IdentityReport:
    if not isinstance(s, Snake):
        if l is None:
            raise ValueError("rank is required")
        s = Snake(s, l)
    l = s.rank
    if len(s) < 2:
        raise ValueError("the extended T-system needs a snake of length >= 2")
    if not is_prime_snake(s.points, l):
        raise ValueError(f"{s} is not a prime snake in A_{l}")
    xs, ys = neighbouring_snakes(s)
    lhs = (q_character(s[:-1]), q_character(s[1:]))
    rhs = ((q_character(s[1:-1]), q_character(s)), (q_character(xs), q_character(ys)))
    return IdentityReport((lhs,), rhs)


def verify_extended_t_system(s: Snake, l: int | None = None) -> bool:
    """``chi(drop last) chi(drop first) = chi(drop both) chi(s) + chi(X) chi(Y)``."""
    return extended_t_system_sides(s, l).ok


def kr_determinant_sl2(r: int, k: int) -> LoopPolynomial:
    """Tridiagonal determinant with diagonal ``chi(W^(1)(q^{k+2j}))`` and unit off-diagonals.

    Expanded along the last row: ``D_n = a_n D_{n-1} - D_{n-2}``.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    prev, cur = LoopPolynomial.one(1), kr_character(1, k, 1, 1)
    for j in range(1, r):
        prev, cur = cur, kr_character(1, k + 2 * j, 1, 1) * cur - prev
    return cur


def one_dominant_heuristic(p: LoopPolynomial) -> bool:
    """Reported witness for irreducibility of a product: exactly one dominant monomial."""
    return len(p.dominant_monomials()) == 1
