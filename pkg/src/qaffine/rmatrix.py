"""The fundamental trigonometric R-matrix of type ``A_l`` and its identities.

``R(lam)`` acts on ``C^n (x) C^n`` with ``n = l + 1``.  The basis vector
``e_a (x) e_c`` has index ``(a-1)*n + c - 1`` (0-based), so the coefficient of
``E_ab (x) E_cd`` sits at row ``(a, c)`` and column ``(b, d)``.  Only the
bracketed matrix is built; the overall scalar prefactor is dropped since none
of the checked identities sees it.

Entries are :class:`RationalFn` values over integer polynomials in ``q`` and
the spectral variables ``x, y``, with FLINT supplying the polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import flint

__all__ = [
    "VARIABLES",
    "RationalFn",
    "RMatrix",
    "fundamental_r",
    "permutation_matrix",
    "sample_points",
    "check_ybe",
    "check_regularity",
    "check_unitarity",
    "UnitarityReport",
]

VARIABLES = ("q", "x", "y")
_CTX = flint.fmpz_mpoly_ctx.get(VARIABLES, "lex")
q, x, y = _CTX.gens()
_ONE = _CTX.from_dict({(0, 0, 0): 1})
_ZERO = _CTX.from_dict({})


def _poly(value) -> "flint.fmpz_mpoly":
    if isinstance(value, flint.fmpz_mpoly):
        return value
    return _ONE * int(value)


def _evaluate(p, point: dict[str, Fraction]) -> Fraction:
    vals = [Fraction(point.get(v, 0)) for v in VARIABLES]
    total = Fraction(0)
    for exps, c in p.to_dict().items():
        term = Fraction(int(c))
        for v, e in zip(vals, exps):
            if e:
                term *= v ** int(e)
        total += term
    return total


class RationalFn:
    """``num / den`` with integer polynomial numerator and nonzero denominator.

    Equality is decided by cross-multiplication; no normal form is kept.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _poly(num), _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def coerce(value) -> "RationalFn":
        return value if isinstance(value, RationalFn) else RationalFn(value)

    def __add__(self, other) -> "RationalFn":
        other = RationalFn.coerce(other)
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.num, self.den)

    def __sub__(self, other) -> "RationalFn":
        return self + (-RationalFn.coerce(other))

    def __rsub__(self, other) -> "RationalFn":
        return RationalFn.coerce(other) - self

    def __mul__(self, other) -> "RationalFn":
        other = RationalFn.coerce(other)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        other = RationalFn.coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) or isinstance(other, flint.fmpz_mpoly):
            other = RationalFn(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is not structural

    def compose(self, qv, xv, yv) -> "RationalFn":
        """Substitute polynomials for ``q, x, y``."""
        return RationalFn(self.num.compose(qv, xv, yv), self.den.compose(qv, xv, yv))

    def subs(self, **values: int) -> "RationalFn":
        """Substitute integers for named variables; the denominator must stay nonzero."""
        return RationalFn(self.num.subs(values), self.den.subs(values))

    def invert_variable(self, name: str) -> "RationalFn":
        """Substitute ``v -> 1/v`` and clear the resulting negative powers."""
        j = VARIABLES.index(name)
        top = max(self.num.degrees()[j], self.den.degrees()[j])

        def flip(p):
            return _CTX.from_dict({tuple(top - e if t == j else e for t, e in enumerate(exps)): c
                                   for exps, c in p.to_dict().items()})

        return RationalFn(flip(self.num), flip(self.den))

    def evaluate(self, point: dict[str, Fraction]) -> Fraction:
        d = _evaluate(self.den, point)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {point}")
        return _evaluate(self.num, point) / d

    def reduced(self) -> "RationalFn":
        """Cancel the polynomial gcd and make the denominator's leading coefficient positive."""
        if self.num.is_zero():
            return RationalFn(0)
        g = self.num.gcd(self.den)
        num, den = self.num / g, self.den / g
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RationalFn(num, den)

    def __str__(self) -> str:
        r = self.reduced()
        return str(r.num) if r.den.is_one() else f"({r.num}) / ({r.den})"

    def __repr__(self) -> str:
        return f"RationalFn({self})"


@dataclass
class RMatrix:
    """Sparse ``n^2 x n^2`` matrix of RationalFn entries."""

    n: int
    entries: dict[tuple[int, int], RationalFn]

    def index(self, a: int, c: int) -> int:
        """0-based position of ``e_a (x) e_c`` (``a, c`` are 1-based)."""
        return (a - 1) * self.n + (c - 1)

    def entry(self, a: int, b: int, c: int, d: int) -> RationalFn:
        """Coefficient of ``E_ab (x) E_cd``."""
        return self.entries.get((self.index(a, c), self.index(b, d)), RationalFn(0))

    def map(self, fn) -> "RMatrix":
        return RMatrix(self.n, {k: fn(v) for k, v in self.entries.items()})

    def dense(self) -> list[list[RationalFn]]:
        size = self.n ** 2
        return [[self.entries.get((i, j), RationalFn(0)) for j in range(size)] for i in range(size)]

    def text_lines(self) -> list[str]:
        out = []
        for (row, col), v in sorted(self.entries.items()):
            a, c = divmod(row, self.n)
            b, d = divmod(col, self.n)
            out.append(f"E{a + 1}{b + 1} (x) E{c + 1}{d + 1}: {v}")
        return out


def fundamental_r(l: int, var: str = "x") -> RMatrix:
    """The bracketed fundamental R-matrix in the spectral variable ``var``."""
    if l < 1:
        raise ValueError(f"rank must be >= 1, got {l}")
    n = l + 1
    lam = {"x": x, "y": y}[var]
    m = RMatrix(n, {})
    for a in range(1, n + 1):
        m.entries[(m.index(a, a), m.index(a, a))] = RationalFn(1)
    for a, b in product(range(1, n + 1), repeat=2):
        if a == b:
            continue
        # q^-1 (1 - lam) / (1 - q^-2 lam), multiplied through by q^2
        m.entries[(m.index(a, b), m.index(a, b))] = RationalFn(q * (1 - lam), q ** 2 - lam)
        if a < b:
            # (1 - q^-2) / (1 - q^-2 lam)
            val = RationalFn(q ** 2 - 1, q ** 2 - lam)
        else:
            # (1 - q^2) / (1 - q^2 lam^-1) = (1 - q^2) lam / (lam - q^2)
            val = RationalFn((1 - q ** 2) * lam, lam - q ** 2)
        # E_ab (x) E_ba: row (a, b), column (b, a)
        m.entries[(m.index(a, b), m.index(b, a))] = val
    return m


def permutation_matrix(n: int) -> RMatrix:
    m = RMatrix(n, {})
    for a, c in product(range(1, n + 1), repeat=2):
        m.entries[(m.index(a, c), m.index(c, a))] = RationalFn(1)
    return m


# -- sparse linear algebra on (C^n)^{x3} ------------------------------------

def _embed(entries: dict, n: int, slots: tuple[int, int]) -> dict:
    """Lift an operator on two tensor factors to the triple product."""
    out = {}
    other = ({0, 1, 2} - set(slots)).pop()
    for (row, col), v in entries.items():
        a, c = divmod(row, n)
        b, d = divmod(col, n)
        for e in range(n):
            r = [0, 0, 0]
            s = [0, 0, 0]
            r[slots[0]], r[slots[1]], r[other] = a, c, e
            s[slots[0]], s[slots[1]], s[other] = b, d, e
            out[((r[0] * n + r[1]) * n + r[2], (s[0] * n + s[1]) * n + s[2])] = v
    return out


def _matmul(A: dict, B: dict, zero) -> dict:
    rows: dict[int, list] = {}
    for (i, k), v in A.items():
        rows.setdefault(k, []).append((i, v))
    out: dict = {}
    for (k, j), w in B.items():
        for i, v in rows.get(k, ()):
            key = (i, j)
            out[key] = out[key] + v * w if key in out else v * w
    return {k: v for k, v in out.items() if v != zero}


def _cleared(m: RMatrix) -> tuple[dict, "flint.fmpz_mpoly"]:
    """Polynomial matrix ``D * m`` and the common denominator ``D`` (an lcm)."""
    D = _ONE
    for v in m.entries.values():
        g = D.gcd(v.den)
        D = D * (v.den / g)
    return {k: v.num * (D / v.den) for k, v in m.entries.items()}, D


def _ybe_exact(l: int) -> bool:
    n = l + 1
    Rx = fundamental_r(l, "x")
    Cx, _ = _cleared(Rx)
    Cxy, _ = _cleared(Rx.map(lambda f: f.compose(q, x * y, y)))
    Cy, _ = _cleared(fundamental_r(l, "y"))
    R12, R13, R23 = _embed(Cx, n, (0, 1)), _embed(Cxy, n, (0, 2)), _embed(Cy, n, (1, 2))
    lhs = _matmul(_matmul(R12, R13, _ZERO), R23, _ZERO)
    rhs = _matmul(_matmul(R23, R13, _ZERO), R12, _ZERO)
    return lhs == rhs


def sample_points(count: int = 20) -> list[dict[str, Fraction]]:
    """Deterministic rational sample tuples; each variable takes ``count`` distinct values.

    Values are ratios of small primes, chosen so that no R-matrix denominator
    vanishes (``q^2`` never equals a spectral value).
    """
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89]
    pts = []
    t = 0
    while len(pts) < count:
        p1, p2, p3 = primes[t % len(primes)], primes[(t + 5) % len(primes)], primes[(t + 11) % len(primes)]
        qv = Fraction(p1, p2 + 1) + t
        xv = Fraction(p2, p3) + 2 * t + 1
        yv = Fraction(p3, p1 + 2) + 3 * t + 2
        t += 1
        pt = {"q": qv, "x": xv, "y": yv}
        if any(qv ** 2 == lam for lam in (xv, yv, xv * yv)):
            continue
        pts.append(pt)
    return pts


def _ybe_sampled(l: int, count: int = 20) -> bool:
    n = l + 1
    Rx = fundamental_r(l, "x")
    Rxy = Rx.map(lambda f: f.compose(q, x * y, y))
    Ry = fundamental_r(l, "y")
    for pt in sample_points(count):
        ev = {k: v.evaluate(pt) for k, v in Rx.entries.items()}
        evxy = {k: v.evaluate(pt) for k, v in Rxy.entries.items()}
        evy = {k: v.evaluate(pt) for k, v in Ry.entries.items()}
        R12, R13, R23 = _embed(ev, n, (0, 1)), _embed(evxy, n, (0, 2)), _embed(evy, n, (1, 2))
        zero = Fraction(0)
        if _matmul(_matmul(R12, R13, zero), R23, zero) != _matmul(_matmul(R23, R13, zero), R12, zero):
            return False
    return True


def check_ybe(l: int, mode: str = "exact", samples: int = 20) -> bool:
    """``R12(x) R13(xy) R23(y) == R23(y) R13(xy) R12(x)``.

    ``exact`` clears denominators and compares polynomial matrices (every term
    carries the same scalar ``D(x) D(xy) D(y)``); ``sampled`` compares both sides
    at ``samples`` rational points in exact arithmetic.
    """
    if l < 1:
        raise ValueError(f"rank must be >= 1, got {l}")
    if mode == "exact":
        return _ybe_exact(l)
    if mode == "sampled":
        if samples < 1:
            raise ValueError("samples must be >= 1")
        return _ybe_sampled(l, samples)
    raise ValueError(f"mode must be 'exact' or 'sampled', got {mode!r}")


def check_regularity(l: int) -> bool:
    """``R(1)`` equals the flip ``P``."""
    R = fundamental_r(l).map(lambda f: f.subs(x=1))
    P = permutation_matrix(l + 1)
    keys = set(R.entries) | set(P.entries)
    zero = RationalFn(0)
    return all(R.entries.get(k, zero) == P.entries.get(k, zero) for k in keys)


@dataclass
class UnitarityReport:
    ok: bool
    factor: RationalFn | None

    def __bool__(self) -> bool:
        return self.ok


def check_unitarity(l: int) -> UnitarityReport:
    """``R(x) P R(1/x) P == f * I`` for one scalar ``f``."""
    n = l + 1
    R = fundamental_r(l)
    Rinv = R.map(lambda f: f.invert_variable("x"))
    P = permutation_matrix(n).entries
    zero = RationalFn(0)
    M = _matmul(_matmul(_matmul(R.entries, P, zero), Rinv.entries, zero), P, zero)
    size = n * n
    if any(i != j for i, j in M):
        return UnitarityReport(False, None)
    diag = [M.get((i, i), zero) for i in range(size)]
    f = diag[0]
    ok = not f.is_zero() and all(d == f for d in diag)
    return UnitarityReport(ok, f.reduced() if ok else None)
