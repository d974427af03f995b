"""Lattice-path model for q-characters of snake modules of type ``A_l``.

A path attached to ``(i, k)`` is a height sequence ``y_0, ..., y_{l+1}`` with
``y_0 = i + k``, ``y_{l+1} = l + 1 - i + k`` and unit steps.  Interior local
minima (``y_{j-1} = y_j + 1 = y_{j+1}``) are upper corners and contribute
``Y[j, y_j]``; interior local maxima are lower corners and contribute
``Y[j, y_j]^-1``.  A snake's character is the sum over tuples of paths, one per
snake point, in which each path lies strictly below the previous one in every
column (smaller heights are "above").
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .loopalg import LatticePoint, LoopMonomial, LoopPolynomial
from .snakes import Snake

__all__ = [
    "Path",
    "enumerate_paths",
    "corners",
    "path_monomial",
    "lower_move",
    "raise_move",
    "lower_tuple",
    "raise_tuple",
    "is_non_overlapping",
    "path_tuples",
    "q_character",
    "fundamental_character",
]


@dataclass(frozen=True)
class Path:
    heights: tuple[int, ...]
    origin: LatticePoint
    rank: int

    def __post_init__(self):
        i, k = self.origin
        l = self.rank
        y = self.heights
        if len(y) != l + 2:
            raise ValueError(f"a path of rank {l} has {l + 2} heights, got {len(y)}")
        if y[0] != i + k or y[-1] != l + 1 - i + k:
            raise ValueError(f"heights {y} do not have the endpoints of P[{i},{k}]")
        if any(abs(b - a) != 1 for a, b in zip(y, y[1:])):
            raise ValueError(f"heights {y} do not move in unit steps")

    def upper_corners(self) -> frozenset[LatticePoint]:
        y = self.heights
        return frozenset(LatticePoint(j, y[j]) for j in range(1, self.rank + 1)
                         if y[j - 1] == y[j] + 1 == y[j + 1])

    def lower_corners(self) -> frozenset[LatticePoint]:
        y = self.heights
        return frozenset(LatticePoint(j, y[j]) for j in range(1, self.rank + 1)
                         if y[j - 1] == y[j] - 1 == y[j + 1])

    def monomial(self) -> LoopMonomial:
        return path_monomial(self)

    def with_height(self, column: int, value: int) -> "Path":
        y = list(self.heights)
        y[column] = value
        return Path(tuple(y), self.origin, self.rank)

    def is_strictly_above(self, other: "Path") -> bool:
        return all(a < b for a, b in zip(self.heights, other.heights))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.heights)) + ")"


@lru_cache(maxsize=None)
def enumerate_paths(i: int, k: int, l: int) -> tuple[Path, ...]:
    """All paths attached to ``(i, k)``, sorted by height sequence; there are ``C(l+1, i)``."""
    if not 1 <= i <= l:
        raise ValueError(f"node {i} out of range 1..{l}")
    origin = LatticePoint(i, k)
    out = []
    for downs in combinations(range(l + 1), i):
        y = [i + k]
        for step in range(l + 1):
            y.append(y[-1] - 1 if step in downs else y[-1] + 1)
        out.append(Path(tuple(y), origin, l))
    return tuple(sorted(out, key=lambda p: p.heights))


def corners(p: Path) -> tuple[frozenset[LatticePoint], frozenset[LatticePoint]]:
    """``(upper, lower)`` corner sets."""
    return p.upper_corners(), p.lower_corners()


@lru_cache(maxsize=None)
def _path_exps(p: Path) -> tuple[tuple[LatticePoint, int], ...]:
    up, low = corners(p)
    return tuple([(c, 1) for c in up] + [(c, -1) for c in low])


def path_monomial(p: Path) -> LoopMonomial:
    return LoopMonomial(_path_exps(p), p.rank)


def lower_move(p: Path, point: Sequence[int]) -> Path | None:
    """Lower ``p`` at ``(a, b)``: needs ``(a, b-1)`` upper and ``(a, b+1)`` not upper."""
    a, b = point
    if not 1 <= a <= p.rank:
        return None
    up = p.upper_corners()
    if (a, b - 1) in up and (a, b + 1) not in up:
        return p.with_height(a, p.heights[a] + 2)
    return None


def raise_move(p: Path, point: Sequence[int]) -> Path | None:
    """Raise ``p`` at ``(a, b)``: needs ``(a, b-1)`` not lower and ``(a, b+1)`` lower."""
    a, b = point
    if not 1 <= a <= p.rank:
        return None
    low = p.lower_corners()
    if (a, b - 1) not in low and (a, b + 1) in low:
        return p.with_height(a, p.heights[a] - 2)
    return None


def is_non_overlapping(paths: Sequence[Path]) -> bool:
    return all(a.is_strictly_above(b) for a, b in zip(paths, paths[1:]))


def _tuple_move(paths: Sequence[Path], point: Sequence[int], move) -> tuple[Path, ...] | None:
    for t, p in enumerate(paths):
        moved = move(p, point)
        if moved is not None:
            out = tuple(paths[:t]) + (moved,) + tuple(paths[t + 1:])
            return out if is_non_overlapping(out) else None
    return None


def lower_tuple(paths: Sequence[Path], point: Sequence[int]) -> tuple[Path, ...] | None:
    """Lower the (unique) member path with an upper corner at ``(a, b-1)``, if the result stays non-overlapping."""
    return _tuple_move(paths, point, lower_move)


def raise_tuple(paths: Sequence[Path], point: Sequence[int]) -> tuple[Path, ...] | None:
    return _tuple_move(paths, point, raise_move)


def path_tuples(s: Snake):
    """Iterate the non-overlapping path tuples of a snake."""
    l = s.rank
    pools = [enumerate_paths(i, k, l) for i, k in s.points]

    def grow(prefix: tuple[Path, ...], t: int):
        if t == len(pools):
            yield prefix
            return
        last = prefix[-1] if prefix else None
        for p in pools[t]:
            if last is None or last.is_strictly_above(p):
                yield from grow(prefix + (p,), t + 1)

    yield from grow((), 0)


def q_character(s: Snake | Sequence[Sequence[int]], l: int | None = None) -> LoopPolynomial:
    """Sum over non-overlapping path tuples of the product of corner monomials."""
    if not isinstance(s, Snake):
        if l is None:
            raise ValueError("rank is required")
        s = Snake(s, l)
    return _q_character(s.points, s.rank)


@lru_cache(maxsize=4096)
def _q_character(points: tuple[LatticePoint, ...], l: int) -> LoopPolynomial:
    pools = [[(p.heights, _path_exps(p)) for p in enumerate_paths(i, k, l)] for i, k in points]
    acc: dict[LoopMonomial, int] = {}
    n = len(pools)

    def grow(t: int, last: tuple[int, ...] | None, exps: dict):
        if t == n:
            m = LoopMonomial._raw(l, {p: e for p, e in exps.items() if e})
            acc[m] = acc.get(m, 0) + 1
            return
        for heights, pe in pools[t]:
            if last is not None and not all(a < b for a, b in zip(last, heights)):
                continue
            nxt = dict(exps)
            for p, e in pe:
                nxt[p] = nxt.get(p, 0) + e
            grow(t + 1, heights, nxt)

    grow(0, None, {})
    return LoopPolynomial._raw(l, acc)


def fundamental_character(i: int, k: int, l: int) -> LoopPolynomial:
    """Character of the fundamental module with highest loop-weight ``Y[i,k]``."""
    return q_character(Snake([(i, k)], l))

