"""Snakes of type ``A_l``: position predicates, q-strings and neighbouring snakes."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .loopalg import LatticePoint, LoopMonomial, parity_class

__all__ = [
    "Snake",
    "is_snake",
    "is_minimal_snake",
    "is_prime_snake",
    "in_snake_position",
    "in_minimal_snake_position",
    "in_prime_snake_position",
    "kr_highest_weight",
    "snake_of_kr",
    "neighbouring_points",
    "neighbouring_snakes",
    "prime_successors",
    "minimal_successors",
    "enumerate_prime_snakes",
    "random_prime_snake",
    "parse_snake",
    "format_snake",
]


def _validate_points(points: Sequence[Sequence[int]], l: int) -> tuple[LatticePoint, ...]:
    if l < 1:
        raise ValueError(f"rank must be >= 1, got {l}")
    pts = tuple(LatticePoint(int(i), int(k)) for i, k in points)
    for p in pts:
        if not 1 <= p.i <= l:
            raise ValueError(f"point {tuple(p)} has node outside 1..{l}")
    if pts and len({parity_class(p) for p in pts}) > 1:
        raise ValueError(f"points {[tuple(p) for p in pts]} mix the two parity classes of (i - k)")
    return pts


def in_snake_position(p: Sequence[int], p2: Sequence[int]) -> bool:
    """``k' - k >= |i' - i| + 2``."""
    return p2[1] - p[1] >= abs(p2[0] - p[0]) + 2


def in_minimal_snake_position(p: Sequence[int], p2: Sequence[int]) -> bool:
    return p2[1] - p[1] == abs(p2[0] - p[0]) + 2


def in_prime_snake_position(p: Sequence[int], p2: Sequence[int], l: int) -> bool:
    """``min(i + i', 2l + 2 - i - i') >= k' - k >= |i' - i| + 2``."""
    (i, k), (i2, k2) = p, p2
    return min(i + i2, 2 * l + 2 - i - i2) >= k2 - k >= abs(i2 - i) + 2


def is_snake(points: Sequence[Sequence[int]], l: int) -> bool:
    pts = _validate_points(points, l)
    return all(in_snake_position(a, b) for a, b in zip(pts, pts[1:]))


def is_minimal_snake(points: Sequence[Sequence[int]], l: int) -> bool:
    pts = _validate_points(points, l)
    return all(in_minimal_snake_position(a, b) for a, b in zip(pts, pts[1:]))


def is_prime_snake(points: Sequence[Sequence[int]], l: int) -> bool:
    pts = _validate_points(points, l)
    return all(in_prime_snake_position(a, b, l) for a, b in zip(pts, pts[1:]))


@dataclass(frozen=True)
class Snake:
    """A validated snake; the empty sequence is allowed and indexes the trivial module."""

    points: tuple[LatticePoint, ...]
    rank: int

    def __init__(self, points: Iterable[Sequence[int]], rank: int):
        pts = _validate_points(list(points), rank)
        if not all(in_snake_position(a, b) for a, b in zip(pts, pts[1:])):
            raise ValueError(f"{[tuple(p) for p in pts]} is not a snake")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "rank", rank)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[LatticePoint]:
        return iter(self.points)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Snake(self.points[idx], self.rank)
        return self.points[idx]

    def is_prime(self) -> bool:
        return is_prime_snake(self.points, self.rank)

    def is_minimal(self) -> bool:
        return is_minimal_snake(self.points, self.rank)

    def highest_monomial(self) -> LoopMonomial:
        exps: dict = {}
        for p in self.points:
            exps[p] = exps.get(p, 0) + 1
        return LoopMonomial(exps, self.rank)

    def mirror(self) -> "Snake":
        """Diagram flip ``i -> l + 1 - i``."""
        return Snake([(self.rank + 1 - i, k) for i, k in self.points], self.rank)

    def __str__(self) -> str:
        return format_snake(self.points)


def kr_highest_weight(i: int, k: int, r: int, l: int) -> LoopMonomial:
    """``Y[i,k] Y[i,k+2] ... Y[i,k+2r-2]``, the highest loop-weight of ``W_i^(r)(q^k)``."""
    if r < 0:
        raise ValueError(f"length must be >= 0, got {r}")
    if r == 0:
        return LoopMonomial.identity(l)
    return LoopMonomial({(i, k + 2 * t): 1 for t in range(r)}, l)


def snake_of_kr(i: int, k: int, r: int, l: int | None = None) -> Snake:
    """Straight snake ``(i,k), (i,k+2), ..., (i,k+2r-2)``."""
    return Snake([(i, k + 2 * t) for t in range(r)], l if l is not None else max(i, 1))


def _half(n: int) -> int:
    if n % 2:
        raise RuntimeError(f"neighbouring point coordinate {n}/2 is not an integer")
    return n // 2


def neighbouring_points(p: Sequence[int], p2: Sequence[int], l: int) -> tuple[LatticePoint | None, LatticePoint | None]:
    """The X- and Y-neighbours of two successive snake points (``None`` when empty)."""
    (i, k), (i2, k2) = p, p2
    x = None
    if k + i > k2 - i2:
        x = LatticePoint(_half(i + k + i2 - k2), _half(i + k - i2 + k2))
    elif k + i != k2 - i2:
        raise ValueError(f"{tuple(p)}, {tuple(p2)} are not in prime snake position")
    y = None
    if k + l + 1 - i > k2 - l - 1 + i2:
        y = LatticePoint(_half(i2 + k2 + i - k), _half(i2 + k2 - i + k))
    elif k + l + 1 - i != k2 - l - 1 + i2:
        raise ValueError(f"{tuple(p)}, {tuple(p2)} are not in prime snake position")
    return x, y


def neighbouring_snakes(s: Snake | Sequence[Sequence[int]], l: int | None = None) -> tuple[Snake, Snake]:
    """Concatenate the neighbouring points of consecutive pairs, skipping empty ones."""
    if isinstance(s, Snake):
        l = s.rank if l is None else l
        pts = s.points
    else:
        if l is None:
            raise ValueError("rank is required")
        pts = _validate_points(s, l)
    if len(pts) < 2:
        raise ValueError("neighbouring snakes need a snake of length >= 2")
    if not is_prime_snake(pts, l):
        raise ValueError(f"{format_snake(pts)} is not a prime snake in A_{l}")
    xs: list[LatticePoint] = []
    ys: list[LatticePoint] = []
    for a, b in zip(pts, pts[1:]):
        x, y = neighbouring_points(a, b, l)
        if x is not None:
            xs.append(x)
        if y is not None:
            ys.append(y)
    return Snake(xs, l), Snake(ys, l)


def prime_successors(p: Sequence[int], l: int) -> list[LatticePoint]:
    """All points in prime snake position after ``p``."""
    i, k = p
    out = []
    for i2 in range(1, l + 1):
        lo = abs(i2 - i) + 2
        hi = min(i + i2, 2 * l + 2 - i - i2)
        for d in range(lo, hi + 1, 2):
            out.append(LatticePoint(i2, k + d))
    return out


def minimal_successors(p: Sequence[int], l: int) -> list[LatticePoint]:
    i, k = p
    return [LatticePoint(i2, k + abs(i2 - i) + 2) for i2 in range(1, l + 1)]


def enumerate_prime_snakes(l: int, length: int, start: Sequence[int]) -> Iterator[Snake]:
    """All prime snakes of the given length beginning at ``start``."""
    def grow(pts: list[LatticePoint]):
        if len(pts) == length:
            yield Snake(pts, l)
            return
        for nxt in prime_successors(pts[-1], l):
            yield from grow(pts + [nxt])

    if length < 1:
        return
    yield from grow([LatticePoint(*start)])


def random_prime_snake(l: int, length: int, rng: random.Random, k0: int = 0) -> Snake:
    i = rng.randint(1, l)
    pts = [LatticePoint(i, k0 + (i % 2))]
    while len(pts) < length:
        pts.append(rng.choice(prime_successors(pts[-1], l)))
    return Snake(pts, l)


def parse_snake(text: str, l: int) -> Snake:
    """``"1:0,2:3,1:6"`` -> Snake."""
    text = text.strip()
    if not text:
        return Snake([], l)
    pts = []
    for chunk in text.split(","):
        try:
            i, k = chunk.split(":")
            pts.append((int(i), int(k)))
        except ValueError as exc:
            raise ValueError(f"bad snake point {chunk!r}; expected i:k") from exc
    return Snake(pts, l)


def format_snake(points: Iterable[Sequence[int]]) -> str:
    return ",".join(f"{i}:{k}" for i, k in points)
