"""A truncated piece of the infinite quiver ``G^-`` of type ``A_l`` and its seeds.

Vertices are the points ``(i, r)`` with ``i - r`` even and ``-2*depth <= r <= 0``.
Arrows go up each column, ``(i, r) -> (i, r + 2)``, and diagonally down to the
neighbouring columns, ``(i, r) -> (i +- 1, r - 1)``.  The vertices within graph
distance 2 of the bottom of each column are frozen so that the cut never feeds
into mutated vertices directly.

Cluster variables are Laurent polynomials in the ``Y[i,k]``.  They are kept in
FLINT form, ``P * y^e`` with ``P`` a polynomial free of monomial factors, so the
exchange relation divides polynomials exactly; a non-exact division raises
:class:`TruncationContaminationError`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import flint

from .loopalg import LatticePoint, LoopMonomial, LoopPolynomial
from .paths import q_character
from .snakes import kr_highest_weight, snake_of_kr

__all__ = [
    "TruncationContaminationError",
    "LaurentRing",
    "LaurentValue",
    "Quiver",
    "Seed",
    "build_gminus",
    "kr_index",
    "initial_variables",
    "initial_seed",
    "mutate",
    "sequence_S",
    "round_columns",
    "run_rounds",
    "VertexCheck",
    "KRReport",
    "quiver_core",
    "verify_kr_correspondence",
]


class TruncationContaminationError(ArithmeticError):
    """An exchange relation did not divide exactly."""

    def __init__(self, vertex, detail: str = ""):
        self.vertex = vertex
        super().__init__(f"inexact exchange relation at vertex {tuple(vertex)}" + (f": {detail}" if detail else ""))


# -- Laurent arithmetic over FLINT -----------------------------------------

class LaurentRing:
    """Variables ``Y[i,k]`` for ``1 <= i <= l`` and ``kmin <= k <= kmax`` with ``i - k`` even."""

    def __init__(self, l: int, kmin: int, kmax: int):
        self.rank = l
        self.points = [LatticePoint(i, k) for i in range(1, l + 1)
                       for k in range(kmin, kmax + 1) if (i - k) % 2 == 0]
        self.index = {p: j for j, p in enumerate(self.points)}
        self.nvars = len(self.points)
        self.ctx = flint.fmpz_mpoly_ctx.get(("y", self.nvars), "lex")
        self._zero_vec = (0,) * self.nvars

    def covers(self, p: Sequence[int]) -> bool:
        return tuple(p) in self.index

    def monomial(self, vec: Sequence[int]) -> "flint.fmpz_mpoly":
        return self.ctx.from_dict({tuple(vec): 1})

    def make(self, poly, shift: Sequence[int]) -> "LaurentValue":
        """Normalise ``poly * y^shift`` by moving the monomial content into the shift."""
        if poly.is_zero():
            raise ZeroDivisionError("cluster variables are nonzero")
        tc = poly.term_content()
        content = tc.monoms()[0]
        if any(content):
            poly = poly / self.monomial(content)
            shift = [a + b for a, b in zip(shift, content)]
        return LaurentValue(self, poly, tuple(shift))

    def from_monomial(self, m: LoopMonomial) -> "LaurentValue":
        vec = [0] * self.nvars
        for p, e in m.items():
            vec[self.index[p]] = e
        return LaurentValue(self, self.ctx.from_dict({self._zero_vec: 1}), tuple(vec))

    def from_polynomial(self, f: LoopPolynomial) -> "LaurentValue":
        rows = []
        low = [0] * self.nvars
        for m, c in f.items():
            vec = [0] * self.nvars
            for p, e in m.items():
                j = self.index[p]
                vec[j] = e
                if e < low[j]:
                    low[j] = e
            rows.append((vec, c))
        data = {tuple(v - s for v, s in zip(vec, low)): c for vec, c in rows}
        return self.make(self.ctx.from_dict(data), low)


class LaurentValue:
    """``poly * y^shift`` with ``poly`` free of monomial factors."""

    __slots__ = ("ring", "poly", "shift")

    def __init__(self, ring: LaurentRing, poly, shift: tuple[int, ...]):
        self.ring = ring
        self.poly = poly
        self.shift = shift

    def __mul__(self, other: "LaurentValue") -> "LaurentValue":
        return LaurentValue(self.ring, self.poly * other.poly,
                            tuple(a + b for a, b in zip(self.shift, other.shift)))

    def __pow__(self, n: int) -> "LaurentValue":
        if n < 0:
            raise ValueError("negative powers are not supported")
        return LaurentValue(self.ring, self.poly ** n, tuple(a * n for a in self.shift))

    def __add__(self, other: "LaurentValue") -> "LaurentValue":
        low = [min(a, b) for a, b in zip(self.shift, other.shift)]
        ring = self.ring
        p1 = self.poly * ring.monomial([a - b for a, b in zip(self.shift, low)])
        p2 = other.poly * ring.monomial([a - b for a, b in zip(other.shift, low)])
        return ring.make(p1 + p2, low)

    def exact_div(self, other: "LaurentValue") -> "LaurentValue":
        """Exact quotient; raises ``ArithmeticError`` when the division leaves a remainder."""
        try:
            quo = self.poly / other.poly
        except Exception as exc:  # FLINT raises DomainError for a non-exact quotient
            raise ArithmeticError(str(exc)) from exc
        return self.ring.make(quo, [a - b for a, b in zip(self.shift, other.shift)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentValue):
            return NotImplemented
        return self.shift == other.shift and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.shift)

    def __len__(self) -> int:
        return len(self.poly)

    def to_polynomial(self) -> LoopPolynomial:
        ring = self.ring
        pts = ring.points
        raw = LoopMonomial._raw
        terms = {}
        for vec, c in self.poly.to_dict().items():
            exps = {}
            for j, v in enumerate(vec):
                e = v + self.shift[j]
                if e:
                    exps[pts[j]] = e
            terms[raw(ring.rank, exps)] = int(c)
        return LoopPolynomial._raw(ring.rank, terms)


# -- quiver -----------------------------------------------------------------

class Quiver:
    """Exchange matrix stored sparsely: ``b[u][v]`` is the signed arrow count ``u -> v``."""

    def __init__(self, vertices: Iterable[Sequence[int]], arrows: Iterable[tuple] = (),
                 frozen: Iterable[Sequence[int]] = ()):
        self.vertices: tuple[LatticePoint, ...] = tuple(sorted(LatticePoint(*v) for v in vertices))
        vset = set(self.vertices)
        self.frozen: frozenset[LatticePoint] = frozenset(LatticePoint(*v) for v in frozen)
        if not self.frozen <= vset:
            raise ValueError("frozen vertices must belong to the quiver")
        self._b: dict[LatticePoint, dict[LatticePoint, int]] = {v: {} for v in self.vertices}
        for arrow in arrows:
            u, v = LatticePoint(*arrow[0]), LatticePoint(*arrow[1])
            mult = arrow[2] if len(arrow) > 2 else 1
            if u == v:
                raise ValueError(f"loop at {tuple(u)}")
            if u not in vset or v not in vset:
                raise ValueError(f"arrow {tuple(u)} -> {tuple(v)} leaves the vertex set")
            self._add(u, v, mult)

    def _add(self, u, v, n: int) -> None:
        bu, bv = self._b[u], self._b[v]
        x = bu.get(v, 0) + n
        if x:
            bu[v] = x
            bv[u] = -x
        else:
            bu.pop(v, None)
            bv.pop(u, None)

    def b(self, u: Sequence[int], v: Sequence[int]) -> int:
        return self._b[LatticePoint(*u)].get(LatticePoint(*v), 0)

    def in_neighbours(self, v: Sequence[int]) -> dict[LatticePoint, int]:
        return {u: -n for u, n in self._b[LatticePoint(*v)].items() if n < 0}

    def out_neighbours(self, v: Sequence[int]) -> dict[LatticePoint, int]:
        return {w: n for w, n in self._b[LatticePoint(*v)].items() if n > 0}

    def arrows(self) -> list[tuple[LatticePoint, LatticePoint, int]]:
        return [(u, v, n) for u in self.vertices for v, n in sorted(self._b[u].items()) if n > 0]

    def neighbours(self, v: Sequence[int]) -> list[LatticePoint]:
        return sorted(self._b[LatticePoint(*v)])

    def is_frozen(self, v: Sequence[int]) -> bool:
        return LatticePoint(*v) in self.frozen

    def copy(self) -> "Quiver":
        out = Quiver.__new__(Quiver)
        out.vertices = self.vertices
        out.frozen = self.frozen
        out._b = {v: dict(row) for v, row in self._b.items()}
        return out

    def check_invariants(self) -> bool:
        """Skew-symmetric exchange matrix: no loops and no 2-cycles."""
        for u, row in self._b.items():
            if u in row:
                return False
            for v, n in row.items():
                if self._b[v].get(u) != -n or n == 0:
                    return False
        return True

    def mutate(self, k: Sequence[int]) -> "Quiver":
        """Quiver mutation at ``k``; entries between two frozen vertices are left alone."""
        k = LatticePoint(*k)
        if k not in self._b:
            raise ValueError(f"{tuple(k)} is not a vertex")
        out = self.copy()
        ins = self.in_neighbours(k)
        outs = self.out_neighbours(k)
        for i, a in ins.items():
            for j, c in outs.items():
                if i in self.frozen and j in self.frozen:
                    continue
                out._add(i, j, a * c)
        for w, n in list(out._b[k].items()):
            out._b[k][w] = -n
            out._b[w][k] = n
        return out

    def restricted(self, vertices: Iterable[Sequence[int]]) -> dict[tuple, int]:
        vs = {LatticePoint(*v) for v in vertices}
        return {(u, v): n for u in sorted(vs) for v, n in self._b[u].items() if v in vs and n > 0}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return (self.vertices == other.vertices and self.frozen == other.frozen
                and self.arrows() == other.arrows())

    def to_json(self) -> dict:
        return {
            "vertices": [{"i": v.i, "r": v.k, "frozen": v in self.frozen} for v in self.vertices],
            "arrows": [[list(u), list(v), n] for u, v, n in self.arrows()],
        }


def build_gminus(l: int, depth: int) -> Quiver:
    """Truncation of ``G^-`` to ``r >= -2*depth`` with a frozen collar at the floor."""
    if l < 1:
        raise ValueError(f"rank must be >= 1, got {l}")
    if depth < 4:
        raise ValueError(f"depth must be >= 4, got {depth}")
    floor = -2 * depth
    verts = [LatticePoint(i, r) for i in range(1, l + 1)
             for r in range(floor, 1) if (i - r) % 2 == 0]
    vset = set(verts)
    arrows = []
    for i, r in verts:
        for target in ((i, r + 2), (i - 1, r - 1), (i + 1, r - 1)):
            if target in vset:
                arrows.append(((i, r), target))
    q = Quiver(verts, arrows)
    bottoms = [min((v for v in verts if v.i == i), key=lambda v: v.k) for i in range(1, l + 1)]
    dist = {v: 0 for v in bottoms}
    frontier = list(bottoms)
    for step in (1, 2):
        nxt = []
        for v in frontier:
            for w in q.neighbours(v):
                if w not in dist:
                    dist[w] = step
                    nxt.append(w)
        frontier = nxt
    q.frozen = frozenset(dist)
    return q


def kr_index(i: int, r: int) -> int:
    """``k_{i,r} = floor(|r| / 2) + 1``, the number of factors of ``z_{i,r}``."""
    return abs(r) // 2 + 1


def initial_variables(l: int, depth: int) -> dict[LatticePoint, LoopPolynomial]:
    """``z_{i,r} = Y[i,r] Y[i,r+2] ... `` up to ``r + 2t <= 0``."""
    q = build_gminus(l, depth)
    return {v: LoopPolynomial.from_monomial(kr_highest_weight(v.i, v.k, kr_index(v.i, v.k), l))
            for v in q.vertices}


# -- seeds --------------------------------------------------------------------

@dataclass
class Seed:
    quiver: Quiver
    values: dict[LatticePoint, LaurentValue]
    ring: LaurentRing = field(repr=False)

    def variable(self, v: Sequence[int]) -> LoopPolynomial:
        return self.values[LatticePoint(*v)].to_polynomial()

    @property
    def variables(self) -> dict[LatticePoint, LoopPolynomial]:
        return {v: val.to_polynomial() for v, val in self.values.items()}

    def mutate(self, v: Sequence[int]) -> "Seed":
        return mutate(self, v)

    def to_json(self) -> dict:
        data = self.quiver.to_json()
        for entry in data["vertices"]:
            entry["variable"] = str(self.variable((entry["i"], entry["r"])))
        data["rank"] = self.ring.rank
        return data

    def dump(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1)
            fh.write("\n")


def _ring_for(l: int, depth: int, rounds: int) -> LaurentRing:
    return LaurentRing(l, -2 * depth - 2 * rounds - 4, 2)


def initial_seed(l: int, depth: int, ring: LaurentRing | None = None, rounds: int = 4) -> Seed:
    q = build_gminus(l, depth)
    ring = ring or _ring_for(l, depth, rounds)
    values = {v: ring.from_monomial(kr_highest_weight(v.i, v.k, kr_index(v.i, v.k), l))
              for v in q.vertices}
    return Seed(q, values, ring)


def mutate(seed: Seed, vertex: Sequence[int]) -> Seed:
    """Exchange relation at a non-frozen vertex plus quiver mutation."""
    k = LatticePoint(*vertex)
    q = seed.quiver
    if k not in q._b:
        raise ValueError(f"{tuple(k)} is not a vertex")
    if k in q.frozen:
        raise ValueError(f"{tuple(k)} is frozen")
    ring = seed.ring
    one = LaurentValue(ring, ring.ctx.from_dict({ring._zero_vec: 1}), ring._zero_vec)

    def prod(nbrs: dict) -> LaurentValue:
        acc = one
        for u, n in sorted(nbrs.items()):
            acc = acc * (seed.values[u] ** n)
        return acc

    numer = prod(q.in_neighbours(k)) + prod(q.out_neighbours(k))
    try:
        new = numer.exact_div(seed.values[k])
    except ArithmeticError as exc:
        raise TruncationContaminationError(k, str(exc)) from exc
    values = dict(seed.values)
    values[k] = new
    return Seed(q.mutate(k), values, ring)


# -- the sequence S -----------------------------------------------------------

def round_columns(l: int, rounds: int = 1) -> list[int]:
    """Column order produced by the label automaton.

    Column ``i`` starts with the label of its top vertex (``r = 0`` or ``-1``).
    The column with the largest label is picked, ties going to the smallest
    ``i``, and its label then drops by 2.  Each round picks ``l`` columns.
    """
    labels = {i: (0 if i % 2 == 0 else -1) for i in range(1, l + 1)}
    order = []
    for _ in range(rounds * l):
        i = min(labels, key=lambda c: (-labels[c], c))
        order.append(i)
        labels[i] -= 2
    return order


def sequence_S(l: int, depth: int, rounds: int) -> list[LatticePoint]:
    """Vertices to mutate, column by column, top to bottom, skipping frozen vertices."""
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    q = build_gminus(l, depth)
    columns = {i: sorted((v for v in q.vertices if v.i == i and v not in q.frozen),
                         key=lambda v: -v.k) for i in range(1, l + 1)}
    return [v for i in round_columns(l, rounds) for v in columns[i]]


def run_rounds(l: int, depth: int, rounds: int, ring: LaurentRing | None = None,
               on_round=None) -> Seed:
    """Apply ``rounds`` full rounds of the sequence to the initial seed."""
    ring = ring or _ring_for(l, depth, rounds)
    seed = initial_seed(l, depth, ring)
    per_round = sequence_S(l, depth, 1)
    for m in range(1, rounds + 1):
        for v in per_round:
            seed = mutate(seed, v)
        if on_round is not None:
            on_round(m, seed)
    return seed


# -- the Kirillov-Reshetikhin correspondence ---------------------------------

@dataclass(frozen=True)
class VertexCheck:
    vertex: LatticePoint
    k: int
    stable: bool
    match: bool | None  # None when the vertex is outside the stable region

    @property
    def status(self) -> str:
        if not self.stable:
            return "UNSTABLE"
        return "PASS" if self.match else "FAIL"


@dataclass
class KRReport:
    rank: int
    depth: int
    rounds: int
    check_depth: int
    vertices: list[VertexCheck]
    quiver_restored: list[bool]
    seed: Seed | None = field(default=None, repr=False)

    @property
    def stable(self) -> list[VertexCheck]:
        return [c for c in self.vertices if c.stable]

    @property
    def ok(self) -> bool:
        return bool(self.stable) and all(c.match for c in self.stable) and all(self.quiver_restored)

    @property
    def boundary(self) -> dict[int, int]:
        """Lowest stable ``r`` in each column."""
        out: dict[int, int] = {}
        for c in self.stable:
            out[c.vertex.i] = min(out.get(c.vertex.i, 0), c.vertex.k)
        return out

    def lines(self) -> list[str]:
        out = [f"{c.status} vertex ({c.vertex.i},{c.vertex.k}) k={c.k}" for c in self.vertices]
        for m, ok in enumerate(self.quiver_restored, 1):
            out.append(f"{'PASS' if ok else 'FAIL'} quiver shape after round {m}")
        return out


def quiver_core(q: Quiver, margin: int = 1) -> list[LatticePoint]:
    """Vertices at undirected graph distance greater than ``margin`` from the frozen set.

    Arrows near the frozen collar are not restored by a round of the sequence,
    since mutation never updates frozen-frozen pairs; the defect climbs about
    one layer per round, so after ``m`` rounds the shape is compared on
    ``quiver_core(q, m)``.
    """
    dist = {v: 0 for v in q.frozen}
    frontier = sorted(q.frozen)
    step = 0
    while frontier and step < margin:
        step += 1
        nxt = []
        for v in frontier:
            for w in q.neighbours(v):
                if w not in dist:
                    dist[w] = step
                    nxt.append(w)
        frontier = nxt
    return [v for v in q.vertices if v not in dist]


def verify_kr_correspondence(l: int, depth: int, m: int | None = None,
                             check_depth: int | None = None) -> KRReport:
    """Run ``m`` rounds and compare interior variables with KR q-characters.

    The same rounds are also run at ``check_depth`` (default ``2 * depth``); the
    stable region is the set of non-frozen vertices whose variables agree in
    both runs.  After every round the quiver is compared with ``G^-`` on
    :func:`quiver_core`.
    """
    need = math.ceil((l + 1) / 2)
    if m is None:
        m = need
    if m < need:
        raise ValueError(f"m must be >= {need} for rank {l}")
    check_depth = 2 * depth if check_depth is None else check_depth
    if check_depth <= depth:
        raise ValueError("check_depth must exceed depth")
    ring = _ring_for(l, check_depth, m)
    g = build_gminus(l, depth)
    interior = [v for v in g.vertices if v not in g.frozen]
    restored: list[bool] = []

    def watch(rnd, seed):
        core = quiver_core(g, rnd)
        restored.append(bool(core) and seed.quiver.restricted(core) == g.restricted(core))

    seed = run_rounds(l, depth, m, ring, on_round=watch)
    deep = run_rounds(l, check_depth, m, ring)
    checks = []
    for v in sorted(interior, key=lambda v: (v.i, -v.k)):
        k = kr_index(v.i, v.k)
        stable = seed.values[v] == deep.values[v]
        match = None
        if stable:
            oracle = q_character(snake_of_kr(v.i, v.k - 2 * m, k, l))
            match = seed.values[v] == ring.from_polynomial(oracle)
        checks.append(VertexCheck(v, k, stable, match))
    return KRReport(l, depth, m, check_depth, checks, restored, seed)
