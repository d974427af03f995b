"""The eleven acceptance checks, shared by the test suite and ``selftest``.

Each check returns a :class:`CriterionResult`; a check passes only when its
identity holds and it finishes inside its time budget.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import cluster, rmatrix, sl2eval, tsys
from .loopalg import factor_into_roots
from .paths import enumerate_paths, fundamental_character, q_character
from .qarith import ZERO, QLaurent, q_binomial, q_factorial
from .snakes import Snake, neighbouring_snakes, random_prime_snake, snake_of_kr

__all__ = [
    "CriterionResult",
    "CRITERIA",
    "snake_sample",
    "minimal_a4_snake",
    "run_all",
]


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float
    budget: float

    @property
    def passed(self) -> bool:
        return self.ok and self.seconds < self.budget

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} criterion {self.number}: {self.title} "
                f"({self.detail}; {self.seconds:.2f}s of {self.budget:.0f}s)")


def _timed(number: int, title: str, budget: float, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    ok, detail = body()
    return CriterionResult(number, title, ok, detail, time.perf_counter() - t0, budget)


# -- shared samples -----------------------------------------------------------

def minimal_a4_snake() -> Snake:
    """A length-5 minimal snake in ``A_4``; consecutive gaps are ``|di| + 2``."""
    return Snake([(1, 1), (2, 4), (3, 7), (4, 10), (3, 13)], 4)


def snake_sample(count: int = 60, seed: int = 20240501) -> list[Snake]:
    """Deterministic prime snakes of length 2..5 in ``A_l`` for ``l <= 4``, plus the ``A_4`` minimal one."""
    rng = random.Random(seed)
    out = [minimal_a4_snake()]
    while len(out) < count:
        l = rng.randint(1, 4)
        out.append(random_prime_snake(l, rng.randint(2, 5), rng))
    return out


def _related_snakes(s: Snake) -> list[Snake]:
    """The snake itself and every snake appearing in its extended T-system."""
    xs, ys = neighbouring_snakes(s)
    return [s, s[:-1], s[1:], s[1:-1], xs, ys]


# -- the criteria ---------------------------------------------------------------

def criterion_1() -> CriterionResult:
    def body():
        bad = []
        for r in range(16):
            for k in range(r + 1):
                b = q_binomial(r, k)
                if b * q_factorial(k) * q_factorial(r - k) != q_factorial(r):
                    bad.append(("factorial", r, k))
                if r >= 1:
                    lo = q_binomial(r - 1, k).shift(-k) if k <= r - 1 else ZERO
                    hi = q_binomial(r - 1, k - 1).shift(r - k) if k >= 1 else ZERO
                    if b != lo + hi:
                        bad.append(("recurrence", r, k))
            if r >= 1:
                total = ZERO
                for k in range(r + 1):
                    total = total + q_binomial(r, k).shift(-(r - 1) * k) * (-1) ** k
                if not total.is_zero():
                    bad.append(("alternating sum", r))
        return not bad, f"r <= 15, {len(bad)} violations"
    return _timed(1, "q-binomial identities", 1.0, body)


def criterion_2() -> CriterionResult:
    def body():
        bad = []
        for l in range(1, 7):
            for i in range(1, l + 1):
                n = math.comb(l + 1, i)
                if len(enumerate_paths(i, i % 2, l)) != n:
                    bad.append(("count", i, l))
                if fundamental_character(i, i % 2, l).eval_at_q1() != n:
                    bad.append(("dimension", i, l))
        return not bad, f"1 <= i <= l <= 6, {len(bad)} violations"
    return _timed(2, "path counts and fundamental dimensions", 1.0, body)


def criterion_3() -> CriterionResult:
    def body():
        bad = []
        for r in range(0, 11):
            for s in (r % 2, r % 2 + 2, r % 2 - 4):
                m = sl2eval.EvalModule(r, s)
                if r == 0:
                    ok = sl2eval.q_character_closed(m) == 1
                else:
                    ok = sl2eval.q_character_closed(m) == q_character(snake_of_kr(1, s - r + 1, r, 1))
                if not ok:
                    bad.append((r, s))
        return not bad, f"r <= 10, {len(bad)} mismatches"
    return _timed(3, "closed sl2 character equals path formula", 5.0, body)


def criterion_4() -> CriterionResult:
    def body():
        failures = 0
        checked = 0
        for r in range(5):
            for s in (r % 2, r % 2 + 2, r % 2 - 2):
                m = sl2eval.EvalModule(r, s)
                res = sl2eval.check_drinfeld_relations(m, 2)
                checked += len(res)
                failures += sum(not ok for _, ok in res)
                checked += 1
                failures += not sl2eval.check_k_conjugation(m, 2)
        for r in range(6):
            for k in range(r + 1):
                for s in (r % 2, r % 2 + 2):
                    checked += 1
                    failures += not sl2eval.drinfeld_series_check(sl2eval.EvalModule(r, s), k, 10)
        return failures == 0, f"{checked} relations and series, {failures} failures"
    return _timed(4, "sl2 Drinfeld relations and eigenvalue series", 10.0, body)


def criterion_5() -> CriterionResult:
    def body():
        bad = []
        n_t = 0
        for l in range(1, 5):
            for i in range(1, l + 1):
                for r in range(1, 4):
                    for k in (i % 2, i % 2 - 2):
                        n_t += 1
                        if not tsys.verify_t_system(i, k, r, l):
                            bad.append(("T", i, k, r, l))
        sample = snake_sample()
        for s in sample:
            if not tsys.verify_extended_t_system(s):
                bad.append(("ext", str(s), s.rank))
        return not bad, f"{n_t} T-system cases, {len(sample)} snakes, {len(bad)} failures"
    return _timed(5, "T-system and extended T-system", 60.0, body)


def criterion_6() -> CriterionResult:
    def body():
        bad = []
        seen = set()
        for s in snake_sample():
            for t in _related_snakes(s):
                if (t.points, t.rank) in seen:
                    continue
                seen.add((t.points, t.rank))
                ch = q_character(t)
                if any(c != 1 for c in ch.coefficients()):
                    bad.append(("thin", str(t)))
                if len(ch.dominant_monomials()) != 1 or len(ch.antidominant_monomials()) != 1:
                    bad.append(("special", str(t)))
        return not bad, f"{len(seen)} characters, {len(bad)} failures"
    return _timed(6, "thin, special and anti-special characters", 60.0, body)


def criterion_7() -> CriterionResult:
    def body():
        bad = 0
        monos = 0
        seen = set()
        for s in snake_sample():
            for t in _related_snakes(s):
                if (t.points, t.rank) in seen or not len(t):
                    continue
                seen.add((t.points, t.rank))
                top = t.highest_monomial()
                for m in q_character(t).monomials():
                    if m == top:
                        continue
                    monos += 1
                    c = factor_into_roots(m, top)
                    if not c or any(e >= 0 for e in c.values()):
                        bad += 1
        return bad == 0, f"{monos} monomials in {len(seen)} characters, {bad} failures"
    return _timed(7, "highest loop-weight factorisation", 30.0, body)


def _segment(r: int, s: int) -> set[int]:
    return {s + r - 2 * j + 1 for j in range(1, r + 1)}


def criterion_8() -> CriterionResult:
    def body():
        bad_identity = []
        n_special = 0
        multi_dominant = []
        n_general = 0
        for k in range(1, 5):
            for l in range(1, 5):
                s1 = k % 2
                for p in range(min(k, l)):
                    for sign in (1, -1):
                        s2 = s1 + sign * (k + l - 2 * p)
                        d = sl2eval.special_position(k, l, s1, s2)
                        n_special += 1
                        if (d is None or d.p != p or d.case != ("+" if sign > 0 else "-")
                                or not sl2eval.tensor_identity_check(d)):
                            bad_identity.append((k, l, p, sign))
                for delta in range(-(k + l + 4), k + l + 5):
                    s2 = s1 + delta
                    if (s2 + l) % 2 or sl2eval.special_position(k, l, s1, s2) is not None:
                        continue
                    n_general += 1
                    if sl2eval.general_position_dominant_count(k, l, s1, s2) != 1:
                        multi_dominant.append((k, l, delta))
        detail = (f"{n_special} special cases, {len(bad_identity)} identity failures; "
                  f"{n_general} general-position pairs, {len(multi_dominant)} with more than one "
                  f"dominant monomial")
        if multi_dominant:
            k, l, delta = multi_dominant[0]
            detail += f", e.g. k={k} l={l} s2-s1={delta}"
        return not bad_identity and not multi_dominant, detail
    return _timed(8, "special-position decomposition", 30.0, body)


def criterion_9() -> CriterionResult:
    def body():
        bad = [(r, k) for r in range(1, 7) for k in (-1, 1)
               if tsys.kr_determinant_sl2(r, k) != tsys.kr_character(1, k, r, 1)]
        return not bad, f"r <= 6, {len(bad)} mismatches"
    return _timed(9, "sl2 determinant formula", 5.0, body)


def criterion_10() -> CriterionResult:
    def body():
        parts = []
        ok = True
        for l in (1, 2, 3):
            rep = cluster.verify_kr_correspondence(l, 10)
            ok = ok and rep.ok
            parts.append(f"l={l}: {len(rep.stable)}/{len(rep.vertices)} stable, "
                         f"{sum(bool(c.match) for c in rep.stable)} match, quiver {rep.quiver_restored}")
        return ok, "; ".join(parts)
    return _timed(10, "cluster variables are KR characters", 120.0, body)


def criterion_11() -> CriterionResult:
    def body():
        res = {
            "ybe l=1 exact": rmatrix.check_ybe(1, "exact"),
            "ybe l=2 exact": rmatrix.check_ybe(2, "exact"),
            "ybe l=3 sampled": rmatrix.check_ybe(3, "sampled", 20),
        }
        for l in (1, 2, 3):
            res[f"regularity l={l}"] = rmatrix.check_regularity(l)
            res[f"unitarity l={l}"] = rmatrix.check_unitarity(l).ok
        failed = [k for k, v in res.items() if not v]
        return not failed, f"{len(res)} checks, failed: {failed or 'none'}"
    return _timed(11, "Yang-Baxter, regularity and unitarity", 60.0, body)


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
    11: criterion_11,
}


def run_all(numbers=None) -> list[CriterionResult]:
    return [CRITERIA[n]() for n in (numbers or sorted(CRITERIA))]
