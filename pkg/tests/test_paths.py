import itertools
import random
from math import comb

import pytest

from qaffine.loopalg import LoopMonomial, LoopPolynomial, affine_root, wt
from qaffine.paths import (Path, corners, enumerate_paths, fundamental_character, is_non_overlapping,
                           lower_move, lower_tuple, path_monomial, path_tuples, q_character,
                           raise_move, raise_tuple)
from qaffine.snakes import Snake, enumerate_prime_snakes, is_snake, random_prime_snake


def Y(i, k, l, e=1):
    return LoopMonomial.Y(i, k, l, e)


def brute_paths(i, k, l):
    """Every +-1 word of length l+1, filtered by its endpoints."""
    out = set()
    for steps in itertools.product((-1, 1), repeat=l + 1):
        y = [i + k]
        for d in steps:
            y.append(y[-1] + d)
        if y[-1] == l + 1 - i + k:
            out.add(tuple(y))
    return out


def corner_oracle(y):
    up, low = set(), set()
    for j in range(1, len(y) - 1):
        if y[j] < y[j - 1] and y[j] < y[j + 1]:
            up.add((j, y[j]))
        if y[j] > y[j - 1] and y[j] > y[j + 1]:
            low.add((j, y[j]))
    return up, low


# -- enumeration ---------------------------------------------------------------------------

def test_path_count_examples():
    assert len(enumerate_paths(1, 0, 1)) == 2
    assert len(enumerate_paths(1, 0, 2)) == 3
    assert len(enumerate_paths(2, 0, 3)) == 6


@pytest.mark.parametrize("l", range(1, 7))
def test_enumeration_matches_brute_force(l):
    for i in range(1, l + 1):
        for k in (i % 2, i % 2 + 4):
            got = {p.heights for p in enumerate_paths(i, k, l)}
            assert got == brute_paths(i, k, l)
            assert len(got) == comb(l + 1, i)
            assert fundamental_character(i, k, l).eval_at_q1() == comb(l + 1, i)


def test_invalid_paths_rejected():
    with pytest.raises(ValueError):
        Path((1, 2, 2), (1, 0), 1)
    with pytest.raises(ValueError):
        Path((1, 2, 3), (1, 0), 1)
    with pytest.raises(ValueError):
        enumerate_paths(3, 1, 2)


# -- corners and monomials ----------------------------------------------------------------

def test_corner_examples():
    dom = Path((2, 1, 0, 1, 2), (2, 0), 3)
    assert corners(dom) == ({(2, 0)}, set())
    assert corners(Path((1, 2, 1), (1, 0), 1)) == (set(), {(1, 2)})


@pytest.mark.parametrize("l", range(1, 6))
def test_corners_match_local_extrema(l):
    for i in range(1, l + 1):
        for p in enumerate_paths(i, i % 2, l):
            up, low = corner_oracle(p.heights)
            assert corners(p) == (up, low)


def test_monomial_examples():
    for l in range(1, 5):
        for i in range(1, l + 1):
            assert path_monomial(enumerate_paths(i, i % 2, l)[0]) == Y(i, i % 2, l)
    assert path_monomial(Path((1, 2, 1), (1, 0), 1)) == Y(1, 2, 1, -1)
    middle = Path((1, 2, 1, 2), (1, 0), 2)
    assert path_monomial(middle) == LoopMonomial({(2, 1): 1, (1, 2): -1}, 2)


# -- moves ------------------------------------------------------------------------------

def test_move_examples():
    dom = Path((1, 0, 1), (1, 0), 1)
    low = lower_move(dom, (1, 1))
    assert low.heights == (1, 2, 1)
    assert path_monomial(low) == Y(1, 2, 1, -1)
    assert lower_move(dom, (1, 3)) is None
    assert raise_move(low, (1, 1)) == dom


@pytest.mark.parametrize("l", range(1, 5))
def test_moves_multiply_by_roots(l):
    """Every eligible move changes the monomial by exactly one root factor."""
    for i in range(1, l + 1):
        for k in (i % 2, i % 2 + 2):
            for p in enumerate_paths(i, k, l):
                for a in range(1, l + 1):
                    for b in range(k - 2 * l - 4, k + 2 * l + 6):
                        if (a - b) % 2 == (i - k) % 2:
                            continue  # roots A[a,b] live on the other parity class
                        lo = lower_move(p, (a, b))
                        if lo is not None:
                            assert path_monomial(lo) == path_monomial(p) * affine_root(a, b, l) ** -1
                            assert raise_move(lo, (a, b)) == p
                        hi = raise_move(p, (a, b))
                        if hi is not None:
                            assert path_monomial(hi) == path_monomial(p) * affine_root(a, b, l)
                            assert lower_move(hi, (a, b)) == p


def test_every_path_reached_by_lowering_from_the_top():
    for l in range(1, 5):
        for i in range(1, l + 1):
            paths = enumerate_paths(i, 0 if i % 2 == 0 else 1, l)
            seen = {paths[0]}
            frontier = [paths[0]]
            while frontier:
                p = frontier.pop()
                for a in range(1, l + 1):
                    for b in range(-10, 20):
                        lo = lower_move(p, (a, b))
                        if lo is not None and lo not in seen:
                            seen.add(lo)
                            frontier.append(lo)
            assert seen == set(paths)


def test_tuple_moves_keep_non_overlap():
    s = Snake([(1, 0), (2, 3)], 2)
    for tup in path_tuples(s):
        for a in (1, 2):
            for b in range(-2, 10):
                for mv in (lower_tuple, raise_tuple):
                    out = mv(tup, (a, b))
                    if out is not None:
                        assert is_non_overlapping(out)


# -- q-characters -------------------------------------------------------------------------

def test_q_character_examples():
    for k in (-1, 1, 3):
        assert q_character([(1, k)], 1) == LoopPolynomial({Y(1, k, 1): 1, Y(1, k + 2, 1, -1): 1}, 1)
    assert q_character([(1, 0)], 2) == LoopPolynomial(
        {Y(1, 0, 2): 1, LoopMonomial({(1, 2): -1, (2, 1): 1}, 2): 1, Y(2, 3, 2, -1): 1}, 2)
    kr = q_character([(1, 0), (1, 2)], 1)
    assert kr == LoopPolynomial({
        LoopMonomial({(1, 0): 1, (1, 2): 1}, 1): 1,
        LoopMonomial({(1, 0): 1, (1, 4): -1}, 1): 1,
        LoopMonomial({(1, 2): -1, (1, 4): -1}, 1): 1,
    }, 1)


def test_non_snake_rejected():
    with pytest.raises(ValueError):
        q_character([(1, 0), (1, 1)], 1)


def tuple_oracle(s):
    """Product over all path choices, then filter by the full pairwise non-overlap condition."""
    pools = [enumerate_paths(i, k, s.rank) for i, k in s.points]
    acc = {}
    for choice in itertools.product(*pools):
        if all(choice[a].is_strictly_above(choice[b])
               for a in range(len(choice)) for b in range(a + 1, len(choice))):
            m = LoopMonomial.identity(s.rank)
            for p in choice:
                m = m * path_monomial(p)
            acc[m] = acc.get(m, 0) + 1
    return LoopPolynomial(acc, s.rank)


def test_q_character_matches_unpruned_enumeration():
    rng = random.Random(3)
    for _ in range(25):
        l = rng.randint(1, 3)
        s = random_prime_snake(l, rng.randint(1, 3), rng)
        assert q_character(s) == tuple_oracle(s)


def test_thin_and_special_on_random_snakes():
    rng = random.Random(5)
    for _ in range(40):
        l = rng.randint(1, 4)
        s = random_prime_snake(l, rng.randint(1, 5), rng)
        ch = q_character(s)
        assert all(c == 1 for c in ch.coefficients())
        assert ch.dominant_monomials() == [s.highest_monomial()]
        assert len(ch.antidominant_monomials()) == 1


def weight_multiplicities(ch):
    out = {}
    for m, c in ch.items():
        w = wt(m)
        out[w] = out.get(w, 0) + c
    return out


def reflect(w, i):
    """Simple reflection s_i on a weight written in fundamental-weight coordinates."""
    l = len(w)
    a = w[i - 1]
    return tuple(w[j - 1] - a * (2 if j == i else (-1 if abs(j - i) == 1 else 0)) for j in range(1, l + 1))


def test_weight_multiplicities_are_weyl_invariant():
    rng = random.Random(9)
    for _ in range(30):
        l = rng.randint(1, 4)
        s = random_prime_snake(l, rng.randint(1, 4), rng)
        mult = weight_multiplicities(q_character(s))
        for i in range(1, l + 1):
            assert {reflect(w, i): c for w, c in mult.items()} == mult


def test_distinct_short_snakes_have_distinct_characters():
    l = 2
    seen = {}
    for length in range(1, 4):
        for i in (1, 2):
            for k0 in (i % 2, i % 2 + 2):
                for start_k in (k0,):
                    for s in _all_snakes(l, length, (i, start_k), span=8):
                        key = q_character(s)
                        assert seen.setdefault(key, s.points) == s.points


def _all_snakes(l, length, start, span):
    """All snakes (not only prime ones) with gaps bounded by ``span``."""
    def grow(pts):
        if len(pts) == length:
            yield Snake(pts, l)
            return
        i, k = pts[-1]
        for i2 in range(1, l + 1):
            for d in range(abs(i2 - i) + 2, span + 1, 2):
                yield from grow(pts + [(i2, k + d)])
    yield from grow([start])
