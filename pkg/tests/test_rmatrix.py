from fractions import Fraction
from itertools import product

import pytest

from qaffine import rmatrix
from qaffine.rmatrix import (RationalFn, check_regularity, check_unitarity, check_ybe, fundamental_r,
                             permutation_matrix, q, sample_points, x)


# -- a dense numeric oracle built straight from the entry formulas ------------------------------

def r_numeric(l, qv, lam):
    """Dense R(lambda) at a rational point, with q^-1 kept as written."""
    n = l + 1
    qi = 1 / qv
    M = [[Fraction(0)] * (n * n) for _ in range(n * n)]
    for a, b in product(range(n), repeat=2):
        if a == b:
            M[a * n + a][a * n + a] = Fraction(1)
            continue
        M[a * n + b][a * n + b] = qi * (1 - lam) / (1 - qi ** 2 * lam)
        if a < b:
            M[a * n + b][b * n + a] = (1 - qi ** 2) / (1 - qi ** 2 * lam)
        else:
            M[a * n + b][b * n + a] = (1 - qv ** 2) / (1 - qv ** 2 / lam)
    return M


def matmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n) if A[i][k]) for j in range(n)] for i in range(n)]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def kron(A, B):
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def flip(n):
    P = [[Fraction(0)] * (n * n) for _ in range(n * n)]
    for a, c in product(range(n), repeat=2):
        P[a * n + c][c * n + a] = Fraction(1)
    return P


def on_13(R, n):
    """Conjugate R (x) I by the flip of the second and third factors."""
    S = kron(identity(n), flip(n))
    return matmul(matmul(S, kron(R, identity(n))), S)


POINTS = [(Fraction(3, 2), Fraction(5, 7), Fraction(11, 3)), (Fraction(7, 5), Fraction(-2, 9), Fraction(4))]


@pytest.mark.parametrize("l", [1, 2, 3])
def test_numeric_oracle_satisfies_ybe(l):
    n = l + 1
    for qv, lam, mu in POINTS:
        R12 = kron(r_numeric(l, qv, lam), identity(n))
        R13 = on_13(r_numeric(l, qv, lam * mu), n)
        R23 = kron(identity(n), r_numeric(l, qv, mu))
        assert matmul(matmul(R12, R13), R23) == matmul(matmul(R23, R13), R12)


@pytest.mark.parametrize("l", [1, 2, 3])
def test_entries_match_numeric_oracle(l):
    R = fundamental_r(l)
    for qv, lam, _ in POINTS:
        dense = r_numeric(l, qv, lam)
        got = [[Fraction(0)] * ((l + 1) ** 2) for _ in range((l + 1) ** 2)]
        for (i, j), f in R.entries.items():
            got[i][j] = f.evaluate({"q": qv, "x": lam, "y": Fraction(1)})
        assert got == dense


# -- entries --------------------------------------------------------------------------------

def test_entry_examples():
    R = fundamental_r(1)
    assert R.entry(1, 1, 1, 1) == RationalFn(1)
    assert R.entry(1, 1, 2, 2) == RationalFn(q * (1 - x), q ** 2 - x)
    assert R.entry(1, 2, 2, 1) == RationalFn(q ** 2 - 1, q ** 2 - x)
    assert R.entry(1, 2, 1, 2).is_zero()


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_sparsity(l):
    n = l + 1
    assert len(fundamental_r(l).entries) == n + 2 * n * (n - 1)


def test_text_lines():
    lines = fundamental_r(1).text_lines()
    assert lines[0] == "E11 (x) E11: 1"
    assert len(lines) == 6
    assert sum(" / " in line for line in lines) == 4


def test_rational_function_equality_by_cross_multiplication():
    assert RationalFn(q * q - 1, q - 1) == RationalFn(q + 1)
    assert RationalFn(q, 2 * q) == RationalFn(1, 2)
    assert RationalFn(q).invert_variable("q") == RationalFn(1, q)
    with pytest.raises(ZeroDivisionError):
        RationalFn(1, 0)


# -- Yang-Baxter, regularity and unitarity ----------------------------------------------------

@pytest.mark.parametrize("l", [1, 2, 3])
def test_ybe_exact(l):
    assert check_ybe(l, "exact")


@pytest.mark.parametrize("l", [1, 2, 3])
def test_ybe_sampled(l):
    assert check_ybe(l, "sampled", 20)


def test_ybe_bad_arguments():
    with pytest.raises(ValueError):
        check_ybe(1, "approx")
    with pytest.raises(ValueError):
        check_ybe(0)
    with pytest.raises(ValueError):
        check_ybe(1, "sampled", 0)


def test_sample_points_are_distinct_and_safe():
    pts = sample_points(20)
    assert len(pts) == 20
    for var in ("q", "x", "y"):
        assert len({p[var] for p in pts}) == 20
    for p in pts:
        assert p["q"] ** 2 not in (p["x"], p["y"], p["x"] * p["y"])


@pytest.mark.parametrize("l", [1, 2, 3])
def test_regularity_and_unitarity(l):
    assert check_regularity(l)
    rep = check_unitarity(l)
    assert rep.ok
    assert rep.factor == RationalFn(1)


def test_unitarity_by_numeric_oracle():
    for l in (1, 2):
        n = l + 1
        P = flip(n)
        for qv, lam, _ in POINTS:
            prod = matmul(matmul(matmul(r_numeric(l, qv, lam), P), r_numeric(l, qv, 1 / lam)), P)
            assert prod == identity(n * n)


def test_permutation_matrix():
    P = permutation_matrix(2)
    assert set(P.entries) == {(0, 0), (1, 2), (2, 1), (3, 3)}


def test_perturbed_matrix_fails_every_check(monkeypatch):
    real = rmatrix.fundamental_r

    def perturbed(l, var="x"):
        R = real(l, var)
        key = (R.index(1, 2), R.index(2, 1))
        R.entries[key] = R.entries[key] * RationalFn(q)
        return R

    monkeypatch.setattr(rmatrix, "fundamental_r", perturbed)
    assert not check_ybe(1, "exact")
    assert not check_ybe(2, "sampled", 5)
    assert not check_regularity(1)
    assert not check_unitarity(1).ok
