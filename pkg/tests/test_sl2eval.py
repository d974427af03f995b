import pytest

from qaffine.loopalg import LoopMonomial, LoopPolynomial
from qaffine.paths import q_character
from qaffine.qarith import ONE, Q, ZERO, QLaurent
from qaffine.sl2eval import (QQ, EvalModule, check_drinfeld_relations, check_k_conjugation,
                             drinfeld_polynomial, drinfeld_series_check, eigenvalue_series,
                             general_position_dominant_count, generator_matrix, loop_weight,
                             phi_eigenvalue, phi_matrix, q_character_closed, special_position,
                             tensor_identity_check)
from qaffine.snakes import snake_of_kr


def Y(k, e=1):
    return LoopMonomial.Y(1, k, 1, e)


def poly(*monos):
    return LoopPolynomial({m: 1 for m in monos}, 1)


def modules(rmax):
    for r in range(rmax + 1):
        for s in (r % 2 - 2, r % 2, r % 2 + 2):
            yield EvalModule(r, s)


# -- generator matrices ---------------------------------------------------------------

def test_generator_examples():
    assert generator_matrix(EvalModule(1, 0), "X+", 0)[0, 1] == ONE
    K = generator_matrix(EvalModule(2, 0), "K")
    assert K.is_diagonal() and K.diagonal() == [Q ** 2, ONE, Q ** -2]
    assert generator_matrix(EvalModule(1, 3), "X-", 1)[1, 0] == Q ** 3


def test_band_structure():
    for m in modules(4):
        for p in range(-2, 3):
            assert generator_matrix(m, "X+", p).band() <= {1}
            assert generator_matrix(m, "X-", p).band() <= {-1}
            assert generator_matrix(m, "K").is_diagonal()


def test_unknown_tag():
    with pytest.raises(ValueError):
        generator_matrix(EvalModule(1, 1), "H", 0)


def test_phi_examples():
    m = EvalModule(1, 0)
    assert phi_matrix(m, "+", 0).diagonal() == [Q, Q ** -1]
    assert phi_matrix(m, "+", 1)[0, 0] == QQ
    assert phi_matrix(m, "-", 0).diagonal() == [Q ** -1, Q]
    with pytest.raises(ValueError):
        phi_matrix(m, "+", -1)


@pytest.mark.parametrize("r", range(0, 5))
def test_phi_is_diagonal_with_closed_eigenvalues(r):
    for s in (r % 2, r % 2 + 2):
        m = EvalModule(r, s)
        for p in range(0, 5):
            ph = phi_matrix(m, "+", p)
            assert ph.is_diagonal()
            assert ph.diagonal() == [phi_eigenvalue(m, k, p) for k in range(r + 1)]
            assert phi_matrix(m, "-", p).is_diagonal()


@pytest.mark.parametrize("r", range(0, 5))
def test_drinfeld_relations(r):
    for s in (r % 2 - 2, r % 2, r % 2 + 2):
        m = EvalModule(r, s)
        results = check_drinfeld_relations(m, 2)
        assert results and all(ok for _, ok in results), [lab for lab, ok in results if not ok]
        assert check_k_conjugation(m, 2)


def test_relation_check_detects_a_wrong_matrix(monkeypatch):
    import qaffine.sl2eval as mod
    real = mod.generator_matrix

    def skewed(m, tag, p=0):
        out = real(m, tag, p)
        if tag == "X-" and p == 1 and m.r >= 1:
            out.entries[1][0] = out.entries[1][0] * Q
        return out

    monkeypatch.setattr(mod, "generator_matrix", skewed)
    results = check_drinfeld_relations(EvalModule(1, 1), 2)
    assert not all(ok for _, ok in results)


# -- loop-weights and characters ------------------------------------------------------

def test_drinfeld_polynomial_examples():
    assert drinfeld_polynomial(EvalModule(0, 5)) == LoopMonomial.identity(1)
    assert drinfeld_polynomial(EvalModule(1, 1)) == Y(1)
    with pytest.raises(ValueError):
        drinfeld_polynomial(EvalModule(1, 0))
    assert drinfeld_polynomial(EvalModule(2, 0)) == Y(1) * Y(-1)


def test_loop_weight_examples():
    for m in modules(5):
        assert loop_weight(m, 0) == drinfeld_polynomial(m)
    assert loop_weight(EvalModule(1, 1), 1) == Y(3, -1)
    with pytest.raises(ValueError):
        loop_weight(EvalModule(1, 1), 2)


def test_closed_character_examples():
    assert q_character_closed(EvalModule(1, 1)) == poly(Y(1), Y(3, -1))
    assert q_character_closed(EvalModule(2, 0)) == poly(Y(1) * Y(-1), Y(-1) * Y(3, -1),
                                                        Y(1, -1) * Y(3, -1))
    m = EvalModule(3, 1)
    assert q_character_closed(m) == poly(*(loop_weight(m, k) for k in range(4)))


@pytest.mark.parametrize("r", range(1, 11))
def test_closed_character_equals_path_formula(r):
    for s in (r % 2, r % 2 + 2, r % 2 - 4):
        assert q_character_closed(EvalModule(r, s)) == q_character(snake_of_kr(1, s - r + 1, r, 1))


def test_series_examples():
    assert drinfeld_series_check(EvalModule(1, 1), 0, 8)
    assert drinfeld_series_check(EvalModule(0, 0), 0, 8)
    assert drinfeld_series_check(EvalModule(3, 1), 2, 10)


def test_series_for_r_one_by_hand():
    # on v_0 of V^(1)(q): psi(u) = q (1 - q^-1 u) / (1 - q u), expanded by hand
    psi = eigenvalue_series(EvalModule(1, 1), 0, 5)
    expected = [Q] + [(Q - Q ** -1) * QLaurent.monomial(p) for p in range(1, 6)]
    assert list(psi.coeffs) == expected


def test_series_all_vectors():
    for r in range(0, 6):
        for k in range(r + 1):
            for s in (r % 2, r % 2 + 2):
                assert drinfeld_series_check(EvalModule(r, s), k, 10)


# -- special position -------------------------------------------------------------------

def test_special_position_examples():
    d = special_position(1, 1, 1, 3)
    assert d.case == "+" and d.p == 0
    assert d.sub == (EvalModule(0, 0), EvalModule(0, 4))
    assert d.quotient[0].r == 0 and d.quotient[1] == EvalModule(2, 2)
    assert special_position(1, 1, 1, 5) is None
    d = special_position(2, 2, 0, -2)
    assert d.case == "-" and d.p == 1


def test_special_case_is_the_short_t_system():
    d = special_position(1, 1, 1, 3)
    lhs = q_character_closed(d.left) * q_character_closed(d.right)
    assert lhs == q_character_closed(EvalModule(2, 2)) + 1
    assert tensor_identity_check(d)


def test_tensor_identity_sweep():
    for k in range(1, 5):
        for l in range(1, 5):
            s1 = k % 2
            for p in range(min(k, l)):
                for sign in (1, -1):
                    d = special_position(k, l, s1, s1 + sign * (k + l - 2 * p))
                    assert d is not None and d.p == p
                    assert tensor_identity_check(d)


def segment(r, s):
    return set(range(s - r + 1, s + r, 2))


def has_two_dominants_oracle(k, l, s1, s2):
    """Nested q-strings with different upper ends give a second dominant product."""
    a, b = segment(k, s1), segment(l, s2)
    nested = a < b or b < a
    return nested and max(a) != max(b)


def test_general_position_dominant_count_characterised():
    for k in range(1, 5):
        for l in range(1, 5):
            s1 = k % 2
            for delta in range(-(k + l + 4), k + l + 5):
                s2 = s1 + delta
                if (s2 + l) % 2 or special_position(k, l, s1, s2) is not None:
                    continue
                many = general_position_dominant_count(k, l, s1, s2) > 1
                assert many == has_two_dominants_oracle(k, l, s1, s2), (k, l, delta)


def test_nested_strings_give_two_dominant_monomials():
    # V^(1)(q) (x) V^(2)(q^2): the string {1} sits inside {1, 3}.  Besides the
    # top term, Y[1,3]^-1 times Y[1,1] Y[1,3] leaves the dominant Y[1,1].
    prod = q_character_closed(EvalModule(1, 1)) * q_character_closed(EvalModule(2, 2))
    assert special_position(1, 2, 1, 2) is None
    assert sorted(map(str, prod.dominant_monomials())) == ["Y[1,1]", "Y[1,1]^2*Y[1,3]"]
