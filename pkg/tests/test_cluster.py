import json
import math

import pytest

from qaffine.cluster import (KRReport, LaurentRing, Quiver, TruncationContaminationError, build_gminus,
                            initial_seed, initial_variables, kr_index, mutate, quiver_core,
                            round_columns, run_rounds, sequence_S, verify_kr_correspondence)
from qaffine.loopalg import LatticePoint, LoopMonomial, LoopPolynomial
from qaffine.sl2eval import EvalModule, q_character_closed


def Y(i, k, l, e=1):
    return LoopMonomial.Y(i, k, l, e)


# -- the quiver ------------------------------------------------------------------------

def test_gminus_rank_one():
    q = build_gminus(1, 4)
    assert [tuple(v) for v in q.vertices] == [(1, -7), (1, -5), (1, -3), (1, -1)]
    assert [(tuple(u), tuple(v), n) for u, v, n in q.arrows()] == [
        ((1, -7), (1, -5), 1), ((1, -5), (1, -3), 1), ((1, -3), (1, -1), 1)]
    assert q.frozen == {(1, -7), (1, -5), (1, -3)}


def test_gminus_rank_two_links_columns():
    q = build_gminus(2, 5)
    assert q.out_neighbours((1, -1)) == {(2, -2): 1}
    assert q.in_neighbours((1, -1)) == {(1, -3): 1, (2, 0): 1}
    assert q.out_neighbours((2, 0)) == {(1, -1): 1}


def arrow_oracle(l, depth):
    """Arrows read off the exchange matrix: b_ii = 2 gives (i,r)->(i,r+2), b_ij = -1 gives (i,r)->(j,r-1)."""
    verts = {(i, r) for i in range(1, l + 1) for r in range(-2 * depth, 1) if (i - r) % 2 == 0}
    out = set()
    for i, r in verts:
        for j in range(1, l + 1):
            b = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
            if b and (j, r + b) in verts:
                out.add(((i, r), (j, r + b)))
    return out


@pytest.mark.parametrize("l", range(1, 5))
def test_arrows_match_exchange_matrix(l):
    q = build_gminus(l, 6)
    got = {(tuple(u), tuple(v)) for u, v, n in q.arrows()}
    assert got == arrow_oracle(l, 6)
    assert all(n == 1 for _, _, n in q.arrows())
    for u, v, _ in q.arrows():
        assert (u.i - u.k) % 2 == (v.i - v.k) % 2 == 0
    assert q.check_invariants()


def test_frozen_collar_is_near_the_floor():
    q = build_gminus(3, 8)
    for v in q.frozen:
        assert v.k <= -2 * 8 + 6
    assert all(v.k >= -2 * 8 + 6 or v in q.frozen for v in q.vertices if v.k <= -2 * 8 + 1)


def test_depth_must_be_at_least_four():
    with pytest.raises(ValueError):
        build_gminus(2, 3)


def test_quiver_rejects_loops_and_foreign_arrows():
    with pytest.raises(ValueError):
        Quiver([(1, 0)], [((1, 0), (1, 0))])
    with pytest.raises(ValueError):
        Quiver([(1, 0)], [((1, 0), (1, 2))])
    with pytest.raises(ValueError):
        Quiver([(1, 0)], frozen=[(1, 2)])


def test_quiver_mutation_rules():
    # a -> k -> b: mutation at k reverses both arrows and adds a -> b
    q = Quiver([(1, 0), (1, 2), (1, 4)], [((1, 0), (1, 2)), ((1, 2), (1, 4))])
    m = q.mutate((1, 2))
    assert m.b((1, 2), (1, 0)) == 1 and m.b((1, 4), (1, 2)) == 1
    assert m.b((1, 0), (1, 4)) == 1
    assert m.mutate((1, 2)) == q


def test_quiver_mutation_cancels_two_cycles():
    q = Quiver([(1, 0), (1, 2), (1, 4)], [((1, 0), (1, 2)), ((1, 2), (1, 4)), ((1, 4), (1, 0))])
    m = q.mutate((1, 2))
    assert m.b((1, 0), (1, 4)) == 0
    assert m.check_invariants()


def test_frozen_pairs_are_not_updated():
    q = Quiver([(1, 0), (1, 2), (1, 4)], [((1, 0), (1, 2)), ((1, 2), (1, 4))], frozen=[(1, 0), (1, 4)])
    assert q.mutate((1, 2)).b((1, 0), (1, 4)) == 0


# -- initial seed -----------------------------------------------------------------------

def test_initial_variables_examples():
    z = initial_variables(1, 4)
    assert z[LatticePoint(1, -1)] == LoopPolynomial.from_monomial(Y(1, -1, 1))
    assert z[LatticePoint(1, -3)] == LoopPolynomial.from_monomial(Y(1, -3, 1) * Y(1, -1, 1))
    assert kr_index(1, -3) == 2
    assert kr_index(2, 0) == 1 and kr_index(2, -4) == 3


def test_kr_index_inequality():
    for r in range(-20, 1):
        k = kr_index(1, r)
        assert 0 < 2 * k - abs(r) <= 2


# -- mutation ------------------------------------------------------------------------------

def test_first_mutation_rank_one():
    seed = initial_seed(1, 6)
    new = mutate(seed, (1, -1))
    expected = LoopPolynomial({Y(1, -3, 1): 1, Y(1, -1, 1, -1): 1}, 1)
    assert new.variable((1, -1)) == expected
    assert new.variable((1, -1)) == q_character_closed(EvalModule(1, -3))


def test_mutation_is_an_involution():
    for l in (1, 2, 3):
        seed = initial_seed(l, 6)
        for v in seed.quiver.vertices:
            if seed.quiver.is_frozen(v):
                continue
            back = mutate(mutate(seed, v), v)
            assert back.quiver == seed.quiver
            assert back.values == seed.values


def test_mutation_preserves_invariants():
    seed = initial_seed(2, 6)
    for v in sequence_S(2, 6, 2):
        seed = mutate(seed, v)
        assert seed.quiver.check_invariants()


def test_frozen_and_unknown_vertices_rejected():
    seed = initial_seed(1, 5)
    with pytest.raises(ValueError):
        mutate(seed, (1, -9))
    with pytest.raises(ValueError):
        mutate(seed, (1, 1))


def test_inexact_division_is_reported():
    seed = initial_seed(1, 6)
    bad = LoopPolynomial({Y(1, -1, 1): 1, LoopMonomial.identity(1): 1}, 1)
    seed.values[LatticePoint(1, -1)] = seed.ring.from_polynomial(bad)
    with pytest.raises(TruncationContaminationError) as info:
        mutate(seed, (1, -1))
    assert tuple(info.value.vertex) == (1, -1)


def test_laurent_ring_round_trip():
    ring = LaurentRing(2, -10, 2)
    f = LoopPolynomial({Y(1, -1, 2, -2): 3, Y(2, 0, 2) * Y(1, -3, 2): -1}, 2)
    assert ring.from_polynomial(f).to_polynomial() == f


# -- the sequence --------------------------------------------------------------------------

def test_round_columns():
    assert round_columns(1) == [1]
    assert round_columns(2) == [2, 1]
    assert round_columns(3) == [2, 1, 3]
    assert round_columns(4) == [2, 4, 1, 3]
    assert round_columns(2, 2) == [2, 1, 2, 1]


def test_sequence_rank_one():
    seq = sequence_S(1, 6, 1)
    q = build_gminus(1, 6)
    assert seq[0] == (1, -1)
    assert [v.k for v in seq] == sorted((v.k for v in q.vertices if v not in q.frozen), reverse=True)


def test_sequence_rank_two_and_rounds():
    seq = sequence_S(2, 6, 1)
    assert seq[0] == (2, 0)
    firsts = [v.i for v in seq]
    assert firsts == sorted(firsts, key=lambda i: 0 if i == 2 else 1)
    assert sequence_S(2, 6, 2) == seq + seq
    with pytest.raises(ValueError):
        sequence_S(2, 6, 0)


def test_quiver_shape_restored_on_core():
    for l in (1, 2, 3):
        g = build_gminus(l, 8)
        rounds = []
        run_rounds(l, 8, 2, on_round=lambda m, s: rounds.append((m, s.quiver)))
        for m, q in rounds:
            core = quiver_core(g, m)
            assert core
            assert q.restricted(core) == g.restricted(core)


# -- the correspondence ------------------------------------------------------------------

@pytest.mark.parametrize("l", [1, 2, 3])
def test_kr_correspondence_minimal_rounds(l):
    rep = verify_kr_correspondence(l, 10)
    assert rep.rounds == math.ceil((l + 1) / 2)
    assert rep.ok
    assert len(rep.stable) > 0
    assert all(c.status in ("PASS", "UNSTABLE") for c in rep.vertices)


def test_kr_correspondence_rank_one_against_closed_formula():
    rep = verify_kr_correspondence(1, 10, 1)
    for c in rep.stable:
        r = c.vertex.k
        expected = q_character_closed(EvalModule(c.k, r - 2 + c.k - 1))
        assert rep.seed.variable(c.vertex) == expected


def test_kr_correspondence_rank_two_depth_twelve():
    rep = verify_kr_correspondence(2, 12, 2)
    assert rep.ok


@pytest.mark.parametrize("l,m,depth,check", [(1, 2, 10, None), (2, 3, 10, None), (3, 3, 10, 14)])
def test_kr_correspondence_extra_round(l, m, depth, check):
    rep = verify_kr_correspondence(l, depth, m, check)
    assert rep.ok


def test_stable_region_and_boundary():
    rep = verify_kr_correspondence(2, 10)
    top = {c.vertex for c in rep.stable}
    assert (1, -1) in top and (2, 0) in top
    assert all(rep.boundary[i] < 0 for i in (1, 2))
    lines = rep.lines()
    assert any(line.startswith("PASS vertex (1,-1)") for line in lines)


def test_too_few_rounds_rejected():
    with pytest.raises(ValueError):
        verify_kr_correspondence(3, 10, 1)
    with pytest.raises(ValueError):
        verify_kr_correspondence(1, 10, 1, check_depth=10)


def test_seed_dump(tmp_path):
    rep = verify_kr_correspondence(1, 6, 1)
    out = tmp_path / "seed.json"
    rep.seed.dump(str(out))
    data = json.loads(out.read_text())
    assert data["rank"] == 1
    top = next(v for v in data["vertices"] if (v["i"], v["r"]) == (1, -1))
    assert top["frozen"] is False and top["variable"] == str(rep.seed.variable((1, -1)))
    assert all(len(a) == 3 for a in data["arrows"])
