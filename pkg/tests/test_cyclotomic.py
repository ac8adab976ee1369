import numpy as np
import pytest
from hypothesis import given, strategies as st

from bchcodes.cyclotomic import (CosetError, all_shifts_exceed, build_table, coset,
                                 from_digits, leader, leader_lemma_check,
                                 leader_scaling_check, min_rotation, orbit_of_delta_size,
                                 q_adic_expand, q_weight, q_weight_int, rotate, run_length,
                                 run_lengths)
from bchcodes.params import BchParams, ParamError, valid_params


def test_expand_examples():
    assert q_adic_expand(13, 3, 3) == (1, 1, 1)
    assert q_adic_expand(0, 5, 3) == (0, 0, 0)
    assert q_adic_expand(4 ** 3 - 1, 4, 3) == (3, 3, 3)
    with pytest.raises(ValueError):
        q_adic_expand(27, 3, 3)


def test_weight_examples():
    assert q_weight(q_adic_expand(13, 2, 4)) == 3
    assert q_weight((0, 0, 0)) == 0


@pytest.mark.parametrize("q,m", [(2, 4), (3, 3), (4, 3), (5, 3), (3, 5)])
def test_weight_of_lambda_delta_minus_one(q, m):
    for lam in [d for d in range(1, q) if (q - 1) % d == 0]:
        for p in valid_params(q, m, lam):
            if p.degenerate:
                continue
            expect = (q - 1) * m - (q - 1) * p.l1 - lam * p.l0 - lam
            assert q_weight_int(lam * (p.delta - 1), q) == expect


def test_coset_examples():
    assert sorted(coset(1, 2, 15)) == [1, 2, 4, 8]
    assert sorted(coset(3, 2, 15)) == [3, 6, 9, 12] and leader(3, 2, 15) == 3
    assert coset(0, 7, 48) == [0]
    with pytest.raises(CosetError):
        coset(1, 3, 12)


@pytest.mark.parametrize("q,N", [(2, 15), (3, 80), (4, 63), (5, 124), (3, 40), (7, 342), (2, 1023), (9, 6560)])
def test_table_partitions(q, N):
    t = build_table(q, N)
    assert t.size_of_elem[t.leaders].sum() == N
    # every element lies in the orbit of its leader, which is the orbit minimum
    for i in range(0, N, max(1, N // 200)):
        orb = coset(i, q, N)
        assert t.leader_of[i] == min(orb) and t.size_of_elem[i] == len(orb)
        if (N + 1) in {q ** k for k in range(1, 16)}:
            # q-weight is an orbit invariant modulo q^m - 1
            assert len({q_weight_int(x, q) for x in orb}) == 1


def test_run_length_examples():
    assert run_length((0, 1, 0, 0, 1, 0, 0)) == 3
    assert run_length((1, 2, 1)) == 0
    assert run_length((0, 1, 1, 1)) == 1
    with pytest.raises(ValueError):
        run_length((0, 0, 0))


@given(st.lists(st.integers(0, 2), min_size=2, max_size=8).filter(any), st.integers(0, 10))
def test_run_length_rotation_invariant(v, j):
    assert run_length(rotate(v, j)) == run_length(v)


@given(st.sampled_from([(2, 5), (3, 4), (4, 3), (5, 3)]), st.data())
def test_rotation_is_multiplication_by_q(qm, data):
    q, m = qm
    N = q ** m - 1
    i = data.draw(st.integers(1, N - 1))
    j = data.draw(st.integers(0, m - 1))
    assert from_digits(rotate(q_adic_expand(i, q, m), j), q) == i * q ** j % N


def test_vectorised_tables_match_scalar():
    for q, m in [(2, 5), (3, 4), (4, 3)]:
        mr, rl = min_rotation(q, m), run_lengths(q, m)
        for i in range(1, q ** m):
            v = q_adic_expand(i, q, m)
            assert rl[i] == run_length(v)
            assert mr[i] == min(from_digits(rotate(v, j), q) for j in range(m))


def test_all_shifts_exceed_examples():
    assert all_shifts_exceed(53, 17, 3, 80, 4)
    assert not all_shifts_exceed(9, 17, 3, 80, 4)
    assert not all_shifts_exceed(17, 17, 3, 80, 4)
    assert all_shifts_exceed(80, 17, 3, 80, 4)
    with pytest.raises(ValueError):
        all_shifts_exceed(0, 17, 3, 80, 4)


def test_orbit_of_delta_examples():
    assert orbit_of_delta_size(BchParams(3, 4, 1, 1, 1)) == 4
    assert sorted(coset(17, 3, 80)) == [17, 51, 59, 73]
    assert orbit_of_delta_size(BchParams(2, 4, 1, 0, 2)) == 4
    assert orbit_of_delta_size(BchParams(5, 3, 2, 1, 0)) == 3
    with pytest.raises(ParamError):
        orbit_of_delta_size(BchParams(3, 4, 1, 0, 0))


def test_leader_examples():
    assert leader_lemma_check(3, 4) == []
    t = build_table(3, 80)
    assert all(t.is_leader(i) and t.size_of(i) == 4 for i in (1, 2, 4, 5, 7, 8))
    t2 = build_table(2, 15)
    assert t2.is_leader(1) and t2.is_leader(3) and t2.size_of(3) == 4
    assert leader_scaling_check(3, 4, 2) == []



def test_run_implications_agree_with_scalar_predicate():
    from bchcodes.cyclotomic import run_implication_check

    for args in [(3, 4, 1, 1, 1), (2, 5, 1, 0, 2), (5, 3, 2, 1, 0), (4, 3, 3, 0, 1)]:
        p = BchParams(*args)
        assert run_implication_check(p) == []
        for i in range(1, p.N + 1):
            v = q_adic_expand(i, p.q, p.m)
            ex = all_shifts_exceed(i, p.lam * p.delta, p.q, p.N, p.m)
            if run_length(v) > p.l1:
                assert not ex
            if run_length(v) < p.l1:
                assert ex
