import itertools

import pytest

from bchcodes.codes import bch_code, encode, is_codeword, pgrm_code, weight
from bchcodes.distance import (WitnessError, coordinate_map, exhaustive, low_weight,
                               min_distance, rm_witness)
from bchcodes.gf import tower
from bchcodes.params import BchParams, valid_params

SMALL = [(2, 4, 1, 0, 1), (2, 4, 1, 0, 2), (3, 2, 1, 1, 0), (4, 2, 1, 1, 0), (4, 2, 1, 2, 0),
         (5, 2, 2, 1, 0), (3, 3, 2, 0, 1), (2, 5, 1, 0, 2), (3, 3, 1, 0, 1), (2, 3, 1, 0, 1)]


def naive_min_weight(code):
    best = None
    for msg in itertools.product(range(code.q), repeat=code.k):
        if any(msg):
            w = weight(encode(code, list(msg)))
            best = w if best is None else min(best, w)
    return best


@pytest.mark.parametrize("args", SMALL)
def test_exhaustive_matches_naive_enumeration(args):
    c = bch_code(BchParams(*args))
    r = exhaustive(c)
    assert r.exact and r.method == "exhaustive"
    assert r.lower == r.upper == naive_min_weight(c)
    assert is_codeword(c, r.codeword) and weight(r.codeword) == r.upper


def test_exhaustive_on_a_non_bch_code():
    # the PGRM code of order 1 over GF(3), m = 2, where nothing assumes d = delta
    c = pgrm_code(3, 2, 1, 1)
    assert exhaustive(c).upper == naive_min_weight(c)


def test_exhaustive_budget_gives_partial_result():
    c = bch_code(BchParams(2, 5, 1, 0, 3))
    r = exhaustive(c, budget=1000)
    assert not r.exact and r.work <= 1000
    assert r.upper is None or r.upper >= r.lower


def test_min_distance_examples():
    r = min_distance(bch_code(BchParams(3, 2, 1, 1, 0)))
    assert (r.lower, r.upper, r.exact, r.method) == (5, 5, True, "exhaustive")
    r = min_distance(bch_code(BchParams(5, 2, 2, 0, 0)))
    assert r.exact and r.upper == 12
    r = min_distance(bch_code(BchParams(3, 4, 1, 1, 1)))
    assert (r.lower, r.upper, r.exact, r.method) == (17, 17, True, "rm_witness")


def test_bound_only_and_unknown_strategy():
    c = bch_code(BchParams(3, 5, 2, 0, 2))
    r = min_distance(c)
    assert r.method == "bch_bound_only" and r.upper is None and not r.exact and r.lower == 13
    r = min_distance(bch_code(BchParams(3, 2, 1, 1, 0)), strategy="bound_only")
    assert r.method == "bch_bound_only" and r.lower == 5
    with pytest.raises(ValueError):
        min_distance(c, strategy="fastest")


@pytest.mark.parametrize("args", [(2, 4, 1, 0, 2), (3, 2, 1, 1, 0), (2, 6, 1, 0, 3), (4, 3, 1, 2, 1),
                                  (5, 3, 1, 3, 1), (3, 5, 1, 2, 3), (7, 2, 1, 4, 0), (9, 2, 1, 3, 1)])
def test_rm_witness_weight_and_membership(args):
    p = BchParams(*args)
    w = rm_witness(p)
    assert weight(w) == p.delta and is_codeword(bch_code(p), w)


def test_rm_witness_needs_primitive_length():
    with pytest.raises(WitnessError):
        rm_witness(BchParams(5, 3, 2, 1, 0))


@pytest.mark.parametrize("q,m,exps", [(3, 3, (0, 2, 4)), (2, 4, (3, 1, 7, 2)), (4, 3, (5, 1, 2))])
def test_rm_witness_with_other_bases(q, m, exps):
    # a change of basis is a linear substitution, which keeps the degree of f
    tw = tower(q, m)
    basis = [tw.big.alpha_pow(j) for j in exps]
    for p in valid_params(q, m, 1):
        if not p.degenerate:
            assert weight(rm_witness(p, tw, basis)) == p.delta


def test_coordinate_map_rejects_dependent_basis():
    tw = tower(2, 4)
    with pytest.raises(ValueError):
        coordinate_map(tw, [1, 1, tw.alpha, tw.big.alpha_pow(2)])
    cm = coordinate_map(tw)
    assert len(cm) == 16 and cm[1] == (1, 0, 0, 0)


@pytest.mark.parametrize("args,d", [((3, 4, 2, 0, 2), 4), ((5, 3, 2, 0, 2), 2), ((2, 4, 1, 0, 2), 3),
                                    ((3, 3, 2, 0, 1), 4)])
def test_low_weight_finds_designed_weight_words(args, d):
    c = bch_code(BchParams(*args))
    r = low_weight(c, d)
    assert r.exact and r.upper == d == r.lower and r.method == "low_weight_search"
    assert is_codeword(c, r.codeword) and r.codeword[0] != 0


def test_low_weight_below_minimum_finds_nothing():
    c = bch_code(BchParams(2, 4, 1, 0, 1))  # d = 7
    r = low_weight(c, 4)
    assert r.upper is None and not r.exact


def test_results_are_deterministic():
    c = bch_code(BchParams(4, 2, 1, 0, 1))
    assert min_distance(c).as_dict() == min_distance(c).as_dict()
