import random

import pytest
from hypothesis import given, strategies as st

from bchcodes.codes import bch_generator, pgrm_generator
from bchcodes.cyclotomic import build_table
from bchcodes.gf import gf, tower
from bchcodes.params import BchParams
from bchcodes.poly import Polynomial, minimal_polynomial, product


def P(q, coeffs):
    return Polynomial(gf(q), coeffs)


def test_gcd_over_gf3():
    g = P(3, [2, 0, 1]).gcd(P(3, [2, 1]))  # x^2 - 1, x - 1
    assert g.coeffs == (2, 1)


def test_round_trip_gf2():
    f = P(2, [1, 1, 0, 0, 1])
    qt, r = divmod(f * P(2, [1, 1]), f)
    assert qt.coeffs == (1, 1) and r.is_zero()


def test_modulus_vanishes_at_alpha():
    F = gf(16)
    assert P(2, [1, 1, 0, 0, 1]).eval_in(tower(2, 4).emb, F.primitive) == 0


def test_text_form():
    assert str(P(2, [1, 1, 0, 0, 1])) == "x^4 + x + 1"
    assert str(P(3, [2, 0, 1])) == "x^2 + 2"
    assert str(P(3, [])) == "0"


def test_lcm_and_zero_division():
    a, b = P(2, [1, 1]), P(2, [1, 0, 1])  # x+1, (x+1)^2
    assert a.lcm(b) == b
    with pytest.raises(ZeroDivisionError):
        divmod(a, P(2, []))


def test_minimal_polynomials_gf16():
    tw = tower(2, 4)
    a = tw.alpha
    assert minimal_polynomial(tw.emb, a).coeffs == (1, 1, 0, 0, 1)
    assert minimal_polynomial(tw.emb, 1).coeffs == (1, 1)
    assert minimal_polynomial(tw.emb, tw.big.pow(a, 3)).coeffs == (1, 1, 1, 1, 1)


def _rand_poly(rng, F, lo, hi):
    c = [rng.randrange(F.order) for _ in range(rng.randrange(lo, hi))]
    return Polynomial(F, c + [rng.randrange(1, F.order)])


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_fast_paths_match_schoolbook(q):
    F = gf(q)
    rng = random.Random(q)
    for _ in range(4):
        fs = [_rand_poly(rng, F, 0, 120) for _ in range(rng.randrange(9, 16))]
        acc = Polynomial.one(F)
        for f in fs:
            acc = acc * f
        assert product(fs, F) == acc
        a, b = _rand_poly(rng, F, 300, 700), _rand_poly(rng, F, 70, 200)
        qt, r = divmod(a, b)
        assert qt * b + r == a and r.degree < b.degree


@given(st.sampled_from([2, 3, 4, 5, 9]), st.data())
def test_divmod_identity(q, data):
    F = gf(q)
    coeffs = st.lists(st.integers(0, q - 1), max_size=40)
    a = Polynomial(F, data.draw(coeffs))
    b = Polynomial(F, data.draw(coeffs) + [data.draw(st.integers(1, q - 1))])
    qt, r = divmod(a, b)
    assert qt * b + r == a
    assert r.degree < b.degree


@pytest.mark.parametrize("q,m,lam", [(2, 4, 1), (2, 6, 1), (3, 3, 2), (3, 4, 1), (4, 3, 3), (5, 3, 2),
                                     (7, 2, 6), (8, 3, 7), (9, 2, 4), (4, 5, 1), (3, 6, 2), (5, 5, 1)])
def test_cosets_factor_x_n_minus_1(q, m, lam):
    tw = tower(q, m)
    n = (q ** m - 1) // lam
    t = build_table(q, n)
    fs = []
    for i in t.leaders:
        f = minimal_polynomial(tw.emb, tw.big.alpha_pow(lam * int(i)))
        assert f.degree == t.size_of(int(i)) and f.is_monic()
        fs.append(f)
    assert product(fs, tw.small) == Polynomial.x_n_minus_1(tw.small, n)


def test_bch_generator_examples():
    assert bch_generator(BchParams(2, 4, 1, 0, 2)).degree == 4
    assert bch_generator(BchParams(3, 2, 1, 1, 0)).degree == 5
    g = bch_generator(BchParams(5, 2, 2, 0, 0))
    F = gf(5)
    assert g == Polynomial.x_n_minus_1(F, 12) // Polynomial(F, [4, 1])


def test_pgrm_generator_examples():
    g = pgrm_generator(2, 4, 1, 2)
    assert g.degree == 4 and g == bch_generator(BchParams(2, 4, 1, 0, 2))
    # order 0 is the repetition code; the weight filter wt < 3 belongs to order 1
    assert 15 - pgrm_generator(2, 4, 1, 0).degree == 1
    assert 15 - pgrm_generator(2, 4, 1, 1).degree == 5
    # q=3, m=2, lambda=2, order 2: every 2i in {2, 4, 6} has weight 2, none below 2
    g = pgrm_generator(3, 2, 2, 2)
    assert [i for i in range(1, 4) if sum(_base(2 * i, 3)) < 2] == []
    assert g.degree == 0
    assert pgrm_generator(3, 2, 2, 0).degree == 3


def _base(x, q):
    out = []
    while x:
        out.append(x % q)
        x //= q
    return out
