"""Closed-form counts and dimensions, each with a brute-force counterpart.

All arithmetic is exact (int / Fraction).  Binomials follow the counting
convention: C(a, 0) = 1 for every a (one empty composition, even when the
top entry is C(-1, 0) from zero parts), C(a, b) = 0 for b < 0 or a < b.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

import numpy as np

from .cyclotomic import min_rotation, run_lengths
from .params import BchParams, ParamError

ORACLE_CAP = 10 ** 7


def binom(a: int, b: int) -> int:
    if b < 0:
        return 0
    if b == 0:
        return 1
    if a < b:
        return 0
    return comb(a, b)


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"closed form evaluated to a non-integer {x}")
    return x.numerator


def _check_lam(q, lam):
    if lam < 1 or (q - 1) % lam:
        raise ParamError(f"lambda={lam} must divide q-1={q - 1}")


def _alt_sum(q: int, m: int, step: int, inner: int, power_shift: int) -> Fraction:
    """sum_{i=1}^{floor(m/step)} (-1)^(i-1) m (q-1)^(i-power_shift) / i
    * C(m - i*inner - 1, i - 1) * q^(m - i*step)."""
    total = Fraction(0)
    for i in range(1, m // step + 1):
        term = Fraction(m * (q - 1) ** (i - power_shift), i) * binom(m - i * inner - 1, i - 1)
        total += (-1) ** (i - 1) * term * q ** (m - i * step)
    return total


# --- dimension formulas -----------------------------------------------------

def dim_l1_zero(q: int, m: int, lam: int, l0: int) -> int:
    """Dimension for l1 = 0, 0 < l0 < (q-1)/lam."""
    _check_lam(q, lam)
    if not 0 < l0 < (q - 1) // lam:
        raise ParamError(f"need 0 < l0 < {(q - 1) // lam}")
    return lam ** (m - 1) * l0 ** m + m


def mann_dim(q: int, m: int, ell: int) -> int:
    """Dimension of the primitive narrow-sense BCH code with designed distance q^(m-ell)."""
    if not 1 <= ell <= m - 1:
        raise ParamError(f"need 1 <= ell <= {m - 1}")
    return _as_int(q ** m - 1 - _alt_sum(q, m, ell + 1, ell, 0))


def s_count_primitive(q: int, m: int, ell: int) -> int:
    """|{1 <= i <= q^m-1 : Run(i) <= ell}| in closed form, 0 <= ell <= m-2."""
    if not 0 <= ell <= m - 2:
        raise ParamError(f"need 0 <= ell <= {m - 2}")
    return _as_int(q ** m - 1 - _alt_sum(q, m, ell + 2, ell + 1, 0))


def count_mod_lambda(q: int, lam: int, t: int) -> int:
    """Tuples in [1, q-1]^t with sum divisible by lam."""
    _check_lam(q, lam)
    if t < 1:
        raise ParamError("t must be >= 1")
    return (q - 1) ** t // lam


def count_mod_lambda_constrained(q: int, lam: int, l0: int, t: int, s: int) -> int:
    """As count_mod_lambda with the first s coordinates in [q - lam*l0, q-1]."""
    _check_lam(q, lam)
    if not 0 < l0 < (q - 1) // lam:
        raise ParamError(f"need 0 < l0 < {(q - 1) // lam}")
    if not 1 <= s <= t:
        raise ParamError("need 1 <= s <= t")
    return _as_int(Fraction((lam * l0) ** s * (q - 1) ** (t - s), lam))


def bounded_compositions(t: int, s: int, l: int) -> int:
    """Number of (x_1..x_t) with 0 <= x_i <= l and sum s (inclusion-exclusion)."""
    if t < 1 or s < 0 or l < 0:
        raise ParamError("need t >= 1, s >= 0, l >= 0")
    return sum((-1) ** j * comb(t, j) * binom(s - j * (l + 1) + t - 1, s - j * (l + 1))
               for j in range(t + 1))


def s_count(q: int, m: int, lam: int, ell: int) -> int:
    """|{1 <= i <= q^m-1 : Run(i) <= ell, lam | i}| in closed form."""
    _check_lam(q, lam)
    if not 0 <= ell <= m - 2:
        raise ParamError(f"need 0 <= ell <= {m - 2}")
    val = Fraction(q ** m - 1, lam) - Fraction(q - 1, lam) * _alt_sum(q, m, ell + 2, ell + 1, 1)
    return _as_int(val)


def xi(m: int, l1: int, s: int, t: int) -> int:
    """Number of zero-gap patterns of weight t with s gaps of length exactly l1
    (the first gap wraps around) and the rest shorter."""
    first = (l1 + 1) * binom(t - 1, s - 1) * sum(
        (-1) ** j * binom(t - s, j)
        * binom(m - s * (l1 + 1) - 1 - j * l1, m - t - (s + j) * l1)
        for j in range(t - s + 1))
    second = binom(t - 1, s) * sum(
        (-1) ** j * binom(t - s - 1, j) * sum(
            (sp + 1) * binom(m - s * (l1 + 1) - 2 - sp - j * l1, m - t - (s + j) * l1 - sp)
            for sp in range(l1))
        for j in range(t - s))
    return first + second


def b_count(q: int, m: int, lam: int, l0: int, l1: int) -> int:
    _check_lam(q, lam)
    if not 1 <= l1 <= m - 1:
        raise ParamError(f"need 1 <= l1 <= {m - 1}")
    if not 0 < l0 < (q - 1) // lam:
        raise ParamError(f"need 0 < l0 < {(q - 1) // lam}")
    total = Fraction(0)
    for t in range(1, m + 1):
        for s in range(1, t + 1):
            x = xi(m, l1, s, t)
            if x:
                total += x * Fraction((lam * l0) ** s * (q - 1) ** (t - s), lam)
    return _as_int(total)


def dim_l0_zero(q: int, m: int, lam: int, l1: int) -> int:
    """Dimension for l0 = 0, 1 <= l1 <= m-1."""
    _check_lam(q, lam)
    if not 1 <= l1 <= m - 1:
        raise ParamError(f"need 1 <= l1 <= {m - 1}")
    head = Fraction(q ** m - 1, lam) - Fraction(q - 1, lam) * _alt_sum(q, m, l1 + 1, l1, 1)
    return _as_int(head) + m


def dim_general(q: int, m: int, lam: int, l0: int, l1: int) -> int:
    """Dimension for 1 <= l1 <= m-1 and 0 < l0 < (q-1)/lam."""
    b = b_count(q, m, lam, l0, l1)
    return dim_l0_zero(q, m, lam, l1) + b


def dim_large_l1(q: int, m: int, lam: int, l0: int, l1: int) -> int:
    """n - m*eps, valid for ceil((m-1)/2) <= l1 <= m-1."""
    BchParams(q, m, lam, l0, l1)
    if not -(-(m - 1) // 2) <= l1 <= m - 1:
        raise ParamError(f"need ceil((m-1)/2) <= l1 <= {m - 1}")
    r = (q - 1) // lam
    if l1 == m - 1:
        eps = r - 1 - l0
    else:
        eps = r * (q - lam * l0) * q ** (m - 2 - l1) - 1
    return (q ** m - 1) // lam - m * eps


def closed_form_dims(p: BchParams) -> dict:
    """Every closed-form dimension formula whose hypotheses hold for p."""
    out = {}
    if p.degenerate:
        out["repetition"] = 1
        return out
    if not p.in_family:
        # same code as (0, l1 + 1)
        out["l0_zero_alias"] = dim_l0_zero(p.q, p.m, p.lam, p.l1 + 1)
    elif p.l1 == 0:
        out["l1_zero"] = dim_l1_zero(p.q, p.m, p.lam, p.l0)
    elif p.l0 == 0:
        out["l0_zero"] = dim_l0_zero(p.q, p.m, p.lam, p.l1)
    else:
        out["general"] = dim_general(p.q, p.m, p.lam, p.l0, p.l1)
    if p.l1 >= 1 and -(-(p.m - 1) // 2) <= p.l1:
        out["large_l1"] = dim_large_l1(p.q, p.m, p.lam, p.l0, p.l1)
    return out


# --- brute-force oracles ----------------------------------------------------

def _space_check(q, m):
    if q ** m > ORACLE_CAP:
        raise ValueError(f"enumeration space q^m = {q ** m} exceeds {ORACLE_CAP}")


def s_count_oracle(q: int, m: int, lam: int, ell: int) -> int:
    _space_check(q, m)
    runs = run_lengths(q, m)[lam::lam]
    return int(np.count_nonzero(runs <= ell))


def b_count_oracle(q: int, m: int, lam: int, l0: int, l1: int) -> int:
    _space_check(q, m)
    p = BchParams(q, m, lam, l0, l1)
    thr = lam * p.delta
    runs = run_lengths(q, m)[lam::lam]
    mr = min_rotation(q, m)[lam::lam]
    return int(np.count_nonzero((runs == l1) & (mr > thr)))


def composition_oracle(t: int, s: int, l: int) -> int:
    return sum(1 for x in itertools.product(range(l + 1), repeat=t) if sum(x) == s)


def modsum_oracle(q: int, lam: int, t: int, s: int = 0, l0: int = 0) -> int:
    """Brute force for count_mod_lambda (s = 0) and its constrained variant."""
    if (q - 1) ** t > ORACLE_CAP:
        raise ValueError("enumeration space too large")
    lo = q - lam * l0
    n = 0
    for x in itertools.product(range(1, q), repeat=t):
        if sum(x) % lam == 0 and all(v >= lo for v in x[:s]):
            n += 1
    return n
