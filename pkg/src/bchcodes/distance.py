"""Tiered minimum-distance oracle for cyclic codes.

Lower bounds come from the consecutive run of zeros of the code (BCH bound).
Upper bounds come from explicit codewords: the exhaustive scan, the
Reed-Muller evaluation witness (primitive length only), or a low-weight
dependency search on parity-check columns.  Every codeword reported as an
upper bound is re-checked for membership and weight before it is trusted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Optional

import numpy as np

from .codes import (CyclicCode, bch_code, generator_matrix, is_codeword,
                    parity_check_matrix, pgrm_split, weight)
from .gf import Tower, tower
from .params import BchParams, ParamError

DEFAULT_BUDGET = 2 ** 27
STRATEGIES = ("auto", "exhaustive", "rm_witness", "low_weight", "bound_only")
_TABLE_CELLS = 2 ** 23


class WitnessError(RuntimeError):
    pass


@dataclass
class DistanceResult:
    lower: int
    upper: Optional[int]
    exact: bool
    method: str
    work: int = 0
    codeword: Optional[tuple] = field(default=None, repr=False)

    def as_dict(self):
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact,
                "method": self.method, "work": self.work}


def exhaustive_cost(q: int, k: int) -> int:
    """Number of scalar classes of nonzero messages."""
    return (q ** k - 1) // (q - 1)


def low_weight_cost(n: int, w: int) -> int:
    return comb(n, w) * w ** 3


def min_distance(code: CyclicCode, strategy: str = "auto",
                 budget: int = DEFAULT_BUDGET) -> DistanceResult:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    lower = code.bch_bound()
    k = code.dimension
    if k == 0:
        return DistanceResult(lower, None, False, "bch_bound_only")
    if strategy == "bound_only":
        return DistanceResult(lower, None, False, "bch_bound_only")
    if strategy == "exhaustive":
        return exhaustive(code, budget)
    if strategy == "rm_witness":
        return _witness_result(code, lower)
    if strategy == "low_weight":
        return low_weight(code, lower, budget)

    if exhaustive_cost(code.q, k) <= budget:
        return exhaustive(code, budget)
    if code.lam == 1 and _witness_params(code) is not None:
        try:
            return _witness_result(code, lower)
        except WitnessError:
            pass
    if low_weight_cost(code.n, lower) <= budget:
        res = low_weight(code, lower, budget)
        if res.upper is not None:
            return res
    return DistanceResult(lower, None, False, "bch_bound_only")


# --- exhaustive -------------------------------------------------------------

class _Adder:
    """Weights of T + b for a table T of codewords and a single word b.

    Symbols are split into digit planes of the additive group (Z_p)^s;
    characteristic 2 packs each plane into uint64 bit masks.
    """

    def __init__(self, ctx, n):
        self.p, self.s, self.n = ctx.p, ctx.s, n
        self.words = (n + 63) // 64

    def encode(self, labels: np.ndarray):
        labels = np.atleast_2d(labels)
        planes = [(labels // self.p ** b) % self.p for b in range(self.s)]
        if self.p != 2:
            return [pl.astype(np.uint8) for pl in planes]
        out = []
        shifts = np.arange(64, dtype=np.uint64)
        for pl in planes:
            packed = np.zeros((labels.shape[0], self.words), dtype=np.uint64)
            for w in range(self.words):
                chunk = pl[:, 64 * w:64 * (w + 1)].astype(np.uint64)
                packed[:, w] = (chunk << shifts[:chunk.shape[1]]).sum(axis=1, dtype=np.uint64)
            out.append(packed)
        return out

    def weights(self, T, b):
        if self.p == 2:
            acc = T[0] ^ b[0]
            for tp, bp in zip(T[1:], b[1:]):
                acc |= tp ^ bp
            return np.bitwise_count(acc).sum(axis=1, dtype=np.int64)
        p = self.p
        nz = None
        for tp, bp in zip(T, b):
            t = tp + bp
            cur = (t != 0) & (t != p)
            nz = cur if nz is None else (nz | cur)
        return nz.sum(axis=1, dtype=np.int64)


def _combo_table(rows: np.ndarray, add_t, mul_t, q):
    """All GF(q)-combinations of rows; index = sum c_r q^r (row r is rows[r])."""
    T = np.zeros((1, rows.shape[1]), dtype=np.uint8)
    for r in rows:
        blocks = [T] + [add_t[T, mul_t[c, r]] for c in range(1, q)]
        T = np.concatenate(blocks, axis=0)
    return T


def exhaustive(code: CyclicCode, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    """Exact minimum weight over one message per scalar class.

    The messages with leading nonzero coordinate p equal to 1 are split into
    a high part enumerated here and a low part precomputed as a table, so each
    step is one vectorised add-and-count over the table.
    """
    q, n, k = code.q, code.n, code.dimension
    lower = code.bch_bound()
    ctx = code.field
    add_t, mul_t, _, _ = ctx.tables()
    G = generator_matrix(code)
    adder = _Adder(ctx, n)
    lmax = 0
    while lmax < k - 1 and q ** (lmax + 1) * n <= _TABLE_CELLS:
        lmax += 1
    low_rows = G[k - lmax:][::-1]  # row k-1 first
    T_labels = _combo_table(low_rows, add_t, mul_t, q)
    T_full = adder.encode(T_labels)

    best, best_at, work = None, None, 0
    for lead in range(k):
        free = k - 1 - lead
        L = min(free, lmax)
        size = q ** L
        T = [pl[:size] for pl in T_full]
        high = list(range(lead + 1, k - L))
        for coeffs in itertools.product(range(q), repeat=len(high)):
            if work + size > budget:
                return DistanceResult(lower, best, False, "exhaustive", work,
                                      _rebuild(G, best_at, T_labels, add_t, mul_t, k, lmax))
            base = G[lead].copy()
            for c, r in zip(coeffs, high):
                if c:
                    base = add_t[base, mul_t[c, G[r]]]
            w = adder.weights(T, adder.encode(base))
            j = int(np.argmin(w))
            work += size
            if best is None or w[j] < best:
                best, best_at = int(w[j]), (lead, high, coeffs, j, L)
    word = _rebuild(G, best_at, T_labels, add_t, mul_t, k, lmax)
    if weight(word) != best or not is_codeword(code, word):
        raise AssertionError("exhaustive search produced an inconsistent minimum word")
    return DistanceResult(best, best, True, "exhaustive", work, word)


def _rebuild(G, at, T_labels, add_t, mul_t, k, lmax):
    if at is None:
        return None
    lead, high, coeffs, j, L = at
    w = G[lead].copy()
    for c, r in zip(coeffs, high):
        if c:
            w = add_t[w, mul_t[c, G[r]]]
    w = add_t[w, T_labels[j]]
    return tuple(int(x) for x in w)


# --- Reed-Muller witness ----------------------------------------------------

def coordinate_map(tw: Tower, basis=None) -> dict:
    """big-field label -> coordinate tuple over GF(q) in the given basis."""
    big, small, emb, m = tw.big, tw.small, tw.emb, tw.m
    if basis is None:
        basis = [big.alpha_pow(j) for j in range(m)]
    if len(basis) != m:
        raise ValueError("basis must have m elements")
    out = {}
    for coords in itertools.product(range(small.order), repeat=m):
        y = 0
        for c, b in zip(coords, basis):
            if c:
                y = big.add(y, big.mul(emb(c), b))
        out[y] = coords
    if len(out) != big.order:
        raise ValueError("basis elements are not linearly independent over GF(q)")
    return out


def rm_witness(params: BchParams, tw: Tower | None = None, basis=None,
               code: CyclicCode | None = None) -> tuple[int, ...]:
    """Evaluation of prod_{i<=l1}(1 - x_i^(q-1)) * prod_{j<=l0}(x_{l1+1} - a_j) at alpha^i.

    The word has weight delta and lies in the code; both are checked before
    it is returned.
    """
    p = params
    if p.lam != 1:
        raise WitnessError("the Reed-Muller witness needs lambda = 1")
    tw = tw or tower(p.q, p.m)
    small, big = tw.small, tw.big
    coords = coordinate_map(tw, basis)
    consts = list(range(1, p.l0 + 1))
    one = 1
    word = []
    for i in range(p.n):
        x = coords[big.alpha_pow(i)]
        v = one
        for t in range(p.l1):
            if x[t]:
                v = 0
                break
        if v and p.l0:
            xt = x[p.l1]
            for a in consts:
                v = small.mul(v, small.sub(xt, a))
        word.append(v)
    word = tuple(word)
    code = code or bch_code(p)
    if weight(word) != p.delta:
        raise WitnessError(f"witness weight {weight(word)} != delta {p.delta}")
    if not is_codeword(code, word):
        raise WitnessError("witness is not a codeword under this evaluation order")
    return word


def _witness_params(code: CyclicCode) -> BchParams | None:
    if code.params is not None:
        return code.params
    if code.pgrm_ell is not None:
        try:
            l0, l1 = pgrm_split(code.q, code.lam, code.pgrm_ell)
            return BchParams(code.q, code.m, code.lam, l0, l1)
        except ParamError:
            return None
    return None


def _witness_result(code: CyclicCode, lower: int) -> DistanceResult:
    p = _witness_params(code)
    if p is None:
        raise WitnessError("code carries no (q, m, lambda, l0, l1) parameters")
    word = rm_witness(p, code=code)
    w = weight(word)
    return DistanceResult(lower, w, lower == w, "rm_witness", 1, word)


# --- low-weight dependency search -------------------------------------------

def low_weight(code: CyclicCode, target: int, budget: int = DEFAULT_BUDGET) -> DistanceResult:
    """Search for <= target columns of H that are linearly dependent.

    Supports are taken to contain position 0 (any codeword has a cyclic
    shift with that property).  Depth-first over increasing column indices
    with an incremental echelon basis; the first dependency gives a codeword.
    """
    lower = code.bch_bound()
    ctx = code.field
    add, mul, neg, inv = ctx.add, ctx.mul, ctx.neg, ctx.inv
    H = parity_check_matrix(code)
    n = code.n
    cols = [[int(x) for x in H[:, j]] for j in range(n)]
    work = 0

    def reduce(vec, basis):
        # basis entries: (pivot, vector, combo) with vector[pivot] = 1
        v = list(vec)
        combo = {}
        for piv, bv, bc in basis:
            c = v[piv]
            if c:
                nc = neg(c)
                v = [add(x, mul(nc, y)) for x, y in zip(v, bv)]
                for j, a in bc.items():
                    combo[j] = add(combo.get(j, 0), mul(nc, a))
        return v, combo

    found = None

    def dfs(chosen, basis, start):
        nonlocal work, found
        for j in range(start, n):
            if found is not None or work >= budget:
                return
            work += 1
            v, combo = reduce(cols[j], basis)
            combo[j] = add(combo.get(j, 0), 1)
            nz = [t for t, x in enumerate(v) if x]
            if not nz:
                found = combo
                return
            if len(chosen) + 1 < target:
                piv = nz[0]
                s = inv(v[piv])
                bv = [mul(s, x) for x in v]
                bc = {t: mul(s, a) for t, a in combo.items()}
                dfs(chosen + [j], basis + [(piv, bv, bc)], j + 1)

    if target >= 1:
        v0 = cols[0]
        nz0 = [t for t, x in enumerate(v0) if x]
        work += 1
        if not nz0:
            found = {0: 1}
        elif target > 1:
            s = inv(v0[nz0[0]])
            dfs([0], [(nz0[0], [mul(s, x) for x in v0], {0: s})], 1)
    if found is None:
        return DistanceResult(lower, None, False, "low_weight_search", work)
    word = [0] * n
    for j, a in found.items():
        word[j] = a
    word = tuple(word)
    if not is_codeword(code, word) or weight(word) == 0:
        raise AssertionError("low-weight search produced a non-codeword")
    w = weight(word)
    if w < lower:
        raise AssertionError(f"codeword of weight {w} below the BCH bound {lower}")
    return DistanceResult(lower, w, w == lower, "low_weight_search", work, word)
