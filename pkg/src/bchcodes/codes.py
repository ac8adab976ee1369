"""BCH and punctured generalized Reed-Muller codes as cyclic codes over GF(q)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .cyclotomic import build_table, coset, min_rotation, q_weight_int
from .gf import FieldCtx, Tower, tower
from .params import BchParams, ParamError
from .poly import Polynomial, minimal_polynomial, product

POLY_CAP = 2 ** 17
COUNT_CAP = 10 ** 7


@dataclass(frozen=True, eq=False)
class CyclicCode:
    q: int
    m: int
    lam: int
    n: int
    field: FieldCtx
    zeros: frozenset  # exponents i in Z_n with g(beta^i) = 0
    generator: Optional[Polynomial] = None
    params: Optional[BchParams] = None
    pgrm_ell: Optional[int] = None
    label: str = ""

    @property
    def dimension(self) -> int:
        if self.generator is not None:
            return self.n - self.generator.degree
        return self.n - len(self.zeros)

    @property
    def k(self) -> int:
        return self.dimension

    def need_generator(self) -> Polynomial:
        if self.generator is None:
            raise ValueError(f"code of length {self.n} was built without its generator polynomial")
        return self.generator

    def bch_bound(self) -> int:
        """1 + longest cyclic run of consecutive exponents in the zero set."""
        n = self.n
        if not self.zeros:
            return 1
        if len(self.zeros) >= n:
            return n + 1
        z = np.zeros(n, dtype=bool)
        z[list(self.zeros)] = True
        start = int(np.flatnonzero(~z)[0])
        z = np.roll(z, -start)
        best = cur = 0
        for v in z:
            cur = cur + 1 if v else 0
            best = max(best, cur)
        return best + 1

    def __str__(self):
        return f"[{self.n}, {self.dimension}] code over GF({self.q})"


# --- zero sets and generators -----------------------------------------------

def bch_zeros(q: int, m: int, lam: int, delta: int) -> frozenset:
    """Union of the q-cyclotomic cosets mod n of 1, ..., delta-1."""
    n = (q ** m - 1) // lam
    t = build_table(q, n)
    leaders = np.unique(t.leader_of[1:delta])
    return frozenset(np.flatnonzero(np.isin(t.leader_of, leaders)).tolist())


def pgrm_zeros(q: int, m: int, lam: int, ell: int) -> frozenset:
    n = (q ** m - 1) // lam
    bound = (q - 1) * m - ell
    return frozenset(i for i in range(1, n) if q_weight_int(lam * i, q) < bound)


def _check_pgrm(q, m, lam, ell):
    if lam < 1 or (q - 1) % lam:
        raise ParamError(f"lambda={lam} must divide q-1")
    if not 0 <= ell < (q - 1) * m:
        raise ParamError(f"order {ell} outside [0, {(q - 1) * m})")
    if ell % lam:
        raise ParamError(f"lambda={lam} must divide the order {ell}")


def generator_from_zeros(tw: Tower, lam: int, n: int, zeros) -> Polynomial:
    """Product of the minimal polynomials of beta^i over one i per coset."""
    t = build_table(tw.q, n)
    leaders = sorted({int(t.leader_of[i]) for i in zeros})
    factors = [_coset_min_poly(tw.q, tw.m, lam, i) for i in leaders]
    return product(factors, tw.small)


@lru_cache(maxsize=1 << 16)
def _coset_min_poly(q: int, m: int, lam: int, i: int) -> Polynomial:
    tw = tower(q, m)
    return minimal_polynomial(tw.emb, tw.big.alpha_pow(lam * i))


def bch_generator(params: BchParams, tw: Tower | None = None) -> Polynomial:
    tw = tw or tower(params.q, params.m)
    z = bch_zeros(params.q, params.m, params.lam, params.delta)
    return generator_from_zeros(tw, params.lam, params.n, z)


def pgrm_generator(q: int, m: int, lam: int, ell: int, tw: Tower | None = None) -> Polynomial:
    _check_pgrm(q, m, lam, ell)
    tw = tw or tower(q, m)
    return generator_from_zeros(tw, lam, (q ** m - 1) // lam, pgrm_zeros(q, m, lam, ell))


def bch_designed(q: int, m: int, lam: int, delta: int, with_generator: bool = True) -> CyclicCode:
    """Narrow-sense BCH code of length (q^m-1)/lam and any designed distance."""
    n = (q ** m - 1) // lam
    if not 1 <= delta <= n:
        raise ParamError(f"designed distance {delta} outside [1, {n}]")
    z = bch_zeros(q, m, lam, delta)
    tw = tower(q, m)
    g = generator_from_zeros(tw, lam, n, z) if with_generator else None
    return CyclicCode(q, m, lam, n, tw.small, z, g, label=f"BCH(q={q}, n={n}, delta={delta})")


def bch_code(params: BchParams, with_generator: bool = True) -> CyclicCode:
    p = params
    z = bch_zeros(p.q, p.m, p.lam, p.delta)
    tw = tower(p.q, p.m)
    g = generator_from_zeros(tw, p.lam, p.n, z) if with_generator else None
    return CyclicCode(p.q, p.m, p.lam, p.n, tw.small, z, g, params=p, label=f"C{p}")


def pgrm_code(q: int, m: int, lam: int, ell: int, with_generator: bool = True) -> CyclicCode:
    _check_pgrm(q, m, lam, ell)
    n = (q ** m - 1) // lam
    z = pgrm_zeros(q, m, lam, ell)
    tw = tower(q, m)
    g = generator_from_zeros(tw, lam, n, z) if with_generator else None
    return CyclicCode(q, m, lam, n, tw.small, z, g, pgrm_ell=ell,
                      label=f"PGRM_{q}({ell}, {m}), lambda={lam}")


def pgrm_split(q: int, lam: int, ell: int) -> tuple[int, int]:
    """(l0, l1) with ell = (q-1) l1 + lam l0 and lam l0 < q-1."""
    l1, rem = divmod(ell, q - 1)
    if rem % lam:
        raise ParamError(f"order {ell} is not of the form (q-1) l1 + lambda l0")
    return rem // lam, l1


def pgrm_distance(q: int, m: int, lam: int, ell: int) -> int:
    """Minimum distance of PGRM_q(ell, m) from its closed form."""
    l0, l1 = pgrm_split(q, lam, ell)
    return ((q - lam * l0) * q ** (m - 1 - l1) - 1) // lam


def inclusion_check(params: BchParams, poly_cap: int = POLY_CAP) -> bool:
    """Whether the PGRM code of order (q-1) l1 + lam l0 lies inside the BCH code.

    Up to poly_cap the generators are built and divided; above it the
    equivalent zero-set containment is tested (both generators are products
    of distinct minimal polynomials, one per coset).
    """
    p = params
    if p.n <= poly_cap:
        g = bch_generator(p)
        h = pgrm_generator(p.q, p.m, p.lam, p.ell)
        return g.divides(h)
    return bch_zeros(p.q, p.m, p.lam, p.delta) <= pgrm_zeros(p.q, p.m, p.lam, p.ell)


# --- codewords --------------------------------------------------------------

def encode(code: CyclicCode, message: Sequence[int]) -> tuple[int, ...]:
    """Non-systematic encoding: message(x) * g(x)."""
    g = code.need_generator()
    if len(message) != code.dimension:
        raise ValueError(f"message length {len(message)} != dimension {code.dimension}")
    c = (Polynomial(code.field, message) * g).coeffs
    return tuple(c) + (0,) * (code.n - len(c))


def is_codeword(code: CyclicCode, word: Sequence[int]) -> bool:
    if len(word) != code.n:
        raise ValueError(f"word length {len(word)} != code length {code.n}")
    return (Polynomial(code.field, word) % code.need_generator()).is_zero()


def weight(word) -> int:
    return sum(1 for c in word if c)


def generator_matrix(code: CyclicCode) -> np.ndarray:
    """Rows x^j g(x), j = 0..k-1, as labels."""
    g = code.need_generator().coeffs
    k, n = code.dimension, code.n
    G = np.zeros((k, n), dtype=np.uint8)
    for j in range(k):
        G[j, j:j + len(g)] = g
    return G


def parity_check_matrix(code: CyclicCode) -> np.ndarray:
    """Rows built from h(x) = (x^n - 1)/g(x); the kernel is exactly the code."""
    ctx = code.field
    g = code.need_generator()
    h = (Polynomial.x_n_minus_1(ctx, code.n) // g).coeffs
    k, n = code.dimension, code.n
    H = np.zeros((n - k, n), dtype=np.uint8)
    hr = list(reversed(h))  # h_k, ..., h_0
    for r in range(n - k):
        H[r, r:r + k + 1] = hr
    return H


# --- dimension --------------------------------------------------------------

def dim_via_generator(code: CyclicCode) -> int:
    return code.n - code.need_generator().degree


def generator_degree(params: BchParams) -> int:
    """deg g as the total size of the cosets in the defining set."""
    return len(bch_zeros(params.q, params.m, params.lam, params.delta))


def dim_via_counting(params: BchParams, cap: int = COUNT_CAP) -> int:
    """Count i in [1, N], lam | i, all of whose rotations exceed lam*delta,
    plus the size of the coset of lam*delta."""
    p = params
    if p.degenerate:
        return 1
    if p.N > cap:
        raise ValueError(f"N = {p.N} exceeds the enumeration cap {cap}")
    thr = p.lam * p.delta
    mr = min_rotation(p.q, p.m)[p.lam::p.lam]  # i = lam, 2 lam, ..., N
    return int(np.count_nonzero(mr > thr)) + len(coset(thr, p.q, p.N))


@dataclass(frozen=True)
class GriesmerResult:
    sum: int
    meets: bool


def griesmer_check(n: int, k: int, d: int, q: int) -> GriesmerResult:
    if k < 1 or d < 1:
        raise ValueError("Griesmer bound needs k >= 1 and d >= 1")
    s = sum(-(-d // q ** i) for i in range(k))
    return GriesmerResult(s, s == n)
