"""q-adic digits, q-weights, cyclotomic cosets, circular zero runs.

Digit vectors are tuples (i_{m-1}, ..., i_1, i_0), most significant first.
Rotating a vector one step to the left, (i_{m-2}, ..., i_0, i_{m-1}), is the
same as multiplying by q modulo q^m - 1; the all-(q-1) vector (the integer
q^m - 1 itself) is fixed by every rotation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .params import BchParams, ParamError


class CosetError(ValueError):
    pass


def q_adic_expand(i: int, q: int, m: int) -> tuple[int, ...]:
    if not 0 <= i <= q ** m - 1:
        raise ValueError(f"{i} has no {m}-digit base-{q} expansion")
    d = []
    for _ in range(m):
        d.append(i % q)
        i //= q
    return tuple(reversed(d))


def from_digits(v, q: int) -> int:
    x = 0
    for c in v:
        x = x * q + c
    return x


def q_weight(v) -> int:
    return sum(v)


def q_weight_int(i: int, q: int) -> int:
    s = 0
    while i:
        s += i % q
        i //= q
    return s


def rotate(v, j: int) -> tuple[int, ...]:
    """j-fold left rotation; matches multiplication by q^j mod q^m - 1."""
    j %= len(v)
    return tuple(v[j:]) + tuple(v[:j])


def run_length(v) -> int:
    """Longest circular run of zeros."""
    m = len(v)
    if all(c == 0 for c in v):
        raise ValueError("run length of the all-zero vector is undefined")
    best = cur = 0
    for c in list(v) + list(v):
        cur = cur + 1 if c == 0 else 0
        best = max(best, cur)
    return min(best, m - 1)


# --- cosets -----------------------------------------------------------------

def coset(i: int, q: int, N: int) -> list[int]:
    if gcd(N, q) != 1:
        raise CosetError(f"gcd({N}, {q}) != 1")
    if not 0 <= i < N:
        raise CosetError(f"{i} outside Z_{N}")
    orbit = [i]
    x = i * q % N
    while x != i:
        orbit.append(x)
        x = x * q % N
    return orbit


def leader(i: int, q: int, N: int) -> int:
    return min(coset(i, q, N))


def multiplicative_order(q: int, N: int) -> int:
    if N == 1:
        return 1
    k, x = 1, q % N
    while x != 1:
        x = x * q % N
        k += 1
    return k


@dataclass(frozen=True)
class CosetTable:
    q: int
    N: int
    leader_of: np.ndarray  # i -> leader of its coset
    size_of_elem: np.ndarray  # i -> size of its coset

    @property
    def leaders(self) -> np.ndarray:
        return np.flatnonzero(self.leader_of == np.arange(self.N))

    def size_of(self, ldr: int) -> int:
        return int(self.size_of_elem[ldr])

    def is_leader(self, i: int) -> bool:
        return int(self.leader_of[i]) == i


@lru_cache(maxsize=64)
def build_table(q: int, N: int) -> CosetTable:
    if gcd(N, q) != 1:
        raise CosetError(f"gcd({N}, {q}) != 1")
    idx = np.arange(N, dtype=np.int64)
    mn = idx.copy()
    size = np.zeros(N, dtype=np.int64)
    r = idx.copy()
    for j in range(1, multiplicative_order(q, N) + 1):
        r = r * q % N
        np.minimum(mn, r, out=mn)
        size[(size == 0) & (r == idx)] = j
    mn.setflags(write=False)
    size.setflags(write=False)
    return CosetTable(q, N, mn, size)


# --- shift comparison -------------------------------------------------------

def _rot_int(x: int, q: int, m: int) -> int:
    top = x // q ** (m - 1)
    return (x % q ** (m - 1)) * q + top


def all_shifts_exceed(i: int, threshold: int, q: int, N: int, m: int) -> bool:
    """True iff every rotation of the digit vector of i is > threshold."""
    if N != q ** m - 1:
        raise ValueError("N must equal q^m - 1")
    if not 1 <= i <= N or not 1 <= threshold <= N:
        raise ValueError("i and threshold must lie in [1, N]")
    x = i
    for _ in range(m):
        if x <= threshold:
            return False
        x = _rot_int(x, q, m)
    return True


@lru_cache(maxsize=8)
def min_rotation(q: int, m: int) -> np.ndarray:
    """Smallest rotation of every i in [0, q^m - 1] (array index = i)."""
    Q = q ** m
    top = q ** (m - 1)
    x = np.arange(Q, dtype=np.int64)
    mn = x.copy()
    for _ in range(m - 1):
        x = (x % top) * q + x // top
        np.minimum(mn, x, out=mn)
    mn.setflags(write=False)
    return mn


@lru_cache(maxsize=8)
def run_lengths(q: int, m: int) -> np.ndarray:
    """Circular zero-run length of every i in [0, q^m - 1]; index 0 gets m."""
    Q = q ** m
    x = np.arange(Q, dtype=np.int64)
    zero = np.empty((m, Q), dtype=bool)
    for j in range(m):
        zero[m - 1 - j] = (x // q ** j) % q == 0
    out = np.zeros(Q, dtype=np.int64)
    window = np.ones((m, Q), dtype=bool)
    for L in range(1, m + 1):
        # window[p] = zeros at positions p, p+1, ..., p+L-1 (cyclic)
        window &= np.roll(zero, -(L - 1), axis=0)
        out += window.any(axis=0)
    out.setflags(write=False)
    return out


def orbit_of_delta_size(params: BchParams) -> int:
    if params.degenerate:
        raise ParamError("l0 = l1 = 0 gives lambda*delta = N; orbit size undefined")
    ld = params.lam * params.delta
    size = len(coset(ld, params.q, params.N))
    return size


# --- coset leader checks -------------------------------------------------

def leader_lemma_check(q: int, m: int) -> list[int]:
    """Counterexamples to: 1 <= i <= q^floor((m+1)/2) - 1, q does not divide i
    implies i is a coset leader mod q^m - 1 with coset size m."""
    N = q ** m - 1
    t = build_table(q, N)
    bad = []
    for i in range(1, q ** ((m + 1) // 2)):
        if i % q == 0:
            continue
        if not t.is_leader(i) or t.size_of(i) != m:
            bad.append(i)
    return bad


def leader_scaling_check(q: int, m: int, lam: int) -> list[int]:
    """Counterexamples in Z_n to: i leader mod n iff lam*i leader mod N, with equal sizes."""
    N = q ** m - 1
    n = N // lam
    tn, tN = build_table(q, n), build_table(q, N)
    i = np.arange(n)
    lead_n = tn.leader_of == i
    lead_N = tN.leader_of[lam * i] == lam * i
    bad = (lead_n != lead_N) | (tn.size_of_elem != tN.size_of_elem[lam * i])
    return [int(x) for x in np.flatnonzero(bad)]


def run_implication_check(params: BchParams) -> list[int]:
    """Counterexamples i in [1, N] to the two run-length rules: a zero run
    longer than l1 forces some rotation <= lambda*delta, and every zero run
    shorter than l1 forces all rotations above it."""
    p = params
    thr = p.lam * p.delta
    runs = run_lengths(p.q, p.m)[1:]
    exceed = min_rotation(p.q, p.m)[1:] > thr
    bad = ((runs > p.l1) & exceed) | ((runs < p.l1) & ~exceed)
    return (np.flatnonzero(bad) + 1).tolist()
