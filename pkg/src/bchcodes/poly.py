"""Univariate polynomials over a FieldCtx, minimal polynomials, generators."""

from __future__ import annotations

import numpy as np

from .gf import SMALL_TABLE_CAP, FieldCtx, FieldError, SubfieldEmbedding


class Polynomial:
    """Dense polynomial; coeffs[i] is the label of the x^i coefficient."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.ctx = ctx
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, ctx, deg, coeff=1):
        return cls(ctx, [0] * deg + [coeff])

    @classmethod
    def one(cls, ctx):
        return cls(ctx, [1])

    @classmethod
    def x_n_minus_1(cls, ctx, n):
        return cls(ctx, [ctx.neg(1)] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, b):
        if b.ctx is not self.ctx:
            raise FieldError("polynomials over different fields")

    def __eq__(self, b):
        return isinstance(b, Polynomial) and b.ctx is self.ctx and b.coeffs == self.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, b):
        self._check(b)
        add = self.ctx.add
        a, bb = self.coeffs, b.coeffs
        if len(a) < len(bb):
            a, bb = bb, a
        out = list(a)
        for i, y in enumerate(bb):
            out[i] = add(out[i], y)
        return Polynomial(self.ctx, out)

    def __neg__(self):
        return Polynomial(self.ctx, [self.ctx.neg(c) for c in self.coeffs])

    def __sub__(self, b):
        return self + (-b)

    def __mul__(self, b):
        self._check(b)
        a, bb = self.coeffs, b.coeffs
        if not a or not bb:
            return Polynomial(self.ctx)
        add, mul = self.ctx.add, self.ctx.mul
        out = [0] * (len(a) + len(bb) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(bb):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Polynomial(self.ctx, out)

    def scale(self, c):
        mul = self.ctx.mul
        return Polynomial(self.ctx, [mul(c, x) for x in self.coeffs])

    def monic(self):
        if not self.coeffs:
            return self
        return self.scale(self.ctx.inv(self.coeffs[-1]))

    def __divmod__(self, b):
        self._check(b)
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        add, mul, neg = ctx.add, ctx.mul, ctx.neg
        r = list(self.coeffs)
        db = b.degree
        inv_lead = ctx.inv(b.coeffs[-1])
        bc = b.coeffs
        if len(r) <= db:
            return Polynomial(ctx), self
        if db >= _FAST_LEN and len(r) - db > _FAST_LEN:
            return _fast_divmod(self, b)
        if ctx.order <= SMALL_TABLE_CAP and len(r) > 64:
            return _table_divmod(self, b)
        quot = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c:
                c = mul(c, inv_lead)
                quot[i - db] = c
                nc = neg(c)
                sh = i - db
                for j, y in enumerate(bc):
                    if y:
                        r[sh + j] = add(r[sh + j], mul(nc, y))
        return Polynomial(ctx, quot), Polynomial(ctx, r[:db])

    def __floordiv__(self, b):
        return divmod(self, b)[0]

    def __mod__(self, b):
        return divmod(self, b)[1]

    def divides(self, b) -> bool:
        return (b % self).is_zero()

    def gcd(self, b):
        a, bb = self, b
        while not bb.is_zero():
            a, bb = bb, a % bb
        return a.monic()

    def lcm(self, b):
        if self.is_zero() or b.is_zero():
            return Polynomial(self.ctx)
        return ((self * b) // self.gcd(b)).monic()

    def __call__(self, x: int) -> int:
        add, mul = self.ctx.add, self.ctx.mul
        acc = 0
        for c in reversed(self.coeffs):
            acc = add(mul(acc, x), c)
        return acc

    def eval_in(self, emb: SubfieldEmbedding, x: int) -> int:
        """Evaluate at an element of the big field of emb."""
        big = emb.big
        acc = 0
        for c in reversed(self.coeffs):
            acc = big.add(big.mul(acc, x), emb(c))
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Polynomial(GF({self.ctx.order}), {list(self.coeffs)})"


def product(polys, ctx) -> Polynomial:
    polys = list(polys)
    if len(polys) > 8:
        return _tree_product(polys, ctx)
    out = Polynomial.one(ctx)
    for f in polys:
        out = out * f
    return out


# --- large-degree arithmetic ---------------------------------------------------
#
# A polynomial over GF(p^s) is held as an (s, len) int64 array of base-p digit
# planes; multiplication convolves plane pairs and folds y^s back down with the
# field modulus.  Long operands go through a float FFT whose rounding is checked.

_FAST_LEN = 64


def _planes(coeffs, ctx) -> np.ndarray:
    c = np.array(coeffs, dtype=np.int64)
    return np.stack([(c // ctx.p ** d) % ctx.p for d in range(ctx.s)])


def _labels(P: np.ndarray, ctx) -> list:
    return sum(P[d] * ctx.p ** d for d in range(ctx.s)).tolist()


def _round_exact(c: np.ndarray) -> np.ndarray:
    r = np.rint(c)
    if c.size and np.max(np.abs(c - r)) > 0.25:
        raise ArithmeticError("FFT convolution lost integer precision")
    return r.astype(np.int64)


def _conv_mul(A: np.ndarray, B: np.ndarray, ctx) -> np.ndarray:
    p, s = ctx.p, ctx.s
    L = A.shape[1] + B.shape[1] - 1
    C = np.zeros((2 * s - 1, L), dtype=np.int64)
    if min(A.shape[1], B.shape[1]) < _FAST_LEN:
        for u in range(s):
            for v in range(s):
                C[u + v] += np.convolve(A[u], B[v])
    else:
        size = 1 << (L - 1).bit_length()
        FA = np.fft.rfft(A, size, axis=1)
        FB = np.fft.rfft(B, size, axis=1)
        for w in range(2 * s - 1):
            acc = sum(FA[u] * FB[w - u] for u in range(max(0, w - s + 1), min(w, s - 1) + 1))
            C[w] = _round_exact(np.fft.irfft(acc, size)[:L])
    C %= p
    # y^s = -(m_0 + m_1 y + ... + m_{s-1} y^{s-1})
    mod = ctx.modulus
    for w in range(2 * s - 2, s - 1, -1):
        for t in range(s):
            if mod[t]:
                C[w - s + t] -= mod[t] * C[w]
        C[w - s:w] %= p
    return C[:s] % p


def _series_inv(F: np.ndarray, k: int, ctx) -> np.ndarray:
    """G with F*G = 1 mod x^k (Newton iteration, G <- G(2 - FG))."""
    p = ctx.p
    G = _planes([ctx.inv(_labels(F[:, :1], ctx)[0])], ctx)
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        E = (-_conv_mul(F[:, :prec], G, ctx)[:, :prec]) % p
        E[0, 0] = (E[0, 0] + 2) % p
        G = _conv_mul(G, E, ctx)[:, :prec]
    return G


def _fast_divmod(a: Polynomial, b: Polynomial):
    ctx = a.ctx
    da, db = a.degree, b.degree
    dq = da - db
    ra = _planes(a.coeffs[::-1], ctx)
    rb = _planes(b.coeffs[::-1], ctx)
    q_rev = _conv_mul(ra[:, :dq + 1], _series_inv(rb, dq + 1, ctx), ctx)[:, :dq + 1]
    Q = q_rev[:, ::-1]
    BQ = _conv_mul(_planes(b.coeffs, ctx), Q, ctx)[:, :db]
    R = (_planes(a.coeffs[:db], ctx) - BQ) % ctx.p if db else BQ
    return Polynomial(ctx, _labels(Q, ctx)), Polynomial(ctx, _labels(R, ctx) if db else [])


def _table_divmod(a: Polynomial, b: Polynomial):
    ctx = a.ctx
    add, mul, neg, inv = ctx.tables()
    r = np.array(a.coeffs, dtype=np.uint8)
    bc = np.array(b.coeffs, dtype=np.uint8)
    db = len(bc) - 1
    neg_b = neg[mul[int(inv[bc[-1]]), bc]]  # -b / lead(b)
    quot = np.zeros(len(r) - db, dtype=np.uint8)
    for i in range(len(r) - 1, db - 1, -1):
        c = int(r[i])
        if c:
            sh = i - db
            quot[sh] = mul[c, inv[bc[-1]]]
            seg = r[sh:i + 1]
            r[sh:i + 1] = add[seg, mul[c, neg_b]]
    return Polynomial(ctx, quot.tolist()), Polynomial(ctx, r[:db].tolist())


def _tree_product(polys, ctx) -> Polynomial:
    layer = [_planes(f.coeffs, ctx) for f in polys]
    if any(pl.shape[1] == 0 for pl in layer):
        return Polynomial(ctx, [])
    while len(layer) > 1:
        nxt = [_conv_mul(layer[t], layer[t + 1], ctx) for t in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return Polynomial(ctx, _labels(layer[0], ctx))


def minimal_polynomial(emb: SubfieldEmbedding, e: int) -> Polynomial:
    """Minimal polynomial over the small field of a big-field element e."""
    big, q = emb.big, emb.small.order
    orbit = [e]
    x = big.pow(e, q)
    while x != e:
        orbit.append(x)
        x = big.pow(x, q)
    f = Polynomial.one(big)
    for r in orbit:
        f = f * Polynomial(big, [big.neg(r), 1])
    return Polynomial(emb.small, [emb.pull_back(c) for c in f.coeffs])
