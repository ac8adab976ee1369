"""Finite fields GF(p^s) and the subfield tower GF(q) -> GF(q^m).

Elements are handled internally as integer labels: the residue polynomial
c_0 + c_1 y + ... + c_{s-1} y^{s-1} is labelled by sum(c_j * p^j).  Label
order is the canonical element order used everywhere a "smallest" element or
polynomial has to be picked.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

FIELD_CAP = 2 ** 24
TABLE_CAP = 2 ** 20
SMALL_TABLE_CAP = 2 ** 8


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, s) with q = p^s, or raise FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    s, r = 0, q
    while r % p == 0:
        r //= p
        s += 1
    if r != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, s


# --- GF(p)[x] helpers on coefficient lists (least significant first) -------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            sh = i - df
            for j in range(df + 1):
                a[sh + j] = (a[sh + j] - c * f[j]) % p
    return _trim(a[:df] if len(a) > df else a)


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, f, p)


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _frobenius_power(f, p, k):
    """x^(p^k) mod f."""
    r = [0, 1]
    for _ in range(k):
        acc = [1]
        base = r
        e = p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        r = acc
    return r


def is_irreducible(f, p: int) -> bool:
    """Rabin's test for a monic f over GF(p)."""
    s = len(f) - 1
    if s <= 0:
        return False
    if s == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    if _trim(_psub(_frobenius_power(f, p, s), x, p)):
        return False
    for r in prime_factors(s):
        h = _psub(_frobenius_power(f, p, s // r), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    for label in range(p ** s, 2 * p ** s):
        coeffs = [(label // p ** j) % p for j in range(s + 1)]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {s} over GF({p})")


# --- field context ----------------------------------------------------------

class FieldCtx:
    """GF(p^s) as GF(p)[y]/(modulus), elements as integer labels.

    Multiplication and addition go through discrete-log / Zech tables when
    the order is at most TABLE_CAP; otherwise through residue arithmetic.
    """

    def __init__(self, p: int, s: int, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if s < 1:
            raise FieldError("extension degree must be >= 1")
        if p ** s > FIELD_CAP:
            raise FieldError(f"GF({p}^{s}) exceeds the field size cap {FIELD_CAP}")
        self.p = p
        self.s = s
        self.order = p ** s
        if s == 1:
            self.modulus = (0, 1)
        else:
            self.modulus = tuple(modulus) if modulus else smallest_irreducible(p, s)
            if len(self.modulus) != s + 1 or self.modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree s")
            if not is_irreducible(list(self.modulus), p):
                raise FieldError(f"modulus {self.modulus} is reducible over GF({p})")
        self._pw = [p ** j for j in range(s)]
        self.primitive = self._find_primitive()
        self.exp = self.log = self.zech = None
        if self.order <= TABLE_CAP:
            self._build_tables()
        self._small_tables = None

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.s}), modulus={self.modulus})"

    def __call__(self, label: int) -> "Element":
        return Element(self, label)

    # residue representation
    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.s):
            out.append(a % p)
            a //= p
        return out

    def from_digits(self, d) -> int:
        return sum(c * w for c, w in zip(d, self._pw))

    def add_residue(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def mul_residue(self, a: int, b: int) -> int:
        if self.s == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self.from_digits(_pmulmod(self.digits(a), self.digits(b),
                                         list(self.modulus), self.p)
                                + [0] * self.s)

    def _pow_residue(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self.mul_residue(acc, a)
            a = self.mul_residue(a, a)
            e >>= 1
        return acc

    def _find_primitive(self) -> int:
        q1 = self.order - 1
        if q1 == 1:
            return 1
        exps = [q1 // r for r in prime_factors(q1)]
        for g in range(2, self.order):
            if all(self._pow_residue(g, e) != 1 for e in exps):
                return g
        raise FieldError("no primitive element found")  # unreachable for a field

    def _build_tables(self):
        q, p = self.order, self.p
        exp = [0] * (q - 1)
        log = [-1] * q
        g = self.primitive
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self.mul_residue(x, g)
        if x != 1:
            raise FieldError("primitive element has wrong order")
        # zech[k] = log(1 + g^k), -1 when 1 + g^k = 0
        zech = [0] * (q - 1)
        for k in range(q - 1):
            v = exp[k]
            v1 = v + 1 if v % p != p - 1 else v - (p - 1)
            zech[k] = log[v1] if v1 else -1
        self.exp, self.log, self.zech = exp, log, zech

    # arithmetic on labels
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.zech is None:
            return self.add_residue(a, b)
        if a == 0:
            return b
        if b == 0:
            return a
        la = self.log[a]
        z = self.zech[(self.log[b] - la) % (self.order - 1)]
        return 0 if z < 0 else self.exp[(la + z) % (self.order - 1)]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        if self.s == 1:
            return self.p - a
        p = self.p
        return self.from_digits([(-c) % p for c in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.log is None:
            return self.mul_residue(a, b)
        return self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        e %= self.order - 1
        if self.log is not None:
            return self.exp[self.log[a] * e % (self.order - 1)]
        return self._pow_residue(a, e)

    def alpha_pow(self, e: int) -> int:
        """primitive^e."""
        if self.exp is not None:
            return self.exp[e % (self.order - 1)]
        return self.pow(self.primitive, e)

    def frobenius(self, x: int, q0: int) -> int:
        """x^q0 for a subfield order q0 = p^e with e | s."""
        p, e = prime_power(q0)
        if p != self.p or self.s % e:
            raise FieldError(f"{q0} is not a subfield order of GF({self.order})")
        return self.pow(x, q0)

    def order_of(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        q1 = self.order - 1
        o = q1
        for r in prime_factors(q1):
            while o % r == 0 and self.pow(a, o // r) == 1:
                o //= r
        return o

    def elements(self) -> range:
        return range(self.order)

    def tables(self):
        """(add, mul, neg, inv) numpy uint tables for small fields."""
        if self._small_tables is None:
            q = self.order
            if q > SMALL_TABLE_CAP:
                raise FieldError("full operation tables only for small fields")
            add = np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.uint8)
            mul = np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.uint8)
            neg = np.array([self.neg(a) for a in range(q)], dtype=np.uint8)
            inv = np.array([0] + [self.inv(a) for a in range(1, q)], dtype=np.uint8)
            self._small_tables = (add, mul, neg, inv)
        return self._small_tables


@lru_cache(maxsize=None)
def field_create(p: int, s: int = 1) -> FieldCtx:
    return FieldCtx(p, s)


def gf(q: int) -> FieldCtx:
    p, s = prime_power(q)
    return field_create(p, s)


class Element:
    """Convenience wrapper: a label bound to its field."""

    __slots__ = ("ctx", "label")

    def __init__(self, ctx: FieldCtx, label: int):
        if not 0 <= label < ctx.order:
            raise FieldError(f"label {label} outside GF({ctx.order})")
        self.ctx = ctx
        self.label = label

    @property
    def coeffs(self) -> list[int]:
        return self.ctx.digits(self.label)

    def _other(self, b):
        if isinstance(b, int):
            return b
        if b.ctx is not self.ctx:
            raise FieldError("elements belong to different fields")
        return b.label

    def __add__(self, b):
        return Element(self.ctx, self.ctx.add(self.label, self._other(b)))

    def __sub__(self, b):
        return Element(self.ctx, self.ctx.sub(self.label, self._other(b)))

    def __mul__(self, b):
        return Element(self.ctx, self.ctx.mul(self.label, self._other(b)))

    def __truediv__(self, b):
        return Element(self.ctx, self.ctx.div(self.label, self._other(b)))

    def __neg__(self):
        return Element(self.ctx, self.ctx.neg(self.label))

    def __pow__(self, e: int):
        return Element(self.ctx, self.ctx.pow(self.label, e))

    def inv(self):
        return Element(self.ctx, self.ctx.inv(self.label))

    def __eq__(self, b):
        if isinstance(b, int):
            return self.label == b
        return isinstance(b, Element) and b.ctx is self.ctx and b.label == self.label

    def __hash__(self):
        return hash((id(self.ctx), self.label))

    def __repr__(self):
        return f"GF({self.ctx.order})({self.label})"


@dataclass(frozen=True)
class SubfieldEmbedding:
    small: FieldCtx
    big: FieldCtx
    forward: tuple[int, ...]
    inverse: dict

    def __call__(self, a: int) -> int:
        return self.forward[a]

    def pull_back(self, b: int) -> int:
        try:
            return self.inverse[b]
        except KeyError:
            raise FieldError(f"element {b} of GF({self.big.order}) is not in the image "
                             f"of GF({self.small.order})") from None


def subfield_embed(small: FieldCtx, big: FieldCtx) -> SubfieldEmbedding:
    if small.p != big.p or big.s % small.s:
        raise FieldError(f"GF({small.order}) is not a subfield of GF({big.order})")
    # the prime subfield has the same labels in both fields
    f = small.modulus
    root = None
    if small.s == 1:
        root = 0
    else:
        for r in big.elements():
            acc = 0
            for c in reversed(f):
                acc = big.add(big.mul(acc, r), c)
            if acc == 0:
                root = r
                break
    if root is None:
        raise FieldError("modulus of the small field has no root in the big field")
    powers = [1]
    for _ in range(small.s - 1):
        powers.append(big.mul(powers[-1], root))
    forward = []
    for a in small.elements():
        img = 0
        for c, w in zip(small.digits(a), powers):
            if c:
                img = big.add(img, big.mul(c, w))
        forward.append(img)
    inverse = {img: a for a, img in enumerate(forward)}
    if len(inverse) != small.order:
        raise FieldError("embedding is not injective")
    return SubfieldEmbedding(small, big, tuple(forward), inverse)


@dataclass(frozen=True)
class Tower:
    """GF(q) inside GF(q^m) with the designated primitive element alpha of the big field."""
    q: int
    m: int
    small: FieldCtx
    big: FieldCtx
    emb: SubfieldEmbedding

    @property
    def alpha(self) -> int:
        return self.big.primitive


@lru_cache(maxsize=None)
def tower(q: int, m: int) -> Tower:
    p, s = prime_power(q)
    small = field_create(p, s)
    big = field_create(p, s * m)
    return Tower(q, m, small, big, subfield_embed(small, big))
