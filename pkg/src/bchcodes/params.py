from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldError, prime_power


class ParamError(ValueError):
    pass


@dataclass(frozen=True)
class BchParams:
    """(q, m, lambda, l0, l1) for the narrow-sense BCH code of length (q^m-1)/lambda
    and designed distance ((q - lambda*l0) q^(m-1-l1) - 1)/lambda."""

    q: int
    m: int
    lam: int
    l0: int
    l1: int

    def __post_init__(self):
        q, m, lam, l0, l1 = self.q, self.m, self.lam, self.l0, self.l1
        try:
            prime_power(q)
        except FieldError as exc:
            raise ParamError(str(exc)) from None
        if m < 2:
            raise ParamError("m must be >= 2")
        if lam < 1 or (q - 1) % lam:
            raise ParamError(f"lambda={lam} must divide q-1={q - 1}")
        if not 0 <= l1 <= m - 1:
            raise ParamError(f"l1={l1} outside [0, {m - 1}]")
        r = (q - 1) // lam
        if not 0 <= l0 <= r:
            raise ParamError(f"l0={l0} outside [0, {r}]")
        if l1 == m - 1 and l0 > r - 2:
            raise ParamError(f"l1 = m-1 needs l0 <= {r - 2} so that delta >= 2")
        if l0 == r and self.delta < 2:
            raise ParamError(f"l0 = {r} gives designed distance {self.delta} < 2")

    @property
    def N(self) -> int:
        return self.q ** self.m - 1

    @property
    def n(self) -> int:
        return self.N // self.lam

    @property
    def ell(self) -> int:
        """Order of the matching punctured generalized Reed-Muller code."""
        return (self.q - 1) * self.l1 + self.lam * self.l0

    @property
    def delta(self) -> int:
        num = (self.q - self.lam * self.l0) * self.q ** (self.m - 1 - self.l1) - 1
        assert num % self.lam == 0
        return num // self.lam

    @property
    def in_family(self) -> bool:
        """False for the boundary l0 = (q-1)/lam; such a code coincides with
        (0, l1+1) and only appears as a table alias."""
        return self.l0 < (self.q - 1) // self.lam

    @property
    def degenerate(self) -> bool:
        """l0 = l1 = 0: the repetition code."""
        return self.l0 == 0 and self.l1 == 0

    def as_dict(self):
        return {"q": self.q, "m": self.m, "lambda": self.lam, "l0": self.l0, "l1": self.l1}

    def __str__(self):
        return f"({self.q}, {self.m}, {self.lam}, {self.l0}, {self.l1})"


def designed_delta(params: BchParams) -> int:
    return params.delta


def valid_params(q: int, m: int, lam: int):
    """All (l0, l1) of the family for fixed (q, m, lambda), ordered by (l0, l1)."""
    out = []
    for l0 in range((q - 1) // lam):
        for l1 in range(m):
            try:
                out.append(BchParams(q, m, lam, l0, l1))
            except ParamError:
                pass
    return out


def divisors(x: int) -> list[int]:
    return [d for d in range(1, x + 1) if x % d == 0]
