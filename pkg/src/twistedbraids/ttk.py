"""Twisted torus knot parameters K(p, q, r, n) and the K1/K2 family."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .braid import BraidWord, inverse_letters, pi
from .errors import InvalidParams, RTooLarge


@dataclass(frozen=True)
class TTKParams:
    """K(p, q, r, n): T(p, q) with n full twists on r adjacent strands."""

    p: int
    q: int
    r: int
    n: int

    def __post_init__(self):
        for name in ("p", "q", "r", "n"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidParams(f"{name} must be an integer, got {v!r}")
        if self.p < 1 or self.q < 1:
            raise InvalidParams(f"p and q must be positive, got p={self.p}, q={self.q}")
        if gcd(self.p, self.q) != 1:
            raise InvalidParams(f"gcd(p, q) = {gcd(self.p, self.q)}, need coprime p and q")
        if self.r < 1:
            raise InvalidParams(f"r must be at least 1, got {self.r}")
        if self.n == 0:
            raise InvalidParams("n must be nonzero")

    @property
    def k(self) -> int:
        return self.p // self.q

    @property
    def e(self) -> int:
        return self.p - self.k * self.q

    def __str__(self):
        return f"K({self.p},{self.q},{self.r},{self.n})"

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "r": self.r, "n": self.n, "k": self.k, "e": self.e}

    @classmethod
    def from_json(cls, data: dict) -> "TTKParams":
        out = cls(int(data["p"]), int(data["q"]), int(data["r"]), int(data["n"]))
        for derived in ("k", "e"):
            if derived in data and int(data[derived]) != getattr(out, derived):
                raise InvalidParams(f"{derived}={data[derived]} is inconsistent with p={out.p}, q={out.q}")
        return out


def canonical_word(params: TTKParams) -> BraidWord:
    """(Pi_1^{q-1})^p (Pi_1^{r-1})^{rn} on q strands, with negative powers written
    as repeated copies of the inverse block."""
    p, q, r, n = params.p, params.q, params.r, params.n
    if r > q:
        raise RTooLarge(
            f"r={r} exceeds q={q}; the braid lives on q strands. "
            f"K({p},{q},{r},{n}) is isotopic to K({q},{p},{r},{n}) when r < min(p, q), "
            f"so try swapping p and q"
        )
    twist = pi(1, q - 1) * p
    block = pi(1, r - 1)
    if n < 0:
        block = inverse_letters(block)
    return BraidWord(q, twist + block * (r * abs(n)))


@dataclass(frozen=True)
class H1Class:
    """A class in H_1 of the genus-two surface, basis order (a, x, b, y)."""

    a: int
    x: int
    b: int
    y: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.x, self.b, self.y)

    def to_json(self) -> list[int]:
        return list(self.as_tuple())


def h1_class(params: TTKParams) -> H1Class:
    return H1Class(params.q, params.n * params.r, -params.p, -params.r)


def slope_general(p: int, q: int, r: int, n: int) -> int:
    """pq + n r^2.  Derived here, not taken as given: it is only checked against
    the family formula, never used by itself to support a claim."""
    return p * q + n * r * r


@dataclass(frozen=True)
class FamilyPair:
    k: int
    q: int
    m: int

    @property
    def K1(self) -> TTKParams:
        return TTKParams(self.k * self.q + self.m, self.q, self.m, -1)

    @property
    def K2(self) -> TTKParams:
        return TTKParams(self.k * self.q + self.q - self.m, self.q, self.q - self.m, -1)

    def to_json(self) -> dict:
        return {"k": self.k, "q": self.q, "m": self.m, "K1": self.K1.to_json(), "K2": self.K2.to_json()}


def make_family(k: int, q: int, m: int) -> FamilyPair:
    if k < 0:
        raise InvalidParams(f"k must be non-negative, got {k}")
    if q <= 2:
        raise InvalidParams(f"the family needs q > 2 (got q={q}); for q = 2 the pair collapses")
    if not 1 <= m < q:
        raise InvalidParams(f"need 1 <= m < q, got m={m}, q={q}")
    if gcd(q, m) != 1:
        raise InvalidParams(f"gcd(q, m) = {gcd(q, m)}, need coprime q and m")
    pair = FamilyPair(k, q, m)
    pair.K1, pair.K2  # both members validate on construction
    return pair


def surface_slope(pair: FamilyPair) -> int:
    """Shared surface slope kq^2 + qm - m^2 of both members."""
    k, q, m = pair.k, pair.q, pair.m
    return k * q * q + q * m - m * m
