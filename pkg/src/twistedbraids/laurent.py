"""Exact Laurent polynomials in one variable ``t`` with integer coefficients."""

from __future__ import annotations

from typing import Mapping


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = int(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: int, e: int) -> "LaurentPoly":
        return cls({e: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient in Z[t, 1/t]; raises ArithmeticError unless ``other`` divides ``self``."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        # Strip t-powers so both have nonzero constant terms, then long-divide from the top.
        a_shift, b_shift = self.min_degree(), other.min_degree()
        num = {e - a_shift: c for e, c in self._terms.items()}
        den = {e - b_shift: c for e, c in other._terms.items()}
        dtop = max(den)
        lead = den[dtop]
        quot: dict[int, int] = {}
        while num:
            ntop = max(num)
            if ntop < dtop:
                raise ArithmeticError("inexact Laurent division")
            c, rem = divmod(num[ntop], lead)
            if rem:
                raise ArithmeticError("inexact Laurent division")
            k = ntop - dtop
            quot[k] = c
            for e, dc in den.items():
                v = num.get(e + k, 0) - c * dc
                if v:
                    num[e + k] = v
                else:
                    num.pop(e + k, None)
        return LaurentPoly(quot).shift(a_shift - b_shift)

    def normalized(self) -> "LaurentPoly":
        """The unit multiple +-t^k whose lowest term is a positive constant."""
        if self.is_zero():
            return self
        p = self.shift(-self.min_degree())
        return -p if p.coeff(0) < 0 else p

    def evaluate(self, t):
        return sum(c * t**e for e, c in self._terms.items())

    def to_json(self) -> dict[str, int]:
        return {str(e): self._terms[e] for e in sorted(self._terms)}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({self.to_json()})"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1, 1)
