"""Integer Laurent polynomials with (1 + x) inverted.

An element is ``numerator / (1 + x)^d`` with ``numerator`` in ``Z[x, x^-1]``
stored as a dict ``{exponent: coefficient}``.  The stored form is canonical:
no zero coefficients, and when ``d > 0`` the numerator is not divisible by
``1 + x``.  Coefficients are Python ints, so there is no overflow.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Dict, Mapping, Tuple

Poly = Dict[int, int]


def _clean(p: Mapping[int, int]) -> Poly:
    return {e: c for e, c in p.items() if c}


def _add(p: Mapping[int, int], q: Mapping[int, int], sign: int = 1) -> Poly:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + sign * c
    return _clean(out)


def _mul(p: Mapping[int, int], q: Mapping[int, int]) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return _clean(out)


def _shift(p: Mapping[int, int], k: int) -> Poly:
    return {e + k: c for e, c in p.items()}


@lru_cache(maxsize=256)
def _binomial_row(n: int) -> Tuple[Tuple[int, int], ...]:
    return tuple((k, comb(n, k)) for k in range(n + 1))


def one_plus_x_power(n: int) -> Poly:
    """``(1 + x)^n`` for ``n >= 0``."""
    return dict(_binomial_row(n))


def _divisible(p: Mapping[int, int]) -> bool:
    # (1 + x) divides p exactly when p(-1) = 0
    return bool(p) and sum(c if e % 2 == 0 else -c for e, c in p.items()) == 0


def _divide(p: Mapping[int, int]) -> Poly:
    """Exact quotient ``p / (1 + x)``; caller guarantees divisibility."""
    lo, hi = min(p), max(p)
    coeffs = [p.get(e, 0) for e in range(lo, hi + 1)]
    # synthetic division of a polynomial of degree hi - lo by (x + 1), top down
    q = [0] * (len(coeffs) - 1)
    carry = 0
    for k in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[k] - carry
        q[k - 1] = carry
    if coeffs[0] != q[0]:
        raise ArithmeticError("polynomial not divisible by 1 + x")
    return _clean({lo + k: c for k, c in enumerate(q)})


class LocalizedLaurentPoly:
    __slots__ = ("numerator", "d", "_hash")

    def __init__(self, numerator: Mapping[int, int] | int = (), d: int = 0):
        if isinstance(numerator, int):
            numerator = {0: numerator}
        num = _clean(dict(numerator))
        if d < 0:
            num = _mul(num, one_plus_x_power(-d))
            d = 0
        while d > 0 and _divisible(num):
            num = _divide(num)
            d -= 1
        if not num:
            d = 0
        self.numerator: Tuple[Tuple[int, int], ...] = tuple(sorted(num.items()))
        self.d = d
        self._hash = hash((self.numerator, d))

    @classmethod
    def monomial(cls, i: int, j: int = 0, c: int = 1) -> "LocalizedLaurentPoly":
        """``c * x^i * (1 + x)^j`` with ``j`` of either sign."""
        if j >= 0:
            return cls(_shift({k: c * v for k, v in one_plus_x_power(j).items()}, i))
        return cls({i: c}, -j)

    @property
    def poly(self) -> Poly:
        return dict(self.numerator)

    def is_zero(self) -> bool:
        return not self.numerator

    def is_laurent(self) -> bool:
        return self.d == 0

    def __add__(self, other) -> "LocalizedLaurentPoly":
        other = _coerce(other)
        d = max(self.d, other.d)
        a = _mul(self.poly, one_plus_x_power(d - self.d))
        b = _mul(other.poly, one_plus_x_power(d - other.d))
        return LocalizedLaurentPoly(_add(a, b), d)

    __radd__ = __add__

    def __neg__(self) -> "LocalizedLaurentPoly":
        return LocalizedLaurentPoly({e: -c for e, c in self.numerator}, self.d)

    def __sub__(self, other) -> "LocalizedLaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "LocalizedLaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "LocalizedLaurentPoly":
        other = _coerce(other)
        return LocalizedLaurentPoly(_mul(self.poly, other.poly), self.d + other.d)

    __rmul__ = __mul__

    def times_unit(self, i: int, j: int) -> "LocalizedLaurentPoly":
        """Multiply by the unit ``x^i (1 + x)^j``."""
        num = _shift(self.poly, i)
        if j >= 0:
            return LocalizedLaurentPoly(_mul(num, one_plus_x_power(j)), self.d)
        return LocalizedLaurentPoly(num, self.d - j)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LocalizedLaurentPoly(other)
        if not isinstance(other, LocalizedLaurentPoly):
            return NotImplemented
        return self.numerator == other.numerator and self.d == other.d

    def __hash__(self) -> int:
        return self._hash

    def key(self) -> tuple:
        return (self.numerator, self.d)

    def __repr__(self) -> str:
        return f"LocalizedLaurentPoly({dict(self.numerator)!r}, d={self.d})"

    def __str__(self) -> str:
        if not self.numerator:
            return "0"
        terms = []
        for e, c in self.numerator:
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}{mono}" if mono else str(mag))
            terms.append(("-" if c < 0 else "+", body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        s += "".join(f" {sign} {body}" for sign, body in terms[1:])
        if self.d:
            s = f"({s})/(1+x)" + (f"^{self.d}" if self.d > 1 else "")
        return s


def _coerce(v) -> LocalizedLaurentPoly:
    if isinstance(v, LocalizedLaurentPoly):
        return v
    if isinstance(v, int):
        return LocalizedLaurentPoly(v)
    raise TypeError(f"cannot use {type(v).__name__} as a localized Laurent polynomial")


ZERO = LocalizedLaurentPoly()
ONE = LocalizedLaurentPoly(1)
