"""Rational functions in Q(t) kept in a structural normal form.

A ``RatFun`` is ``num / den`` with both parts integer Laurent polynomials,
normalised so that

* ``den`` is an ordinary polynomial with nonzero constant term,
* ``num`` and ``den`` have no common factor in Z[t] (content included),
* the leading coefficient of ``den`` is positive.

Under this normalisation two equal elements of Q(t) have identical parts, and
``to_laurent`` succeeds exactly when ``den == 1``.
"""

from __future__ import annotations

from math import gcd
from typing import Union

from .errors import NotPolynomial
from .laurent import LaurentPoly, ONE, ZERO, format_laurent

__all__ = ["RatFun", "to_laurent", "as_ratfun", "poly_gcd", "poly_divexact"]

Scalar = Union["RatFun", LaurentPoly, int]


# -- dense integer polynomial helpers (index = degree) --------------------------

def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _content(p: list[int]) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def _primitive(p: list[int]) -> list[int]:
    g = _content(p)
    if g == 0:
        return []
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (b nonzero)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        _trim(r)
    return r


def poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """gcd in Z[t] (positive leading coefficient) of dense polynomials."""
    a, b = _trim(list(a)), _trim(list(b))
    if not a or not b:
        p = a or b
        return [-c for c in p] if p and p[-1] < 0 else p
    cont = gcd(_content(a), _content(b))
    pa, pb = _primitive(a), _primitive(b)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while pb:
        if len(pb) == 1:
            pa = [1]
            break
        r = _prem(pa, pb)
        pa, pb = pb, _primitive(r)
    return [c * cont for c in _primitive(pa)]


def poly_divexact(a: list[int], b: list[int]) -> list[int]:
    """Quotient a / b in Z[t]; raises ``NotPolynomial`` if the division is not exact."""
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    r = list(a)
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        if lr % lb:
            raise NotPolynomial("inexact polynomial division")
        c = lr // lb
        shift = len(r) - 1 - db
        q[shift] = c
        for i, bc in enumerate(b):
            r[i + shift] -= c * bc
        _trim(r)
    if r:
        raise NotPolynomial("inexact polynomial division")
    return q


# -- RatFun ---------------------------------------------------------------------

def _split(x: LaurentPoly) -> tuple[int, list[int]]:
    """x = t^k * P with P a dense polynomial having nonzero constant term."""
    return x.dense()


class RatFun:
    __slots__ = ("num", "den")

    def __init__(self, num: Union[LaurentPoly, int] = 0, den: Union[LaurentPoly, int] = 1):
        num = LaurentPoly(num) if isinstance(num, int) else num
        den = LaurentPoly(den) if isinstance(den, int) else den
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        ka, pa = _split(num)
        kb, pb = _split(den)
        g = poly_gcd(pa, pb)
        if g != [1]:
            pa = poly_divexact(pa, g)
            pb = poly_divexact(pb, g)
        if pb[-1] < 0:
            pa = [-c for c in pa]
            pb = [-c for c in pb]
        self.num = LaurentPoly.from_dense(pa, ka - kb)
        self.den = LaurentPoly.from_dense(pb, 0)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFun":
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def from_laurent(cls, x: LaurentPoly) -> "RatFun":
        return cls._raw(x, ONE)

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.den == ONE:
            return hash(self.num)
        return hash(("RatFun", self.num, self.den))

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == ONE:
            return format_laurent(self.num)
        return f"({format_laurent(self.num)})/({format_laurent(self.den)})"

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den == ONE:
            return RatFun._raw(self.num + other.num, ONE)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den == ONE:
            return RatFun._raw(self.num * other.num, ONE)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def bar(self) -> "RatFun":
        return RatFun(self.num.bar(), self.den.bar())

    def to_laurent(self) -> LaurentPoly:
        if self.den != ONE:
            raise NotPolynomial(f"{self} is not a Laurent polynomial")
        return self.num


def _coerce(x) -> RatFun:
    if isinstance(x, RatFun):
        return x
    if isinstance(x, LaurentPoly):
        return RatFun._raw(x, ONE)
    if isinstance(x, int):
        return RatFun._raw(LaurentPoly(x), ONE)
    return NotImplemented


def as_ratfun(x: Scalar) -> RatFun:
    r = _coerce(x)
    if r is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(t)")
    return r


def to_laurent(x: Scalar) -> LaurentPoly:
    """Exact Laurent polynomial equal to x, or ``NotPolynomial``."""
    if isinstance(x, LaurentPoly):
        return x
    return as_ratfun(x).to_laurent()
