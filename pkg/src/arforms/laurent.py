"""Sparse Laurent polynomials in one variable ``t`` with integer coefficients.

Text form::

    laurent := term (("+" | "-") term)*
    term    := int | [int] "t" ["^" signed-int]

Whitespace is ignored and a leading sign is accepted.  ``str`` produces the
canonical form with ascending exponents, e.g. ``t^-1 + 2 + t``.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "T",
    "ONE",
    "ZERO",
    "sigma",
    "bar",
    "eval_at_minus_one",
    "cyclic_reduce",
    "parse_laurent",
]


class LaurentPoly:
    """An element of Z[t, 1/t], stored as exponent -> nonzero coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[tuple[int, int]], int] = ()):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            e = int(e)
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], start: int = 0) -> "LaurentPoly":
        return cls((start + i, c) for i, c in enumerate(coeffs))

    # -- inspection ---------------------------------------------------------

    def terms(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return self._terms

    def as_dict(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exponent: int) -> int:
        for e, c in self._terms:
            if e == exponent:
                return c
            if e > exponent:
                break
        return 0

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    def constant_term(self) -> int:
        return self.coeff(0)

    def leading_coeff(self) -> int:
        return self._terms[-1][1] if self._terms else 0

    def content(self) -> int:
        from math import gcd

        g = 0
        for _, c in self._terms:
            g = gcd(g, c)
        return g

    def is_palindromic(self) -> bool:
        return self == self.bar()

    def dense(self) -> tuple[int, list[int]]:
        """Return ``(min_exp, coefficient list)``; the zero polynomial gives ``(0, [])``."""
        if not self._terms:
            return 0, []
        lo, hi = self._terms[0][0], self._terms[-1][0]
        out = [0] * (hi - lo + 1)
        for e, c in self._terms:
            out[e - lo] = c
        return lo, out

    # -- protocol -----------------------------------------------------------

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("LaurentPoly", self._terms))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({dict(self._terms)!r})"

    def __str__(self):
        return format_laurent(self)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly((e, c * other) for e, c in self._terms)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) == 1 and self._terms[0][1] in (1, -1):
                e, c = self._terms[0]
                return LaurentPoly({e * k: c ** (-k)})
            raise ValueError("negative power of a non-unit Laurent polynomial")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly((e + k, c) for e, c in self._terms)

    def bar(self) -> "LaurentPoly":
        """Image under the involution t -> 1/t."""
        return LaurentPoly((-e, c) for e, c in self._terms)

    def evaluate(self, value):
        """Evaluate at a nonzero number (ints and Fractions stay exact)."""
        total = 0
        for e, c in self._terms:
            total += c * (value ** e)
        return total

    def cyclic_reduce(self, n: int) -> tuple[int, ...]:
        if n < 1:
            raise ValueError("cyclic period must be positive")
        out = [0] * n
        for e, c in self._terms:
            out[e % n] += c
        return tuple(out)


T = LaurentPoly({1: 1})
ONE = LaurentPoly({0: 1})
ZERO = LaurentPoly()


def sigma(r: int) -> LaurentPoly:
    """1 + t + ... + t^r, with sigma(0) = 1."""
    if r < 0:
        raise ValueError("sigma needs r >= 0")
    return LaurentPoly((i, 1) for i in range(r + 1))


def bar(x):
    """t -> 1/t on Laurent polynomials and rational functions."""
    return x.bar()


def eval_at_minus_one(x: LaurentPoly) -> int:
    return sum(c if e % 2 == 0 else -c for e, c in x.terms())


def cyclic_reduce(x: LaurentPoly, n: int) -> tuple[int, ...]:
    """Image of x in Z[t, 1/t]/(t^n - 1) as a coefficient vector of length n."""
    return x.cyclic_reduce(n)


# -- text I/O ------------------------------------------------------------------

_TERM = re.compile(r"(\d*)(t(?:\^([+-]?\d+))?)?")


def parse_laurent(text: str) -> LaurentPoly:
    s = "".join(text.split())
    if not s:
        raise ValueError("empty Laurent polynomial")
    acc: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ValueError(f"expected '+' or '-' at position {pos} in {text!r}")
        first = False
        m = _TERM.match(s, pos)
        digits, tpart, exp = m.group(1), m.group(2), m.group(3)
        if not digits and not tpart:
            raise ValueError(f"malformed term at position {pos} in {text!r}")
        coeff = int(digits) if digits else 1
        if tpart:
            e = int(exp) if exp is not None else 1
        else:
            e = 0
        acc[e] = acc.get(e, 0) + sign * coeff
        pos = m.end()
    return LaurentPoly(acc)


def format_laurent(x: LaurentPoly) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for i, (e, c) in enumerate(x.terms()):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = "t" if e == 1 else f"t^{e}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
