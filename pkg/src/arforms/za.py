"""Hom forms on ZA-infinity components of perfect complexes over a symmetric algebra.

Objects of a component are ``C_n[i]``: distance ``n`` from the rim, shift
``i``.  Everything is determined by the rim value ``<C_0, C_0>^t`` (and
``<C_0, D_0>^t`` for a second component).  Two independent routes are
provided: the closed formulas in sigma_r = 1 + t + ... + t^r, and a walk
along the AR triangles using the orthogonality of the elements Z^.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .category import ARTriangle, ObjectRef
from .errors import InvalidRim, MissingCrossForm, NotPolynomial
from .laurent import LaurentPoly, ONE, T, ZERO, sigma
from .ratfun import RatFun

__all__ = [
    "RimData",
    "component_name",
    "cross_component_form",
    "cross_component_recurrence",
    "same_component_form",
    "same_component_recurrence",
    "component_triangles",
    "endo_constant_term",
    "BrickRow",
    "BrickScan",
    "brick_strip_scan",
]

_ONE_PLUS_T = ONE + T
_T_INV = T.bar()


@dataclass(frozen=True)
class RimData:
    """Rim values of one or two ZA-infinity components."""

    self_form: LaurentPoly
    cross_form: Optional[LaurentPoly] = None

    def __post_init__(self):
        f = self.self_form
        if any(c < 0 for _, c in f.terms()):
            raise InvalidRim(f"self form {f} has a negative coefficient")
        if f != f.bar():
            raise InvalidRim(f"self form {f} is not palindromic")
        a0 = f.coeff(0)
        if a0 < 1:
            raise InvalidRim(f"self form {f} has constant term {a0}; the identity forces at least 1")
        if a0 == 1 and not f.is_constant():
            # a one-dimensional endomorphism ring only occurs for a simple
            # projective stalk, which has no shifted self-maps
            raise InvalidRim(f"self form {f}: endomorphism dimension 1 needs a form equal to 1")
        if self.cross_form is not None and any(c < 0 for _, c in self.cross_form.terms()):
            raise InvalidRim(f"cross form {self.cross_form} has a negative coefficient")

    @property
    def coefficients(self) -> dict[int, int]:
        return self.self_form.as_dict()


def component_name(n: int, prefix: str = "C") -> str:
    return f"{prefix}{n}"


# -- closed formulas -------------------------------------------------------------

@lru_cache(maxsize=None)
def _sigma_pair(m: int, n: int) -> LaurentPoly:
    return sigma(m) * sigma(n).bar()


@lru_cache(maxsize=None)
def _rim_correction(m: int, n: int) -> LaurentPoly:
    """sigma_m bar(sigma_n) (1 + t)(1 - t^mu)/(1 - t^(mu + 1)), mu = max(m, n), reduced exactly."""
    mu = max(m, n)
    tmu = LaurentPoly.monomial(mu)
    ratio = RatFun(_ONE_PLUS_T * (ONE - tmu), ONE - tmu * T)
    value = RatFun(_sigma_pair(m, n)) * ratio
    try:
        return value.to_laurent()
    except NotPolynomial:  # pragma: no cover - would be an arithmetic bug
        raise AssertionError(f"rim correction for ({m}, {n}) did not reduce: {value}") from None


def cross_component_form(r: RimData, m: int, n: int) -> LaurentPoly:
    """<C_m, D_n>^t for C_0, D_0 on the rims of different components."""
    if r.cross_form is None:
        raise MissingCrossForm("cross form <C_0, D_0>^t was not supplied")
    return _sigma_pair(m, n) * r.cross_form


def same_component_form(r: RimData, m: int, n: int) -> LaurentPoly:
    """<C_m, C_n>^t from the closed formula."""
    _check_indices(m, n)
    return _sigma_pair(m, n) * r.self_form - _rim_correction(m, n)


# -- recurrence along AR triangles -----------------------------------------------

def _walk(seed: LaurentPoly, length: int, hit: Optional[int] = None) -> list[LaurentPoly]:
    """Values v_k = <W, C_k>^t for k = 0..length along one component.

    Uses <W, Z^_{k-1}>^t = (1 + t) v_{k-1} - t v_k - v_{k-2} with v_{-1} = 0;
    the left side is 1 + t when W is C_{k-1} itself (index ``hit``) and 0
    otherwise.
    """
    vals = [seed]
    prev2 = ZERO
    for k in range(1, length + 1):
        rhs = _ONE_PLUS_T if hit == k - 1 else ZERO
        v = (_ONE_PLUS_T * vals[-1] - prev2 - rhs) * _T_INV
        prev2 = vals[-1]
        vals.append(v)
    return vals


def same_component_recurrence(r: RimData, m: int, n: int) -> LaurentPoly:
    """<C_m, C_n>^t from the triangle recurrence, without the closed formula."""
    _check_indices(m, n)
    if m > n:
        return same_component_recurrence(r, n, m).bar()
    # first row: W = C_0, which is the end term of the rim triangle
    row0 = _walk(r.self_form, n, hit=0)
    if m == 0:
        return row0[n]
    # <C_n, C_j>^t for j <= m; C_n is never C_{j-1} here since j - 1 < n
    col = _walk(row0[n].bar(), m)
    return col[m].bar()


def cross_component_recurrence(r: RimData, m: int, n: int) -> LaurentPoly:
    """<C_m, D_n>^t by walking both components; no object of one is a shift of the other."""
    if r.cross_form is None:
        raise MissingCrossForm("cross form <C_0, D_0>^t was not supplied")
    _check_indices(m, n)
    d0_vs_c = _walk(r.cross_form.bar(), m)  # <D_0, C_j>^t
    c_m_d0 = d0_vs_c[m].bar()
    return _walk(c_m_d0, n)[n]


def _check_indices(m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise ValueError("distances from the rim must be nonnegative")


# -- AR triangles of a component ---------------------------------------------------

def component_triangles(depth: int, prefix: str = "C") -> list[ARTriangle]:
    """C_n[-1] -> C_{n+1}[-1] + C_{n-1} -> C_n for 0 <= n < depth (no C_{-1} at the rim)."""
    out = []
    for n in range(depth):
        x = ObjectRef(component_name(n, prefix), -1)
        ys = [ObjectRef(component_name(n + 1, prefix), -1)]
        if n > 0:
            ys.append(ObjectRef(component_name(n - 1, prefix), 0))
        out.append(ARTriangle(x, tuple(ys), ObjectRef(component_name(n, prefix), 0)))
    return out


# -- endomorphism dimensions -------------------------------------------------------

def endo_constant_term(r: RimData, m: int) -> int:
    """dim End(C_m): sum_{|i| <= m} (m + 1 - |i|) a_i - 2m."""
    a = r.self_form
    return sum((m + 1 - abs(i)) * a.coeff(i) for i in range(-m, m + 1)) - 2 * m


@dataclass(frozen=True)
class BrickRow:
    m: int
    endo_dim: int
    dim_two: bool

    def __str__(self):
        tag = "dim-2" if self.dim_two else "not dim-2"
        return f"m={self.m} dim End={self.endo_dim} {tag}"


@dataclass
class BrickScan:
    rows: list[BrickRow] = field(default_factory=list)
    simple_projective_stalk: bool = False
    # Coefficient of t in the rim form; nonzero rules out a rim object of the kind
    # needed for m >= 1, zero is only consistent with one.
    t_coefficient: int = 0

    @property
    def dim_two_extent(self) -> int:
        """Largest m with every row 0..m of dimension 2, or -1."""
        extent = -1
        for row in self.rows:
            if not row.dim_two:
                break
            extent = row.m
        return extent


def brick_strip_scan(r: RimData, max_m: int) -> BrickScan:
    if max_m < 0:
        raise ValueError("max_m must be nonnegative")
    a = r.self_form
    scan = BrickScan(simple_projective_stalk=a.coeff(0) == 1, t_coefficient=a.coeff(1))
    for m in range(max_m + 1):
        dim_two = a.coeff(0) == 2 and all(a.coeff(i) == 0 for i in range(-m, m + 1) if i)
        scan.rows.append(BrickRow(m, endo_constant_term(r, m), dim_two))
    return scan
