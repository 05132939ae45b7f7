"""Perfect complexes over the dual numbers Lambda = k[x]/(x^2).

A free module Lambda^r is k^(2r); an element a + b x acts on the basis
(1, x) by the matrix [[a, 0], [b, a]].  Hom spaces in the homotopy category
are computed as dim(chain maps) - dim(null-homotopic maps) from explicit
rational linear systems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..category import CategoryPresentation, OrbitDecl
from ..errors import WindowTooSmall
from ..intmat import rational_rank
from ..laurent import LaurentPoly
from ..za import component_name, component_triangles

__all__ = [
    "LambdaElt",
    "PerfectComplex",
    "hom_complex_dim",
    "hom_support_bound",
    "stalk",
    "x_chain",
    "dual_numbers_component",
]

LambdaElt = tuple  # (a, b) meaning a + b x
LambdaMatrix = Sequence[Sequence[LambdaElt]]  # rows x cols of LambdaElt

X = (Fraction(0), Fraction(1))


def _k_matrix(m: LambdaMatrix, rows: int, cols: int) -> list[list[Fraction]]:
    """Ground-field matrix (2 rows) x (2 cols) of a Lambda-linear map."""
    out = [[Fraction(0)] * (2 * cols) for _ in range(2 * rows)]
    for r in range(rows):
        for c in range(cols):
            a, b = m[r][c]
            out[2 * r][2 * c] = Fraction(a)
            out[2 * r + 1][2 * c] = Fraction(b)
            out[2 * r + 1][2 * c + 1] = Fraction(a)
    return out


def _mul(a, b):
    if not a or not b or not b[0]:
        return [[Fraction(0)] * (len(b[0]) if b else 0) for _ in range(len(a))]
    return [[sum(a[r][k] * b[k][c] for k in range(len(b))) for c in range(len(b[0]))] for r in range(len(a))]


@dataclass(frozen=True)
class PerfectComplex:
    """Free Lambda-modules of the given ranks in degrees offset, offset + 1, ...

    ``diffs[k]`` is the differential from degree ``offset + k`` to
    ``offset + k + 1``, a ``ranks[k+1] x ranks[k]`` matrix over Lambda.
    """

    ranks: tuple[int, ...]
    diffs: tuple
    offset: int = 0

    def __post_init__(self):
        if len(self.diffs) != max(len(self.ranks) - 1, 0):
            raise ValueError("need one differential between consecutive terms")
        for k, d in enumerate(self.diffs):
            if len(d) != self.ranks[k + 1] or any(len(row) != self.ranks[k] for row in d):
                raise ValueError(f"differential {k} has the wrong shape")
        for k in range(len(self.diffs) - 1):
            dd = _mul(self.k_diff(self.offset + k + 1), self.k_diff(self.offset + k))
            assert all(x == 0 for row in dd for x in row), "d o d != 0"

    @property
    def degrees(self) -> range:
        return range(self.offset, self.offset + len(self.ranks))

    def rank(self, deg: int) -> int:
        k = deg - self.offset
        return self.ranks[k] if 0 <= k < len(self.ranks) else 0

    def k_diff(self, deg: int) -> list[list[Fraction]]:
        """Ground-field matrix of d: C^deg -> C^(deg+1)."""
        src, dst = self.rank(deg), self.rank(deg + 1)
        k = deg - self.offset
        if src == 0 or dst == 0 or not (0 <= k < len(self.diffs)):
            return [[Fraction(0)] * (2 * src) for _ in range(2 * dst)]
        return _k_matrix(self.diffs[k], dst, src)


def stalk(rank: int = 1, degree: int = 0) -> PerfectComplex:
    return PerfectComplex((rank,), (), degree)


def x_chain(length: int, top: int = 0) -> PerfectComplex:
    """P -x-> P -x-> ... -x-> P with ``length`` terms, the last one in degree ``top``."""
    if length < 1:
        raise ValueError("a chain needs at least one term")
    return PerfectComplex((1,) * length, tuple([[X]] for _ in range(length - 1)), top - length + 1)


def _lambda_basis(rows: int, cols: int) -> list[list[list[Fraction]]]:
    """Ground-field matrices of a basis of Hom_Lambda(Lambda^cols, Lambda^rows)."""
    basis = []
    for r in range(rows):
        for c in range(cols):
            for elt in ((1, 0), (0, 1)):
                m = [[(0, 0)] * cols for _ in range(rows)]
                m[r][c] = elt
                basis.append(_k_matrix(m, rows, cols))
    return basis


def _flatten(blocks: list[list[list[Fraction]]]) -> list[Fraction]:
    return [x for block in blocks for row in block for x in row]


def hom_support_bound(c: PerfectComplex, d: PerfectComplex) -> range:
    """Shifts i for which a chain map C -> D[i] can be nonzero at all."""
    return range(d.offset - (c.offset + len(c.ranks) - 1), d.offset + len(d.ranks) - c.offset)


def hom_complex_dim(c: PerfectComplex, d: PerfectComplex, i: int) -> int:
    """dim over k of Hom(C, D[i]) in the homotopy category."""
    # f^k : C^k -> D^(k+i);  h^k : C^k -> D^(k+i-1)
    degs = [k for k in c.degrees if d.rank(k + i)]
    params = []  # (degree, basis matrix) for chain-map unknowns
    for k in degs:
        for m in _lambda_basis(d.rank(k + i), c.rank(k)):
            params.append((k, m))
    if not params:
        return 0

    # chain condition d_D f^k - f^(k+1) d_C = 0 for each k
    cond_degs = sorted({k for k in c.degrees} | {k - 1 for k in c.degrees})

    def zero(rows, cols):
        return [[Fraction(0)] * cols for _ in range(rows)]

    columns = []
    for k, m in params:
        blocks = []
        for q in cond_degs:
            rows, cols = 2 * d.rank(q + i + 1), 2 * c.rank(q)
            block = zero(rows, cols)
            if q == k and rows and cols:
                block = _mul(d.k_diff(k + i), m)
            if q == k - 1 and rows and cols:
                t = _mul(m, c.k_diff(q))
                block = [[-x for x in row] for row in t]
            blocks.append(block)
        columns.append(_flatten(blocks))
    rows_eq = [list(r) for r in zip(*columns)]
    cycles = len(params) - (rational_rank(rows_eq, len(params)) if rows_eq else 0)

    # null-homotopic maps f^k = d_D h^k + h^(k+1) d_C, in f-coordinates
    images = []
    for k in c.degrees:
        tr, sc = d.rank(k + i - 1), c.rank(k)
        if not (tr and sc):
            continue
        for h in _lambda_basis(tr, sc):
            blocks = []
            for q in degs:
                rows, cols = 2 * d.rank(q + i), 2 * c.rank(q)
                block = zero(rows, cols)
                if q == k:
                    block = _mul(d.k_diff(k + i - 1), h)
                elif q == k - 1:
                    block = _mul(h, c.k_diff(q))
                blocks.append(block)
            images.append(_flatten(blocks))
    boundaries = rational_rank(images) if images else 0
    return cycles - boundaries


def dual_numbers_component(depth: int, shift_window: int | None = None) -> CategoryPresentation:
    """Orbits C_0 .. C_depth with C_m the x-chain of m + 1 terms ending in degree 0."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if shift_window is None:
        shift_window = 2 * depth + 4
    if shift_window < 0:
        raise ValueError("shift window must be nonnegative")
    complexes = [x_chain(m + 1) for m in range(depth + 1)]
    names = [component_name(m) for m in range(depth + 1)]
    homs = {}
    for a, ca in zip(names, complexes):
        for b, cb in zip(names, complexes):
            poly = LaurentPoly(
                (i, hom_complex_dim(ca, cb, i)) for i in range(-shift_window, shift_window + 1)
            )
            for i in hom_support_bound(ca, cb):
                if abs(i) > shift_window and hom_complex_dim(ca, cb, i):
                    raise WindowTooSmall(
                        f"Hom({a}, {b}[{i}]) is nonzero outside the window |i| <= {shift_window}"
                    )
            homs[(a, b)] = poly
    return CategoryPresentation(
        f"dual-numbers-{depth}",
        [OrbitDecl(n, None) for n in names],
        homs,
        component_triangles(depth),
        hypothesis_42=True,
        serre_trivial=True,
    )
