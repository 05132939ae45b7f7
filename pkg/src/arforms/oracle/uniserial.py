"""Stable module category of k[X]/(X^n) by brute-force linear algebra.

Module maps V_i -> V_j are the matrices intertwining the nilpotent Jordan
blocks; the stable hom space is that space modulo the maps factoring through
the projective cover Lambda -> V_j.  No closed dimension formula is used.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..category import ARTriangle, CategoryPresentation, ObjectRef, OrbitDecl
from ..intmat import rational_nullspace, rational_rank
from ..laurent import LaurentPoly

__all__ = ["uniserial_category", "module_homs", "stable_hom_dim", "cosyzygy_dim"]


def _jordan(i: int) -> list[list[int]]:
    """Action of X on k[X]/(X^i) in the basis 1, X, ..., X^(i-1)."""
    return [[1 if r == c + 1 else 0 for c in range(i)] for r in range(i)]


def _matmul(a, b):
    out = [[0] * len(b[0]) for _ in range(len(a))]
    for r, row in enumerate(a):
        for k, x in enumerate(row):
            if x:
                for c, y in enumerate(b[k]):
                    if y:
                        out[r][c] += x * y
    return out


@lru_cache(maxsize=None)
def module_homs(i: int, j: int) -> tuple[tuple[tuple[Fraction, ...], ...], ...]:
    """Basis of Hom(V_i, V_j) as j x i matrices A with A J_i = J_j A."""
    ji, jj = _jordan(i), _jordan(j)
    equations = []
    # unknown A[r][c] sits at position r * i + c
    for r in range(j):
        for c in range(i):
            row = [0] * (i * j)
            for k in range(i):  # (A J_i)[r][c] = sum_k A[r][k] J_i[k][c]
                if ji[k][c]:
                    row[r * i + k] += ji[k][c]
            for k in range(j):  # (J_j A)[r][c] = sum_k J_j[r][k] A[k][c]
                if jj[r][k]:
                    row[k * i + c] -= jj[r][k]
            equations.append(row)
    basis = rational_nullspace(equations, i * j)
    return tuple(tuple(tuple(v[r * i:(r + 1) * i]) for r in range(j)) for v in basis)


def _projection(n: int, j: int) -> list[list[int]]:
    """Quotient map k[X]/(X^n) -> k[X]/(X^j)."""
    return [[1 if r == c else 0 for c in range(n)] for r in range(j)]


@lru_cache(maxsize=None)
def stable_hom_dim(n: int, i: int, j: int) -> int:
    homs = module_homs(i, j)
    pi = _projection(n, j)
    assert _matmul(pi, _jordan(n)) == _matmul(_jordan(j), pi), "projection is not a module map"
    through_projective = [
        [x for row in _matmul(pi, [list(r) for r in h]) for x in row] for h in module_homs(i, n)
    ]
    return len(homs) - rational_rank(through_projective, i * j) if through_projective else len(homs)


def cosyzygy_dim(n: int, i: int) -> int:
    """Dimension of the cokernel of an injective map V_i -> Lambda."""
    for h in module_homs(i, n):
        r = rational_rank([list(row) for row in h], i)
        if r == i:
            return n - r
    raise AssertionError(f"V_{i} does not embed in the regular module")  # pragma: no cover


def uniserial_category(n: int) -> CategoryPresentation:
    if n < 2:
        raise ValueError("k[X]/(X^n) needs n >= 2")
    objects = list(range(1, n))
    shift = {i: cosyzygy_dim(n, i) for i in objects}

    orbits: list[OrbitDecl] = []
    where: dict[int, ObjectRef] = {}
    members: dict[str, list[int]] = {}
    for i in objects:
        if i in where:
            continue
        cycle = [i]
        while shift[cycle[-1]] != i:
            cycle.append(shift[cycle[-1]])
        name = "".join(f"V{k}" for k in cycle)
        orbits.append(OrbitDecl(name, len(cycle)))
        members[name] = cycle
        for s, k in enumerate(cycle):
            where[k] = ObjectRef(name, s)

    homs = {}
    for a in orbits:
        for b in orbits:
            g = gcd(a.period, b.period)
            rep = members[a.name][0]
            homs[(a.name, b.name)] = LaurentPoly(
                (k, stable_hom_dim(n, rep, members[b.name][k % b.period])) for k in range(g)
            )

    labels = {f"V{i}": where[i] for i in objects}
    triangles = []
    for i in objects:
        ys = tuple(where[k] for k in (i - 1, i + 1) if 0 < k < n)
        triangles.append(ARTriangle(where[i], ys, where[i]))

    p = CategoryPresentation(
        f"uniserial-{n}", orbits, homs, triangles,
        hypothesis_42=False, serre_trivial=True, labels=labels,
    )
    # the windowed table has to reproduce every brute-force value
    for i in objects:
        for j in objects:
            assert p.hom_dim(where[i], where[j]) == stable_hom_dim(n, i, j), (i, j)
    return p
