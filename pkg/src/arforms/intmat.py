"""Exact integer and rational matrix routines.

Only what the rest of the package needs: a small immutable integer matrix,
the saturated integer kernel, row Hermite normal form for lattice
comparison, and rank/nullspace over Q for the brute-force oracles.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "integer_nullspace",
    "hermite_normal_form",
    "lattice_equal",
    "rational_rank",
    "rational_nullspace",
]


class IntMatrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable[int]], cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != cols:
                raise ValueError("matrix rows have unequal lengths")
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._data), self.rows) if self.rows else IntMatrix([], 0)

    def __mul__(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self._data)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.cols == other.cols and self._data == other._data

    def __hash__(self):
        return hash((self.cols, self._data))

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r})"

    def __str__(self):
        if not self.rows:
            return "[]"
        width = max(len(str(x)) for row in self._data for x in row) if self.cols else 1
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self._data)


def _as_rows(m) -> list[list[int]]:
    if isinstance(m, IntMatrix):
        return m.tolist()
    return [list(map(int, r)) for r in m]


def integer_nullspace(m) -> list[tuple[int, ...]]:
    """Basis of the saturated lattice {v in Z^n : m v = 0}, in Hermite normal form.

    Unimodular column operations reduce ``m`` to column echelon form; the
    transformation columns that end up over zero columns span the integer
    kernel exactly.
    """
    rows = _as_rows(m)
    ncols = m.cols if isinstance(m, IntMatrix) else (len(rows[0]) if rows else 0)
    nrows = len(rows)
    # Column j of the augmented matrix [m; I] stored as one list.
    cols = [[rows[i][j] for i in range(nrows)] + [int(k == j) for k in range(ncols)]
            for j in range(ncols)]
    k = 0
    for i in range(nrows):
        if k >= ncols:
            break
        while True:
            nz = [j for j in range(k, ncols) if cols[j][i] != 0]
            if not nz:
                break
            p = min(nz, key=lambda j: abs(cols[j][i]))
            cols[k], cols[p] = cols[p], cols[k]
            done = True
            piv = cols[k][i]
            for j in range(k + 1, ncols):
                a = cols[j][i]
                if a:
                    q = a // piv
                    cols[j] = [x - q * y for x, y in zip(cols[j], cols[k])]
                    if cols[j][i]:
                        done = False
            if done:
                k += 1
                break
    basis = [c[nrows:] for c in cols[k:]]
    return [tuple(v) for v in hermite_normal_form(basis)]


def hermite_normal_form(vectors: Iterable[Sequence[int]]) -> list[list[int]]:
    """Row Hermite normal form with zero rows removed.

    Pivots are positive and the entries above each pivot lie in
    ``[0, pivot)``; two families span the same lattice iff their forms match.
    """
    a = [list(map(int, v)) for v in vectors]
    if not a:
        return []
    n = len(a[0])
    r = 0
    for j in range(n):
        if r >= len(a):
            break
        while True:
            nz = [i for i in range(r, len(a)) if a[i][j] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][j]))
            a[r], a[p] = a[p], a[r]
            clean = True
            for i in range(r + 1, len(a)):
                if a[i][j]:
                    q = a[i][j] // a[r][j]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][j]:
                        clean = False
            if clean:
                break
        if r < len(a) and a[r][j] != 0:
            if a[r][j] < 0:
                a[r] = [-x for x in a[r]]
            for i in range(r):
                q = a[i][j] // a[r][j]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
    return [row for row in a[:r] if any(row)]


def lattice_equal(a: Iterable[Sequence[int]], b: Iterable[Sequence[int]]) -> bool:
    return hermite_normal_form(a) == hermite_normal_form(b)


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; rows are kept sparse during elimination."""
    pending = [{j: x for j, x in enumerate(r) if x} for r in rows]
    pending = [r for r in pending if r]
    reduced: list[dict[int, Fraction]] = []
    pivots: list[int] = []
    for j in range(ncols):
        p = next((i for i, r in enumerate(pending) if j in r), None)
        if p is None:
            continue
        row = pending.pop(p)
        inv = 1 / row[j]
        row = {k: x * inv for k, x in row.items()}
        for others in (pending, reduced):
            for i, other in enumerate(others):
                f = other.get(j)
                if f:
                    for k, y in row.items():
                        v = other.get(k, 0) - f * y
                        if v:
                            other[k] = v
                        else:
                            other.pop(k, None)
        pending = [r for r in pending if r]
        reduced.append(row)
        pivots.append(j)
        if not pending:
            break
    dense = [[r.get(k, Fraction(0)) for k in range(ncols)] for r in reduced]
    return dense, pivots


def rational_rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    rows = [r for r in rows]
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    _, pivots = _rref([[Fraction(x) for x in r] for r in rows], ncols)
    return len(pivots)


def rational_nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {v in Q^ncols : rows v = 0} from the reduced row echelon form."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = _rref([[Fraction(x) for x in r] for r in rows], ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pj in zip(red, pivots):
            v[pj] = -row[f]
        basis.append(v)
    return basis
