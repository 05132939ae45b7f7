import random

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form
from hypothesis import given, settings, strategies as st

from arforms.intmat import (
    IntMatrix,
    hermite_normal_form,
    integer_nullspace,
    lattice_equal,
    rational_nullspace,
    rational_rank,
)


def test_rank_one_nullspace():
    assert lattice_equal(integer_nullspace([[1, 1], [1, 1]]), [(1, -1)])


def test_identity_has_trivial_kernel():
    assert integer_nullspace(IntMatrix.identity(3)) == []


def test_example_gram_kernel():
    # the 4 x 4 hom table in the order V1, V2, V3, V4
    g = [[1, 1, 1, 1], [1, 2, 2, 1], [1, 2, 2, 1], [1, 1, 1, 1]]
    assert lattice_equal(integer_nullspace(g), [(1, 0, 0, -1), (0, 1, -1, 0)])


def test_saturation():
    # 2x + 4y = 0 has kernel generated by (2, -1), not by (4, -2)
    assert lattice_equal(integer_nullspace([[2, 4]]), [(2, -1)])
    assert not lattice_equal([(4, -2)], [(2, -1)])


def test_hnf_canonical_and_sign():
    assert hermite_normal_form([(0, -3), (2, 1)]) == hermite_normal_form([(2, 4), (0, 3)])
    assert lattice_equal([(1, 0), (0, 1)], [(1, 1), (1, 2)])


def test_zero_columns():
    assert lattice_equal(integer_nullspace(IntMatrix([[0, 0, 0]])), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_matrix_shape_errors():
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])


def test_str_right_justified():
    assert str(IntMatrix([[1, 10], [2, 3]])) == " 1 10\n 2  3"


def _random_kernel_case(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    k = rng.randint(0, n - 1)
    # a unimodular change of basis U; the first k columns span the kernel of M = B U^-1
    u = sympy.eye(n)
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        u[:, i] += rng.randint(-3, 3) * u[:, j]
    b = sympy.zeros(rng.randint(1, 6), n)
    for r in range(b.rows):
        for c in range(k, n):
            b[r, c] = rng.randint(-4, 4)
    m = b * u.inv()
    expected = [tuple(int(x) for x in u[:, c]) for c in range(k)]
    return [[int(x) for x in m.row(r)] for r in range(m.rows)], expected, n


@pytest.mark.parametrize("seed", range(40))
def test_constructed_kernels(seed):
    m, expected, n = _random_kernel_case(seed)
    got = integer_nullspace(m)
    for v in got:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    rank = sympy.Matrix(m).rank()
    assert len(got) == n - rank
    # the constructed kernel vectors lie in the computed lattice
    assert lattice_equal(got, list(got) + expected)


@settings(max_examples=60)
@given(st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c), min_size=1, max_size=5)))
def test_nullspace_against_sympy(rows):
    ncols = len(rows[0])
    got = integer_nullspace(rows)
    m = sympy.Matrix(rows)
    assert len(got) == ncols - m.rank()
    assert rational_rank(rows) == m.rank()
    for v in got:
        assert m * sympy.Matrix(v) == sympy.zeros(len(rows), 1)
    # saturated: the lattice has unit elementary divisors
    if got:
        snf = smith_normal_form(sympy.Matrix(got), domain=sympy.ZZ)
        assert all(abs(snf[i, i]) == 1 for i in range(len(got)))
    assert len(rational_nullspace(rows, ncols)) == len(got)
