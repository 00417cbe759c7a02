from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from tautilt.linalg import Matrix, block_diag, complement_units, hstack, poly_at_matrix, vstack

entries = st.integers(min_value=-4, max_value=4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)))


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(m.nrows, m.ncols, lambda i, j: sympy.Rational(m[i, j].numerator, m[i, j].denominator))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_sympy(rows):
    A = Matrix.from_rows(rows)
    assert A.rank() == sympy.Matrix(rows).rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(rows):
    A = Matrix.from_rows(rows)
    N = A.nullspace()
    assert A.rank() + N.ncols == A.ncols
    assert (A @ N).is_zero()
    L = A.left_nullspace()
    assert (L @ A).is_zero()
    assert L.nrows + A.rank() == A.nrows


@settings(max_examples=60, deadline=None)
@given(matrices(4, 4), st.lists(entries, min_size=4, max_size=4))
def test_solve_consistent_system(rows, x):
    A = Matrix.from_rows(rows)
    x = Matrix.column(x[:A.ncols])
    b = A @ x
    sol = A.solve(b)
    assert sol is not None
    assert A @ sol == b


def test_solve_inconsistent_returns_none():
    A = Matrix.from_rows([[1, 0], [0, 0]])
    assert A.solve(Matrix.column([0, 1])) is None


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_inverse_and_charpoly(rows):
    A = Matrix.from_rows(rows)
    n = A.nrows
    if A.is_invertible():
        assert A @ A.inverse() == Matrix.identity(n)
    cp = A.charpoly()
    x = sympy.Symbol("x")
    ref = to_sympy(A).charpoly(x).all_coeffs()
    assert [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in ref] == cp
    # Cayley-Hamilton
    assert poly_at_matrix(cp, A).is_zero()


def test_rref_pivots():
    R, piv = Matrix.from_rows([[0, 2, 4], [0, 1, 2], [1, 0, 1]]).rref()
    assert piv == (0, 1)
    assert R == Matrix.from_rows([[1, 0, 1], [0, 1, 2], [0, 0, 0]])


def test_nilpotent_and_power():
    N = Matrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert N.is_nilpotent()
    assert N.power(3).is_zero() and not N.power(2).is_zero()
    assert not Matrix.identity(2).is_nilpotent()


def test_stacking_and_blocks():
    A = Matrix.from_rows([[1, 2]])
    B = Matrix.from_rows([[3, 4]])
    assert vstack([A, B]) == Matrix.from_rows([[1, 2], [3, 4]])
    assert hstack([A, B]) == Matrix.from_rows([[1, 2, 3, 4]])
    assert block_diag([A, B]).shape == (2, 4)
    assert hstack([], nrows=3).shape == (3, 0)
    assert vstack([], ncols=2).shape == (0, 2)


def test_complement_units_spans():
    B = Matrix.from_columns([[1, 1, 0]], 3)
    extra = complement_units(B)
    full = hstack([B, Matrix.unit_columns(3, extra)])
    assert full.rank() == 3 and len(extra) == 2


def test_exact_fractions():
    A = Matrix.from_rows([[3, 1], [1, 3]])
    inv = A.inverse()
    assert inv[0, 0] == Fraction(3, 8)
