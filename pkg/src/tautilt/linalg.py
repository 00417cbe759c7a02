"""Dense exact-rational matrices.

Everything in the package sits on top of this module, so it stays small
and predictable: a ``Matrix`` is an immutable grid of ``Fraction`` values
with an explicit shape (zero-row and zero-column matrices are legal and
common here, e.g. a map out of a zero vector space).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Matrix:
    __slots__ = ("nrows", "ncols", "rows", "_hash")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[Sequence] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self.rows = tuple((Fraction(0),) * ncols for _ in range(nrows))
        else:
            if len(rows) != nrows or any(len(r) != ncols for r in rows):
                raise ValueError(f"rows do not match shape {nrows}x{ncols}")
            self.rows = tuple(tuple(_q(x) for x in r) for r in rows)
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = list(rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for an empty row list")
            ncols = len(rows[0])
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        cols = list(cols)
        return cls(nrows, len(cols), [[c[i] for c in cols] for i in range(nrows)])

    @classmethod
    def column(cls, vec: Sequence) -> "Matrix":
        return cls(len(vec), 1, [[x] for x in vec])

    @classmethod
    def unit_columns(cls, n: int, indices: Sequence[int]) -> "Matrix":
        return cls(n, len(indices), [[1 if i == k else 0 for k in indices] for i in range(n)])

    # basic protocol -----------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nrows, self.ncols, self.rows))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def entries(self) -> tuple[Fraction, ...]:
        """Row-major flattening."""
        return tuple(x for r in self.rows for x in r)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix(self.nrows, self.ncols,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix(self.nrows, self.ncols,
                      [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.nrows, self.ncols, [[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        c = _q(c)
        return Matrix(self.nrows, self.ncols, [[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * c[k] for k, a in nz), Fraction(0)) for c in ocols])
        return Matrix(self.nrows, other.ncols, out)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows, self.columns())

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(len(rows), len(cols), [[self.rows[i][j] for j in cols] for i in rows])

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    # elimination --------------------------------------------------------
    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and pivot columns."""
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == self.nrows:
                break
            p = next((i for i in range(r, self.nrows) if rows[i][c] != 0), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            inv = 1 / rows[r][c]
            if inv != 1:
                rows[r] = [x * inv for x in rows[r]]
            pr = rows[r]
            for i in range(self.nrows):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
            pivots.append(c)
            r += 1
        return Matrix(self.nrows, self.ncols, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> "Matrix":
        """Columns form a basis of {x : self @ x = 0}, in RREF-canonical form."""
        R, piv = self.rref()
        free = [j for j in range(self.ncols) if j not in set(piv)]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for i, p in enumerate(piv):
                v[p] = -R.rows[i][f]
            basis.append(v)
        return Matrix.from_columns(basis, self.ncols)

    def left_nullspace(self) -> "Matrix":
        """Rows form a basis of {y : y @ self = 0}."""
        return self.T.nullspace().T

    def column_basis(self) -> "Matrix":
        """Independent columns of self spanning its column space."""
        _, piv = self.rref()
        return self.submatrix(range(self.nrows), piv)

    def row_basis(self) -> "Matrix":
        R, piv = self.rref()
        return R.submatrix(range(len(piv)), range(self.ncols))

    def solve(self, rhs: "Matrix") -> "Matrix | None":
        """One solution X of self @ X = rhs, or None when inconsistent."""
        if rhs.nrows != self.nrows:
            raise ValueError("right-hand side has the wrong number of rows")
        aug = hstack([self, rhs])
        R, piv = aug.rref()
        if any(p >= self.ncols for p in piv):
            return None
        X = [[Fraction(0)] * rhs.ncols for _ in range(self.ncols)]
        for i, p in enumerate(piv):
            X[p] = list(R.rows[i][self.ncols:])
        return Matrix(self.ncols, rhs.ncols, X)

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        X = self.solve(Matrix.identity(self.nrows))
        if X is None or self.rank() < self.nrows:
            raise ZeroDivisionError("singular matrix")
        return X

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def power(self, k: int) -> "Matrix":
        out = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def is_nilpotent(self) -> bool:
        return self.nrows == 0 or self.power(self.nrows).is_zero()

    def charpoly(self) -> list[Fraction]:
        """Coefficients of det(x I - self), highest degree first (Faddeev-LeVerrier)."""
        n = self.nrows
        coeffs = [Fraction(1)]
        M = Matrix.zeros(n, n)
        ident = Matrix.identity(n)
        for k in range(1, n + 1):
            M = self @ M + ident.scale(coeffs[-1])
            coeffs.append(-(self @ M).trace() / k)
        return coeffs


def hstack(mats: Iterable[Matrix], nrows: int | None = None) -> Matrix:
    mats = list(mats)
    if not mats:
        return Matrix(nrows or 0, 0)
    n = mats[0].nrows
    if any(m.nrows != n for m in mats):
        raise ValueError("hstack: row counts differ")
    return Matrix(n, sum(m.ncols for m in mats),
                  [[x for m in mats for x in m.rows[i]] for i in range(n)])


def vstack(mats: Iterable[Matrix], ncols: int | None = None) -> Matrix:
    mats = list(mats)
    if not mats:
        return Matrix(0, ncols or 0)
    n = mats[0].ncols
    if any(m.ncols != n for m in mats):
        raise ValueError("vstack: column counts differ")
    return Matrix(sum(m.nrows for m in mats), n, [r for m in mats for r in m.rows])


def block_diag(mats: Sequence[Matrix]) -> Matrix:
    nr = sum(m.nrows for m in mats)
    nc = sum(m.ncols for m in mats)
    rows = []
    c0 = 0
    for m in mats:
        for r in m.rows:
            rows.append([Fraction(0)] * c0 + list(r) + [Fraction(0)] * (nc - c0 - m.ncols))
        c0 += m.ncols
    return Matrix(nr, nc, rows)


def span_rank(vectors: Iterable[Sequence], length: int) -> int:
    """Rank of a family of vectors of the given length."""
    vecs = list(vectors)
    if not vecs:
        return 0
    return Matrix(len(vecs), length, vecs).rank()


def complement_units(basis: Matrix) -> list[int]:
    """Standard unit vectors completing the columns of ``basis`` to a basis."""
    R, piv = basis.T.rref()
    return [j for j in range(basis.nrows) if j not in set(piv)]


def poly_at_matrix(coeffs: Sequence[Fraction], A: Matrix) -> Matrix:
    """Horner evaluation; coefficients highest degree first."""
    n = A.nrows
    out = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for c in coeffs:
        out = out @ A + ident.scale(c)
    return out
