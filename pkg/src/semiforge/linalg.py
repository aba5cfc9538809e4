"""Exact linear algebra over Q.

Row-vector convention throughout the package: vectors are rows, a matrix A
acts on the right (x -> x*A), the image of A is its row space and the
kernel is the left null space {x : x*A = 0}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class LinAlgError(ValueError):
    pass


class DimensionMismatch(LinAlgError):
    pass


class NotInvertible(LinAlgError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Mat:
    """Immutable dense matrix of Fractions. Hashable; arithmetic is exact.

    Zero-row and zero-column matrices are allowed; pass `cols` explicitly
    when there are no rows.
    """

    __slots__ = ("rows", "cols", "data", "_hash")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(_frac(x) for x in row) for row in data)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged rows")
            if cols is not None and cols != width:
                raise DimensionMismatch(f"declared {cols} columns, rows have {width}")
            cols = width
        elif cols is None:
            raise DimensionMismatch("a matrix with no rows needs an explicit column count")
        self.data = rows
        self.rows = len(rows)
        self.cols = cols
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "Mat":
        one, zero = Fraction(1), Fraction(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        zero = Fraction(0)
        return cls(tuple((zero,) * cols for _ in range(rows)), cols=cols)

    @classmethod
    def row_vector(cls, entries: Sequence) -> "Mat":
        entries = tuple(entries)
        return cls((entries,), cols=len(entries))

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "Mat":
        return Mat(tuple(zip(*self.data)) if self.data else (), cols=self.rows)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self.data for x in r)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
            cols_of_other = other.transpose().data if other.data else ()
            out = []
            for r in self.data:
                if other.cols and self.cols:
                    out.append(tuple(sum(a * b for a, b in zip(r, c)) for c in cols_of_other))
                else:
                    out.append((Fraction(0),) * other.cols)
            return Mat(out, cols=other.cols)
        return Mat(tuple(tuple(_frac(other) * x for x in r) for r in self.data), cols=self.cols)

    def __rmul__(self, other):
        return Mat(tuple(tuple(_frac(other) * x for x in r) for r in self.data), cols=self.cols)

    def __add__(self, other: "Mat") -> "Mat":
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("matrix addition shape mismatch")
        return Mat(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)),
                   cols=self.cols)

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-1) * other

    def __eq__(self, other):
        return isinstance(other, Mat) and self.cols == other.cols and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.data))
        return self._hash

    def key(self) -> bytes:
        """Canonical byte encoding; equal keys iff equal matrices."""
        body = ";".join(",".join(f"{x.numerator}/{x.denominator}" for x in r) for r in self.data)
        return f"{self.rows}x{self.cols}:{body}".encode()

    def __repr__(self):
        return f"Mat({[[str(x) for x in r] for r in self.data]})"


def canonical_key(A: Mat) -> bytes:
    return A.key()


def stack(A: Mat, B: Mat) -> Mat:
    if A.cols != B.cols:
        raise DimensionMismatch("stack needs equal column counts")
    return Mat(A.data + B.data, cols=A.cols)


@dataclass(frozen=True)
class RrefResult:
    matrix: Mat
    pivots: tuple[int, ...]
    rank: int


def rref(A: Mat) -> RrefResult:
    """Reduced row echelon form: unit pivots, zeros above and below."""
    m = [list(r) for r in A.data]
    nrows, ncols = A.rows, A.cols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        pivot_row = m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return RrefResult(Mat(m, cols=ncols), tuple(pivots), r)


def rank(A: Mat) -> int:
    return rref(A).rank


class Subspace:
    """A subspace of Q^n, held as its unique RREF basis (no zero rows).

    Equality and hashing compare the canonical basis, so subspaces behave
    as exact values.
    """

    __slots__ = ("ambient_dim", "basis", "pivots", "_hash")

    def __init__(self, ambient_dim: int, basis: Mat, pivots: tuple[int, ...]):
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots
        self._hash = None

    @classmethod
    def from_rows(cls, ambient_dim: int, rows: Iterable[Iterable]) -> "Subspace":
        A = Mat(rows, cols=ambient_dim)
        res = rref(A)
        basis = Mat(res.matrix.data[: res.rank], cols=ambient_dim)
        return cls(ambient_dim, basis, res.pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls.from_rows(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.from_rows(ambient_dim, Mat.identity(ambient_dim).data)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def contains(self, v: Sequence) -> bool:
        v = tuple(_frac(x) for x in v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector has wrong length")
        residual = list(v)
        for row, p in zip(self.basis.data, self.pivots):
            c = residual[p]
            if c:
                residual = [x - c * y for x, y in zip(residual, row)]
        return not any(residual)

    def coords(self, v: Sequence) -> tuple:
        """Coefficients of v in the RREF basis; raises if v is outside."""
        v = tuple(_frac(x) for x in v)
        c = tuple(v[p] for p in self.pivots)
        rebuilt = [Fraction(0)] * self.ambient_dim
        for coef, row in zip(c, self.basis.data):
            if coef:
                rebuilt = [x + coef * y for x, y in zip(rebuilt, row)]
        if tuple(rebuilt) != v:
            raise LinAlgError("vector not in subspace")
        return c

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient_dim, self.basis))
        return self._hash

    def __repr__(self):
        return f"Subspace(dim={self.dim} of Q^{self.ambient_dim})"


def image(A: Mat) -> Subspace:
    """Row space of A, i.e. {x*A : x in Q^n} under the row convention."""
    return Subspace.from_rows(A.cols, A.data)


def kernel(A: Mat) -> Subspace:
    """Left kernel {x : x*A = 0}; a subspace of Q^rows."""
    res = rref(A.transpose())
    R, pivots = res.matrix, res.pivots
    free = [j for j in range(A.rows) if j not in set(pivots)]
    rows = []
    for f in free:
        v = [Fraction(0)] * A.rows
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R.data[i][f]
        rows.append(v)
    return Subspace.from_rows(A.rows, rows)


def inverse(A: Mat) -> Mat:
    if not A.is_square():
        raise DimensionMismatch("inverse needs a square matrix")
    n = A.rows
    aug = Mat(tuple(r + i for r, i in zip(A.data, Mat.identity(n).data)), cols=2 * n if n else 0)
    res = rref(aug)
    if res.pivots[:n] != tuple(range(n)):
        raise NotInvertible("matrix is singular")
    return Mat(tuple(r[n:] for r in res.matrix.data), cols=n)


def det(A: Mat) -> Fraction:
    if not A.is_square():
        raise DimensionMismatch("determinant needs a square matrix")
    n = A.rows
    m = [list(r) for r in A.data]
    result = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            result = -result
        pv = m[c][c]
        result *= pv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / pv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def minimal_polynomial(A: Mat) -> tuple:
    """Monic minimal polynomial of A, constant term first.

    The 0x0 matrix gets the unit polynomial 1.
    """
    if not A.is_square():
        raise DimensionMismatch("minimal polynomial needs a square matrix")
    n = A.rows
    if n == 0:
        return (Fraction(1),)
    flats = [tuple(x for r in Mat.identity(n).data for x in r)]
    power = Mat.identity(n)
    for k in range(1, n + 1):
        power = power * A
        flats.append(tuple(x for r in power.data for x in r))
        ker = kernel(Mat(flats, cols=n * n))
        if ker.dim > 0:
            c = ker.basis.row(0)
            lead = c[k]
            assert lead != 0, "dependence must involve the newest power"
            return tuple(x / lead for x in c)
    raise AssertionError("minimal polynomial of degree <= n must exist")
