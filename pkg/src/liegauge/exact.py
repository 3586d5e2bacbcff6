"""Exact scalar arithmetic and dense exact linear algebra.

Scalars are either `fractions.Fraction` (rationals) or `GaussianRational`
(elements of Q(i), stored as a pair of Fractions).  Everything downstream
that must be exact (structure constants, Killing forms, anomaly matrices,
kernel computations) runs on top of this module; no floats enter here.

Row reduction uses the first nonzero entry in each column as the pivot,
scanning rows top to bottom, so results are deterministic and reproducible
across runs and platforms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union


class GaussianRational:
    """A Gaussian rational a + b*i with exact rational parts.

    Interoperates with int and Fraction (coerced to imaginary part 0).
    Instances are immutable and hashable; a value with zero imaginary part
    hashes like its rational part so mixed-keyed dicts behave.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        if self.im == 0:
            return f"{self.re}"
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


I = GaussianRational(0, 1)

Scalar = Union[Fraction, GaussianRational]
ScalarLike = Union[int, Fraction, GaussianRational]


def as_scalar(x: ScalarLike) -> Scalar:
    """Coerce an int/Fraction/GaussianRational to an exact scalar."""
    if isinstance(x, (Fraction, GaussianRational)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def conj(x: ScalarLike) -> Scalar:
    x = as_scalar(x)
    if isinstance(x, GaussianRational):
        return x.conjugate()
    return x


def rational_from_string(s: str) -> Fraction:
    """Parse "p/q" or "p" with arbitrary-precision integers."""
    return Fraction(s.strip())


def scalar_to_json(x: ScalarLike):
    """Inverse-parse a scalar into the file-format literal."""
    x = as_scalar(x)
    if isinstance(x, GaussianRational):
        return [str(x.re), str(x.im)]
    return str(x)


def scalar_from_json(v) -> Scalar:
    if isinstance(v, str):
        return rational_from_string(v)
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return GaussianRational(rational_from_string(str(v[0])),
                                rational_from_string(str(v[1])))
    raise ValueError(f"bad scalar literal: {v!r}")


class Matrix:
    """Immutable dense matrix over exact scalars."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries: Iterable[ScalarLike]):
        e = tuple(as_scalar(x) for x in entries)
        if len(e) != rows * cols:
            raise ValueError("entry count does not match shape")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_e", e)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, [x for row in rows for x in row])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[ScalarLike]]) -> "Matrix":
        c = len(cols)
        r = len(cols[0]) if c else 0
        return cls(r, c, [cols[j][i] for i in range(r) for j in range(c)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self._e[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._e[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self._e[i * self.cols + j] for i in range(self.rows))

    def entries(self) -> tuple:
        return self._e

    def to_lists(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self._e])

    def scale(self, c: ScalarLike) -> "Matrix":
        c = as_scalar(c)
        return Matrix(self.rows, self.cols, [c * a for a in self._e])

    def __mul__(self, other) -> "Matrix":
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        n, m, k = self.rows, other.cols, self.cols
        a, b = self._e, other._e
        out = []
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for j in range(m):
                s = Fraction(0)
                for t in range(k):
                    x = arow[t]
                    if x:
                        s = s + x * b[t * m + j]
                out.append(s)
        return Matrix(n, m, out)

    def __rmul__(self, other):
        return self.scale(other)

    def matvec(self, v: Sequence[ScalarLike]) -> tuple:
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        out = []
        for i in range(self.rows):
            s = Fraction(0)
            base = i * self.cols
            for t, x in enumerate(v):
                if x:
                    s = s + self._e[base + t] * x
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self._e[i * self.cols + j]
                       for j in range(self.cols) for i in range(self.rows)])

    def conjugate(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [conj(a) for a in self._e])

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        s = Fraction(0)
        for i in range(self.rows):
            s = s + self._e[i * self.cols + i]
        return s

    def is_zero(self) -> bool:
        return all(not x for x in self._e)

    def __eq__(self, other):
        return (isinstance(other, Matrix)
                and self.rows == other.rows and self.cols == other.cols
                and all(a == b for a, b in zip(self._e, other._e)))

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self):
        return "Matrix(%s)" % "; ".join(
            " ".join(repr(x) for x in self.row(i)) for i in range(self.rows))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        rows = [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)]
        return Matrix.from_rows(rows)

    # -- elimination -------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form.

        Returns (R, pivot_columns).  Pivot choice: scan columns left to
        right; in each column take the first row (top to bottom, among rows
        not yet used) with a nonzero entry.
        """
        rows = [list(self.row(i)) for i in range(self.rows)]
        pivots: list[int] = []
        r = 0
        for j in range(self.cols):
            sel = None
            for i in range(r, self.rows):
                if rows[i][j]:
                    sel = i
                    break
            if sel is None:
                continue
            rows[r], rows[sel] = rows[sel], rows[r]
            inv = rows[r][j]
            if inv != 1:
                rows[r] = [x / inv for x in rows[r]]
            for i in range(self.rows):
                if i != r and rows[i][j]:
                    f = rows[i][j]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(j)
            r += 1
            if r == self.rows:
                break
        return Matrix.from_rows(rows) if rows else self, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[tuple]:
        """Basis of the right kernel, as tuples of length self.cols.

        Deterministic: one vector per free column, in column order, with a 1
        in the free position.
        """
        R, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for j in free:
            v = [Fraction(0)] * self.cols
            v[j] = Fraction(1)
            for r, pj in enumerate(pivots):
                v[pj] = -R[r, j]
            basis.append(tuple(v))
        return basis

    def solve(self, b: Sequence[ScalarLike]):
        """One solution x of self @ x = b, or None if inconsistent.

        Free variables are set to zero (deterministic particular solution).
        """
        bs = [as_scalar(x) for x in b]
        if len(bs) != self.rows:
            raise ValueError("length mismatch")
        aug = Matrix(self.rows, self.cols + 1,
                     [x for i in range(self.rows)
                      for x in (*self.row(i), bs[i])])
        R, pivots = aug.rref()
        if pivots and pivots[-1] == self.cols:
            return None
        x = [Fraction(0)] * self.cols
        for r, pj in enumerate(pivots):
            x[pj] = R[r, self.cols]
        return tuple(x)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        R, pivots = self.hstack(Matrix.identity(n)).rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(n, n, [R[i, n + j] for i in range(n) for j in range(n)])


SparseOp = list  # [(i, j, value)] triples; rows index output, cols input


def apply_operator(op, v: Sequence[Scalar], dim: int) -> tuple:
    """Apply a Matrix or sparse triple list to a vector of length dim."""
    if isinstance(op, Matrix):
        return op.matvec(v)
    out = [Fraction(0)] * dim
    for i, j, val in op:
        x = v[j]
        if x:
            out[i] = out[i] + val * x
    return tuple(out)


def joint_kernel(dim: int, ops: Sequence) -> list[tuple]:
    """Intersection of the kernels of several operators on a dim-space.

    Each op is a Matrix (dim x dim) or a sparse [(i, j, value)] triple list.
    Works by iterative restriction: the running kernel basis is refined one
    operator at a time, so early operators with small kernels keep later
    eliminations cheap.  Returns basis vectors (tuples of length dim).
    """
    basis: list[tuple] = [
        tuple(Fraction(1) if i == j else Fraction(0) for i in range(dim))
        for j in range(dim)
    ]
    for op in ops:
        if not basis:
            return []
        image_cols = [apply_operator(op, v, dim) for v in basis]
        A = Matrix.from_columns(image_cols) if image_cols else Matrix.zero(dim, 0)
        coeffs = A.kernel_basis()
        new_basis = []
        for cv in coeffs:
            w = [Fraction(0)] * dim
            for c, bvec in zip(cv, basis):
                if c:
                    for i, x in enumerate(bvec):
                        if x:
                            w[i] = w[i] + c * x
            new_basis.append(tuple(w))
        basis = new_basis
    return basis
