"""Matrix Lie algebras with exact structure theory.

A MatrixLieAlgebra is a finite basis of square matrices over the rationals
or Gaussian rationals, closed under the commutator bracket.  On top of the
basis this module computes structure constants, adjoint matrices, the
Killing form (defined through adjoint traces, never through matrix traces),
ad-invariant symmetric bilinear forms, and dimensions of invariant
polynomials in the symmetric algebra of the dual.

Classical bases are fixed and documented so that every downstream exact
value is reproducible:

  sl(n): diagonal generators E_jj - E_(j+1)(j+1) for j = 0..n-2 first, then
         off-diagonal E_jk (j != k) in lexicographic (j, k) order.  For
         n = 2 this is exactly (h, e, f).
  so(n): E_jk - E_kj for j < k, lexicographic.
  su(n): i(E_jj - E_(j+1)(j+1)) for j = 0..n-2 first, then for each j < k
         (lexicographic) the pair E_jk - E_kj, i(E_jk + E_kj).  Gaussian
         rational entries; the algebra is real, so structure constants come
         out with zero imaginary part.
  gl(n): all E_jk in lexicographic (j, k) order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import GaussianRational, I, Matrix, Scalar, joint_kernel


@dataclass(frozen=True)
class MatrixLieAlgebra:
    name: str
    matrix_size: int
    basis: tuple[Matrix, ...]
    scalar: str = "rational"  # "rational" | "gaussian"

    def __post_init__(self):
        for b in self.basis:
            if b.rows != self.matrix_size or b.cols != self.matrix_size:
                raise ValueError(f"{self.name}: basis element of wrong size")

    @property
    def dim(self) -> int:
        return len(self.basis)


def bracket(x: Matrix, y: Matrix) -> Matrix:
    """Commutator [x, y] = xy - yx."""
    return x * y - y * x


def _unit(n: int, j: int, k: int) -> Matrix:
    return Matrix(n, n, [1 if (r, c) == (j, k) else 0
                         for r in range(n) for c in range(n)])


def make_classical(family: str, n: int) -> MatrixLieAlgebra:
    """Standard basis for sl(n), so(n), su(n), gl(n).  See module docstring."""
    fam = family.lower()
    if fam == "sl":
        if n < 2:
            raise ValueError("sl(n) requires n >= 2")
        basis = [_unit(n, j, j) - _unit(n, j + 1, j + 1) for j in range(n - 1)]
        basis += [_unit(n, j, k) for j in range(n) for k in range(n) if j != k]
        return MatrixLieAlgebra(f"sl({n})", n, tuple(basis), "rational")
    if fam == "so":
        if n < 2:
            raise ValueError("so(n) requires n >= 2")
        basis = [_unit(n, j, k) - _unit(n, k, j)
                 for j in range(n) for k in range(j + 1, n)]
        return MatrixLieAlgebra(f"so({n})", n, tuple(basis), "rational")
    if fam == "su":
        if n < 2:
            raise ValueError("su(n) requires n >= 2")
        basis = [(_unit(n, j, j) - _unit(n, j + 1, j + 1)).scale(I)
                 for j in range(n - 1)]
        for j in range(n):
            for k in range(j + 1, n):
                basis.append(_unit(n, j, k) - _unit(n, k, j))
                basis.append((_unit(n, j, k) + _unit(n, k, j)).scale(I))
        return MatrixLieAlgebra(f"su({n})", n, tuple(basis), "gaussian")
    if fam == "gl":
        if n < 1:
            raise ValueError("gl(n) requires n >= 1")
        basis = [_unit(n, j, k) for j in range(n) for k in range(n)]
        return MatrixLieAlgebra(f"gl({n})", n, tuple(basis), "rational")
    raise ValueError(f"unknown family {family!r}")


class ExpansionSolver:
    """Expands matrices in a fixed matrix basis, exactly and repeatedly.

    Precomputes a row-reduction transform of the flattened basis so each
    expansion is a single matrix-vector product plus a consistency check.
    Raises ValueError on a dependent basis.
    """

    def __init__(self, basis: Sequence[Matrix]):
        if not basis:
            self.dim = 0
            self.size2 = 0
            return
        n2 = basis[0].rows * basis[0].cols
        self.dim = len(basis)
        self.size2 = n2
        flat = Matrix.from_columns([b.entries() for b in basis])
        aug = flat.hstack(Matrix.identity(n2))
        R, pivots = aug.rref()
        if pivots[:self.dim] != list(range(self.dim)):
            raise ValueError("basis matrices are linearly dependent")
        self.transform = Matrix(
            n2, n2, [R[i, self.dim + j] for i in range(n2) for j in range(n2)])

    def expand(self, m: Matrix) -> tuple[Scalar, ...]:
        """Coefficients of m in the basis; ValueError if m is outside the span."""
        if self.dim == 0:
            if m.is_zero():
                return ()
            raise ValueError("nonzero matrix in empty basis")
        w = self.transform.matvec(m.entries())
        if any(w[self.dim:]):
            raise ValueError("matrix does not lie in the basis span")
        return tuple(w[:self.dim])


def structure_constants(alg: MatrixLieAlgebra):
    """Structure constants c[a][b] = coefficients of [e_a, e_b] in the basis.

    Raises ValueError naming the offending pair when the basis is not
    closed under the bracket.
    """
    solver = ExpansionSolver(alg.basis)
    dim = alg.dim
    c = []
    for a in range(dim):
        row = []
        for b in range(dim):
            if b < a:
                # antisymmetry by construction; recomputing would be wasted work
                row.append(tuple(-x for x in c[b][a]))
                continue
            if b == a:
                row.append(tuple(Fraction(0) for _ in range(dim)))
                continue
            try:
                row.append(solver.expand(bracket(alg.basis[a], alg.basis[b])))
            except ValueError:
                raise ValueError(
                    f"{alg.name}: bracket of basis pair ({a}, {b}) "
                    "is outside the span; not a Lie subalgebra") from None
        c.append(tuple(row))
    return tuple(c)


def verify_antisymmetry(c) -> bool:
    dim = len(c)
    return all(c[a][b][k] == -c[b][a][k]
               for a in range(dim) for b in range(dim) for k in range(dim))


def verify_jacobi(c) -> bool:
    """[[a,b],c] + [[b,c],a] + [[c,a],b] == 0 for all basis triples."""
    dim = len(c)
    for a in range(dim):
        for b in range(a + 1, dim):
            cab = c[a][b]
            for cc in range(b + 1, dim):
                cbc = c[b][cc]
                cca = c[cc][a]
                for l in range(dim):
                    s = Fraction(0)
                    for m in range(dim):
                        s = (s + cab[m] * c[m][cc][l]
                             + cbc[m] * c[m][a][l]
                             + cca[m] * c[m][b][l])
                    if s:
                        return False
    return True


def adjoint_matrix(c, a: int) -> Matrix:
    """Matrix of ad(e_a) in the basis: column l holds [e_a, e_l]."""
    dim = len(c)
    return Matrix(dim, dim,
                  [c[a][l][m] for m in range(dim) for l in range(dim)])


def killing_form(alg: MatrixLieAlgebra, c=None) -> Matrix:
    """B_ab = trace(ad e_a . ad e_b), computed from structure constants.

    This is the definition; comparisons against multiples of the matrix
    trace form live in tests, not here.
    """
    if c is None:
        c = structure_constants(alg)
    dim = alg.dim
    ads = [adjoint_matrix(c, a) for a in range(dim)]
    entries = []
    for a in range(dim):
        for b in range(dim):
            entries.append((ads[a] * ads[b]).trace())
    return Matrix(dim, dim, entries)


def trace_form(alg: MatrixLieAlgebra) -> Matrix:
    """T_ab = Tr(e_a e_b) in the defining representation."""
    dim = alg.dim
    return Matrix(dim, dim, [(alg.basis[a] * alg.basis[b]).trace()
                             for a in range(dim) for b in range(dim)])


def is_ad_invariant(c, q: Matrix) -> bool:
    """Check Q([x,a],b) + Q(a,[x,b]) == 0 on all basis triples."""
    dim = len(c)
    for x in range(dim):
        for a in range(dim):
            for b in range(dim):
                s = Fraction(0)
                for k in range(dim):
                    s = s + c[x][a][k] * q[k, b] + c[x][b][k] * q[a, k]
                if s:
                    return False
    return True


# -- symmetric powers of the dual -------------------------------------------


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Weakly increasing index tuples of the given length (monomial basis)."""
    out: list[tuple[int, ...]] = []

    def rec(prefix, start, left):
        if left == 0:
            out.append(tuple(prefix))
            return
        for v in range(start, nvars):
            prefix.append(v)
            rec(prefix, v, left - 1)
            prefix.pop()

    rec([], 0, degree)
    return out


def coadjoint_derivation(c, a: int, monomials, index) -> list:
    """Sparse matrix of e_a acting as a derivation on Sym^d of the dual.

    The action on a dual generator is (a . xi_v)(e_j) = -xi_v([e_a, e_j]),
    so xi_v maps to -sum_j c[a][j][v] xi_j; it extends to monomials by the
    Leibniz rule.  Returns [(row, col, val)] triples over the monomial basis.
    """
    dim = len(c)
    triples = []
    for col, mono in enumerate(monomials):
        seen = {}
        for v in mono:
            seen[v] = seen.get(v, 0) + 1
        for v, mult in seen.items():
            pos = mono.index(v)
            for j in range(dim):
                coeff = -c[a][j][v]
                if not coeff:
                    continue
                target = tuple(sorted(mono[:pos] + (j,) + mono[pos + 1:]))
                triples.append((index[target], col, mult * coeff))
    return triples


def symmetric_power_dimension(dim: int, degree: int) -> int:
    return math.comb(dim + degree - 1, degree)


def invariant_polynomial_dimension(alg: MatrixLieAlgebra, degree: int,
                                   ceiling: int = 5000) -> int:
    """dim of degree-d invariants in the symmetric algebra of the dual.

    Invariance means annihilation by every basis derivation, i.e. this is
    the Lie-algebra (connected-group) invariant space.  Guarded: raises
    ValueError when the symmetric power dimension exceeds `ceiling`.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if degree == 0:
        return 1
    nmono = symmetric_power_dimension(alg.dim, degree)
    if nmono > ceiling:
        raise ValueError(
            f"Sym^{degree} dimension {nmono} exceeds ceiling {ceiling}")
    c = structure_constants(alg)
    monomials = _monomials(alg.dim, degree)
    index = {m: i for i, m in enumerate(monomials)}
    ops = [coadjoint_derivation(c, a, monomials, index)
           for a in range(alg.dim)]
    return len(joint_kernel(nmono, ops))


def invariant_symmetric_forms(alg: MatrixLieAlgebra) -> list[Matrix]:
    """Basis of ad-invariant symmetric bilinear forms Q on the algebra.

    Solved as the joint kernel of the basis derivations on Sym^2 of the
    dual; each kernel vector is converted to the symmetric matrix with
    Q(x, y) = the polynomial's polarization.  Every returned form is
    re-checked against the invariance identity.
    """
    c = structure_constants(alg)
    dim = alg.dim
    monomials = _monomials(dim, 2)
    index = {m: i for i, m in enumerate(monomials)}
    ops = [coadjoint_derivation(c, a, monomials, index) for a in range(dim)]
    kernel = joint_kernel(len(monomials), ops)
    forms = []
    for vec in kernel:
        q = [[Fraction(0)] * dim for _ in range(dim)]
        for (i, j), coeff in zip(monomials, vec):
            if i == j:
                q[i][i] = coeff
            else:
                half = coeff / 2
                q[i][j] = half
                q[j][i] = half
        qm = Matrix.from_rows(q)
        if not is_ad_invariant(c, qm):
            raise AssertionError("kernel vector failed invariance re-check")
        forms.append(qm)
    return forms
