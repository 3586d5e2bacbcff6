"""Exact scalar/linear algebra tests.

The elimination code is checked against an independent fraction-free
(Bareiss) elimination oracle for ranks, and against direct substitution for
solve/kernel/inverse results, so no expected value below depends on the
implementation under test.
"""

import random
from fractions import Fraction

import pytest

from liegauge.exact import (
    GaussianRational,
    I,
    Matrix,
    as_scalar,
    joint_kernel,
    rational_from_string,
    scalar_from_json,
    scalar_to_json,
)


def bareiss_rank(rows):
    """Fraction-free Gaussian elimination rank (oracle).

    Uses exact integer arithmetic after clearing denominators, with its own
    (partial-pivot by first nonzero) strategy; shares no code with
    Matrix.rref.
    """
    if not rows:
        return 0
    # clear denominators row by row
    m = []
    for row in rows:
        den = 1
        for x in row:
            den = den * Fraction(x).denominator // _gcd(den, Fraction(x).denominator)
        m.append([int(Fraction(x) * den) for x in row])
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a if a > 0 else -a


def random_fraction(rng, span=6):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_gaussian(rng, span=6):
    return GaussianRational(random_fraction(rng, span), random_fraction(rng, span))


def random_matrix(rng, rows, cols, gaussian=False):
    gen = random_gaussian if gaussian else random_fraction
    return Matrix(rows, cols, [gen(rng) for _ in range(rows * cols)])


# -- scalars ---------------------------------------------------------------


def test_gaussian_field_ops():
    a = GaussianRational(Fraction(1, 2), Fraction(-3))
    b = GaussianRational(Fraction(2), Fraction(1, 5))
    assert a + b == GaussianRational(Fraction(5, 2), Fraction(-14, 5))
    assert a * b - b * a == GaussianRational(0, 0)
    assert (a / b) * b == a
    assert I * I == -1
    assert a.conjugate().conjugate() == a


def test_field_axioms_random_triples():
    rng = random.Random(20240817)
    for gaussian in (False, True):
        for _ in range(200):
            gen = random_gaussian if gaussian else random_fraction
            x, y, z = gen(rng), gen(rng), gen(rng)
            assert (x + y) + z == x + (y + z)
            assert x * (y + z) == x * y + x * z
            assert (x * y) * z == x * (y * z)
            if y:
                assert (x / y) * y == x


def test_gaussian_interop_with_rationals():
    a = GaussianRational(1, 2)
    assert a + Fraction(1, 2) == GaussianRational(Fraction(3, 2), 2)
    assert 2 * a == GaussianRational(2, 4)
    assert Fraction(1) / I == -I
    # zero-imaginary values hash like their rational part
    assert hash(GaussianRational(Fraction(7, 3), 0)) == hash(Fraction(7, 3))


def test_scalar_parsing_roundtrip():
    assert rational_from_string("-3/7") == Fraction(-3, 7)
    assert rational_from_string("5") == Fraction(5)
    assert scalar_from_json(["1/2", "-2"]) == GaussianRational(Fraction(1, 2), -2)
    for v in (Fraction(-9, 4), GaussianRational(Fraction(0), Fraction(1, 3))):
        assert scalar_from_json(scalar_to_json(v)) == v
    with pytest.raises(ValueError):
        scalar_from_json({"re": 1})


# -- elimination against the oracle -----------------------------------------


def test_rank_matches_bareiss_oracle():
    rng = random.Random(99)
    for trial in range(40):
        r = rng.randint(1, 6)
        c = rng.randint(1, 7)
        m = random_matrix(rng, r, c)
        # sprinkle exact dependencies to exercise rank deficiency
        if trial % 3 == 0 and r >= 2:
            rows = m.to_lists()
            rows[-1] = [2 * x for x in rows[0]]
            m = Matrix.from_rows(rows)
        assert m.rank() == bareiss_rank(m.to_lists())


def test_rref_shape_and_rowspace():
    rng = random.Random(7)
    for _ in range(25):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 6))
        R, pivots = m.rref()
        # canonical RREF shape
        for r, j in enumerate(pivots):
            assert R[r, j] == 1
            for i in range(R.rows):
                if i != r:
                    assert R[i, j] == 0
        # pivot columns strictly increase
        assert pivots == sorted(pivots)
        # row space is preserved: stacking changes no rank
        stacked = Matrix.from_rows(m.to_lists() + R.to_lists())
        assert stacked.rank() == len(pivots) == m.rank()


def test_rref_pivot_tiebreak_is_first_nonzero():
    # column 0 is zero in row 0, so the pivot must come from row 1 (the
    # first nonzero scanning top to bottom), giving a deterministic swap.
    m = Matrix.from_rows([[0, 2], [3, 1], [6, 1]])
    R, pivots = m.rref()
    assert pivots == [0, 1]
    assert R.row(0) == (Fraction(1), Fraction(0))


def test_kernel_vectors_annihilate():
    rng = random.Random(1234)
    for gaussian in (False, True):
        for _ in range(20):
            m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 6), gaussian)
            basis = m.kernel_basis()
            assert len(basis) == m.cols - m.rank()  # rank-nullity
            for v in basis:
                assert all(not x for x in m.matvec(v))
            # independence of the kernel basis
            if basis:
                K = Matrix.from_columns(basis)
                assert K.rank() == len(basis)


def test_solve_by_substitution():
    rng = random.Random(5)
    for _ in range(30):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        x0 = [random_fraction(rng) for _ in range(m.cols)]
        b = m.matvec(x0)
        x = m.solve(b)
        assert x is not None
        assert m.matvec(x) == b


def test_solve_reports_inconsistency():
    m = Matrix.from_rows([[1, 1], [2, 2]])
    assert m.solve([1, 3]) is None
    assert m.solve([1, 2]) is not None


def test_inverse():
    rng = random.Random(11)
    found = 0
    while found < 10:
        m = random_matrix(rng, 3, 3)
        if m.rank() < 3:
            continue
        found += 1
        assert m * m.inverse() == Matrix.identity(3)
        assert m.inverse() * m == Matrix.identity(3)
    with pytest.raises(ValueError):
        Matrix.from_rows([[1, 2], [2, 4]]).inverse()


def test_matrix_ring_ops():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    b = Matrix.from_rows([[0, 1], [1, 0]])
    assert (a * b).to_lists() == [[2, 1], [4, 3]]
    assert a.trace() == 5
    assert (a - a).is_zero()
    assert a.transpose().transpose() == a
    c = Matrix(2, 2, [I, 1 + 0 * I, 0, I])
    assert c.conjugate()[0, 0] == -I


def test_joint_kernel_matches_stacked_kernel():
    rng = random.Random(42)
    for _ in range(15):
        dim = rng.randint(2, 5)
        ops = [random_matrix(rng, dim, dim) for _ in range(rng.randint(1, 3))]
        # force some shared kernel occasionally
        if rng.random() < 0.5:
            v = [random_fraction(rng) for _ in range(dim)]
            ops = [op - Matrix.from_columns([op.matvec(v)]) *
                   Matrix.from_rows([v]).scale(0) for op in ops]  # no-op, keep generic
        got = joint_kernel(dim, ops)
        stacked = Matrix.from_rows(
            [row for op in ops for row in op.to_lists()])
        want = stacked.kernel_basis()
        assert len(got) == len(want)
        # spans agree: ranks of unions match
        if got:
            both = Matrix.from_columns(list(got) + list(want))
            assert both.rank() == len(got)
        for v in got:
            for op in ops:
                assert all(not x for x in op.matvec(v))


def test_joint_kernel_sparse_operator():
    # operator as triples: projection onto coordinate 0 and onto coordinate 2
    p0 = [(0, 0, Fraction(1))]
    p2 = [(0, 2, Fraction(1))]
    basis = joint_kernel(3, [p0, p2])
    assert len(basis) == 1
    assert basis[0] == (Fraction(0), Fraction(1), Fraction(0))


def test_as_scalar_rejects_floats():
    with pytest.raises(TypeError):
        as_scalar(0.5)
