"""Exact linear algebra: rank/kernel against brute-force oracles, nilpotent
exponentials against the closed-form series, quadratic roots resubstituted."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from schubert.errors import NoSolution, NotNilpotent
from schubert.linalg import (Matrix, QuadExt, det, exp_nilpotent, inverse,
                             kernel, rank, rref, solve_quadratic, square_split)

F = Fraction


def _det_cofactor(rows):
    """Independent determinant by first-row cofactor expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = F(0)
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


def _rank_by_minors(rows, cols_n):
    """Largest r with a nonvanishing r x r minor -- the defining rank."""
    n = len(rows)
    for r in range(min(n, cols_n), 0, -1):
        for rsel in combinations(range(n), r):
            for csel in combinations(range(cols_n), r):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                if _det_cofactor(sub) != 0:
                    return r
    return 0


def _random_matrix(rng, rows, cols, lo=-2, hi=2):
    return Matrix([[F(rng.randint(lo, hi)) for _ in range(cols)]
                   for _ in range(rows)])


# -- rank / kernel / inverse / det --------------------------------------------


def test_rank_identity_and_zero():
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix.zeros(2, 5)) == 0


def test_rank_dependent_rows():
    assert rank(Matrix([[1, 2], [2, 4]])) == 1


def test_rank_matches_minor_oracle_on_small_matrices():
    rng = random.Random(20240)
    for _ in range(60):
        rows_n = rng.randint(1, 4)
        cols_n = rng.randint(1, 4)
        rows = [[F(rng.randint(-2, 2)) for _ in range(cols_n)]
                for _ in range(rows_n)]
        M = Matrix(rows)
        assert rank(M) == _rank_by_minors(rows, cols_n)


def test_kernel_trivial_and_known():
    assert kernel(Matrix.identity(2)).cols == 0
    K = kernel(Matrix([[1, 1]]))
    assert K.cols == 1
    assert K[0, 0] * 1 + K[1, 0] * 1 == 0 and not K.is_zero()
    K2 = kernel(Matrix([[1, 2], [2, 4]]))
    assert K2.cols == 1
    # span of (2, -1): second coordinate is -1/2 of the first
    assert K2[0, 0] * F(-1) == K2[1, 0] * F(2)


def test_rank_nullity_and_annihilation():
    rng = random.Random(7)
    for _ in range(40):
        M = _random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5), -3, 3)
        K = kernel(M)
        assert rank(M) + K.cols == M.cols
        if K.cols:
            assert (M * K).is_zero()


def test_rref_idempotent_and_pivots():
    M = Matrix([[0, 2, 1], [0, 4, 2], [1, 0, 0]])
    R, pivots = rref(M)
    assert pivots == (0, 1)
    R2, pivots2 = rref(R)
    assert R2 == R and pivots2 == pivots


def test_inverse_round_trip_and_singular():
    rng = random.Random(99)
    found = 0
    while found < 10:
        M = _random_matrix(rng, 3, 3, -4, 4)
        if rank(M) < 3:
            continue
        found += 1
        assert M * inverse(M) == Matrix.identity(3)
    with pytest.raises(ValueError):
        inverse(Matrix([[1, 2], [2, 4]]))


def test_det_matches_cofactor_oracle():
    rng = random.Random(31)
    for _ in range(30):
        n = rng.randint(1, 4)
        rows = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        assert det(Matrix(rows)) == _det_cofactor(rows)


# -- exp of nilpotent matrices -------------------------------------------------


def test_exp_zero_matrix_is_identity():
    assert exp_nilpotent(Matrix.zeros(3, 3), F(5)) == Matrix.identity(3)


def test_exp_single_jordan_block():
    N = Matrix([[0, 0], [1, 0]])
    assert exp_nilpotent(N, F(3)) == Matrix([[1, 0], [3, 1]])


def test_exp_weighted_subdiagonal_frozen():
    # subdiagonal (1, 2): exp(t*N) = [[1,0,0],[t,1,0],[t^2,2t,1]], at t = 2
    N = Matrix([[0, 0, 0], [1, 0, 0], [0, 2, 0]])
    assert exp_nilpotent(N, F(2)) == Matrix([[1, 0, 0], [2, 1, 0], [4, 4, 1]])


def test_exp_one_parameter_group_law():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(2, 4)
        N = Matrix([[F(rng.randint(-2, 2)) if i > j else F(0)
                     for j in range(n)] for i in range(n)])
        s = F(rng.randint(-5, 5), rng.randint(1, 4))
        t = F(rng.randint(-5, 5), rng.randint(1, 4))
        assert exp_nilpotent(N, s) * exp_nilpotent(N, t) == exp_nilpotent(N, s + t)
        assert exp_nilpotent(N, s) * exp_nilpotent(N, -s) == Matrix.identity(n)


def test_exp_rejects_non_nilpotent():
    with pytest.raises(NotNilpotent):
        exp_nilpotent(Matrix.identity(2), F(1))


# -- quadratic roots and the quadratic extension -------------------------------


def test_solve_quadratic_rational_roots():
    assert set(solve_quadratic(F(1), F(0), F(-4))) == {F(2), F(-2)}
    assert set(solve_quadratic(F(1), F(-3), F(2))) == {F(1), F(2)}


def test_solve_quadratic_irrational_roots():
    r1, r2 = solve_quadratic(F(1), F(0), F(-2))
    assert r1 * r1 == 2 and r2 * r2 == 2 and r1 != r2
    assert r1.d == 2


def test_solve_quadratic_linear_and_errors():
    assert solve_quadratic(F(0), F(2), F(-4)) == [F(2)]
    with pytest.raises(NoSolution):
        solve_quadratic(F(0), F(0), F(5))
    with pytest.raises(ValueError):
        solve_quadratic(F(0), F(0), F(0))


def test_solve_quadratic_double_root():
    roots = solve_quadratic(F(1), F(-2), F(1))
    assert roots == [F(1), F(1)]


def test_solve_quadratic_residual_is_zero():
    rng = random.Random(11)
    for _ in range(25):
        a = F(rng.randint(-5, 5), rng.randint(1, 3))
        b = F(rng.randint(-5, 5), rng.randint(1, 3))
        c = F(rng.randint(-5, 5), rng.randint(1, 3))
        if a == 0 and b == 0:
            continue
        for r in solve_quadratic(a, b, c):
            assert a * r * r + b * r + c == 0


def test_square_split_frozen_values():
    assert square_split(0) == (1, 0)
    assert square_split(1) == (1, 1)
    assert square_split(12) == (2, 3)
    assert square_split(-18) == (3, -2)
    assert square_split(49) == (7, 1)


def test_square_split_reconstructs_input():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(-10**6, 10**6)
        s, d = square_split(n)
        assert s * s * d == n
    # stays exact on integers far beyond the trial-division range
    big = 37 * 10**40 + 1
    s, d = square_split(big)
    assert s * s * d == big


def test_quadext_normalization():
    assert QuadExt(F(1), F(1), 8) == QuadExt(F(1), F(2), 2)
    assert QuadExt(F(0), F(1), 9) == F(3)
    assert QuadExt(F(2), F(0), 7) == F(2)
    assert hash(QuadExt(F(3), F(0), 5)) == hash(F(3))


def test_quadext_field_identities():
    rng = random.Random(17)
    for _ in range(20):
        d = rng.choice([2, 3, 5, -1, -7, 13])
        a = F(rng.randint(-5, 5), rng.randint(1, 4))
        b = F(rng.randint(-5, 5), rng.randint(1, 4))
        x = QuadExt(a, b, d)
        assert x * x.conjugate() == a * a - d * b * b
        if x:
            assert x * x.inverse() == 1
        y = QuadExt(F(rng.randint(-4, 4)), F(rng.randint(-4, 4)), d)
        z = QuadExt(F(rng.randint(-4, 4)), F(rng.randint(-4, 4)), d)
        assert (x + y) * z == x * z + y * z
        assert x + y == y + x and x * y == y * x


def test_quadext_rejects_mixed_extensions():
    with pytest.raises(ValueError):
        QuadExt(F(0), F(1), 2) + QuadExt(F(0), F(1), 3)


def test_quadext_mixes_with_rationals():
    x = QuadExt(F(1), F(1), 5)
    assert x + 1 == QuadExt(F(2), F(1), 5)
    assert 2 * x == QuadExt(F(2), F(2), 5)
    assert (x - x).is_rational
    assert F(1, 2) / QuadExt(F(0), F(1), 2) == QuadExt(F(0), F(1, 4), 2)


def test_matrix_over_quadext():
    s2 = QuadExt(F(0), F(1), 2)
    M = Matrix([[s2, 1], [2, s2]])
    assert det(M) == 0  # sqrt(2)^2 - 2
    assert rank(M) == 1
