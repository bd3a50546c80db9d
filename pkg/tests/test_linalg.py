import random
from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from tailleur import linalg

small_int_matrix = st.integers(1, 6).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


@given(small_int_matrix)
def test_rank_matches_sympy(A):
    assert linalg.rank(linalg.to_sparse(A)) == sympy.Matrix(A).rank()


@given(small_int_matrix)
def test_nullspace_vectors_are_killed(A):
    rows = linalg.to_sparse(A)
    basis = linalg.nullspace(rows, len(A[0]))
    assert len(basis) == len(A[0]) - sympy.Matrix(A).rank()
    for v in basis:
        x = [v.get(j, 0) for j in range(len(A[0]))]
        assert all(y == 0 for y in linalg.mat_vec(rows, x))


@given(small_int_matrix, st.data())
def test_solve_consistent_systems(A, data):
    n = len(A[0])
    x0 = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    rows = linalg.to_sparse(A)
    b = linalg.mat_vec(rows, x0)
    x = linalg.solve(rows, b, n)
    assert x is not None and linalg.mat_vec(rows, x) == b


def test_solve_inconsistent():
    assert linalg.solve(linalg.to_sparse([[1, 1], [2, 2]]), [1, 3], 2) is None


def _det(M):
    return sympy.Matrix(M).det()


@given(small_int_matrix)
def test_smith_normal_form(A):
    U, S, V, Uinv = linalg.smith_normal_form(A)
    assert linalg.matmul(linalg.matmul(U, A), V) == S
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    m = len(A)
    assert linalg.matmul(U, Uinv) == [[int(i == j) for j in range(m)] for i in range(m)]
    diag = [S[i][i] for i in range(min(len(S), len(S[0])))]
    assert all(S[i][j] == 0 for i in range(len(S)) for j in range(len(S[0])) if i != j)
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz) and all(b % a == 0 for a, b in zip(nz, nz[1:]))
    # invariant factors agree with sympy's
    from sympy.matrices.normalforms import smith_normal_form
    ref = smith_normal_form(sympy.Matrix(A), domain=sympy.ZZ)
    ref_diag = sorted(abs(ref[i, i]) for i in range(min(ref.shape)) if ref[i, i] != 0)
    assert sorted(nz) == ref_diag


def test_smith_known():
    U, S, V, _ = linalg.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [S[i][i] for i in range(3)] == [2, 6, 12]
