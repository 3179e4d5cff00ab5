from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spankit import ratlin


def matrices(rows=3, cols=3):
    entry = st.fractions(min_value=-5, max_value=5,
                         max_denominator=4)
    return st.integers(1, rows).flatmap(
        lambda r: st.integers(1, cols).flatmap(
            lambda c: st.lists(
                st.lists(entry, min_size=c, max_size=c),
                min_size=r, max_size=r).map(ratlin.mat)))


def square_matrices(n=3):
    entry = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.integers(1, n).flatmap(
        lambda k: st.lists(
            st.lists(entry, min_size=k, max_size=k),
            min_size=k, max_size=k).map(ratlin.mat))


class TestBasics:
    def test_mat_normalizes_to_fractions(self):
        a = ratlin.mat([[1, 2], [3, 4]])
        assert all(isinstance(x, Fraction) for row in a for x in row)

    def test_matmul_example(self):
        a = ratlin.mat([[2], [3]])
        b = ratlin.mat([[1, 4]])
        assert ratlin.matmul(a, b) == ratlin.mat([[2, 8], [3, 12]])

    def test_matmul_shape_check(self):
        with pytest.raises(ValueError):
            ratlin.matmul(ratlin.identity(2), ratlin.zeros(3, 1))

    def test_block_diag(self):
        out = ratlin.block_diag([ratlin.identity(1),
                                 ratlin.mat([[2, 3]])])
        assert out == ratlin.mat([[1, 0, 0], [0, 2, 3]])

    def test_kron_first_factor_major(self):
        a = ratlin.mat([[0, 1], [1, 0]])
        b = ratlin.identity(2)
        k = ratlin.kron(a, b)
        assert ratlin.shape(k) == (4, 4)
        assert k[0][2] == 1 and k[0][0] == 0

    def test_permutation_matrix(self):
        # sends basis vector e_j to e_{perm[j]}
        p = ratlin.permutation_matrix([2, 0, 1])
        v = ratlin.mat([[10], [20], [30]])
        assert ratlin.matmul(p, v) == ratlin.mat([[20], [30], [10]])

    def test_stacking(self):
        a = ratlin.mat([[1, 2]])
        b = ratlin.mat([[3, 4]])
        assert ratlin.vstack([a, b]) == ratlin.mat([[1, 2], [3, 4]])
        assert ratlin.hstack([a, b]) == ratlin.mat([[1, 2, 3, 4]])


class TestEchelon:
    def test_rank_examples(self):
        assert ratlin.rank(ratlin.identity(3)) == 3
        assert ratlin.rank(ratlin.mat([[1, 2], [2, 4]])) == 1
        assert ratlin.rank(ratlin.zeros(2, 2)) == 0

    @given(square_matrices())
    def test_inverse_roundtrip(self, a):
        n = len(a)
        if ratlin.rank(a) < n:
            assert not ratlin.is_invertible(a)
            return
        inv = ratlin.inverse(a)
        assert ratlin.matmul(a, inv) == ratlin.identity(n)
        assert ratlin.matmul(inv, a) == ratlin.identity(n)

    @given(matrices())
    def test_nullspace_annihilates(self, a):
        basis = ratlin.nullspace(a)  # columns span the kernel
        cols = len(a[0])
        r, k = ratlin.shape(basis)
        assert r == cols
        assert k == cols - ratlin.rank(a)
        if k:
            out = ratlin.matmul(a, basis)
            assert all(x == 0 for row in out for x in row)

    @given(matrices(), st.lists(st.fractions(min_value=-3, max_value=3,
                                             max_denominator=3),
                                min_size=3, max_size=3))
    def test_solve_consistent_systems(self, a, xs):
        cols = len(a[0])
        x = ratlin.mat([[v] for v in xs[:cols]] + [[0]] * max(0, cols - 3))
        b = ratlin.matmul(a, x)
        sol = ratlin.solve(a, b)
        assert sol is not None
        assert ratlin.matmul(a, sol) == b

    def test_solve_inconsistent(self):
        a = ratlin.mat([[1, 1], [1, 1]])
        b = ratlin.mat([[0], [1]])
        assert ratlin.solve(a, b) is None

    @given(matrices())
    def test_rref_pivots(self, a):
        r, pivots = ratlin.rref(a)
        for row, col in enumerate(pivots):
            assert r[row][col] == 1
            assert all(r[other][col] == 0
                       for other in range(len(r)) if other != row)
