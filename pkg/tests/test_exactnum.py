from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elemcalc.exactnum import (
    Matrix,
    Polynomial,
    char_polynomial,
    det,
    inverse,
    kernel_basis,
    left_kernel_basis,
    minimal_polynomial,
    poly_gcd,
    rank,
    rational_roots,
    rref,
    small_rationals,
    solve,
    to_fraction,
)

from conftest import J, M, leibniz_det, rational_matrices, square_matrices

z = Polynomial.z()


def test_to_fraction_accepts_exact_and_refuses_float():
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction(5) == 5
    with pytest.raises(TypeError):
        to_fraction(0.5)
    with pytest.raises(TypeError):
        to_fraction(True)


def test_small_rationals_order():
    gen = small_rationals()
    first = [next(gen) for _ in range(9)]
    assert first == [0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3]


@pytest.mark.parametrize(
    "rows, R, pivots",
    [
        ([[1, 2], [2, 4]], [[1, 2], [0, 0]], [0]),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]], [0, 1, 2]),
        ([[0, 1], [1, 0]], [[1, 0], [0, 1]], [0, 1]),
    ],
)
def test_rref_examples(rows, R, pivots):
    A = M(rows)
    R_, piv, T = rref(A)
    assert R_ == M(R) and piv == pivots
    assert T @ A == R_ and det(T) != 0


def test_rref_identity_transform():
    _, _, T = rref(Matrix.identity(3))
    assert T == Matrix.identity(3)


@pytest.mark.parametrize(
    "A, r",
    [(Matrix.zeros(2, 3), 0), (Matrix.identity(4), 4), (M([[1, 2, 3], [2, 4, 6], [1, 1, 1]]), 2)],
)
def test_rank_examples(A, r):
    assert rank(A) == r


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(2)) == []
    N = M([[0, 1], [0, 0]])
    assert kernel_basis(N) == [(1, 0)]
    assert left_kernel_basis(N) == [(0, 1)]
    assert sorted(kernel_basis(Matrix.zeros(2))) == [(0, 1), (1, 0)]


def test_solve_examples():
    assert solve(Matrix.identity(2), (3, 4)) == (3, 4)
    assert solve(M([[1, 1]]), (2,)) == (2, 0)
    assert solve(M([[0, 0]]), (1,)) is None


def test_det_inverse_examples():
    assert det(Matrix.diag([2, 3])) == 6
    assert inverse(Matrix.diag([2, 3])) == Matrix.diag([Fraction(1, 2), Fraction(1, 3)])
    assert det(M([[0, 1], [0, 0]])) == 0 and inverse(M([[0, 1], [0, 0]])) is None
    A = M([[1, 2], [3, 4]])
    assert det(A) == -2
    assert inverse(A) == M([["-2", "1"], ["3/2", "-1/2"]])


def test_minimal_polynomial_examples():
    assert minimal_polynomial(Matrix.identity(3)) == z - 1
    assert minimal_polynomial(J(2)) == z * z
    assert str(minimal_polynomial(Matrix.diag([1, 2]))) == "z^2 - 3*z + 2"


def test_char_gcd_roots_examples():
    p = char_polynomial(Matrix.diag([1, 2]))
    assert p == (z - 1) * (z - 2)
    assert rational_roots(p) == [1, 2]
    assert poly_gcd(z * z - 1, z - 1) == z - 1
    assert rational_roots(z * z + 1) == []


def test_polynomial_division_identity():
    p = z**4 - 3 * z + Fraction(1, 2)
    d = 2 * z * z + 1
    q, r = divmod(p, d)
    assert q * d + r == p and r.degree < d.degree


@settings(max_examples=60, deadline=None)
@given(rational_matrices())
def test_rank_transpose(A):
    assert rank(A) == rank(A.T)


@settings(max_examples=60, deadline=None)
@given(rational_matrices())
def test_rank_nullity(A):
    ker = kernel_basis(A)
    assert rank(A) + len(ker) == A.ncols
    for v in ker:
        assert all(x == 0 for x in A.mul_vec(v))


@settings(max_examples=60, deadline=None)
@given(square_matrices(max_n=4))
def test_det_matches_permutation_expansion(A):
    assert det(A) == leibniz_det(A)


@settings(max_examples=60, deadline=None)
@given(square_matrices(max_n=4))
def test_inverse_iff_nonzero_det(A):
    inv = inverse(A)
    if leibniz_det(A) == 0:
        assert inv is None
    else:
        I = Matrix.identity(A.nrows)
        assert A @ inv == I and inv @ A == I


@settings(max_examples=40, deadline=None)
@given(square_matrices(max_n=4))
def test_minimal_polynomial_divides_characteristic(A):
    m = minimal_polynomial(A)
    c = char_polynomial(A)
    assert m.at_matrix(A).is_zero()
    assert m.divides(c)
    assert c.at_matrix(A).is_zero()
    # no proper monic divisor of m built from dropping one rational root kills A
    for r in set(rational_roots(m)):
        assert not (m // (z - r)).at_matrix(A).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=1, max_size=4))
def test_rational_roots_recover_planted(roots):
    p = Polynomial.from_roots(roots)
    assert rational_roots(p) == sorted(roots)
