"""Shared strategies and brute-force oracles.

The oracles here deliberately avoid the library's own elimination code:
determinants by permutation expansion and operator matrices by evaluating
the operator on every unit matrix.
"""

from fractions import Fraction
from itertools import permutations

from hypothesis import strategies as st

from elemcalc.exactnum import Matrix


def M(rows):
    return Matrix(rows)


def J(n=2):
    """Nilpotent Jordan block at 0."""
    return Matrix([[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)])


def leibniz_det(A: Matrix) -> Fraction:
    n = A.nrows
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i in range(n):
            term *= A[i, perm[i]]
        total += term
    return total


def evaluation_matrix(phi) -> Matrix:
    """n^2 x n^2 matrix whose column j is vec(phi(E_j)), E_j the j-th unit
    matrix in column-stacked order."""
    n = phi.n
    cols = []
    for j in range(n):
        for i in range(n):
            cols.append(phi(Matrix.unit(i, j, n)).vec())
    return Matrix.from_columns(cols)


def small_int_matrix(nrows, ncols=None, lo=-3, hi=3):
    ncols = nrows if ncols is None else ncols
    return st.lists(
        st.lists(st.integers(lo, hi), min_size=ncols, max_size=ncols),
        min_size=nrows,
        max_size=nrows,
    ).map(Matrix)


@st.composite
def square_matrices(draw, max_n=3, lo=-3, hi=3):
    n = draw(st.integers(1, max_n))
    return draw(small_int_matrix(n, n, lo, hi))


@st.composite
def rational_matrices(draw, max_rows=4, max_cols=4):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    q = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    rows = draw(st.lists(st.lists(q, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix(rows)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for key in sorted(results):
            terminalreporter.write_line(results[key])
