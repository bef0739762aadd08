"""Seeded random instances with known structure.

Every generator takes a ``random.Random`` and builds its instance from
prescribed data (planted length, planted blocks, prescribed minimal
polynomials), so tests can compare computed answers with the construction.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Optional

from .elemop import ElemOp
from .exactnum import Matrix, det, inverse, kernel_basis, minimal_polynomial, rank
from .pencil import chain_block

__all__ = [
    "rand_matrix",
    "rand_invertible",
    "rand_unimodular",
    "rand_with_minpoly_degree",
    "planted_length_op",
    "zero_tensor_terms",
    "square_root_scalar",
    "planted_chain_target",
    "planted_pencil",
    "biorthogonal_instance",
    "two_invertible_instance",
    "scramble_split",
]


def rand_matrix(rng: random.Random, nrows: int, ncols: Optional[int] = None, lo: int = -3, hi: int = 3) -> Matrix:
    ncols = nrows if ncols is None else ncols
    return Matrix([[rng.randint(lo, hi) for _ in range(ncols)] for _ in range(nrows)])


def rand_invertible(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> Matrix:
    while True:
        M = rand_matrix(rng, n, n, lo, hi)
        if det(M) != 0:
            return M


def rand_unimodular(rng: random.Random, n: int, steps: Optional[int] = None) -> Matrix:
    """Integer matrix with determinant +-1, from random elementary row operations."""
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 2 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    perm = list(range(n))
    rng.shuffle(perm)
    return Matrix([rows[p] for p in perm])


def _jordan(lam, size: int) -> Matrix:
    return Matrix(
        [[lam if i == j else 1 if j == i + 1 else 0 for j in range(size)] for i in range(size)]
    )


def rand_with_minpoly_degree(rng: random.Random, n: int, d: int, lo: int = -4, hi: int = 4) -> Matrix:
    """n x n integer matrix whose minimal polynomial has degree exactly d."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    while True:
        # one Jordan block per distinct eigenvalue reaching the degree, then padding
        k = rng.randint(1, d)
        sizes = [1] * k
        for _ in range(d - k):
            sizes[rng.randrange(k)] += 1
        if sum(sizes) > n:
            continue
        eigs = rng.sample(range(lo, hi + 1), k)
        blocks = [_jordan(e, s) for e, s in zip(eigs, sizes)]
        # pad with 1 x 1 blocks at existing eigenvalues; the degree is unchanged
        blocks += [_jordan(rng.choice(eigs), 1) for _ in range(n - sum(sizes))]
        J = Matrix.block_diag(blocks)
        S = rand_unimodular(rng, n)
        M = S @ J @ inverse(S)
        if minimal_polynomial(M).degree == d:
            return M


def _independent(rng, n, count, lo=-3, hi=3) -> list[Matrix]:
    while True:
        mats = [rand_matrix(rng, n, n, lo, hi) for _ in range(count)]
        if rank(Matrix.from_columns([M.vec() for M in mats])) == count:
            return mats


def planted_length_op(rng: random.Random, n: int, ell: int, extra: int = 2) -> ElemOp:
    """Operator of length exactly ``ell`` written with ``ell + extra`` terms.

    With ``A_1..A_l`` and ``B_1..B_l`` independent, the new left coefficients
    are ``C = M A`` with ``M = [I; R]`` and the right ones ``D = N B`` with
    ``N = [I - R^T K; K]``, so that ``M^T N = I`` and the tensor is unchanged.
    """
    A = _independent(rng, n, ell)
    B = _independent(rng, n, ell)
    m = ell + extra
    R = [[Fraction(rng.randint(-2, 2)) for _ in range(ell)] for _ in range(extra)]
    K = [[Fraction(rng.randint(-2, 2)) for _ in range(ell)] for _ in range(extra)]
    M = [[Fraction(int(i == j)) for j in range(ell)] for i in range(ell)] + R
    RtK = [[sum(R[t][i] * K[t][j] for t in range(extra)) for j in range(ell)] for i in range(ell)]
    N = [[int(i == j) - RtK[i][j] for j in range(ell)] for i in range(ell)] + K

    def combo(coeffs, mats):
        out = Matrix.zeros(n)
        for c, X in zip(coeffs, mats):
            if c:
                out = out + X.scale(c)
        return out

    terms = [(combo(M[j], A), combo(N[j], B)) for j in range(m)]
    rng.shuffle(terms)
    return ElemOp(n, tuple(terms))


def zero_tensor_terms(rng: random.Random, n: int, m: int) -> list[tuple[Matrix, Matrix]]:
    """``m`` pairs with ``sum A_i (x) B_i = 0``.

    Left vecs are ``U = U0 W`` (rank r); right vecs are columns of
    ``V^T = Kw Z`` with ``Kw`` a kernel basis of W, so ``U V^T = 0``.
    """
    N = n * n
    r = rng.randint(1, m - 1)
    U0 = rand_matrix(rng, N, r)
    W = rand_matrix(rng, r, m)
    U = U0 @ W
    kw = kernel_basis(W)
    Kw = Matrix.from_columns(kw, nrows=m)
    Z = rand_matrix(rng, len(kw), N)
    Vt = Kw @ Z  # m x N
    terms = []
    for i in range(m):
        terms.append((Matrix.unvec(U.col(i), n), Matrix.unvec(Vt.row(i), n)))
    return terms


def square_root_scalar(rng: random.Random, n: int, alpha) -> Matrix:
    """Nonscalar X with ``X^2 = alpha I``; needs n even unless alpha is a
    nonzero rational square."""
    alpha = Fraction(alpha)
    blocks = []
    size = 0
    root = None
    if alpha > 0:
        a, b = math.isqrt(alpha.numerator), math.isqrt(alpha.denominator)
        if Fraction(a * a, b * b) == alpha:
            root = Fraction(a, b)
    if n % 2 and root is None:
        raise ValueError("odd size needs a rational square root")
    if root is not None and (n % 2 or rng.random() < 0.5):
        signs = [1, -1] + [rng.choice([1, -1]) for _ in range(n - 2)]
        X = Matrix.diag([root * s for s in signs])
    else:
        while size < n:
            blocks.append(Matrix([[0, alpha], [1, 0]]))
            size += 2
        X = Matrix.block_diag(blocks)
    S = rand_unimodular(rng, n)
    return S @ X @ inverse(S)


def planted_chain_target(rng: random.Random, n: int, k: int) -> ElemOp:
    """Length-two target whose right coefficients span a pencil containing a
    chain block of size k (and a transposed block filling the rest)."""
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    m = n - k
    L1, L2 = chain_block(k, 1, 0), chain_block(k, 0, 1)
    R1, R2 = chain_block(m + 1, 1, 0).T, chain_block(m + 1, 0, 1).T
    B1 = Matrix.block_diag([L1, R1])
    B2 = Matrix.block_diag([L2, R2])
    P0, Q0 = rand_unimodular(rng, n), rand_unimodular(rng, n)
    B1, B2 = Q0 @ B1 @ P0, Q0 @ B2 @ P0
    A1 = rand_invertible(rng, n)
    A2 = rand_invertible(rng, n)
    while rank(Matrix.from_columns([A1.vec(), A2.vec()])) < 2:
        A2 = rand_invertible(rng, n)
    return ElemOp(n, ((A1, B1), (A2, B2)))


def planted_pencil(rng: random.Random, max_rows: int = 6, max_cols: int = 8):
    """``(B1, B2, block_sizes)`` of a scrambled pencil with chain blocks and a
    regular square residual."""
    while True:
        sizes = [rng.randint(2, 4) for _ in range(rng.randint(1, 3))]
        res = rng.randint(0, 2)
        cols = sum(sizes) + res
        rows = sum(s - 1 for s in sizes) + res
        if cols <= max_cols and rows <= max_rows:
            break
    b1 = [chain_block(s, 1, 0) for s in sizes]
    b2 = [chain_block(s, 0, 1) for s in sizes]
    if res:
        b1.append(rand_matrix(rng, res))
        b2.append(Matrix.identity(res))
    B1, B2 = Matrix.block_diag(b1), Matrix.block_diag(b2)
    P0, Q0 = rand_invertible(rng, cols), rand_invertible(rng, rows)
    return Q0 @ B1 @ P0, Q0 @ B2 @ P0, sorted(sizes, reverse=True)


def scramble_split(rng: random.Random, delta: ElemOp) -> ElemOp:
    """Same operator, two terms mixed by a random invertible 2 x 2 change."""
    (A1, B1), (A2, B2) = delta.terms
    G = rand_invertible(rng, 2, -2, 2)
    H = inverse(G).T
    A1p = A1.scale(G[0, 0]) + A2.scale(G[0, 1])
    A2p = A1.scale(G[1, 0]) + A2.scale(G[1, 1])
    B1p = B1.scale(H[0, 0]) + B2.scale(H[0, 1])
    B2p = B1.scale(H[1, 0]) + B2.scale(H[1, 1])
    return ElemOp(delta.n, ((A1p, B1p), (A2p, B2p)))


def biorthogonal_instance(rng: random.Random, n: int):
    """``(delta, inverse)`` with ``delta = M(A1, P) + M(A2, I - P)`` for an
    idempotent P of rank strictly between 0 and n, and
    ``inverse = M(A1^-1, P) + M(A2^-1, I - P)``; delta's split is scrambled."""
    r = rng.randint(1, n - 1)
    S = rand_unimodular(rng, n)
    P = S @ Matrix.diag([1] * r + [0] * (n - r)) @ inverse(S)
    Q = Matrix.identity(n) - P
    while True:
        A1, A2 = rand_invertible(rng, n), rand_invertible(rng, n)
        if rank(Matrix.from_columns([A1.vec(), A2.vec()])) == 2:
            break
    delta = ElemOp(n, ((A1, P), (A2, Q)))
    inv = ElemOp(n, ((inverse(A1), P), (inverse(A2), Q)))
    return scramble_split(rng, delta), inv


def _has_rational_singular_member(X1: Matrix, X2: Matrix) -> bool:
    from .exactnum import rational_roots
    from .pencil import pencil_det

    p = pencil_det(X1, X2)  # det(X1 + t X2); the point at infinity is det(X2)
    return p.is_zero() or det(X2) == 0 or bool(rational_roots(p))


def two_invertible_instance(rng: random.Random, n: int = 2) -> ElemOp:
    """Invertible length-two operator with four invertible coefficients and a
    length-two inverse, whose coefficient pencils have no singular rational
    member.  Every rational split then has invertible coefficients, so no
    biorthogonal split exists over the rationals."""
    from .invert import inverse_elemop

    while True:
        A, B, C, D = (rand_invertible(rng, n) for _ in range(4))
        delta = ElemOp(n, ((A, B), (C, D)))
        if delta.length() != 2:
            continue
        if _has_rational_singular_member(A, C) or _has_rational_singular_member(B, D):
            continue
        rep = inverse_elemop(delta)
        if rep.invertible and rep.inverse_length == 2:
            return delta
