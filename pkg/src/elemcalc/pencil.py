"""Two-dimensional spaces ``{a*B1 + b*B2}`` of m x n rational matrices.

The main entry point is :func:`canonical_form`.  For a space with no common
kernel, spanning the whole codomain and of maximal rank ``n - r``, it finds
invertible ``P`` (n x n) and ``Q`` (m x m) such that ``Q^-1 (a B1 + b B2) P`` is
block diagonal: ``r`` chain blocks of shape ``(k-1) x k`` with ``b`` on the
diagonal and ``a`` on the superdiagonal, followed by a residual block.

A chain block of size ``k`` comes from vectors ``z_1..z_k`` with::

    B1 z_1 = 0,   B2 z_j = B1 z_(j+1)  (1 <= j < k),   B2 z_k = 0

and codomain vectors ``w_j = B2 z_j``.  Chains are split off one at a time,
shortest first; after each split a coupled linear system is solved to clear
the off-diagonal block, which is always solvable because the residual pencil
has no shorter chain.  The result is checked against the block pattern
rather than trusted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactnum import Matrix, Polynomial, det, inverse, kernel_basis, rank, solve

__all__ = [
    "PencilSpace",
    "CanonicalForm",
    "PencilHypothesisError",
    "ChainError",
    "max_rank",
    "generic_rank",
    "pencil_det",
    "pencil_det_vanishes",
    "chain_kernel",
    "kernel_chain",
    "canonical_form",
    "chain_block",
]


class PencilHypothesisError(ValueError):
    """A structural hypothesis of the canonical form does not hold."""

    def __init__(self, hypothesis: str, message: str):
        super().__init__(message)
        self.hypothesis = hypothesis


class ChainError(ValueError):
    """A kernel chain could not be built or closed."""


@dataclass(frozen=True)
class PencilSpace:
    B1: Matrix
    B2: Matrix

    def __post_init__(self):
        if self.B1.shape != self.B2.shape:
            raise ValueError("B1 and B2 must have the same shape")
        if rank(Matrix.from_columns([self.B1.vec(), self.B2.vec()])) < 2:
            raise ValueError("B1 and B2 must be linearly independent")

    @property
    def shape(self) -> tuple[int, int]:
        return self.B1.shape

    def member(self, alpha, beta) -> Matrix:
        return self.B1.scale(alpha) + self.B2.scale(beta)


# ---------------------------------------------------------------------------
# generic rank


def _poly_rank(rows: list[list[Polynomial]], ncols: int) -> int:
    """Rank over the fraction field, by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    m = len(a)
    prev = Polynomial((1,))
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if not a[i][c].is_zero()), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, m):
            aic = a[i][c]
            for j in range(c + 1, ncols):
                num = piv * a[i][j] - aic * a[r][j]
                q, rem = divmod(num, prev)
                if not rem.is_zero():
                    raise AssertionError("inexact Bareiss division")
                a[i][j] = q
            a[i][c] = Polynomial()
        prev = piv
        r += 1
    return r


def generic_rank(B1: Matrix, B2: Matrix) -> int:
    """Rank of ``a B1 + b B2`` over the field of rational functions in (a, b).

    The pencil is homogeneous, so it suffices to work with ``B1 + t B2`` over
    Q(t).
    """
    if B1.shape != B2.shape:
        raise ValueError("shape mismatch")
    m, n = B1.shape
    rows = [[Polynomial((B1[i, j], B2[i, j])) for j in range(n)] for i in range(m)]
    return _poly_rank(rows, n)


def max_rank(S: PencilSpace) -> int:
    """Largest rank attained by a member of the space."""
    return generic_rank(S.B1, S.B2)


def pencil_det(B1: Matrix, B2: Matrix) -> Polynomial:
    """``det(B1 + t B2)`` as a polynomial in t (square pencils).

    The determinant has degree at most n, so it is recovered by Lagrange
    interpolation from n + 1 exact evaluations.
    """
    if not B1.is_square or B1.shape != B2.shape:
        raise ValueError("pencil determinant needs two square matrices of equal size")
    n = B1.nrows
    xs = [Fraction(k) for k in range(n + 1)]
    ys = [det(B1 + B2.scale(x)) for x in xs]
    result = Polynomial()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        basis = Polynomial((1,))
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial((-xj, 1))
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


def pencil_det_vanishes(B1: Matrix, B2: Matrix) -> bool:
    """True iff ``det(a B1 + b B2)`` is the zero polynomial in (a, b)."""
    # a homogeneous form vanishing on a != 0 vanishes identically
    return pencil_det(B1, B2).is_zero()


# ---------------------------------------------------------------------------
# chains


def chain_kernel(B1: Matrix, B2: Matrix, k: int) -> list[tuple[tuple[Fraction, ...], ...]]:
    """Basis of all chains ``(z_1..z_k)`` satisfying the chain relations."""
    if k < 1:
        raise ValueError("chain length must be positive")
    m, n = B1.shape
    zero = Fraction(0)
    rows = []

    def block_row(pairs):
        # pairs: list of (position, matrix, sign)
        for i in range(m):
            row = [zero] * (k * n)
            for pos, M, sign in pairs:
                for j in range(n):
                    if M[i, j]:
                        row[pos * n + j] += sign * M[i, j]
            rows.append(row)

    block_row([(0, B1, 1)])
    for j in range(k - 1):
        block_row([(j, B2, 1), (j + 1, B1, -1)])
    block_row([(k - 1, B2, 1)])
    system = Matrix._raw(rows, k * n)
    return [
        tuple(tuple(v[j * n:(j + 1) * n]) for j in range(k)) for v in kernel_basis(system)
    ]


def _check_chain(B1: Matrix, B2: Matrix, chain: Sequence[Sequence[Fraction]]) -> bool:
    k = len(chain)
    m = B1.nrows
    zero = (Fraction(0),) * m
    if B1.mul_vec(chain[0]) != zero or B2.mul_vec(chain[-1]) != zero:
        return False
    return all(B2.mul_vec(chain[j]) == B1.mul_vec(chain[j + 1]) for j in range(k - 1))


def kernel_chain(S: PencilSpace, y1: Sequence) -> list[tuple[Fraction, ...]]:
    """Close a chain started at ``y1`` with ``B1 y1 = 0``.

    Iterates ``B1 y_(k+1) = B2 y_k`` until ``B2 y_t`` falls into the span of
    ``B2 y_1, ..., B2 y_(t-1)``, say ``B2 y_t = sum a_i B2 y_i``, then corrects
    ``z_k = y_k - sum_{i=t-k+1}^{t-1} a_i y_(i-t+k)`` so that ``B2 z_t = 0``.
    """
    B1, B2 = S.B1, S.B2
    m, n = B1.shape
    y1 = tuple(Fraction(x) for x in y1)
    if len(y1) != n:
        raise ValueError(f"start vector must have length {n}")
    if not any(y1):
        raise ValueError("start vector must be nonzero")
    if any(B1.mul_vec(y1)):
        raise ValueError("start vector is not in the kernel of B1")
    if rank(Matrix.vstack([B1, B2])) < n:
        raise ChainError("B1 and B2 have a common kernel vector")
    ys = [y1]
    for _ in range(n + 1):
        images = [B2.mul_vec(y) for y in ys]
        last = images[-1]
        if len(ys) == 1:
            alpha = () if not any(last) else None
        else:
            alpha = solve(Matrix.from_columns(images[:-1]), last)
        if alpha is not None:
            return _close_chain(S, ys, alpha)
        nxt = solve(B1, last)
        if nxt is None:
            raise ChainError(
                f"B2 y_{len(ys)} is not in the range of B1; B1 is not of maximal rank "
                "or the chain hypotheses fail"
            )
        ys.append(nxt)
        if len(ys) > n:
            break
    raise ChainError(f"chain did not close within {n} steps")


def _close_chain(S: PencilSpace, ys, alpha) -> list[tuple[Fraction, ...]]:
    t = len(ys)
    n = len(ys[0])
    # 1-based: z_k = y_k - sum_{i=t-k+1}^{t-1} alpha_i y_{i-t+k}
    zs = [ys[0]]
    for k in range(2, t + 1):
        z = list(ys[k - 1])
        for i in range(t - k + 1, t):
            a = alpha[i - 1]
            if a:
                y = ys[i - t + k - 1]
                for j in range(n):
                    z[j] -= a * y[j]
        zs.append(tuple(z))
    if not _check_chain(S.B1, S.B2, zs):
        raise ChainError("corrected chain violates the chain relations")
    if rank(Matrix.from_columns(zs)) < t:
        raise ChainError("chain vectors are linearly dependent")
    return zs


# ---------------------------------------------------------------------------
# canonical form


def chain_block(k: int, alpha, beta) -> Matrix:
    """The (k-1) x k block with ``beta`` on the diagonal, ``alpha`` above it."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    zero = Fraction(0)
    return Matrix._raw(
        [
            [beta if j == i else alpha if j == i + 1 else zero for j in range(k)]
            for i in range(k - 1)
        ],
        k,
    )


@dataclass(frozen=True)
class CanonicalForm:
    block_sizes: tuple[int, ...]
    P: Matrix
    Q: Matrix
    residual_B1: Matrix
    residual_B2: Matrix
    residual_rank: int

    @property
    def residual_shape(self) -> tuple[int, int]:
        return self.residual_B1.shape

    def expected(self, alpha, beta) -> Matrix:
        blocks = [chain_block(k, alpha, beta) for k in self.block_sizes]
        blocks.append(self.residual_B1.scale(alpha) + self.residual_B2.scale(beta))
        return Matrix.block_diag(blocks)

    def transformed(self, S: PencilSpace, alpha, beta) -> Matrix:
        Qinv = inverse(self.Q)
        return Qinv @ S.member(alpha, beta) @ self.P

    def certify(self, S: PencilSpace, points=None, seed: int = 0) -> bool:
        """Check the block identity at (1,0), (0,1), (1,1) and a random point."""
        if points is None:
            rng = random.Random(seed)
            rnd = (Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                   Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
            points = [(1, 0), (0, 1), (1, 1), rnd]
        if det(self.P) == 0 or det(self.Q) == 0:
            return False
        return all(self.transformed(S, a, b) == self.expected(a, b) for a, b in points)


def _complete_basis(vectors: Sequence[Sequence[Fraction]], dim: int) -> Matrix:
    cols = [tuple(v) for v in vectors]
    if cols and rank(Matrix.from_columns(cols, nrows=dim)) < len(cols):
        raise ChainError("vectors to complete are linearly dependent")
    r = len(cols)
    for i in range(dim):
        if r == dim:
            break
        e = tuple(Fraction(int(i == j)) for j in range(dim))
        trial = cols + [e]
        if rank(Matrix.from_columns(trial, nrows=dim)) > r:
            cols = trial
            r += 1
    return Matrix.from_columns(cols, nrows=dim)


def _shortest_chain(R1: Matrix, R2: Matrix):
    ncols = R1.ncols
    for t in range(1, ncols + 1):
        ker = chain_kernel(R1, R2, t)
        if ker:
            if t == 1:
                raise PencilHypothesisError("ker", "the space has a common kernel vector")
            return ker[0]
    raise ChainError("no chain found although the generic rank is deficient")


def _split_system(L1, L2, X1, X2, N1, N2, t):
    """Solve ``Lk Zc - Yc Nk = -Xk`` (k = 1, 2) for constant Zc, Yc."""
    cp = N1.ncols
    rp = N1.nrows
    nz = t * cp
    nvars = nz + (t - 1) * rp
    zero = Fraction(0)
    rows, rhs = [], []
    for L, X, N in ((L1, X1, N1), (L2, X2, N2)):
        for p in range(t - 1):
            for q in range(cp):
                row = [zero] * nvars
                for s in range(t):
                    if L[p, s]:
                        row[s * cp + q] += L[p, s]
                for u in range(rp):
                    if N[u, q]:
                        row[nz + p * rp + u] -= N[u, q]
                rows.append(row)
                rhs.append(-X[p, q])
    if not rows:
        return Matrix.zeros(t, cp), Matrix.zeros(t - 1, rp)
    x = solve(Matrix._raw(rows, nvars), rhs)
    if x is None:
        raise ChainError("off-diagonal block cannot be cleared")
    Zc = Matrix._raw([x[s * cp:(s + 1) * cp] for s in range(t)], cp)
    Yc = Matrix._raw([x[nz + p * rp: nz + (p + 1) * rp] for p in range(t - 1)], rp)
    return Zc, Yc


def _unipotent(k: int, offdiag: Matrix) -> Matrix:
    """``[[I_k, offdiag], [0, I]]``."""
    rest = offdiag.ncols
    top = Matrix.hstack([Matrix.identity(k), offdiag]) if rest else Matrix.identity(k)
    if not rest:
        return top
    bottom = Matrix.hstack([Matrix.zeros(rest, k), Matrix.identity(rest)])
    return Matrix.vstack([top, bottom])


def _rows_cols(M: Matrix, r0, r1, c0, c1) -> Matrix:
    return M.submatrix(range(r0, r1), range(c0, c1))


def check_hypotheses(S: PencilSpace) -> int:
    """Validate the canonical-form hypotheses; return the rank defect r."""
    B1, B2 = S.B1, S.B2
    m, n = S.shape
    if rank(Matrix.vstack([B1, B2])) < n:
        raise PencilHypothesisError("ker", "the space has a common kernel vector")
    if rank(Matrix.hstack([B1, B2])) < m:
        raise PencilHypothesisError("range", "the space does not span the codomain")
    r = n - max_rank(S)
    if r < 1:
        raise PencilHypothesisError("rank", "the space has a member of full column rank")
    if r > min(m, n):
        raise PencilHypothesisError("rank", "rank defect exceeds min(m, n)")
    return r


def canonical_form(S: PencilSpace) -> CanonicalForm:
    r = check_hypotheses(S)
    m, n = S.shape
    P = Matrix.identity(n)
    Q = Matrix.identity(m)
    R1, R2 = S.B1, S.B2
    done_r = done_c = 0
    found: list[int] = []
    while R1.ncols and generic_rank(R1, R2) < R1.ncols:
        chain = _shortest_chain(R1, R2)
        t = len(chain)
        ws = [R2.mul_vec(z) for z in chain[:-1]]
        cres, rres = R1.ncols, R1.nrows
        Pr = _complete_basis(chain, cres)
        Qr = _complete_basis(ws, rres)
        Qr_inv = inverse(Qr)
        T1 = Qr_inv @ R1 @ Pr
        T2 = Qr_inv @ R2 @ Pr
        L1 = chain_block(t, 1, 0)
        L2 = chain_block(t, 0, 1)
        if (_rows_cols(T1, 0, t - 1, 0, t) != L1 or _rows_cols(T2, 0, t - 1, 0, t) != L2
                or not _rows_cols(T1, t - 1, rres, 0, t).is_zero()
                or not _rows_cols(T2, t - 1, rres, 0, t).is_zero()):
            raise ChainError("chain does not produce the expected block")
        X1 = _rows_cols(T1, 0, t - 1, t, cres)
        X2 = _rows_cols(T2, 0, t - 1, t, cres)
        N1 = _rows_cols(T1, t - 1, rres, t, cres)
        N2 = _rows_cols(T2, t - 1, rres, t, cres)
        Zc, Yc = _split_system(L1, L2, X1, X2, N1, N2, t)
        Pr = Pr @ _unipotent(t, Zc)
        Qr = Qr @ _unipotent(t - 1, Yc)
        P = P @ Matrix.block_diag([Matrix.identity(done_c), Pr])
        Q = Q @ Matrix.block_diag([Matrix.identity(done_r), Qr])
        done_c += t
        done_r += t - 1
        found.append(t)
        R1, R2 = N1, N2
    if len(found) != r:
        raise ChainError(f"found {len(found)} chain blocks, expected {r}")

    # reorder blocks by decreasing size
    col_starts, row_starts = [], []
    c = rr = 0
    for t in found:
        col_starts.append(c)
        row_starts.append(rr)
        c += t
        rr += t - 1
    order = sorted(range(len(found)), key=lambda k: -found[k])
    col_perm = [j for k in order for j in range(col_starts[k], col_starts[k] + found[k])]
    row_perm = [i for k in order for i in range(row_starts[k], row_starts[k] + found[k] - 1)]
    col_perm += list(range(done_c, n))
    row_perm += list(range(done_r, m))
    P = P.select_columns(col_perm)
    Q = Q.select_columns(row_perm)
    res_rank = generic_rank(R1, R2) if R1.nrows and R1.ncols else 0
    return CanonicalForm(
        block_sizes=tuple(found[k] for k in order),
        P=P,
        Q=Q,
        residual_B1=R1,
        residual_B2=R2,
        residual_rank=res_rank,
    )
