"""Elementary operators ``T -> sum_i A_i T B_i`` on n x n rational matrices.

An operator is stored as an ordered list of coefficient pairs.  Its meaning is
captured by the realignment ``sum_i vec(A_i) vec(B_i)^T`` (column-stacking
``vec``), which is a faithful encoding of the tensor ``sum_i A_i (x) B_i``:
two representations define the same operator exactly when their
realignments agree, and the length of the operator is the rank of the
realignment.

With column stacking, ``vec(A X B) = (B^T kron A) vec(X)``; the operator
matrix of a representation is therefore ``sum_i B_i^T kron A_i``.

A *minimal tensor* is read as follows: ``x`` in a subspace ``V`` is minimal
when no nonzero ``y`` in ``V`` splits it additively in rank,
``r(x) = r(y) + r(x - y)``, unless ``y = x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .exactnum import Matrix, rank, rref, solve, to_fraction

__all__ = [
    "ElemOp",
    "apply",
    "realign",
    "length",
    "minimize",
    "compose",
    "as_operator_matrix",
    "from_operator_matrix",
    "from_realignment",
    "left_span",
    "right_span",
    "rerepresent",
    "dim_bound_check",
    "span_basis",
    "span_dim",
    "is_generalized_derivation",
]

Term = tuple[Matrix, Matrix]


@dataclass(frozen=True, eq=False)
class ElemOp:
    n: int
    terms: tuple[Term, ...] = field(default=())

    def __post_init__(self):
        terms = tuple((A, B) for A, B in self.terms)
        for A, B in terms:
            if A.shape != (self.n, self.n) or B.shape != (self.n, self.n):
                raise ValueError(
                    f"coefficients must be {self.n}x{self.n}, got {A.shape} and {B.shape}"
                )
        object.__setattr__(self, "terms", terms)

    # -- named constructors ---------------------------------------------------

    @classmethod
    def mult(cls, A: Matrix, B: Matrix) -> "ElemOp":
        """Two-sided multiplication ``T -> A T B``."""
        return cls(A.nrows, ((A, B),))

    @classmethod
    def left(cls, A: Matrix) -> "ElemOp":
        return cls.mult(A, Matrix.identity(A.nrows))

    @classmethod
    def right(cls, B: Matrix) -> "ElemOp":
        return cls.mult(Matrix.identity(B.nrows), B)

    @classmethod
    def identity(cls, n: int) -> "ElemOp":
        I = Matrix.identity(n)
        return cls(n, ((I, I),))

    @classmethod
    def zero(cls, n: int) -> "ElemOp":
        return cls(n, ())

    @classmethod
    def upsilon(cls, A: Matrix, B: Matrix) -> "ElemOp":
        """Identity plus ``T -> A T B``."""
        I = Matrix.identity(A.nrows)
        return cls(A.nrows, ((I, I), (A, B)))

    @classmethod
    def derivation(cls, A: Matrix, B: Matrix) -> "ElemOp":
        """Generalized derivation ``T -> A T - T B``."""
        I = Matrix.identity(A.nrows)
        return cls(A.nrows, ((A, I), (I, -B)))

    # -- algebra ----------------------------------------------------------------

    def _check_n(self, other: "ElemOp"):
        if self.n != other.n:
            raise ValueError(f"operators act on M_{self.n} and M_{other.n}")

    def __add__(self, other: "ElemOp") -> "ElemOp":
        if not isinstance(other, ElemOp):
            return NotImplemented
        self._check_n(other)
        return ElemOp(self.n, self.terms + other.terms)

    def __neg__(self) -> "ElemOp":
        return ElemOp(self.n, tuple((-A, B) for A, B in self.terms))

    def __sub__(self, other: "ElemOp") -> "ElemOp":
        if not isinstance(other, ElemOp):
            return NotImplemented
        return self + (-other)

    def scaled(self, c) -> "ElemOp":
        c = to_fraction(c)
        return ElemOp(self.n, tuple((A.scale(c), B) for A, B in self.terms))

    def __matmul__(self, other: "ElemOp") -> "ElemOp":
        return compose(self, other)

    def __call__(self, T: Matrix) -> Matrix:
        return apply(self, T)

    # -- semantics ------------------------------------------------------------------

    @cached_property
    def realignment(self) -> Matrix:
        return _realign(self.n, self.terms)

    def length(self) -> int:
        return length(self)

    def is_zero(self) -> bool:
        return self.realignment.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElemOp):
            return NotImplemented
        return self.n == other.n and self.realignment == other.realignment

    def __hash__(self) -> int:
        return hash((self.n, self.realignment))

    def __repr__(self) -> str:
        return f"ElemOp(n={self.n}, terms={len(self.terms)})"


def _realign(n: int, terms: Sequence[Term]) -> Matrix:
    N = n * n
    acc = [[Fraction(0)] * N for _ in range(N)]
    for A, B in terms:
        a = A.vec()
        b = B.vec()
        bnz = [(q, y) for q, y in enumerate(b) if y]
        for p, x in enumerate(a):
            if not x:
                continue
            row = acc[p]
            for q, y in bnz:
                row[q] += x * y
    return Matrix._raw(acc, N)


def apply(phi: ElemOp, T: Matrix) -> Matrix:
    """``sum_i A_i T B_i``."""
    if T.shape != (phi.n, phi.n):
        raise ValueError(f"operand must be {phi.n}x{phi.n}, got {T.shape}")
    out = Matrix.zeros(phi.n)
    for A, B in phi.terms:
        out = out + A @ T @ B
    return out


def realign(phi: ElemOp) -> Matrix:
    """The n^2 x n^2 matrix ``sum_i vec(A_i) vec(B_i)^T``."""
    return phi.realignment


def length(phi: ElemOp) -> int:
    """Minimum number of multiplication terms needed to represent ``phi``."""
    return rank(phi.realignment)


def from_realignment(R: Matrix, n: int) -> ElemOp:
    """Minimal representation read off a rank factorization of ``R``.

    ``R = U V^T`` with ``U`` the pivot columns of ``R`` and ``V^T`` the nonzero
    rows of its reduced echelon form; terms are ordered by pivot index.
    """
    if R.shape != (n * n, n * n):
        raise ValueError("realignment must be n^2 x n^2")
    red, pivots, _ = rref(R)
    terms = []
    for k, p in enumerate(pivots):
        A = Matrix.unvec(R.col(p), n)
        B = Matrix.unvec(red.row(k), n)
        terms.append((A, B))
    return ElemOp(n, tuple(terms))


def minimize(phi: ElemOp) -> ElemOp:
    """Equal operator with exactly ``length(phi)`` terms."""
    return from_realignment(phi.realignment, phi.n)


def compose(phi: ElemOp, psi: ElemOp) -> ElemOp:
    """``phi`` after ``psi``; term ``(A_i C_j, D_j B_i)`` for every pair.

    The product is not minimized.
    """
    phi._check_n(psi)
    return ElemOp(
        phi.n,
        tuple((A @ C, D @ B) for A, B in phi.terms for C, D in psi.terms),
    )


def as_operator_matrix(phi: ElemOp) -> Matrix:
    """Matrix ``K`` with ``K vec(T) = vec(phi(T))``, i.e. ``sum_i B_i^T kron A_i``."""
    n = phi.n
    N = n * n
    acc = [[Fraction(0)] * N for _ in range(N)]
    for A, B in phi.terms:
        for s in range(n):
            for q in range(n):
                b = B[s, q]
                if not b:
                    continue
                for p in range(n):
                    row = acc[q * n + p]
                    for r in range(n):
                        a = A[p, r]
                        if a:
                            row[s * n + r] += a * b
    return Matrix._raw(acc, N)


def _operator_to_realignment(K: Matrix, n: int) -> Matrix:
    # K[p + q n][r + s n] = sum_i A_i[p, r] B_i[s, q] = R[p + r n][s + q n]
    N = n * n
    rows = [[None] * N for _ in range(N)]
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    rows[p + r * n][s + q * n] = K[p + q * n, r + s * n]
    return Matrix._raw(rows, N)


def from_operator_matrix(K: Matrix, n: int) -> ElemOp:
    """Minimal elementary representation of an arbitrary linear map on M_n."""
    if K.shape != (n * n, n * n):
        raise ValueError("operator matrix must be n^2 x n^2")
    return from_realignment(_operator_to_realignment(K, n), n)


def span_basis(mats: Sequence[Matrix]) -> list[Matrix]:
    """A maximal independent subfamily of ``mats`` (earliest members kept)."""
    mats = list(mats)
    if not mats:
        return []
    cols = Matrix.from_columns([M.vec() for M in mats])
    _, pivots, _ = rref(cols)
    return [mats[p] for p in pivots]


def span_dim(mats: Sequence[Matrix]) -> int:
    mats = list(mats)
    if not mats:
        return 0
    return rank(Matrix.from_columns([M.vec() for M in mats]))


def left_span(phi: ElemOp) -> list[Matrix]:
    return span_basis([A for A, _ in phi.terms])


def right_span(phi: ElemOp) -> list[Matrix]:
    return span_basis([B for _, B in phi.terms])


def rerepresent(phi: ElemOp, spanning: Sequence[Matrix]) -> list[Matrix]:
    """Right coefficients ``D_j`` with ``phi = sum_j M(C_j, D_j)``.

    Each left coefficient ``A_i`` of a minimal representation is expanded as
    ``A_i = sum_j a_ji C_j``; then ``D_j = sum_i a_ji B_i``.
    """
    spanning = list(spanning)
    n = phi.n
    if any(C.shape != (n, n) for C in spanning):
        raise ValueError(f"spanning matrices must be {n}x{n}")
    base = minimize(phi)
    if not base.terms:
        return [Matrix.zeros(n) for _ in spanning]
    if not spanning:
        raise ValueError("an empty family does not span the left span of a nonzero operator")
    K = Matrix.from_columns([C.vec() for C in spanning])
    D = [Matrix.zeros(n) for _ in spanning]
    for A, B in base.terms:
        alpha = solve(K, A.vec())
        if alpha is None:
            raise ValueError("the given matrices do not span the left span of the operator")
        for j, a in enumerate(alpha):
            if a:
                D[j] = D[j] + B.scale(a)
    return D


def dim_bound_check(terms: Sequence[Term]) -> bool:
    """If ``sum A_i (x) B_i = 0`` then ``dim span{A_i} + dim span{B_i} <= #terms``.

    Returns False only when the tensor vanishes and the inequality fails.
    """
    terms = list(terms)
    if not terms:
        return True
    n = terms[0][0].nrows
    if not _realign(n, terms).is_zero():
        return True
    return span_dim([A for A, _ in terms]) + span_dim([B for _, B in terms]) <= len(terms)


def is_generalized_derivation(phi: ElemOp) -> Optional[tuple[Matrix, Matrix]]:
    """``(C, D)`` with ``phi = L_C - R_D`` if such a pair exists, else None."""
    n = phi.n
    N = n * n
    e = Matrix.identity(n).vec()
    # unknowns: vec(C) (N entries) then vec(D) (N entries)
    # realign(L_C - R_D)[p][q] = C_p e_q - e_p D_q
    rows, rhs = [], []
    R = phi.realignment
    for p in range(N):
        for q in range(N):
            row = [Fraction(0)] * (2 * N)
            if e[q]:
                row[p] = e[q]
            if e[p]:
                row[N + q] = -e[p]
            rows.append(row)
            rhs.append(R[p, q])
    x = solve(Matrix._raw(rows, 2 * N), rhs)
    if x is None:
        return None
    return Matrix.unvec(x[:N], n), Matrix.unvec(x[N:], n)
