"""Left annihilators: elementary operators X with ``X . psi = 0``.

For a multiplication target ``M(A, B)`` an annihilator exists exactly when A
has a nonzero left kernel or B has a nonzero right kernel.

For a length-two target ``psi = M(A1, B1) + M(A2, B2)`` a one-term annihilator
``M(E, F)`` leaves the tensor ``E A1 (x) B1 F + E A2 (x) B2 F``, which vanishes
exactly in one of these situations:

* ``E A1 = E A2 = 0`` (common left kernel of the left coefficients);
* ``B1 F = B2 F = 0`` (common kernel of the right coefficients);
* ``E A1 = 0`` and ``B2 F = 0``, or ``E A2 = 0`` and ``B1 F = 0``;
* ``E (A2 - c A1) = 0`` and ``(B1 + c B2) F = 0`` for some scalar ``c != 0``.

The last case asks for a common root of ``det(A2 - c A1)`` and
``det(B1 + c B2)``.  When the two determinants share a factor without a
rational root the annihilator exists over the complex numbers only, and no
witness is produced.

Longer annihilators come in chains ``sum_i M(E_i, F_i)`` with::

    B1 F_1 = 0,  B2 F_j = B1 F_(j+1),  B2 F_k = 0,  E_j A2 + E_(j+1) A1 = 0

and are built from vector chains of the two pencils.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .elemop import ElemOp, compose, minimize
from .exactnum import (
    Matrix,
    Polynomial,
    char_polynomial,
    det,
    kernel_basis,
    left_kernel_basis,
    poly_gcd,
    rational_roots,
    solve,
)
from .pencil import chain_kernel

__all__ = [
    "ChainSolution",
    "AnnihilatorReport",
    "annihilator_of_mult",
    "mult_annihilator_search",
    "chain_annihilator",
    "upsilon_annihilator",
    "upsilon_chain",
    "upsilon_lambdas",
    "verify_zero",
    "verify_chain_structure",
    "chain_relations_hold",
    "annihilate",
    "length_two_split",
]

INF = "inf"


@dataclass(frozen=True)
class ChainSolution:
    E: tuple[Matrix, ...]
    F: tuple[Matrix, ...]
    # the two terms of the target the relations refer to
    split: tuple[tuple[Matrix, Matrix], tuple[Matrix, Matrix]]

    @property
    def k(self) -> int:
        return len(self.E)

    def as_elemop(self) -> ElemOp:
        n = self.E[0].nrows
        return ElemOp(n, tuple(zip(self.E, self.F)))

    def gammas(self) -> list[ElemOp]:
        """Multiplications ordered so that the first one kills the second term
        of the target and the last one kills the first term."""
        return [ElemOp.mult(E, F) for E, F in reversed(list(zip(self.E, self.F)))]


@dataclass(frozen=True)
class AnnihilatorReport:
    status: str  # none | multiplication | chain | exists_over_C_only
    witness: Optional[ElemOp] = None
    pencil_parameter: Union[Fraction, str, None] = None
    chain_length: Optional[int] = None
    chain: Optional[ChainSolution] = None


def verify_zero(X: ElemOp, psi: ElemOp) -> bool:
    """True iff ``X . psi`` is the zero operator."""
    return compose(X, psi).is_zero()


def _row_matrix(w: Sequence, n: int) -> Matrix:
    # rank-one matrix whose first row is w
    rows = [list(w)] + [[Fraction(0)] * n for _ in range(n - 1)]
    return Matrix(rows)


def _col_matrix(v: Sequence, n: int) -> Matrix:
    return Matrix.from_columns([tuple(v)] + [(Fraction(0),) * n] * (n - 1))


def annihilator_of_mult(A: Matrix, B: Matrix) -> Optional[ElemOp]:
    """A one-term left annihilator of ``M(A, B)``, or None if A, B are invertible."""
    if A.is_zero() or B.is_zero():
        raise ValueError("coefficients must be nonzero")
    n = A.nrows
    lk = left_kernel_basis(A)
    if lk:
        return ElemOp.mult(_row_matrix(lk[0], n), Matrix.identity(n))
    rk = kernel_basis(B)
    if rk:
        return ElemOp.mult(Matrix.identity(n), _col_matrix(rk[0], n))
    return None


def length_two_split(psi: ElemOp) -> tuple[tuple[Matrix, Matrix], tuple[Matrix, Matrix]]:
    """Two terms representing ``psi``; the stored ones if there are exactly two."""
    if psi.length() != 2:
        raise ValueError(f"target must have length 2, got {psi.length()}")
    terms = psi.terms if len(psi.terms) == 2 else minimize(psi).terms
    return terms[0], terms[1]


def _mult_report(E: Matrix, F: Matrix, psi: ElemOp, param=None) -> AnnihilatorReport:
    X = ElemOp.mult(E, F)
    if X.is_zero() or not verify_zero(X, psi):
        raise AssertionError("constructed multiplication annihilator failed verification")
    return AnnihilatorReport("multiplication", X, pencil_parameter=param)


def _pencil_det(M0: Matrix, M1: Matrix) -> Polynomial:
    """``det(M0 + c M1)`` as a polynomial in c."""
    from .pencil import pencil_det

    return pencil_det(M0, M1)


def mult_annihilator_search(psi: ElemOp) -> AnnihilatorReport:
    (A1, B1), (A2, B2) = length_two_split(psi)
    n = psi.n
    I = Matrix.identity(n)

    common_left = left_kernel_basis(Matrix.hstack([A1, A2]))
    if common_left:
        return _mult_report(_row_matrix(common_left[0], n), I, psi)
    common_right = kernel_basis(Matrix.vstack([B1, B2]))
    if common_right:
        return _mult_report(I, _col_matrix(common_right[0], n), psi)

    # boundary members: c = infinity (A1, B2) and c = 0 (A2, B1)
    for (Aa, Bb, param) in ((A1, B2, INF), (A2, B1, Fraction(0))):
        lk = left_kernel_basis(Aa)
        rk = kernel_basis(Bb)
        if lk and rk:
            return _mult_report(_row_matrix(lk[0], n), _col_matrix(rk[0], n), psi, param)

    p = _pencil_det(A2, -A1)  # det(A2 - c A1)
    q = _pencil_det(B1, B2)  # det(B1 + c B2)
    if p.is_zero() and q.is_zero():
        candidates = [Fraction(1)]
        g = None
    else:
        g = poly_gcd(p, q)
        candidates = sorted(set(rational_roots(g))) if g.degree > 0 else []
    for c in candidates:
        if c == 0:
            continue
        lk = left_kernel_basis(A2 - A1.scale(c))
        rk = kernel_basis(B1 + B2.scale(c))
        if lk and rk:
            return _mult_report(_row_matrix(lk[0], n), _col_matrix(rk[0], n), psi, c)
    if g is not None and g.degree > 0:
        # strip the root at zero, which the boundary case already settled
        h = g
        while h.degree > 0 and h(0) == 0:
            h = h // Polynomial((0, 1))
        if h.degree > 0:
            return AnnihilatorReport("exists_over_C_only")
    return AnnihilatorReport("none")


def _row_chains(A1: Matrix, A2: Matrix, k: int):
    """Basis of row-vector tuples ``(e_1..e_k)`` with ``e_j A2 + e_(j+1) A1 = 0``."""
    n = A1.nrows
    zero = Fraction(0)
    rows = []
    # transpose: A2^T e_j + A1^T e_(j+1) = 0
    for j in range(k - 1):
        for i in range(n):
            row = [zero] * (k * n)
            for t in range(n):
                row[j * n + t] += A2[t, i]
                row[(j + 1) * n + t] += A1[t, i]
            rows.append(row)
    system = Matrix._raw(rows, k * n)
    return [tuple(tuple(v[j * n:(j + 1) * n]) for j in range(k)) for v in kernel_basis(system)]


def chain_annihilator(psi: ElemOp, k: int) -> Optional[ChainSolution]:
    """A chain annihilator with k terms, or None if the chain systems only
    produce the zero operator."""
    if k < 2:
        raise ValueError("chain length must be at least 2")
    split = length_two_split(psi)
    (A1, B1), (A2, B2) = split
    n = psi.n
    fchains = chain_kernel(B1, B2, k)
    if not fchains:
        return None
    echains = _row_chains(A1, A2, k)
    for ech in echains:
        for fch in fchains:
            # sum_i g_i (x) f_i must be nonzero for the assembled operator to be
            if not any(
                sum((ech[i][a] * fch[i][b] for i in range(k)), Fraction(0))
                for a in range(n)
                for b in range(n)
            ):
                continue
            E = tuple(_row_matrix(e, n) for e in ech)
            F = tuple(_col_matrix(f, n) for f in fch)
            sol = ChainSolution(E, F, split)
            X = sol.as_elemop()
            if X.is_zero() or not verify_zero(X, psi):
                raise AssertionError("chain annihilator failed verification")
            return sol
    return None


def chain_relations_hold(sol: ChainSolution) -> bool:
    """Coefficient relations of a chain solution with both boundaries on F."""
    (A1, B1), (A2, B2) = sol.split
    E, F = sol.E, sol.F
    if not (B1 @ F[0]).is_zero() or not (B2 @ F[-1]).is_zero():
        return False
    return all(
        B2 @ F[j] == B1 @ F[j + 1] and E[j] @ A2 == -(E[j + 1] @ A1)
        for j in range(sol.k - 1)
    )


def verify_chain_structure(phi: ElemOp, psi: ElemOp, sol: ChainSolution) -> bool:
    """Check the multiplication relations of a chain solution term by term.

    With ``M1, M2`` the two terms of the split and ``G_1..G_k`` the ordered
    multiplications of the solution: ``G_1 M2 = G_k M1 = 0`` and
    ``G_j M1 + G_(j+1) M2 = 0``; the pieces must reassemble to phi and psi.
    """
    (A1, B1), (A2, B2) = sol.split
    if ElemOp(psi.n, sol.split) != psi or sol.as_elemop() != phi:
        return False
    M1, M2 = ElemOp.mult(A1, B1), ElemOp.mult(A2, B2)
    G = sol.gammas()
    if not compose(G[0], M2).is_zero() or not compose(G[-1], M1).is_zero():
        return False
    for j in range(sol.k - 1):
        if not (compose(G[j], M1) + compose(G[j + 1], M2)).is_zero():
            return False
    return verify_zero(phi, psi)


# ---------------------------------------------------------------------------
# identity plus a multiplication


def upsilon_lambdas(A: Matrix, B: Matrix) -> list[Fraction]:
    """Nonzero rational eigenvalues l of B with -1/l a rational eigenvalue of A."""
    ra = set(rational_roots(char_polynomial(A)))
    rb = sorted(set(rational_roots(char_polynomial(B))))
    return [lam for lam in rb if lam != 0 and -1 / lam in ra]


def _mat_power(M: Matrix, k: int) -> Matrix:
    return M ** k if k else Matrix.identity(M.nrows)


def upsilon_chain(A: Matrix, B: Matrix, lam, k: int) -> Optional[ChainSolution]:
    """Chain solution for ``X (I + M(A, B)) = 0`` built from Jordan chains.

    The target is split as ``M(I + lam A, I) + M(A, B - lam I)``.  F-side:
    ``f_k`` with ``(B - lam)^k f_k = 0 != (B - lam)^(k-1) f_k``, then
    ``f_(j-1) = (B - lam) f_j``.  E-side: ``w_1 (I + lam A)^k = 0`` with
    ``w_1 (I + lam A)^(k-1) != 0``, then ``w_(j+1) A = -w_j (I + lam A)``
    solved inside the generalized eigenspace where A is invertible.
    """
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    if k < 1:
        raise ValueError("chain length must be positive")
    n = A.nrows
    I = Matrix.identity(n)
    N_B = B - I.scale(lam)
    N_A = I + A.scale(lam)

    f_top = None
    Pk1 = _mat_power(N_B, k - 1)
    for v in kernel_basis(_mat_power(N_B, k)):
        if any(Pk1.mul_vec(v)):
            f_top = v
            break
    if f_top is None:
        return None
    fs = [f_top]
    for _ in range(k - 1):
        fs.append(N_B.mul_vec(fs[-1]))
    fs.reverse()  # fs[0] = f_1 with (B - lam) f_1 = 0

    w1 = None
    Qk1 = _mat_power(N_A, k - 1)
    for w in left_kernel_basis(_mat_power(N_A, k)):
        if any(Qk1.vec_mul(w)):
            w1 = w
            break
    if w1 is None:
        return None
    # generalized left eigenspace of A at -1/lam is the left kernel of N_A^n
    Nn = _mat_power(N_A, n)
    ws = [w1]
    for _ in range(k - 1):
        rhs = [-x for x in N_A.vec_mul(ws[-1])]
        # unknown row w: w A = rhs and w Nn = 0, i.e. [A Nn]^T w^T = [rhs 0]
        system = Matrix.hstack([A, Nn]).T
        w = solve(system, rhs + [Fraction(0)] * n)
        if w is None:
            return None
        ws.append(w)

    E = tuple(_row_matrix(w, n) for w in ws)
    F = tuple(_col_matrix(f, n) for f in fs)
    # boundaries: (B - lam) F_1 = 0 and E_k (I + lam A) = 0
    return ChainSolution(E, F, ((A, N_B), (N_A, I)))


def upsilon_annihilator(A: Matrix, B: Matrix, lam, k: int) -> Optional[ElemOp]:
    """Annihilator of ``I + M(A, B)`` of length k, or None."""
    n = A.nrows
    target = ElemOp.upsilon(A, B)
    if target.length() != 2:
        raise ValueError("I + M(A, B) must have length 2")
    sol = upsilon_chain(A, B, lam, k)
    if sol is None:
        return None
    X = sol.as_elemop()
    if X.is_zero() or not verify_zero(X, target):
        raise AssertionError("identity-plus-multiplication annihilator failed verification")
    return X


def annihilate(psi: ElemOp, max_chain: Optional[int] = None) -> AnnihilatorReport:
    """Search for a left annihilator of a target of length 1 or 2."""
    ell = psi.length()
    if ell == 0:
        raise ValueError("target is the zero operator")
    if ell == 1:
        (A, B), = minimize(psi).terms
        X = annihilator_of_mult(A, B)
        if X is None:
            return AnnihilatorReport("none")
        return AnnihilatorReport("multiplication", X)
    if ell > 2:
        raise ValueError(f"targets of length {ell} are not supported")
    report = mult_annihilator_search(psi)
    if report.status == "multiplication":
        return report
    if max_chain is None:
        max_chain = psi.n ** 2
    for k in range(2, max_chain + 1):
        sol = chain_annihilator(psi, k)
        if sol is not None:
            return AnnihilatorReport("chain", sol.as_elemop(), chain_length=k, chain=sol)
    return report
