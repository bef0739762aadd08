"""Inverses of short elementary operators, with certified lengths.

Every length reported here is the rank of the inverse's realignment; the
formulas that build an inverse are never trusted for its length.

Generalized derivations ``T -> A T - T B``: when the characteristic
polynomials of A and B are coprime, the operator ``D'`` assembled from the
minimal polynomial ``m_B = z^d + a_(d-1) z^(d-1) + ... + a_0`` as::

    D' = sum_{i=1}^{d-1} M(sum_{j=i+1}^{d} a_j A^(j-i), B^(i-1)) + R(sum_{i=1}^{d} a_i B^(i-1))

satisfies ``D' T = T D' = L(m_B(A))`` and ``m_B(A)`` is invertible, so the
inverse is ``L(m_B(A)^-1) D'``, of length ``d``.  Transposing swaps the roles
of A and B, which gives the inverse of length ``deg m_A`` as well.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .annihil import length_two_split
from .elemop import (
    ElemOp,
    as_operator_matrix,
    compose,
    from_operator_matrix,
    is_generalized_derivation,
    minimize,
    span_dim,
)
from .exactnum import (
    Matrix,
    Polynomial,
    char_polynomial,
    det,
    inverse,
    minimal_polynomial,
    poly_gcd,
    rank,
    rational_roots,
    small_rationals,
)
from .pencil import generic_rank, pencil_det

__all__ = [
    "InverseReport",
    "Decomposition2",
    "is_invertible",
    "inverse_elemop",
    "mult_one_sided",
    "derivation_aux",
    "derivation_inverse",
    "upsilon_inverse",
    "derivation_inverse_is_derivation",
    "general_length2_inverse_length",
    "sum_of_invertibles",
    "biorthogonal_decomposition",
    "biorthogonal_relations",
    "classify_inverse",
    "is_two_sided_inverse",
]


@dataclass(frozen=True)
class InverseReport:
    invertible: bool
    inverse: Optional[ElemOp] = None
    inverse_length: Optional[int] = None
    predicted_length: Optional[int] = None
    provenance: Optional[str] = None
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Decomposition2:
    M1: tuple[Matrix, Matrix]
    M2: tuple[Matrix, Matrix]
    kind: str  # two_invertible | biorthogonal
    G: Optional[Matrix] = None
    # paired split of the inverse, for the biorthogonal kind
    inverse_terms: Optional[tuple[tuple[Matrix, Matrix], tuple[Matrix, Matrix]]] = None


def is_two_sided_inverse(phi: ElemOp, psi: ElemOp) -> bool:
    ident = ElemOp.identity(phi.n)
    return compose(phi, psi) == ident and compose(psi, phi) == ident


def is_invertible(phi: ElemOp) -> bool:
    return det(as_operator_matrix(phi)) != 0


def inverse_elemop(phi: ElemOp) -> InverseReport:
    """Inverse by inverting the operator matrix and reading off a minimal
    representation."""
    Kinv = inverse(as_operator_matrix(phi))
    if Kinv is None:
        return InverseReport(False)
    inv = from_operator_matrix(Kinv, phi.n)
    if not is_two_sided_inverse(phi, inv):
        raise AssertionError("operator-matrix inverse failed verification")
    return InverseReport(True, inv, inv.length(), provenance="operator matrix")


def mult_one_sided(A: Matrix, B: Matrix) -> Optional[ElemOp]:
    """Left inverse of ``M(A, B)``; on M_n it exists only for invertible A, B
    and is then the one-term operator ``M(A^-1, B^-1)``."""
    Ai, Bi = inverse(A), inverse(B)
    if Ai is None or Bi is None:
        return None
    return ElemOp.mult(Ai, Bi)


def derivation_aux(A: Matrix, B: Matrix) -> ElemOp:
    """The operator ``D'`` with ``D' T(A,B) = T(A,B) D' = L(m_B(A))``."""
    m = minimal_polynomial(B)
    d = m.degree
    if d < 2:
        raise ValueError("B must not be a scalar matrix")
    a = list(m.coeffs)  # a[d] == 1
    n = A.nrows
    I = Matrix.identity(n)
    Apow = [I]
    Bpow = [I]
    for _ in range(d):
        Apow.append(Apow[-1] @ A)
        Bpow.append(Bpow[-1] @ B)
    terms = []
    for i in range(1, d):
        left = Matrix.zeros(n)
        for j in range(i + 1, d + 1):
            if a[j]:
                left = left + Apow[j - i].scale(a[j])
        terms.append((left, Bpow[i - 1]))
    right = Matrix.zeros(n)
    for i in range(1, d + 1):
        if a[i]:
            right = right + Bpow[i - 1].scale(a[i])
    terms.append((I, right))
    return ElemOp(n, tuple(terms))


def _transpose_op(phi: ElemOp) -> ElemOp:
    # T -> sum A T B  becomes  T -> sum B^T T A^T
    return ElemOp(phi.n, tuple((B.T, A.T) for A, B in phi.terms))


def _derivation_inverse_b_side(A: Matrix, B: Matrix) -> ElemOp:
    mB = minimal_polynomial(B)
    core = inverse(mB.at_matrix(A))
    if core is None:
        raise ValueError("m_B(A) is singular")
    return compose(ElemOp.left(core), derivation_aux(A, B))


def derivation_inverse(A: Matrix, B: Matrix) -> InverseReport:
    """Inverse of ``T -> A T - T B`` built from the minimal polynomial of
    whichever of A, B has smaller degree."""
    T = ElemOp.derivation(A, B)
    # a shared eigenvalue gives a kernel vector whatever the length
    g = poly_gcd(char_polynomial(A), char_polynomial(B))
    if g.degree > 0:
        return InverseReport(False, details={"common_factor": str(g)})
    if T.length() != 2:
        raise ValueError("the generalized derivation must have length 2")
    dA = minimal_polynomial(A).degree
    dB = minimal_polynomial(B).degree
    if dB <= dA:
        inv = _derivation_inverse_b_side(A, B)
        side = "B"
    else:
        # (A X - X B)^T = -(B^T X^T - X^T A^T)
        inv = -_transpose_op(_derivation_inverse_b_side(B.T, A.T))
        side = "A"
    inv = minimize(inv)
    if not is_two_sided_inverse(T, inv):
        raise AssertionError("derivation inverse failed verification")
    if inverse_elemop(T).inverse != inv:
        raise AssertionError("inverse disagrees with the operator-matrix inverse")
    return InverseReport(
        True,
        inv,
        inv.length(),
        predicted_length=min(dA, dB),
        provenance="min(deg A, deg B)",
        details={"side": side, "deg_A": dA, "deg_B": dB},
    )


def upsilon_inverse(A: Matrix, B: Matrix) -> InverseReport:
    """Inverse of ``I + M(A, B)``.

    With ``l`` such that ``I + l A`` and ``B - l I`` are invertible,
    ``M((I + l A)^-1, (B - l I)^-1)`` turns the operator into the generalized
    derivation ``T -> C T + T D`` with ``C = (I + l A)^-1 A``,
    ``D = (B - l I)^-1``; the inverse is that derivation's inverse followed by
    the same multiplication.
    """
    U = ElemOp.upsilon(A, B)
    if U.length() != 2:
        raise ValueError("I + M(A, B) must have length 2")
    if not is_invertible(U):
        return InverseReport(False)
    n = A.nrows
    I = Matrix.identity(n)
    for lam in small_rationals():
        left = inverse(I + A.scale(lam))
        right = inverse(B - I.scale(lam))
        if left is not None and right is not None:
            break
    C = left @ A
    D = right
    rep = derivation_inverse(C, -D)
    if not rep.invertible:
        raise AssertionError("reduced derivation is singular although the operator is invertible")
    inv = minimize(compose(rep.inverse, ElemOp.mult(left, right)))
    if not is_two_sided_inverse(U, inv):
        raise AssertionError("identity-plus-multiplication inverse failed verification")
    dA = minimal_polynomial(A).degree
    dB = minimal_polynomial(B).degree
    return InverseReport(
        True,
        inv,
        inv.length(),
        predicted_length=min(dA, dB),
        provenance="min(deg A, deg B)",
        details={"lambda": lam, "deg_A": dA, "deg_B": dB},
    )


def _quadratic_center(M: Matrix) -> Optional[Fraction]:
    """The l with ``(M - l I)^2`` scalar, if M has a degree-2 minimal polynomial."""
    m = minimal_polynomial(M)
    if m.degree != 2:
        return None
    return -m.coeffs[1] / 2


def derivation_inverse_is_derivation(A: Matrix, B: Matrix):
    """``(l, alpha, beta, C, D)`` when the inverse of ``T -> A T - T B`` is the
    generalized derivation ``T -> C T - T D``; None otherwise.

    Here ``(A - l)^2 = alpha I``, ``(B - l)^2 = beta I`` and
    ``C = (A - l)/(alpha - beta)``, ``D = -(B - l)/(alpha - beta)``.
    """
    T = ElemOp.derivation(A, B)
    if T.length() != 2:
        raise ValueError("the generalized derivation must have length 2")
    if not is_invertible(T):
        raise ValueError("the generalized derivation must be invertible")
    lam = _quadratic_center(A)
    if lam is None or _quadratic_center(B) != lam:
        return None
    n = A.nrows
    I = Matrix.identity(n)
    A0 = A - I.scale(lam)
    B0 = B - I.scale(lam)
    alpha = (A0 @ A0)[0, 0]
    beta = (B0 @ B0)[0, 0]
    if alpha == beta:
        raise AssertionError("equal squares contradict invertibility")
    C = A0.scale(1 / (alpha - beta))
    D = -B0.scale(1 / (alpha - beta))
    if not is_two_sided_inverse(T, ElemOp.derivation(C, D)):
        raise AssertionError("derivation inverse formula failed verification")
    return lam, alpha, beta, C, D


def general_length2_inverse_length(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> InverseReport:
    """Inverse of ``M(A, B) + M(C, D)`` for invertible B and C.

    Uses ``M(A, B) + M(C, D) = M(C, B) . (T -> X T - T Y)`` with
    ``X = C^-1 A`` and ``Y = -D B^-1``.
    """
    Bi, Ci = inverse(B), inverse(C)
    if Bi is None or Ci is None:
        raise ValueError("B and C must be invertible")
    delta = ElemOp(A.nrows, ((A, B), (C, D)))
    if delta.length() != 2:
        raise ValueError("the operator must have length 2")
    X = Ci @ A
    Y = -(D @ Bi)
    pred = min(minimal_polynomial(X).degree, minimal_polynomial(Y).degree)
    rep = derivation_inverse(X, Y)
    if not rep.invertible:
        return InverseReport(False, predicted_length=pred, provenance="min(deg C^-1 A, deg D B^-1)")
    inv = minimize(compose(rep.inverse, ElemOp.mult(Ci, Bi)))
    if not is_two_sided_inverse(delta, inv):
        raise AssertionError("length-two inverse failed verification")
    check = inverse_elemop(delta)
    if check.inverse != inv:
        raise AssertionError("inverse disagrees with the operator-matrix inverse")
    return InverseReport(
        True, inv, inv.length(), predicted_length=pred, provenance="min(deg C^-1 A, deg D B^-1)"
    )


# ---------------------------------------------------------------------------
# two-term decompositions


def _orbit_terms(split, G: Matrix):
    """Terms after the coefficient change ``A' = G A``, ``B' = G^-T B``."""
    (A1, B1), (A2, B2) = split
    H = inverse(G).T
    A1p = A1.scale(G[0, 0]) + A2.scale(G[0, 1])
    A2p = A1.scale(G[1, 0]) + A2.scale(G[1, 1])
    B1p = B1.scale(H[0, 0]) + B2.scale(H[0, 1])
    B2p = B1.scale(H[1, 0]) + B2.scale(H[1, 1])
    return (A1p, B1p), (A2p, B2p)


def _structured_Gs(limit: int = 12):
    vals = []
    for v in small_rationals():
        vals.append(v)
        if len(vals) == limit:
            break
    for mu in vals:
        for nu in vals:
            # [[1, mu], [0, 1]] [[1, 0], [nu, 1]]
            yield Matrix([[1 + mu * nu, mu], [nu, 1]])


def sum_of_invertibles(delta: ElemOp, seed: int = 0, trials: int = 64) -> Optional[Decomposition2]:
    """Rewrite a length-two operator as a sum of two invertible multiplications.

    All two-term representations of the operator are ``G``-transforms of one
    another; the search walks structured and seeded random ``G``.  None means
    no decomposition was found, which is certain when a coefficient pencil
    has identically vanishing determinant.
    """
    split = length_two_split(delta)
    (A1, B1), (A2, B2) = split
    if pencil_det(A1, A2).is_zero() or pencil_det(B1, B2).is_zero():
        return None
    rng = random.Random(seed)

    def randoms():
        for _ in range(trials):
            G = Matrix([[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(2)] for _ in range(2)])
            if det(G) != 0:
                yield G

    import itertools

    for G in itertools.chain(_structured_Gs(), randoms()):
        (P, Q), (R, S) = terms = _orbit_terms(split, G)
        if det(P) and det(Q) and det(R) and det(S):
            if ElemOp(delta.n, terms) != delta:
                raise AssertionError("coefficient change altered the operator")
            return Decomposition2((P, Q), (R, S), "two_invertible", G=G)
    return None


def _projective_roots(X1: Matrix, X2: Matrix) -> list[tuple[Fraction, Fraction]]:
    """Rational points (x : y) with ``det(x X1 + y X2) = 0``."""
    p = pencil_det(X1, X2)
    if p.is_zero():
        return []
    pts = [(Fraction(1), t) for t in sorted(set(rational_roots(p)))]
    if det(X2) == 0:
        pts.append((Fraction(0), Fraction(1)))
    return pts


def _normalize(pt):
    x, y = pt
    s = x if x else y
    return (x / s, y / s)


def _split_candidates(split):
    (A1, B1), (A2, B2) = split
    cands = [_normalize(p) for p in _projective_roots(A1, A2)]
    # a right coefficient at (b1 : b2) arises from the row (b2 : -b1)
    cands += [_normalize((b2, -b1)) for b1, b2 in _projective_roots(B1, B2)]
    seen = []
    for c in cands:
        if c not in seen:
            seen.append(c)
    out = []
    for r1 in seen:
        for r2 in seen:
            G = Matrix([list(r1), list(r2)])
            if det(G) != 0:
                out.append(_orbit_terms(split, G))
    return out


def biorthogonal_relations(delta: ElemOp, inv: ElemOp, m_terms, g_terms) -> dict:
    """The eight relations between paired splits of an operator and its inverse."""
    n = delta.n
    M = [ElemOp.mult(*t) for t in m_terms]
    G = [ElemOp.mult(*t) for t in g_terms]
    ident = ElemOp.identity(n)
    return {
        "G1M2=0": compose(G[0], M[1]).is_zero(),
        "G2M1=0": compose(G[1], M[0]).is_zero(),
        "M2G1=0": compose(M[1], G[0]).is_zero(),
        "M1G2=0": compose(M[0], G[1]).is_zero(),
        "G1M1+G2M2=I": compose(G[0], M[0]) + compose(G[1], M[1]) == ident,
        "M1G1+M2G2=I": compose(M[0], G[0]) + compose(M[1], G[1]) == ident,
        "M1+M2=D": M[0] + M[1] == delta,
        "G1+G2=D^-1": G[0] + G[1] == inv,
    }


def _cheap_orthogonal(m_terms, g_terms) -> bool:
    (A1, B1), (A2, B2) = m_terms
    (E1, F1), (E2, F2) = g_terms
    # G_i M_j = M(E_i A_j, B_j F_i), M_j G_i = M(A_j E_i, F_i B_j)
    for (E, F), (A, B) in (((E1, F1), (A2, B2)), ((E2, F2), (A1, B1))):
        if not ((E @ A).is_zero() or (B @ F).is_zero()):
            return False
        if not ((A @ E).is_zero() or (F @ B).is_zero()):
            return False
    return True


def biorthogonal_decomposition(delta: ElemOp, seed: int = 0) -> Optional[Decomposition2]:
    """Paired splits of an operator and its length-two inverse.

    Splits with ``G_i M_j = M_j G_i = 0`` (i != j) are sought first among the
    splits whose terms have a singular coefficient; failing that, a sum of two
    invertible multiplications is returned.  None when the operator is not
    invertible or its inverse is longer than two.
    """
    if delta.length() != 2:
        return None
    rep = inverse_elemop(delta)
    if not rep.invertible or rep.inverse_length != 2:
        return None
    inv = rep.inverse
    m_splits = _split_candidates(length_two_split(delta))
    g_splits = _split_candidates(length_two_split(inv))
    for ms in m_splits:
        for gs in g_splits:
            if not _cheap_orthogonal(ms, gs):
                continue
            rel = biorthogonal_relations(delta, inv, ms, gs)
            if all(rel.values()):
                return Decomposition2(ms[0], ms[1], "biorthogonal", inverse_terms=gs)
    return sum_of_invertibles(delta, seed=seed)


# ---------------------------------------------------------------------------
# classification of invertible length-two operators


def _singular_member(X1: Matrix, X2: Matrix):
    """A nonzero member of span{X1, X2} that is not invertible.

    ``det(x X1 + y X2)`` is a binary form of degree n, so such a member always
    exists over the complex numbers.  Returns a rational direction (x, y)
    when one exists, else the string "complex".
    """
    if pencil_det(X1, X2).is_zero():
        return (Fraction(1), Fraction(0))
    roots = _projective_roots(X1, X2)
    return roots[0] if roots else "complex"


def _fmt_point(pt):
    return pt if isinstance(pt, str) else [str(x) for x in pt]


def _product_span(lefts, rights):
    return [X @ Y for X in lefts for Y in rights]


def _every_member_has_zero_divisor(pencil_pair, partners, side: str) -> bool:
    """Whether every nonzero ``X`` in span(pencil_pair) admits a nonzero
    ``Y`` in span(partners) with ``X Y = 0`` (side "right") or ``Y X = 0``."""
    X1, X2 = pencil_pair
    if side == "right":
        cols1 = [(X1 @ Y).vec() for Y in partners]
        cols2 = [(X2 @ Y).vec() for Y in partners]
    else:
        cols1 = [(Y @ X1).vec() for Y in partners]
        cols2 = [(Y @ X2).vec() for Y in partners]
    K1 = Matrix.from_columns(cols1)
    K2 = Matrix.from_columns(cols2)
    # a nonzero kernel vector for every (x, y) iff the generic rank is deficient
    return generic_rank(K1, K2) < len(partners)


def classify_inverse(delta: ElemOp, seed: int = 0) -> dict:
    """Report which of three structural cases hold for an invertible
    length-two operator; several may hold at once."""
    if delta.length() != 2:
        raise ValueError("the operator must have length 2")
    rep = inverse_elemop(delta)
    if not rep.invertible:
        raise ValueError("the operator must be invertible")
    inv = rep.inverse
    ell = rep.inverse_length
    (A1, B1), (A2, B2) = length_two_split(delta)
    Ls = [A for A, _ in inv.terms]
    Rs = [B for _, B in inv.terms]

    out = {"inverse_length": ell}

    dec = sum_of_invertibles(delta, seed=seed)
    case1 = False
    if dec is not None:
        (A, B), (C, D) = dec.M1, dec.M2
        # M(A,B) + M(C,D) with A, B invertible: swap roles so the formula's
        # invertibility requirements (second-term left, first-term right) hold
        g = general_length2_inverse_length(C, D, A, B)
        case1 = g.invertible and g.predicted_length == g.inverse_length == ell
        out["case1_detail"] = {"predicted_length": g.predicted_length}
    out["case1"] = case1

    # case 2: right coefficients have right zero divisors in the inverse's
    # right span, left coefficients have right inverses in its left span;
    # the latter needs every nonzero left coefficient invertible
    r_dim = span_dim(_product_span([B1, B2], Rs))
    r_zero = _every_member_has_zero_divisor((B1, B2), Rs, "right")
    l_singular = _singular_member(A1, A2)
    out["case2_detail"] = {
        "product_span_dim": r_dim,
        "right_zero_divisors": r_zero,
        "singular_left_member": _fmt_point(l_singular),
    }
    out["case2"] = r_dim <= ell and r_zero and l_singular is None

    # case 3: the mirror image
    l_dim = span_dim(_product_span(Ls, [A1, A2]))
    l_zero = _every_member_has_zero_divisor((A1, A2), Ls, "left")
    r_singular = _singular_member(B1, B2)
    out["case3_detail"] = {
        "product_span_dim": l_dim,
        "left_zero_divisors": l_zero,
        "singular_right_member": _fmt_point(r_singular),
    }
    out["case3"] = l_dim <= ell and l_zero and r_singular is None
    return out
