"""Partial index shifts on a countable basis ``e_1, e_2, ...``.

Four operators split the basis by parity and fold it back:

* ``B1``: ``e_(2i) -> e_i``, odd indices to 0;
* ``B2``: ``e_(2i+1) -> e_(i+1)``, even indices to 0;
* ``F1``: ``e_i -> e_(2i)``;
* ``F2``: ``e_i -> e_(2i-1)``.

So ``B1 F1 = B2 F2 = id``, ``B1 F2 = B2 F1 = 0`` and ``F1 B1 + F2 B2 = id``.
The operator ``T -> B1 T B2 + B2 T B1`` is then inverted by
``T -> F1 T F2 + F2 T F1``.  Operands are finite-rank matrices stored as
sparse ``{(i, j): c}`` dictionaries, which keeps every evaluation exact and
finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

__all__ = [
    "IndexOp",
    "FinRankOp",
    "shift_operators",
    "apply_elem",
    "verify_relations",
    "pencil_nonregularity",
    "truncation",
]


@dataclass(frozen=True)
class IndexOp:
    """Coefficient-one partial map on basis indices.

    ``image(i)`` is the index of ``A e_i`` (None for 0); ``preimage(j)`` lists
    every i with ``image(i) == j``.
    """

    name: str
    image: Callable[[int], Optional[int]]
    preimage: Callable[[int], tuple[int, ...]]

    def __call__(self, i: int) -> Optional[int]:
        if i < 1:
            raise ValueError("basis indices start at 1")
        return self.image(i)

    def then(self, other: "IndexOp") -> "IndexOp":
        """``other`` after ``self``."""

        def image(i):
            j = self.image(i)
            return None if j is None else other.image(j)

        def preimage(k):
            return tuple(i for j in other.preimage(k) for i in self.preimage(j))

        return IndexOp(f"{other.name}{self.name}", image, preimage)


def _b1_image(i):
    return i // 2 if i % 2 == 0 else None


def _b2_image(i):
    return (i + 1) // 2 if i % 2 == 1 else None


def _f1_pre(j):
    return (j // 2,) if j % 2 == 0 else ()


def _f2_pre(j):
    return ((j + 1) // 2,) if j % 2 == 1 else ()


def shift_operators() -> tuple[IndexOp, IndexOp, IndexOp, IndexOp]:
    B1 = IndexOp("B1", _b1_image, lambda j: (2 * j,))
    B2 = IndexOp("B2", _b2_image, lambda j: (2 * j - 1,))
    F1 = IndexOp("F1", lambda i: 2 * i, _f1_pre)
    F2 = IndexOp("F2", lambda i: 2 * i - 1, _f2_pre)
    return B1, B2, F1, F2


class FinRankOp:
    """Finite sum ``sum c e_i e_j^T`` with exact coefficients."""

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        clean = {}
        for (i, j), c in dict(entries or {}).items():
            if i < 1 or j < 1:
                raise ValueError("basis indices start at 1")
            c = Fraction(c)
            if c:
                clean[(i, j)] = c
        self.entries = clean

    @classmethod
    def unit(cls, i: int, j: int) -> "FinRankOp":
        return cls({(i, j): 1})

    def __add__(self, other: "FinRankOp") -> "FinRankOp":
        out = dict(self.entries)
        for key, c in other.entries.items():
            out[key] = out.get(key, 0) + c
        return FinRankOp(out)

    def scale(self, c) -> "FinRankOp":
        return FinRankOp({k: v * c for k, v in self.entries.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, FinRankOp) and self.entries == other.entries

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def max_index(self) -> int:
        return max((max(i, j) for i, j in self.entries), default=0)

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {c}" for (i, j), c in sorted(self.entries.items()))
        return f"FinRankOp({{{body}}})"


def apply_elem(pairs: Iterable[tuple[IndexOp, IndexOp]], T: FinRankOp) -> FinRankOp:
    """``sum_k A_k T B_k``.

    An entry ``c e_i e_j^T`` goes to ``c (A e_i)(e_j^T B)``, and
    ``e_j^T B = sum of e_k^T over k with B e_k = e_j``.
    """
    out: dict = {}
    for A, B in pairs:
        for (i, j), c in T.entries.items():
            r = A(i)
            if r is None:
                continue
            for k in B.preimage(j):
                out[(r, k)] = out.get((r, k), 0) + c
    return FinRankOp(out)


def _delta_pairs():
    B1, B2, F1, F2 = shift_operators()
    return [(B1, B2), (B2, B1)], [(F1, F2), (F2, F1)]


def verify_relations(N: int = 64) -> dict:
    """Check the five index identities on ``1..N`` and both composition
    identities on every ``e_i e_j^T`` with ``i, j <= N``."""
    if N < 1:
        raise ValueError("N must be positive")
    B1, B2, F1, F2 = shift_operators()
    idx = range(1, N + 1)
    report = {
        "B1F1=I": all(B1(F1(i)) == i for i in idx),
        "B2F2=I": all(B2(F2(i)) == i for i in idx),
        "B1F2=0": all(B1(F2(i)) is None for i in idx),
        "B2F1=0": all(B2(F1(i)) is None for i in idx),
    }
    ok = True
    for i in idx:
        # F1 B1 + F2 B2 applied to e_i, as a sparse vector
        acc: dict = {}
        for F, B in ((F1, B1), (F2, B2)):
            j = B(i)
            if j is not None:
                k = F(j)
                acc[k] = acc.get(k, 0) + 1
        ok = ok and acc == {i: 1}
    report["F1B1+F2B2=I"] = ok

    delta, inv = _delta_pairs()
    fwd = back = True
    growth = True
    for i in idx:
        for j in idx:
            T = FinRankOp.unit(i, j)
            X = apply_elem(inv, T)
            Y = apply_elem(delta, T)
            m = 2 * T.max_index()
            growth = growth and X.max_index() <= m and Y.max_index() <= m
            fwd = fwd and apply_elem(delta, X) == T
            back = back and apply_elem(inv, Y) == T
    report["D(Dinv(T))=T"] = fwd
    report["Dinv(D(T))=T"] = back
    report["support_growth<=2x"] = growth
    report["N"] = N
    return report


def truncation(op: IndexOp, N: int):
    """The N x N matrix of ``op`` restricted to ``e_1..e_N`` (images past N dropped)."""
    from .exactnum import Matrix

    rows = [[0] * N for _ in range(N)]
    for i in range(1, N + 1):
        j = op(i)
        if j is not None and j <= N:
            rows[j - 1][i - 1] = 1
    return Matrix(rows)


def pencil_nonregularity(sizes: Iterable[int] = range(2, 17)) -> dict:
    """For each N, whether ``det(a B1 + b B2)`` of the N-truncations vanishes
    identically.  Finite evidence only; N = 1 is not identically zero."""
    from .pencil import pencil_det

    B1, B2, _, _ = shift_operators()
    out = {}
    for N in sizes:
        p = pencil_det(truncation(B1, N), truncation(B2, N))
        out[N] = {"identically_zero": p.is_zero(), "det": str(p)}
    return out
