"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`.  :class:`Matrix` is an immutable dense
matrix of fractions, :class:`Polynomial` a univariate polynomial with rational
coefficients stored lowest degree first.

Row reduction is done fraction-free: every row is scaled to a primitive
integer row, elimination uses integer cross-multiplication, and each updated
row is divided by the gcd of its entries.  Fractions only reappear when the
pivots are normalised at the end.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Optional, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "Matrix",
    "Polynomial",
    "to_fraction",
    "format_rational",
    "rref",
    "rank",
    "kernel_basis",
    "left_kernel_basis",
    "solve",
    "det",
    "inverse",
    "minimal_polynomial",
    "char_polynomial",
    "poly_gcd",
    "rational_roots",
    "small_rationals",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def to_fraction(x) -> Fraction:
    """Coerce ints, strings ("p/q", "p") and fractions to a Fraction.

    Floats are refused: they are not exact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(q: Fraction) -> str:
    return str(q)


def small_rationals():
    """Yield 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 3/2, ... by increasing height."""
    yield _ZERO
    height = 1
    while True:
        batch = [
            Fraction(p, q)
            for q in range(1, height + 1)
            for p in range(1, height + 1)
            if max(p, q) == height and gcd(p, q) == 1
        ]
        batch.sort(key=lambda f: (f.denominator, f.numerator))
        for f in batch:
            yield f
            yield -f
        height += 1


class Matrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("_rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable] = (), ncols: Optional[int] = None):
        data = tuple(tuple(to_fraction(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged matrix rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols
        self._hash = None

    @classmethod
    def _raw(cls, rows, ncols: int) -> "Matrix":
        m = cls.__new__(cls)
        m._rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m._rows)
        m.ncols = ncols
        m._hash = None
        return m

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: Optional[int] = None) -> "Matrix":
        if ncols is None:
            ncols = nrows
        return cls._raw([[_ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def scalar(cls, n: int, c) -> "Matrix":
        c = to_fraction(c)
        return cls._raw([[c if i == j else _ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        vals = [to_fraction(v) for v in values]
        n = len(vals)
        return cls._raw([[vals[i] if i == j else _ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: Optional[int] = None) -> "Matrix":
        cols = [tuple(to_fraction(x) for x in c) for c in columns]
        if nrows is None:
            if not cols:
                raise ValueError("cannot infer the row count of an empty column list")
            nrows = len(cols[0])
        if any(len(c) != nrows for c in cols):
            raise ValueError("columns of unequal length")
        return cls._raw([[c[i] for c in cols] for i in range(nrows)], len(cols))

    @classmethod
    def unvec(cls, v: Sequence, nrows: int, ncols: Optional[int] = None) -> "Matrix":
        """Inverse of :meth:`vec` (column stacking)."""
        if ncols is None:
            ncols = nrows
        if len(v) != nrows * ncols:
            raise ValueError("vector length does not match the requested shape")
        v = [to_fraction(x) for x in v]
        return cls._raw([[v[i + j * nrows] for j in range(ncols)] for i in range(nrows)], ncols)

    @classmethod
    def unit(cls, i: int, j: int, nrows: int, ncols: Optional[int] = None) -> "Matrix":
        if ncols is None:
            ncols = nrows
        return cls._raw(
            [[_ONE if (a, b) == (i, j) else _ZERO for b in range(ncols)] for a in range(nrows)],
            ncols,
        )

    @classmethod
    def hstack(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        nrows = blocks[0].nrows
        if any(b.nrows != nrows for b in blocks):
            raise ValueError("hstack needs equal row counts")
        return cls._raw(
            [sum((b._rows[i] for b in blocks), ()) for i in range(nrows)],
            sum(b.ncols for b in blocks),
        )

    @classmethod
    def vstack(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        ncols = blocks[0].ncols
        if any(b.ncols != ncols for b in blocks):
            raise ValueError("vstack needs equal column counts")
        return cls._raw([r for b in blocks for r in b._rows], ncols)

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        ncols = sum(b.ncols for b in blocks)
        rows = []
        offset = 0
        for b in blocks:
            for r in b._rows:
                rows.append((_ZERO,) * offset + r + (_ZERO,) * (ncols - offset - b.ncols))
            offset += b.ncols
        return cls._raw(rows, ncols)

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def columns(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(zip(*self._rows)) if self.nrows else tuple(() for _ in range(self.ncols))

    @property
    def entries(self) -> tuple[Fraction, ...]:
        """Row-major entries."""
        return tuple(x for r in self._rows for x in r)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def vec(self) -> tuple[Fraction, ...]:
        """Column-stacking vectorisation."""
        return tuple(self._rows[i][j] for j in range(self.ncols) for i in range(self.nrows))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw([[self._rows[i][j] for j in cols] for i in rows], len(cols))

    def select_columns(self, cols: Sequence[int]) -> "Matrix":
        return self.submatrix(range(self.nrows), cols)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(self.columns, self.nrows)

    def transpose(self) -> "Matrix":
        return self.T

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def is_scalar(self) -> bool:
        """True for square matrices of the form c*I."""
        if not self.is_square:
            return False
        if self.nrows == 0:
            return True
        c = self._rows[0][0]
        return all(
            x == (c if i == j else 0) for i, r in enumerate(self._rows) for j, x in enumerate(r)
        )

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(min(self.shape))), _ZERO)

    # -- arithmetic -----------------------------------------------------------

    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix._raw(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.ncols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same_shape(other)
        return Matrix._raw(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.ncols
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw([[-a for a in r] for r in self._rows], self.ncols)

    def scale(self, c) -> "Matrix":
        c = to_fraction(c)
        return Matrix._raw([[c * a for a in r] for r in self._rows], self.ncols)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return self @ c
        return self.scale(c)

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns
        return Matrix._raw(
            [[sum((a * b for a, b in zip(r, c) if a and b), _ZERO) for c in cols] for r in self._rows],
            other.ncols,
        )

    def mul_vec(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), _ZERO) for r in self._rows)

    def vec_mul(self, v: Sequence) -> tuple[Fraction, ...]:
        """Row vector times matrix."""
        if len(v) != self.nrows:
            raise ValueError("vector length does not match row count")
        return tuple(
            sum((a * b for a, b in zip(v, c) if a and b), _ZERO) for c in self.columns
        )

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            inv = inverse(self)
            if inv is None:
                raise ZeroDivisionError("singular matrix has no negative powers")
            return inv ** (-k)
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shape, self._rows))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"

    def tolist(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self._rows]

    # -- convenience wrappers ---------------------------------------------

    def rank(self) -> int:
        return rank(self)

    def det(self) -> Fraction:
        return det(self)

    def inverse(self) -> Optional["Matrix"]:
        return inverse(self)


# ---------------------------------------------------------------------------
# fraction-free elimination core


def _primitive(row: Sequence[Fraction]) -> list[int]:
    """Scale a rational row to a primitive integer row (same direction)."""
    den = lcm(*(x.denominator for x in row)) if row else 1
    ints = [x.numerator * (den // x.denominator) for x in row]
    g = gcd(*ints) if ints else 0
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _eliminate(rows: list[list[int]], pivot_cols: int) -> list[int]:
    """In-place Gauss-Jordan elimination on integer rows.

    Pivots are searched in the first ``pivot_cols`` columns only; any columns
    after that are carried along.  Returns the pivot column indices; pivot row
    ``k`` ends up at position ``k``.
    """
    m = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(pivot_cols):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        a = prow[c]
        for i in range(m):
            if i == r:
                continue
            b = rows[i][c]
            if not b:
                continue
            new = [a * x - b * y for x, y in zip(rows[i], prow)]
            g = gcd(*new)
            if g > 1:
                new = [v // g for v in new]
            rows[i] = new
        pivots.append(c)
        r += 1
    return pivots


def rref(M: Matrix) -> tuple[Matrix, list[int], Matrix]:
    """Reduced row-echelon form ``R = T @ M`` with ``T`` invertible."""
    m, n = M.shape
    aug = [list(r) + [_ONE if j == i else _ZERO for j in range(m)] for i, r in enumerate(M.rows)]
    rows = [_primitive(r) for r in aug]
    pivots = _eliminate(rows, n)
    out = []
    for k, row in enumerate(rows):
        if k < len(pivots):
            a = row[pivots[k]]
            out.append([Fraction(v, a) for v in row])
        else:
            out.append([Fraction(v) for v in row])
    R = Matrix._raw([r[:n] for r in out], n)
    T = Matrix._raw([r[n:] for r in out], m)
    return R, pivots, T


def _reduced(M: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    rows = [_primitive(r) for r in M.rows]
    pivots = _eliminate(rows, M.ncols)
    out = []
    for k, p in enumerate(pivots):
        a = rows[k][p]
        out.append([Fraction(v, a) for v in rows[k]])
    return out, pivots


def rank(M: Matrix) -> int:
    rows = [_primitive(r) for r in M.rows]
    return len(_eliminate(rows, M.ncols))


def kernel_basis(M: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of {x : M x = 0}, one vector per free column."""
    n = M.ncols
    red, pivots = _reduced(M)
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        x = [_ZERO] * n
        x[f] = _ONE
        for k, p in enumerate(pivots):
            x[p] = -red[k][f]
        basis.append(tuple(x))
    return basis


def left_kernel_basis(M: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of {y : y M = 0} as row vectors."""
    return kernel_basis(M.T)


def solve(M: Matrix, b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Some x with ``M x = b`` (free variables set to zero), or None."""
    if len(b) != M.nrows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {M.nrows}")
    n = M.ncols
    aug = [list(r) + [to_fraction(v)] for r, v in zip(M.rows, b)]
    rows = [_primitive(r) for r in aug]
    pivots = _eliminate(rows, n)
    for row in rows[len(pivots):]:
        if row[n]:
            return None
    x = [_ZERO] * n
    for k, p in enumerate(pivots):
        x[p] = Fraction(rows[k][n], rows[k][p])
    return tuple(x)


def det(M: Matrix) -> Fraction:
    """Determinant by Bareiss elimination on the primitive integer rows."""
    if not M.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = M.nrows
    if n == 0:
        return _ONE
    scale = _ONE
    a = []
    for r in M.rows:
        ints = _primitive(r)
        nz = next((x for x in r if x), None)
        if nz is None:
            return _ZERO
        iz = next(v for v in ints if v)
        scale *= nz / iz  # original row = (nz/iz) * integer row
        a.append(ints)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return _ZERO
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] * scale


def inverse(M: Matrix) -> Optional[Matrix]:
    """Exact inverse, or None for a singular matrix."""
    if not M.is_square:
        raise ValueError("inverse of a non-square matrix")
    R, pivots, T = rref(M)
    if len(pivots) < M.nrows:
        return None
    return T


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Univariate polynomial with rational coefficients, lowest degree first.

    The zero polynomial has ``degree == -1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [to_fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def z(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls((-to_fraction(r), 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lc = self.coeffs[-1]
        return Polynomial(c / lc for c in self.coeffs)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial((to_fraction(other),))

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        k = max(len(a), len(b))
        return Polynomial(
            (a[i] if i < len(a) else _ZERO) + (b[i] if i < len(b) else _ZERO) for i in range(k)
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial((1,))
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        dl = len(d)
        lc = d[-1]
        if len(rem) < dl:
            return Polynomial(), Polynomial(rem)
        quo = [_ZERO] * (len(rem) - dl + 1)
        for k in range(len(rem) - dl, -1, -1):
            q = rem[k + dl - 1] / lc
            quo[k] = q
            if q:
                for j in range(dl):
                    rem[k + j] -= q * d[j]
        return Polynomial(quo), Polynomial(rem[: dl - 1])

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def __call__(self, x):
        """Evaluate at a scalar (Horner)."""
        x = to_fraction(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_matrix(self, A: Matrix) -> Matrix:
        """Evaluate at a square matrix (Horner)."""
        if not A.is_square:
            raise ValueError("polynomial evaluated at a non-square matrix")
        n = A.nrows
        acc = Matrix.zeros(n)
        for c in reversed(self.coeffs):
            acc = acc @ A + Matrix.scalar(n, c)
        return acc

    def divides(self, other: "Polynomial") -> bool:
        return (other % self).is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "z" if k == 1 else f"z^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def minimal_polynomial(A: Matrix) -> Polynomial:
    """Monic polynomial of least degree annihilating ``A``.

    Finds the first power ``A^k`` whose vectorisation is a combination of
    ``vec(I), ..., vec(A^(k-1))``.
    """
    if not A.is_square:
        raise ValueError("minimal polynomial of a non-square matrix")
    n = A.nrows
    P = Matrix.identity(n)
    vecs = [P.vec()]
    for _ in range(n):
        P = P @ A
        v = P.vec()
        c = solve(Matrix.from_columns(vecs, nrows=n * n), v)
        if c is not None:
            return Polynomial([-x for x in c] + [_ONE])
        vecs.append(v)
    raise AssertionError("Cayley-Hamilton violated; arithmetic is broken")


def char_polynomial(A: Matrix) -> Polynomial:
    """det(zI - A) by the Faddeev-LeVerrier recursion."""
    if not A.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = A.nrows
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    M = Matrix.zeros(n)
    I = Matrix.identity(n)
    for k in range(1, n + 1):
        M = A @ M + I.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(A @ M).trace() / k
    return Polynomial(coeffs)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _divisors(k: int) -> list[int]:
    k = abs(k)
    small, large = [], []
    for d in range(1, isqrt(k) + 1):
        if k % d == 0:
            small.append(d)
            if d * d != k:
                large.append(k // d)
    return small + large[::-1]


def rational_roots(p: Polynomial) -> list[Fraction]:
    """All rational roots with multiplicity, ascending."""
    if p.is_zero():
        raise ValueError("the zero polynomial has every number as a root")
    coeffs = list(p.coeffs)
    roots: list[Fraction] = []
    while coeffs[0] == 0:
        coeffs.pop(0)
        roots.append(_ZERO)
    q = Polynomial(coeffs)
    if q.degree > 0:
        ints = _primitive(coeffs)
        cands = set()
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                r = Fraction(num, den)
                cands.add(r)
                cands.add(-r)
        for r in sorted(cands):
            lin = Polynomial((-r, 1))
            while q.degree > 0 and q(r) == 0:
                roots.append(r)
                q = q // lin
    return sorted(roots)
