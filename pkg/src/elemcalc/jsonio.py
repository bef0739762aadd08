"""JSON encoding: rationals as strings, matrices as arrays of rows."""

from __future__ import annotations

import json
from fractions import Fraction

from .elemop import ElemOp
from .exactnum import Matrix, to_fraction


class SchemaError(ValueError):
    """Input does not match the documented JSON layout."""


def rational_from_json(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise SchemaError(f"rationals must be strings or integers, got {x!r}")
    try:
        return to_fraction(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {x!r}") from exc


def rational_to_json(x) -> str:
    return str(Fraction(x))


def matrix_from_json(rows, square: bool = False) -> Matrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise SchemaError("a matrix must be a nonempty array of row arrays")
    width = len(rows[0])
    if width == 0 or any(len(r) != width for r in rows):
        raise SchemaError("matrix rows must be nonempty and of equal length")
    M = Matrix([[rational_from_json(x) for x in r] for r in rows])
    if square and not M.is_square:
        raise SchemaError("matrix must be square")
    return M


def matrix_to_json(M: Matrix) -> list:
    return [[str(x) for x in row] for row in M.rows]


def elemop_from_json(obj) -> ElemOp:
    if not isinstance(obj, dict) or "n" not in obj or "terms" not in obj:
        raise SchemaError('an operator needs keys "n" and "terms"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SchemaError('"n" must be a positive integer')
    if not isinstance(obj["terms"], list):
        raise SchemaError('"terms" must be an array')
    terms = []
    for t in obj["terms"]:
        if not isinstance(t, dict) or "A" not in t or "B" not in t:
            raise SchemaError('each term needs keys "A" and "B"')
        A, B = matrix_from_json(t["A"]), matrix_from_json(t["B"])
        if A.shape != (n, n) or B.shape != (n, n):
            raise SchemaError(f"term coefficients must be {n}x{n}")
        terms.append((A, B))
    return ElemOp(n, tuple(terms))


def elemop_to_json(phi: ElemOp) -> dict:
    return {
        "n": phi.n,
        "terms": [{"A": matrix_to_json(A), "B": matrix_to_json(B)} for A, B in phi.terms],
    }


def pair_from_json(obj, a="A", b="B", square=True) -> tuple[Matrix, Matrix]:
    if not isinstance(obj, dict) or a not in obj or b not in obj:
        raise SchemaError(f'input needs keys "{a}" and "{b}"')
    X, Y = matrix_from_json(obj[a], square), matrix_from_json(obj[b], square)
    if X.shape != Y.shape:
        raise SchemaError(f'"{a}" and "{b}" must have the same shape')
    return X, Y


def dumps(obj, compact: bool = False) -> str:
    if compact:
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return json.dumps(obj, sort_keys=True, indent=2)
