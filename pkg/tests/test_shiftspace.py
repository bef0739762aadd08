from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from elemcalc.shiftspace import (
    FinRankOp,
    apply_elem,
    shift_operators,
    pencil_nonregularity,
    truncation,
    verify_relations,
)

B1, B2, F1, F2 = shift_operators()
DELTA = [(B1, B2), (B2, B1)]
INVERSE = [(F1, F2), (F2, F1)]


def test_index_rules():
    assert (B1(2), B1(3), B1(4)) == (1, None, 2)
    assert (B2(1), B2(3), B2(2)) == (1, 2, None)
    assert (F1(1), F1(3)) == (2, 6)
    assert (F2(1), F2(2)) == (1, 3)


def test_preimages_consistent():
    for op in (B1, B2, F1, F2):
        for j in range(1, 30):
            for i in op.preimage(j):
                assert op(i) == j
        for i in range(1, 30):
            j = op(i)
            if j is not None:
                assert i in op.preimage(j)


def test_apply_on_first_unit():
    T = FinRankOp.unit(1, 1)
    # B1 e_1 = 0; B2 e_1 = e_1 and e_1^T B1 = e_2^T
    assert apply_elem(DELTA, T) == FinRankOp.unit(1, 2)
    # F1 e_1 = e_2 and e_1^T F2 = e_1^T; no index is sent to e_1 by F1
    X = apply_elem(INVERSE, T)
    assert X == FinRankOp.unit(2, 1)
    assert apply_elem(DELTA, X) == T


def test_apply_empty():
    assert apply_elem(DELTA, FinRankOp()) == FinRankOp()


def test_relations_small_and_default():
    r1 = verify_relations(1)
    assert r1["B1F1=I"]
    rep = verify_relations(8)
    assert all(v for k, v in rep.items() if k != "N")


def test_resolution_on_odd_index():
    # F1 B1 e_3 = 0 and F2 B2 e_3 = F2 e_2 = e_3
    assert B1(3) is None and F2(B2(3)) == 3


def test_truncated_pencils_are_singular():
    out = pencil_nonregularity(range(1, 17))
    assert out[1]["identically_zero"] is False
    assert all(out[N]["identically_zero"] for N in range(2, 17))


def test_truncation_matrix():
    T = truncation(F1, 4)
    # e_1 -> e_2, e_2 -> e_4, e_3 and e_4 leave the window
    assert T.col(0) == (0, 1, 0, 0) and T.col(1) == (0, 0, 0, 1)
    assert T.col(2) == (0, 0, 0, 0)


@settings(max_examples=60, deadline=None)
@given(
    st.dictionaries(
        st.tuples(st.integers(1, 40), st.integers(1, 40)),
        st.fractions(min_value=-3, max_value=3, max_denominator=4),
        max_size=6,
    )
)
def test_inverse_on_finite_rank(entries):
    T = FinRankOp(entries)
    assert apply_elem(DELTA, apply_elem(INVERSE, T)) == T
    assert apply_elem(INVERSE, apply_elem(DELTA, T)) == T


@settings(max_examples=30, deadline=None)
@given(
    st.dictionaries(st.tuples(st.integers(1, 20), st.integers(1, 20)), st.integers(-3, 3), max_size=4),
    st.dictionaries(st.tuples(st.integers(1, 20), st.integers(1, 20)), st.integers(-3, 3), max_size=4),
    st.fractions(max_denominator=5, min_value=-2, max_value=2),
)
def test_operator_is_linear(e1, e2, c):
    S, T = FinRankOp(e1), FinRankOp(e2)
    lhs = apply_elem(DELTA, S + T.scale(c))
    rhs = apply_elem(DELTA, S) + apply_elem(DELTA, T).scale(Fraction(c))
    assert lhs == rhs
