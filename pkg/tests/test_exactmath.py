from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syang.exactmath import (
    Polynomial,
    RatFun,
    RatFunMatrix,
    SparseMatrix,
    charpoly,
    closure,
    coordinates,
    largest_invariant_subspace,
    nullspace,
    q_from_str,
    q_to_str,
    rank,
    ratfun_normalize,
    rational_eigenspaces,
    ratfunmatrix_from_modes,
    series_expand,
)

x = Polynomial([0, 1])
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)
small_polys = st.lists(rationals, min_size=1, max_size=4).map(Polynomial)


def test_rational_strings_round_trip():
    for q in (F(0), F(3), F(-7, 4), F(1, 9)):
        assert q_from_str(q_to_str(q)) == q
    assert q_to_str(F(-7, 4)) == "-7/4"
    assert q_to_str(F(6, 3)) == "2"


def test_normalize_cancels_and_makes_monic():
    assert ratfun_normalize(2 * x + 2, 2 * x) == RatFun(x + 1, x)
    f = ratfun_normalize(x * x - 1, x - 1)
    assert f.den == Polynomial([1]) and f.num == x + 1
    z = ratfun_normalize(Polynomial([]), x + 3)
    assert z.is_zero() and z.den == Polynomial([1])


def test_series_expand_examples():
    assert series_expand(RatFun(x + 1, x), 2) == [1, 1, 0]
    assert series_expand(RatFun(1, x + 1), 3) == [0, 1, -1, 1]
    assert series_expand(RatFun(-1), 2) == [-1, 0, 0]
    with pytest.raises(ValueError):
        series_expand(RatFun(x * x, x + 1), 2)


@given(small_polys, small_polys, small_polys)
def test_polynomial_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(small_polys, small_polys.filter(lambda p: not p.is_zero()))
def test_division_with_remainder(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(st.lists(rationals, min_size=1, max_size=4), rationals)
def test_shift_agrees_with_evaluation(coeffs, c):
    p = Polynomial(coeffs)
    assert p.shift(c)(F(5, 3)) == p(F(5, 3) + c)


@given(st.lists(st.integers(-6, 6), min_size=0, max_size=4))
def test_rational_roots_recovered(roots):
    p = Polynomial.from_roots(roots)  # product of (x + r)
    found, rest = p.rational_roots()
    assert rest.degree == 0
    assert sum(found.values()) == len(roots)


def test_nullspace_examples():
    assert nullspace(SparseMatrix.identity(3)) == []
    ns = nullspace(SparseMatrix.from_dense([[1, -1]]))
    assert len(ns) == 1 and ns[0][0] == ns[0][1] != 0
    assert len(nullspace(SparseMatrix.zero(3))) == 3


@settings(max_examples=40)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_nullity(rows):
    m = SparseMatrix.from_dense(rows)
    ns = nullspace(m)
    assert rank(m) + len(ns) == 4
    for v in ns:
        assert not any(m.apply(v))


def test_invariant_subspace_of_jordan_block():
    J = SparseMatrix.from_dense([[0, 1], [0, 0]])
    e1 = (F(1), F(0))
    assert largest_invariant_subspace([e1], [J]) == [e1]
    e2 = (F(0), F(1))
    assert largest_invariant_subspace([e2], [J]) == []


def test_closure_and_coordinates():
    J = SparseMatrix.from_dense([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    span = closure([(F(0), F(0), F(1))], [J])
    assert len(span) == 3
    assert coordinates([(F(1), F(0)), (F(1), F(1))], (F(3), F(2))) == (F(1), F(2))
    with pytest.raises(ValueError):
        coordinates([(F(1), F(0))], (F(0), F(1)))


def test_charpoly_and_eigenspaces():
    A = SparseMatrix.from_dense([[2, 1], [0, 3]])
    assert charpoly(A) == (x - 2) * (x - 3)
    spaces, rational = rational_eigenspaces(A)
    assert rational and set(spaces) == {2, 3}
    R = SparseMatrix.from_dense([[0, -1], [1, 0]])
    spaces, rational = rational_eigenspaces(R)
    assert not rational and spaces == {}


def test_ratfunmatrix_modes_reconstruct():
    u = Polynomial([0, 1], "u")
    entries = {(0, 0): RatFun(u + 2, u + F(1, 2), "u"), (0, 1): RatFun(3, u * u, "u"), (1, 1): RatFun(1)}
    T = RatFunMatrix.from_entries(2, 2, entries)
    back = ratfunmatrix_from_modes(T.modes(12))
    assert back is not None and back == T
    assert T.shift(F(1, 3)).entry(0, 0) == entries[(0, 0)].shift(F(1, 3))
