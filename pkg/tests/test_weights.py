import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syang.exactmath import Polynomial, RatFun
from syang.glmn import is_dominant
from syang.superalgebra import GradingContext
from syang.weights import (
    FINITE,
    NOT_FINITE,
    UNSUPPORTED,
    HighestWeight,
    check_finite_dim,
    epsilon_weight,
    evaluation_weight,
    factor_into_fundamentals,
    solve_shift_polynomial,
    star_all,
    star_product,
    twist,
)

C11 = GradingContext(1, 1)
C21 = GradingContext(2, 1)
C12 = GradingContext(1, 2)
x = Polynomial([0, 1])


def test_weight_validation():
    with pytest.raises(ValueError):
        HighestWeight(C11, (RatFun(1), RatFun(1)))  # odd component must tend to -1
    with pytest.raises(ValueError):
        HighestWeight(C11, (RatFun(1),))
    L = evaluation_weight(C11, [1, 0])
    assert L[1] == RatFun(x + 1, x) and L[2] == RatFun(-1)


def test_star_product_examples():
    L = evaluation_weight(C11, [1, 0])
    assert star_product(L, epsilon_weight(C11)) == L
    sq = star_product(L, L)
    assert sq[1] == RatFun((x + 1) * (x + 1), x * x) and sq[2] == RatFun(-1)


@settings(max_examples=30)
@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3), st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_star_product_commutes(m, n):
    a, b = evaluation_weight(C21, m), evaluation_weight(C21, n)
    assert star_product(a, b) == star_product(b, a)


def test_twist_examples():
    L = evaluation_weight(C21, [2, 1, 0])
    assert twist([1], L) == L
    assert twist(RatFun(1), L) == L
    T = twist([1, 3], L)
    assert T[1] == L[1] * RatFun(x + 3, x)
    with pytest.raises(ValueError):
        twist([2, 1], L)


def test_solve_shift_examples():
    sol = solve_shift_polynomial(RatFun(x + 3, x + 1), 1)
    assert sol.status == FINITE and sol.P == (x + 1) * (x + 2)
    assert solve_shift_polynomial(RatFun(1), 1).P == Polynomial([1])
    assert solve_shift_polynomial(RatFun(x + 1, x + 3), 1).status == NOT_FINITE
    down = solve_shift_polynomial(RatFun(x - 2, x), -1)
    assert down.status == FINITE and down.P.shift(-1) * x == (x - 2) * down.P
    irr = solve_shift_polynomial(RatFun(x * x + 3, x * x + 1), 1)
    assert irr.status == UNSUPPORTED


@settings(max_examples=40)
@given(st.lists(st.integers(-5, 5), min_size=0, max_size=4), st.sampled_from([1, -1]))
def test_shift_solution_telescopes(roots, s):
    P = Polynomial.from_roots(roots)
    f = RatFun(P.shift(s), P)
    sol = solve_shift_polynomial(f, s)
    assert sol.status == FINITE
    assert RatFun(sol.P.shift(s), sol.P) == f


def test_check_finite_dim_examples():
    v = check_finite_dim(evaluation_weight(C11, [1, 0]))
    assert v.status == FINITE
    assert v.data.K == {1: 1} and v.data.r1 == (1,) and v.data.r2 == (0,)
    mu = (3, 1, -2)
    v = check_finite_dim(evaluation_weight(C21, mu))
    assert v.status == FINITE
    assert v.data.P[1] == Polynomial.from_roots([1, 2])
    bad = check_finite_dim(evaluation_weight(C21, (1, 3, 0)))
    assert bad.status == NOT_FINITE and bad.witness["a"] == 1


def test_odd_ratio_must_tend_to_minus_one():
    L = HighestWeight(C11, (RatFun(1), RatFun(-1)))
    assert check_finite_dim(L).status == FINITE
    assert check_finite_dim(L).data.K == {1: 0}


def test_unsupported_roots_reported():
    lam1 = RatFun(x * x + 2, x * x + 1)
    L = HighestWeight(C21, (lam1, RatFun(1), RatFun(-1)))
    assert check_finite_dim(L).status == UNSUPPORTED


def test_factorization_round_trip_and_trivial():
    f, factors = factor_into_fundamentals(epsilon_weight(C21), check_finite_dim(epsilon_weight(C21)).data)
    assert factors == [] and f == RatFun(1)
    for ctx, mu in [(C21, (3, 1, 2)), (C12, (2, 5, 3)), (C11, (1, 4))]:
        L = evaluation_weight(ctx, mu)
        v = check_finite_dim(L)
        f, factors = factor_into_fundamentals(L, v.data)
        assert twist(f, star_all(ctx, [fac.weight for fac in factors])) == L


def test_factors_of_star_product_are_union():
    A, B = evaluation_weight(C21, (2, 1, 0)), evaluation_weight(C21, (1, 1, 3))
    counts = []
    for L in (A, B, star_product(A, B)):
        _, factors = factor_into_fundamentals(L, check_finite_dim(L).data)
        counts.append(sorted(fac.t for fac in factors))
    assert sorted(counts[0] + counts[1]) == counts[2]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_verdict_invariant_under_twist(seed):
    rng = random.Random(seed)
    mu = [rng.randint(-5, 5) for _ in range(3)]
    L = evaluation_weight(C21, mu)
    f = [1] + [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(0, 3))]
    a, b = check_finite_dim(L), check_finite_dim(twist(f, L))
    assert a.status == b.status
    assert a.data == b.data
    assert (a.status == FINITE) == is_dominant(C21, mu)
