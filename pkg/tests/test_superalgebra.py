import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syang.superalgebra import (
    AlgebraElement,
    GradingContext,
    antipode_images,
    antipode_law_residuals,
    apply_automorphism,
    apply_counit_to_slot,
    commutator_rhs,
    coproduct_symbolic,
    counit,
    eta_sign,
    is_ordered,
    multiply,
    straighten,
)
from syang.verify import random_element, random_word, relation_closure_failures

C11 = GradingContext(1, 1)
C21 = GradingContext(2, 1)


def gen(ctx, a, b, n):
    return AlgebraElement.generator(ctx, a, b, n)


def test_grading_basics():
    assert [C21.parity(a) for a in C21.indices] == [0, 0, 1]
    with pytest.raises(IndexError):
        C11.check_index(3)
    with pytest.raises(ValueError):
        GradingContext(0, 0)


def test_eta_examples():
    assert eta_sign(C11, 1, 2, 2, 1) == 1
    assert eta_sign(C11, 1, 1, 2, 2) == 0
    ctx = GradingContext(3, 1)
    for idx in itertools.product(range(1, 4), repeat=4):
        assert eta_sign(ctx, *idx) == 0


def test_commutator_rhs_examples():
    assert commutator_rhs(C11, 1, 2, 1, 2, 1, 1) == gen(C11, 1, 1, 1) + gen(C11, 2, 2, 1)
    assert commutator_rhs(C21, 1, 2, 1, 2, 3, 1) == gen(C21, 1, 3, 1)
    for ctx in (C11, C21):
        for a in ctx.indices:
            for m, n in itertools.product(range(1, 4), repeat=2):
                assert commutator_rhs(ctx, a, a, m, a, a, n).is_zero()


def test_straighten_examples():
    ordered = ((2, 1, 1), (1, 2, 1))
    assert is_ordered(C11, ordered)
    assert straighten(C11, [(1, ordered)]) == AlgebraElement(C11, {ordered: 1})
    swapped = straighten(C11, [(1, ((1, 2, 1), (2, 1, 1)))])
    expected = AlgebraElement(C11, {ordered: -1}) + gen(C11, 1, 1, 1) + gen(C11, 2, 2, 1)
    assert swapped == expected
    assert straighten(C11, [(1, ((1, 2, 1), (1, 2, 1)))]).is_zero()
    assert straighten(C11, []).is_zero()


def test_odd_square_is_half_anticommutator():
    # two odd generators anticommute up to the mode relation
    g, h = (2, 1, 1), (2, 1, 2)
    anti = straighten(C11, [(1, (g, h)), (1, (h, g))])
    assert anti == commutator_rhs(C11, 2, 1, 1, 2, 1, 2)


def test_multiply_cartan_pair_commutes():
    x, y = gen(C11, 1, 1, 1), gen(C11, 2, 2, 1)
    assert multiply(C11, x, y) == multiply(C11, y, x)
    assert len(multiply(C11, x, y)) == 1


def test_unit_is_neutral():
    rng = random.Random(3)
    for _ in range(20):
        x = random_element(C21, rng, 3)
        one = AlgebraElement.unit(C21)
        assert one * x == x == x * one


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_associativity_random(seed):
    rng = random.Random(seed)
    x, y, z = (random_element(C21, rng, 2) for _ in range(3))
    assert (x * y) * z == x * (y * z)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_straighten_is_idempotent_and_ordered(seed):
    rng = random.Random(seed)
    w = random_word(C21, rng, 3)
    x = straighten(C21, [(1, w)])
    assert all(is_ordered(C21, m) for m in x.terms)
    assert straighten(C21, [(c, m) for m, c in x.terms.items()]) == x


def test_relation_closure_small():
    assert relation_closure_failures(C11, 2) == []


def test_automorphism_examples():
    x = gen(C21, 1, 2, 1)
    assert apply_automorphism(C21, [], x) == x
    assert apply_automorphism(C21, [F(5)], x) == x
    for a in C21.indices:
        img = apply_automorphism(C21, [F(5)], gen(C21, a, a, 1))
        assert img == gen(C21, a, a, 1) + AlgebraElement.unit(C21, 5 * C21.sign(C21.parity(a)))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_automorphism_is_homomorphism(seed):
    rng = random.Random(seed)
    f = [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(2)]
    x, y = random_element(C11, rng, 2), random_element(C11, rng, 2)
    lhs = apply_automorphism(C11, f, x * y)
    rhs = apply_automorphism(C11, f, x) * apply_automorphism(C11, f, y)
    assert lhs == rhs


def test_counit_examples_and_multiplicativity():
    assert counit(C11, AlgebraElement.unit(C11)) == 1
    assert counit(C11, gen(C11, 1, 2, 3)) == 0
    assert counit(C11, AlgebraElement.unit(C11, 3) + gen(C11, 1, 1, 2)) == 3
    rng = random.Random(11)
    for _ in range(20):
        x, y = random_element(C21, rng, 2), random_element(C21, rng, 2)
        assert counit(C21, x * y) == counit(C21, x) * counit(C21, y)


def test_coproduct_examples():
    single = coproduct_symbolic(C21, 1, 3, 2, 1, [0])
    assert single[1].terms == {(((1, 3, 1),),): 1}
    for a, b in C21.pairs():
        modes = coproduct_symbolic(C21, a, b, 2, 2, [0, F(1, 2)])
        expected = {((), ()): C21.sign(C21.parity(b))} if a == b else {}
        assert modes[0].terms == expected
        for n, t in enumerate(modes):
            left = apply_counit_to_slot(t, 0)
            expect_n = {(((a, b, n),),): 1} if n else ({((),): C21.sign(C21.parity(b))} if a == b else {})
            shifted = coproduct_symbolic(C21, a, b, 2, 1, [0])[n]
            # counit on the left slot leaves t^a_b(u + alpha_2); at n <= 1 that equals t^a_b(u)
            if n <= 1:
                assert left.terms == expect_n == shifted.terms
    with pytest.raises(ValueError):
        coproduct_symbolic(C11, 1, 1, 1, 2, [1, 0])


def test_antipode_examples():
    S = antipode_images(C11, 2)
    for a, b in C11.pairs():
        s = S[(a, b, 1)]
        assert len(s) == 1
        ((mono, c),) = s.terms.items()
        assert mono == ((a, b, 1),) and c in (1, -1)
    for side in ("left", "right"):
        res = antipode_law_residuals(C11, 2, side)
        assert all(v.is_zero() for v in res.values())
