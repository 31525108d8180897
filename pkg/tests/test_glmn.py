from fractions import Fraction as F

import pytest

from syang.exactmath import largest_invariant_subspace
from syang.glmn import (
    GlElement,
    NotRealizedError,
    build_irrep,
    cyclic_subquotient,
    gl_bracket,
    gl_highest_weight_vectors,
    is_dominant,
    one_dim_rep,
    tensor,
    tensor_word,
    vector_rep,
)
from syang.superalgebra import GradingContext

C11 = GradingContext(1, 1)
C21 = GradingContext(2, 1)


def E(a, b):
    return GlElement.basis(a, b)


def vec(*xs):
    return tuple(F(x) for x in xs)


def test_bracket_examples():
    assert gl_bracket(C11, E(1, 1), E(1, 1)) == GlElement()
    assert gl_bracket(C11, E(1, 2), E(2, 1)) == E(1, 1) + E(2, 2)
    assert gl_bracket(C21, E(1, 2), E(2, 3)) == E(1, 3)


@pytest.mark.parametrize("ctx", [C11, C21, GradingContext(1, 2)])
def test_vector_rep(ctx):
    V = vector_rep(ctx)
    assert V.dim == ctx.size
    assert V.parity == tuple(ctx.parity(a) for a in ctx.indices)
    assert V.E(1, 2).apply(vec(*[int(i == 1) for i in range(ctx.size)]))[0] == 1
    ok, bad = V.check_relations()
    assert ok, bad


def test_vector_rep_weights():
    assert vector_rep(C11).weights == [vec(1, 0), vec(0, 1)]


def test_tensor_sign_and_relations():
    V = vector_rep(C11)
    W = tensor(C11, V, V)
    # E^2_1 (v1 (x) v1) = v2 (x) v1 + v1 (x) v2 ; basis order v_i (x) v_j -> 2i + j
    assert W.E(2, 1).apply(vec(1, 0, 0, 0)) == vec(0, 1, 1, 0)
    assert W.check_relations()[0]
    assert W.check_parity()
    W3 = tensor(C21, vector_rep(C21), vector_rep(C21))
    assert W3.dim == 9 and W3.check_relations()[0]


def test_weights_add_under_tensor():
    V = vector_rep(C21)
    W = tensor(C21, V, one_dim_rep(C21, 2))
    W = tensor(C21, V, W)
    expected = sorted(
        tuple(x + y + z for x, y, z in zip(p, q, (2, 2, -2))) for p in V.weights for q in V.weights
    )
    assert sorted(W.weights) == expected


def test_one_dim_rep():
    assert one_dim_rep(C11, 1).weights == [vec(1, -1)]
    triv = one_dim_rep(C21, 0)
    assert all(m.is_zero() for m in triv.action.values())
    assert triv.check_relations()[0]


def test_highest_weight_vectors():
    hv = gl_highest_weight_vectors(C21, vector_rep(C21))
    assert hv == [(vec(1, 0, 0), vec(1, 0, 0))]
    V = vector_rep(C11)
    hv = gl_highest_weight_vectors(C11, tensor(C11, V, V))
    assert [w for w, _ in hv] == [vec(2, 0), vec(1, 1)]
    v = hv[1][1]
    assert v[0] == 0 and v[3] == 0 and v[1] == -v[2] != 0
    W = tensor(C21, V := vector_rep(C21), V)
    for _, v in gl_highest_weight_vectors(C21, W):
        for a, b in C21.positive_pairs():
            assert not any(W.E(a, b).apply(v))


def _brute_quotient_dim(W, v):
    from syang.exactmath import closure

    ops = [W.action[p] for p in W.ctx.pairs()]
    span = closure([v], ops)
    weights = W.weights
    top = next(weights[i] for i, x in enumerate(v) if x)
    rest = [x for x in span if all(weights[i] != top for i, c in enumerate(x) if c)]
    M = largest_invariant_subspace(rest, ops, W.dim) if rest else []
    return len(span) - len(M)


def test_cyclic_subquotient_examples():
    V = vector_rep(C21)
    assert cyclic_subquotient(C21, V, vec(1, 0, 0)).dim == 3
    W = tensor(C11, vector_rep(C11), vector_rep(C11))
    Q = cyclic_subquotient(C11, W, vec(1, 0, 0, 0))
    assert Q.dim == _brute_quotient_dim(W, vec(1, 0, 0, 0)) == 2
    assert Q.check_relations()[0]
    one = one_dim_rep(C11, 3)
    assert cyclic_subquotient(C11, one, vec(1)).dim == 1
    with pytest.raises(ValueError):
        cyclic_subquotient(C11, one, vec(0))


def test_quotient_has_single_top_vector():
    W = tensor(C21, vector_rep(C21), vector_rep(C21))
    for mu, v in gl_highest_weight_vectors(C21, W):
        Q = cyclic_subquotient(C21, W, v)
        assert Q.check_relations()[0]
        assert Q.weights.count(mu) == 1
        assert len(gl_highest_weight_vectors(C21, Q)) == 1


def test_dominance():
    assert is_dominant(C21, [3, 1, -2])
    assert not is_dominant(C21, [1, 3, 0])
    assert is_dominant(C11, [F(1, 2), 7])
    assert not is_dominant(GradingContext(1, 2), [0, F(1, 2), 0])


def test_build_irrep():
    V = build_irrep(C21, 1, [1, 0, 0])
    assert V.dim == 3
    assert build_irrep(C11, 2, [2, 0]).dim == 2
    assert build_irrep(C11, 2, [1, 1]).dim == 2
    with pytest.raises(NotRealizedError):
        build_irrep(C21, 1, [2, 0, 0])
    with pytest.raises(ValueError):
        build_irrep(C21, 2, [0, 2, 0])
    assert tensor_word(C21, 2, 1).dim == 9
