"""
Shifted tensor products and their highest weights
=================================================

Two copies of the vector evaluation module of Y(gl(1|1)), the second
shifted by ``alpha``, give a four-dimensional module. Its top vector has a
highest weight equal to the star product of the factor weights, and for
generic ``alpha`` the module is irreducible.
"""

from fractions import Fraction

from syang.glmn import vector_rep
from syang.superalgebra import GradingContext
from syang.weights import evaluation_weight, star_product
from syang.yangian_modules import (
    evaluation_rep,
    irreducible_quotient,
    maximal_vectors,
    shifted_tensor,
    verify_defining_relations,
)

ctx = GradingContext(1, 1)
V = evaluation_rep(vector_rep(ctx))
alpha = Fraction(1, 2)
W = shifted_tensor([V, V], [0, alpha])

print("dimension:", W.dim)
print("relations up to level 4:", verify_defining_relations(W, 4).passed)

###############################################################################
# The joint kernel of the raising series is one-dimensional.

(hv,) = maximal_vectors(W)
print("maximal vector:", [str(c) for c in hv.vector])
print("highest weight:", hv.weight)

L = evaluation_weight(ctx, [1, 0])
print("equals star product:", hv.weight == star_product(L, L.shifted(alpha)))

###############################################################################
# Nothing to quotient out at a generic shift.

q = irreducible_quotient(W, hv)
print(f"cyclic span {q.cyclic_dim}, maximal submodule {q.maximal_submodule_dim}, quotient {q.module.dim}")
