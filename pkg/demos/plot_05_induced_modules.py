"""
The induced construction, cutoff by cutoff
==========================================

A one-dimensional module of the even subalgebra is induced up with odd
lowering monomials, then cut down to the quotient seen by odd raising
tests. Raising the cutoff ``D`` adds monomials until the quotient stops
changing. The stable answer matches the tensor-product module with the
same highest weight.
"""

from fractions import Fraction

from syang.glmn import vector_rep
from syang.superalgebra import GradingContext
from syang.yangian_modules import (
    InducedData,
    evaluation_rep,
    highest_weight_of,
    induced_module_truncated,
    shifted_tensor,
)

ctx = GradingContext(1, 1)
V = evaluation_rep(vector_rep(ctx))
W = shifted_tensor([V, V], [0, Fraction(1, 2)])
Lam = highest_weight_of(W, (1, 0, 0, 0))
print("target weight:", Lam)

data = InducedData.one_dimensional(ctx, Lam)
for D in range(1, 6):
    r = induced_module_truncated(ctx, data, D)
    print(
        f"D={D}: ambient {r.ambient_dim}, quotient {r.quotient_dim}, "
        f"weight matches {r.highest_weight == Lam}, stable vs D-1 {r.stabilized}"
    )
