"""
Deciding finite dimensionality
==============================

A highest weight gives a finite-dimensional irreducible module exactly
when consecutive ratios of its components are shift quotients of
polynomials. The checker returns those polynomials, and the weight then
factors into fundamental pieces up to a scalar twist.
"""

from syang.superalgebra import GradingContext
from syang.weights import (
    check_finite_dim,
    evaluation_weight,
    factor_into_fundamentals,
    star_all,
    twist,
)

ctx = GradingContext(2, 1)

for mu in ([3, 1, -2], [1, 3, 0]):
    L = evaluation_weight(ctx, mu)
    v = check_finite_dim(L)
    print(f"mu = {mu}: {v.status}")
    if v.finite:
        print("  P_1 =", v.data.P[1])
        print("  Qtilde_2 =", v.data.Qtilde_M, "  Q_2 =", v.data.Q_M)
        f, factors = factor_into_fundamentals(L, v.data)
        for fac in factors:
            print(f"  factor t={fac.t}: {fac.weight}")
        print("  twist f =", f)
        print("  round trip:", twist(f, star_all(ctx, [x.weight for x in factors])) == L)
    else:
        print("  witness:", v.witness)

###############################################################################
# Twisting by any ``f`` with ``f(oo) = 1`` leaves the verdict unchanged.

L = evaluation_weight(ctx, [2, 0, 1])
print(check_finite_dim(twist([1, 3, -2], L)).data == check_finite_dim(L).data)
