"""Exact computations in the super Yangian Y(gl(M|N)).

Subpackages
-----------
exactmath        rationals, polynomials, rational functions, sparse linear algebra
superalgebra     grading, PBW straightening, coproduct / counit / antipode
glmn             gl(M|N) modules and their irreducible pieces
yangian_modules  evaluation, shifted tensor, quotient and induced modules
weights          star product, twists, finite-dimensionality and Drinfeld data
verify           property suites and independent oracles
serialize        canonical JSON
"""

__version__ = "0.1.0"

from . import exactmath, glmn, superalgebra, weights, yangian_modules  # noqa: E402
from .superalgebra import AlgebraElement, GradingContext, straighten  # noqa: E402
from .glmn import GlModule, build_irrep, vector_rep  # noqa: E402
from .weights import HighestWeight, check_finite_dim, star_product  # noqa: E402
from .yangian_modules import (  # noqa: E402
    YModule,
    evaluation_rep,
    irreducible_quotient,
    maximal_vectors,
    shifted_tensor,
    verify_defining_relations,
)

__all__ = [
    "AlgebraElement",
    "GlModule",
    "GradingContext",
    "HighestWeight",
    "YModule",
    "build_irrep",
    "check_finite_dim",
    "evaluation_rep",
    "exactmath",
    "glmn",
    "irreducible_quotient",
    "maximal_vectors",
    "shifted_tensor",
    "star_product",
    "straighten",
    "superalgebra",
    "vector_rep",
    "verify_defining_relations",
    "weights",
    "yangian_modules",
]
