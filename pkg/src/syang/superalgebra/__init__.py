"""The super Yangian Y(gl(M|N)): grading, PBW straightening and Hopf structure."""

from .grading import GradingContext, eta_sign
from .algebra import (
    AlgebraElement,
    apply_automorphism,
    commutator_rhs,
    counit,
    graded_commutator,
    is_ordered,
    multiply,
    straighten,
)
from .hopf import (
    TensorElement,
    antipode_images,
    antipode_law_residuals,
    apply_coproduct_to_slot,
    apply_counit_to_slot,
    coproduct_mode,
    coproduct_sign,
    coproduct_symbolic,
    shifted_series_coeff,
)

__all__ = [
    "AlgebraElement",
    "GradingContext",
    "TensorElement",
    "antipode_images",
    "antipode_law_residuals",
    "apply_automorphism",
    "apply_coproduct_to_slot",
    "apply_counit_to_slot",
    "commutator_rhs",
    "coproduct_mode",
    "coproduct_sign",
    "coproduct_symbolic",
    "counit",
    "eta_sign",
    "graded_commutator",
    "is_ordered",
    "multiply",
    "shifted_series_coeff",
    "straighten",
]
