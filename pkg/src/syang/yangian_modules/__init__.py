"""Y(gl(M|N)) modules: evaluation and shifted tensor modules, maximal vectors, quotients."""

from .modules import (
    NotMaximalError,
    QuotientResult,
    RelationReport,
    YHighestVector,
    YModule,
    action_mode,
    constant_terms_ok,
    cyclic_span,
    evaluation_rep,
    highest_weight_of,
    irreducible_quotient,
    maximal_space_dimension,
    maximal_vectors,
    mode_recurrence_certificate,
    shifted_tensor,
    subquotient_module,
    verify_defining_relations,
)

__all__ = [
    "NotMaximalError",
    "QuotientResult",
    "RelationReport",
    "YHighestVector",
    "YModule",
    "action_mode",
    "constant_terms_ok",
    "cyclic_span",
    "evaluation_rep",
    "highest_weight_of",
    "irreducible_quotient",
    "maximal_space_dimension",
    "maximal_vectors",
    "mode_recurrence_certificate",
    "shifted_tensor",
    "subquotient_module",
    "verify_defining_relations",
]

from .induced import (  # noqa: E402
    InducedData,
    InducedResult,
    InducedSpace,
    NoncommutingDataError,
    induced_module_truncated,
    induced_until_stable,
    odd_monomials,
)

__all__ += [
    "InducedData",
    "InducedResult",
    "InducedSpace",
    "NoncommutingDataError",
    "induced_module_truncated",
    "induced_until_stable",
    "odd_monomials",
]
