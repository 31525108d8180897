"""Verification suites and independent oracles.

Each suite returns a :class:`SuiteReport` of named properties with
counterexample payloads. The oracles here deliberately avoid the code
paths they check: quotient dimensions come from a pairing rank instead of
the invariant-subspace fixpoint, and coassociativity compares two
different compositions of coproducts with the k-fold formula.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .exactmath import SparseMatrix, Vector, closure, nullspace, rank, span_basis
from .glmn import cyclic_subquotient, gl_highest_weight_vectors, tensor_word, vector_rep
from .superalgebra import (
    AlgebraElement,
    GradingContext,
    TensorElement,
    antipode_law_residuals,
    apply_coproduct_to_slot,
    apply_counit_to_slot,
    commutator_rhs,
    coproduct_mode,
    is_ordered,
    shifted_series_coeff,
    straighten,
)
from .yangian_modules import (
    YModule,
    cyclic_span,
    evaluation_rep,
    shifted_tensor,
    verify_defining_relations,
)


@dataclass
class PropertyResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)


@dataclass
class SuiteReport:
    suite: str
    ctx: GradingContext
    properties: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def add(self, name: str, passed: bool, **detail) -> PropertyResult:
        r = PropertyResult(name, bool(passed), detail)
        self.properties.append(r)
        return r

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ctx": self.ctx.as_dict(),
            "passed": self.passed,
            "properties": [{"name": p.name, "passed": p.passed, "detail": p.detail} for p in self.properties],
        }


# ---------------------------------------------------------------------------
# PBW / rewriting


def random_generator(ctx: GradingContext, rng: random.Random, level_max: int) -> tuple[int, int, int]:
    return (rng.choice(ctx.indices), rng.choice(ctx.indices), rng.randint(1, level_max))


def random_word(ctx: GradingContext, rng: random.Random, level_max: int, length_max: int = 4):
    return tuple(random_generator(ctx, rng, level_max) for _ in range(rng.randint(0, length_max)))


def random_element(ctx: GradingContext, rng: random.Random, level_max: int, terms: int = 2) -> AlgebraElement:
    pairs = [(rng.randint(-3, 3) or 1, random_word(ctx, rng, level_max, 2)) for _ in range(terms)]
    return straighten(ctx, pairs)


def relation_closure_failures(ctx: GradingContext, level_max: int) -> list[dict]:
    """Pairs of generators whose straightened graded commutator disagrees with the mode relation."""
    bad = []
    gens = [(a, b, n) for a, b in ctx.pairs() for n in range(1, level_max + 1)]
    for g, h in itertools.product(gens, repeat=2):
        s = ctx.sign(ctx.generator_parity(g) * ctx.generator_parity(h))
        lhs = straighten(ctx, [(1, (g, h)), (-s, (h, g))])
        rhs = commutator_rhs(ctx, g[0], g[1], g[2], h[0], h[1], h[2])
        if lhs != rhs:
            bad.append({"g": list(g), "h": list(h)})
    return bad


def suite_pbw(ctx: GradingContext, seed: int = 0, level_max: int = 3, samples: int = 500) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("pbw", ctx)
    bad_idem = None
    bad_order = None
    for _ in range(samples):
        w = random_word(ctx, rng, level_max)
        x = straighten(ctx, w)
        if any(not is_ordered(ctx, m) for m in x.terms) and bad_order is None:
            bad_order = [list(g) for g in w]
        again = straighten(ctx, [(c, m) for m, c in x.terms.items()])
        if again != x and bad_idem is None:
            bad_idem = [list(g) for g in w]
    rep.add("normal-form-ordered", bad_order is None, counterexample=bad_order, samples=samples)
    rep.add("straighten-idempotent", bad_idem is None, counterexample=bad_idem, samples=samples)
    bad_assoc = None
    for _ in range(samples):
        x, y, z = (random_element(ctx, rng, level_max) for _ in range(3))
        if (x * y) * z != x * (y * z):
            bad_assoc = {"x": str(x), "y": str(y), "z": str(z)}
            break
    rep.add("associativity", bad_assoc is None, counterexample=bad_assoc, samples=samples)
    bad = relation_closure_failures(ctx, level_max)
    rep.add("relation-closure", not bad, counterexample=bad[0] if bad else None, level_max=level_max)
    return rep


# ---------------------------------------------------------------------------
# Module relations


def standard_modules(ctx: GradingContext) -> list[tuple[str, YModule]]:
    """Evaluation modules of the vector irrep and of the irreducible pieces of V (x) V."""
    out = [("eval(V)", evaluation_rep(vector_rep(ctx)))]
    W = tensor_word(ctx, 2)
    for mu, vec in gl_highest_weight_vectors(ctx, W):
        g = cyclic_subquotient(ctx, W, vec)
        out.append((f"eval(L({','.join(str(x) for x in mu)}))", evaluation_rep(g)))
    return out


def suite_relations(
    ctx: GradingContext, level_max: int = 4, modules: Sequence[tuple[str, YModule]] | None = None
) -> SuiteReport:
    rep = SuiteReport("relations", ctx)
    for name, W in modules if modules is not None else standard_modules(ctx):
        r = verify_defining_relations(W, level_max)
        rep.add(f"relations[{name}]", r.passed, dim=W.dim, checked=r.checked, counterexample=r.counterexample)
    return rep


# ---------------------------------------------------------------------------
# Hopf structure


def _generator_tensor(ctx: GradingContext, g) -> TensorElement:
    return TensorElement(ctx, 1, {((g,),): 1})


def _series_tensor(ctx: GradingContext, a: int, b: int, alpha: Fraction, n: int) -> TensorElement:
    return TensorElement(ctx, 1, {(m,): c for m, c in shifted_series_coeff(ctx, a, b, alpha, n).items()})


def coassociativity_failures(
    ctx: GradingContext, order: int, shifts: tuple[Fraction, Fraction, Fraction]
) -> list[dict]:
    """Compare both compositions of two-fold coproducts with the three-fold formula.

    ``(D_{0,a} (x) id) D_{0,b} = D_{0,a,b}`` and ``(id (x) D_{0,c}) D_{0,b} = D_{0,b,b+c}``.
    """
    a, b, c = shifts
    bad = []
    for (i, j), n in itertools.product(ctx.pairs(), range(1, order + 1)):
        outer = coproduct_mode(ctx, i, j, n, (0, b))
        left = apply_coproduct_to_slot(outer, 0, (0, a))
        if left != coproduct_mode(ctx, i, j, n, (0, a, b)):
            bad.append({"side": "left", "pair": [i, j], "n": n})
        right = apply_coproduct_to_slot(outer, 1, (0, c))
        if right != coproduct_mode(ctx, i, j, n, (0, b, b + c)):
            bad.append({"side": "right", "pair": [i, j], "n": n})
    return bad


def counit_failures(ctx: GradingContext, order: int, shift: Fraction = Fraction(0)) -> list[dict]:
    bad = []
    for (i, j), n in itertools.product(ctx.pairs(), range(1, order + 1)):
        d = coproduct_mode(ctx, i, j, n, (0, shift))
        if apply_counit_to_slot(d, 1) != _generator_tensor(ctx, (i, j, n)):
            bad.append({"side": "id(x)eps", "pair": [i, j], "n": n})
        if apply_counit_to_slot(d, 0) != _series_tensor(ctx, i, j, shift, n):
            bad.append({"side": "eps(x)id", "pair": [i, j], "n": n})
    return bad


def suite_hopf(ctx: GradingContext, order: int = 3, antipode_order: int = 2) -> SuiteReport:
    rep = SuiteReport("hopf", ctx)
    for shifts in ((Fraction(0),) * 3, (Fraction(1, 2), Fraction(1, 3), Fraction(-2, 5))):
        bad = coassociativity_failures(ctx, order, shifts)
        rep.add(
            f"coassociativity[shifts={','.join(map(str, shifts))}]",
            not bad, order=order, counterexample=bad[0] if bad else None,
        )
    for shift in (Fraction(0), Fraction(3, 2)):
        bad = counit_failures(ctx, order, shift)
        rep.add(f"counit[shift={shift}]", not bad, order=order, counterexample=bad[0] if bad else None)
    for side in ("left", "right"):
        res = antipode_law_residuals(ctx, antipode_order, side)
        bad = [{"a": a, "b": b, "n": n, "residual": str(x)} for (a, b, n), x in sorted(res.items()) if not x.is_zero()]
        rep.add(f"antipode-{side}", not bad, order=antipode_order, counterexample=bad[0] if bad else None)
    return rep


# ---------------------------------------------------------------------------
# Oracles for quotient dimensions


def _transpose_ops(W: YModule, levels: int) -> list[SparseMatrix]:
    return [W.mode(a, b, n).T for a, b in W.ctx.pairs() for n in range(1, levels + 1)]


def pairing_oracle(W: YModule, v: Vector, span: Sequence[Vector], levels: int) -> tuple[int, int]:
    """``(dim of irreducible quotient, dim of maximal submodule)`` inside ``span``.

    A vector ``c`` lies in the maximal submodule iff ``phi(y c) = 0`` for all
    ``y`` in the algebra, where ``phi`` reads off the top weight line. The
    functionals ``phi o y`` are generated by brute-force closure under the
    transposed mode matrices of levels ``1..levels``.
    """
    weights = _diag_weights(W)
    top = _top_weight(W, v)
    phi = tuple(v[i] if weights[i] == top else Fraction(0) for i in range(W.dim))
    functionals = closure([phi], _transpose_ops(W, levels))
    pairing = [[sum((f[i] * c[i] for i in range(W.dim)), Fraction(0)) for c in span] for f in functionals]
    r = rank(pairing) if pairing else 0
    return r, len(span) - r


def _diag_weights(W: YModule) -> list[tuple[Fraction, ...]]:
    diag = []
    for a in W.ctx.indices:
        m = W.mode(a, a, 1)
        if not m.is_diagonal():
            raise ValueError("pairing oracle needs diagonal level-1 Cartan action")
        diag.append(m.diagonal())
    return [tuple(d[i] for d in diag) for i in range(W.dim)]


def _top_weight(W: YModule, v: Vector) -> tuple[Fraction, ...]:
    weights = _diag_weights(W)
    tops = {weights[i] for i, x in enumerate(v) if x}
    if len(tops) != 1:
        raise ValueError("not a weight vector")
    return tops.pop()


def brute_closure_dim(W: YModule, v: Vector, levels: int) -> int:
    """Dimension of the span of ``v`` under all modes of levels ``1..levels``."""
    ops = [W.mode(a, b, n) for a, b in W.ctx.pairs() for n in range(1, levels + 1)]
    return len(closure([v], ops))


def operator_algebra(ops: Sequence[SparseMatrix], n: int) -> list[SparseMatrix]:
    """Basis of the unital associative algebra generated by ``ops`` inside ``End(Q^n)``."""
    one = SparseMatrix.identity(n)
    flat = closure([_flat(one)], [_left_mult(X, n) for X in ops])
    return [_unflat(f, n) for f in flat]


def _flat(m: SparseMatrix) -> Vector:
    out = [Fraction(0)] * (m.rows * m.cols)
    for (i, j), v in m.entries.items():
        out[i * m.cols + j] = v
    return tuple(out)


def _unflat(v: Sequence[Fraction], n: int) -> SparseMatrix:
    return SparseMatrix(n, n, {(k // n, k % n): x for k, x in enumerate(v) if x})


def _left_mult(X: SparseMatrix, n: int) -> SparseMatrix:
    # A -> X A on row-major flattened n x n matrices
    return X.kron(SparseMatrix.identity(n))


def module_radical(ops: Sequence[SparseMatrix], n: int) -> list[Vector]:
    """``J W`` with ``J`` the Jacobson radical of the operator algebra.

    In characteristic 0, ``J = {a in A : tr(a b) = 0 for all b in A}``. The
    quotient ``W / J W`` is the head of ``W``; when it is simple, ``J W`` is
    the unique maximal proper submodule.
    """
    A = operator_algebra(ops, n)
    gram = [[_trace(a @ b) for a in A] for b in A]
    J = [_combine_matrices(A, c) for c in nullspace(gram, len(A))]
    images = [a.apply(tuple(Fraction(int(i == j)) for i in range(n))) for a in J for j in range(n)]
    images = [w for w in images if any(w)]
    return span_basis(images, n) if images else []


def _trace(m: SparseMatrix) -> Fraction:
    return sum((v for (i, j), v in m.entries.items() if i == j), Fraction(0))


def _combine_matrices(mats: Sequence[SparseMatrix], coeffs: Sequence[Fraction]) -> SparseMatrix:
    out = SparseMatrix.zero(mats[0].rows)
    for m, c in zip(mats, coeffs):
        if c:
            out = out + m.scale(c)
    return out


def candidate_alphas(bound: int = 4) -> list[Fraction]:
    """Distinct rationals ``p/q`` with ``|p|, |q| <= bound``, ``q != 0``."""
    vals = {Fraction(p, q) for p in range(-bound, bound + 1) for q in range(1, bound + 1)}
    return sorted(vals)


@dataclass(frozen=True)
class ScanPoint:
    """One ``alpha`` of the gl(1|1) survey.

    ``quotient_dim`` / ``maximal_submodule_dim`` refer to the cyclic span of
    the top vector (pairing oracle). ``radical`` is ``J W`` for the whole
    four-dimensional tensor and ``head_dim = 4 - dim J W``.
    """

    alpha: Fraction
    cyclic_dim: int
    quotient_dim: int
    maximal_submodule_dim: int
    module_maximal_submodule_dim: int
    radical: tuple[Vector, ...] = ()
    head_simple: bool = True

    @property
    def degenerate(self) -> bool:
        return self.cyclic_dim < 4 or self.maximal_submodule_dim > 0 or bool(self.radical)

    @property
    def head_dim(self) -> int:
        return 4 - len(self.radical)


def _unit_basis(n: int) -> list[Vector]:
    return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]


def gl11_pair_scan(alphas: Sequence[Fraction], levels: int = 6) -> list[ScanPoint]:
    """Brute-force survey of ``V(u) (x) V(u + alpha)`` for Y(gl(1|1)).

    For each ``alpha``: the cyclic span of ``v1 (x) v1``, the pairing-rank
    split of that span, the same split inside the whole module, and the
    radical of the operator algebra acting on the whole module.
    """
    from .yangian_modules import maximal_space_dimension, subquotient_module

    ctx = GradingContext(1, 1)
    E = evaluation_rep(vector_rep(ctx))
    top = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))
    full = _unit_basis(4)
    out = []
    for al in alphas:
        T = shifted_tensor([E, E], [0, al])
        ops = [T.mode(a, b, n) for a, b in ctx.pairs() for n in range(1, levels + 1)]
        span = closure([top], ops)
        q, m = pairing_oracle(T, top, span, levels)
        _, m_full = pairing_oracle(T, top, full, levels)
        rad = module_radical(ops, 4)
        simple = True
        if rad:
            simple = maximal_space_dimension(subquotient_module(T, full, rad)) == 1
        out.append(ScanPoint(al, len(span), q, m, m_full, tuple(rad), simple))
    return out


def suite_oracle(ctx: GradingContext, seed: int = 0, generic_samples: int = 10) -> SuiteReport:
    """Generic and degenerate behaviour of two-factor gl(1|1) tensors against the oracles."""
    rep = SuiteReport("oracle", ctx)
    if (ctx.M, ctx.N) != (1, 1):
        rep.add("applicable", True, note="oracle suite is defined for gl(1|1) only")
        return rep
    points = gl11_pair_scan(candidate_alphas(4))
    degenerate = [p for p in points if p.degenerate]
    generic = [p for p in points if not p.degenerate]
    rep.add(
        "degenerate-alpha-found",
        bool(degenerate),
        alphas=[str(p.alpha) for p in degenerate],
    )
    rep.add(
        "generic-quotient-dim-4",
        all(p.quotient_dim == 4 and p.maximal_submodule_dim == 0 for p in generic),
        generic_count=len(generic),
    )
    rep.add(
        "additivity",
        all(p.quotient_dim + p.maximal_submodule_dim == p.cyclic_dim for p in points),
    )
    rng = random.Random(seed)
    bad_set = {p.alpha for p in degenerate}
    E = evaluation_rep(vector_rep(ctx))
    mismatch = None
    for _ in range(generic_samples):
        al = Fraction(rng.randint(-50, 50), rng.randint(1, 17))
        if al in bad_set:
            continue
        T = shifted_tensor([E, E], [0, al])
        v = (Fraction(1),) + (Fraction(0),) * 3
        if len(cyclic_span(T, v)) != brute_closure_dim(T, v, 6):
            mismatch = str(al)
            break
    rep.add("cyclic-span-vs-brute-closure", mismatch is None, counterexample=mismatch)
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "pbw": suite_pbw,
    "relations": suite_relations,
    "hopf": suite_hopf,
    "oracle": suite_oracle,
}
