"""Finite-dimensional Y(gl(M|N)) modules with rational action ``t^a_b(u)``.

Every action is a :class:`RatFunMatrix` in ``u``; modes are read off as
series coefficients. The maximal-vector condition "``t^a_b[n] v = 0`` for
all ``n``" becomes a finite linear system on the numerator coefficients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..exactmath import (
    Polynomial,
    RatFun,
    RatFunMatrix,
    SparseMatrix,
    Vector,
    as_q,
    closure,
    coordinates,
    in_span,
    independent_subset,
    largest_invariant_subspace,
    nullspace,
    rational_eigenspaces,
    span_basis,
)
from ..glmn import GlModule
from ..superalgebra import GradingContext
from ..superalgebra.hopf import coproduct_sign
from ..weights import HighestWeight

Pair = tuple[int, int]


class NotMaximalError(ValueError):
    """The vector is not annihilated by the raising series or not a joint eigenvector."""


@dataclass(frozen=True, eq=False)
class YModule:
    """Module with exact action ``t^a_b(u) = N_ab(u) / d_ab(u)`` for every pair."""

    ctx: GradingContext
    parity: tuple[int, ...]
    action: Mapping[Pair, RatFunMatrix]
    provenance: Mapping = field(default_factory=dict)
    _modes: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        missing = set(self.ctx.pairs()) - set(self.action)
        if missing:
            raise ValueError(f"action missing for pairs {sorted(missing)}")
        for key, m in self.action.items():
            if m.shape != (self.dim, self.dim):
                raise ValueError(f"action {key} has shape {m.shape}, module dim {self.dim}")

    @property
    def dim(self) -> int:
        return len(self.parity)

    def t(self, a: int, b: int) -> RatFunMatrix:
        return self.action[(a, b)]

    def modes(self, a: int, b: int, order: int) -> list[SparseMatrix]:
        """``t^a_b[0..order]`` as constant matrices."""
        cached = self._modes.get((a, b))
        if cached is None or len(cached) <= order:
            cached = self.action[(a, b)].modes(max(order, 2 * len(cached or [0])))
            self._modes[(a, b)] = cached
        return cached[: order + 1]

    def mode(self, a: int, b: int, n: int) -> SparseMatrix:
        return self.modes(a, b, n)[n]

    def denominator_degree(self) -> int:
        return max(m.den.degree for m in self.action.values())

    def with_action(self, action: Mapping[Pair, RatFunMatrix], **prov) -> YModule:
        return YModule(self.ctx, self.parity, dict(action), {**self.provenance, **prov})

    def vector_parity(self, v: Sequence[Fraction]) -> int:
        ps = {self.parity[i] for i, x in enumerate(v) if x}
        if len(ps) > 1:
            raise ValueError("vector is not homogeneous")
        return ps.pop() if ps else 0


@dataclass(frozen=True)
class YHighestVector:
    vector: Vector
    weight: HighestWeight


def _u() -> Polynomial:
    return Polynomial([0, 1], "u")


def evaluation_rep(gamma: GlModule) -> YModule:
    """``t^a_b(u) -> (-1)^[b] delta^a_b + gamma(E^a_b) u^-1``."""
    ctx = gamma.ctx
    n = gamma.dim
    action = {}
    for a, b in ctx.pairs():
        const = SparseMatrix.identity(n, ctx.sign(ctx.parity(b))) if a == b else SparseMatrix.zero(n)
        action[(a, b)] = RatFunMatrix([gamma.E(a, b), const], _u()).reduced()
    return YModule(ctx, gamma.parity, action, {"kind": "evaluation", "label": gamma.label})


def _parity_sign_matrix(ctx: GradingContext, op_parity: int, parity: Sequence[int]) -> SparseMatrix:
    n = len(parity)
    return SparseMatrix(n, n, {(i, i): ctx.sign(op_parity * p) for i, p in enumerate(parity)})


def shifted_tensor(factors: Sequence[YModule], alphas: Sequence[int | Fraction]) -> YModule:
    """Module on ``W_1 (x) ... (x) W_k`` through the shifted k-fold coproduct.

    Factor ``i`` is evaluated at ``u + alpha_i``. Operators act on pure
    tensors with the Koszul sign ``(-1)^{|A_j| |v_i|}`` for ``i < j``.
    """
    if not factors:
        raise ValueError("need at least one factor")
    alphas = [as_q(x) for x in alphas]
    if len(alphas) != len(factors):
        raise ValueError(f"{len(factors)} factors but {len(alphas)} shifts")
    if alphas[0] != 0:
        raise ValueError("the first shift parameter must be 0")
    ctx = factors[0].ctx
    if any(W.ctx != ctx for W in factors):
        raise ValueError("factors over different algebras")
    k = len(factors)
    shifted = [{p: W.action[p].shift(al) for p in ctx.pairs()} for W, al in zip(factors, alphas)]
    prefix_parity = [factors[0].parity]
    for W in factors[1:]:
        prefix_parity.append(tuple((p + q) % 2 for p in prefix_parity[-1] for q in W.parity))
    action = {}
    for a, b in ctx.pairs():
        total = None
        for mids in itertools.product(ctx.indices, repeat=k - 1):
            chain = (b,) + mids + (a,)
            ops = [shifted[i][(chain[i + 1], chain[i])] for i in range(k)]
            if any(op.is_zero() for op in ops):
                continue
            X = ops[0]
            for j in range(1, k):
                D = _parity_sign_matrix(ctx, ctx.pair_parity(chain[j + 1], chain[j]), prefix_parity[j - 1])
                X = X.map_constant(lambda C, D=D: C @ D).kron(ops[j])
            X = X.scale(coproduct_sign(ctx, chain))
            total = X if total is None else total + X
        if total is None:
            n = len(prefix_parity[-1])
            total = RatFunMatrix.constant(SparseMatrix.zero(n))
        action[(a, b)] = total.reduced()
    prov = {
        "kind": "tensor",
        "alphas": [str(x) for x in alphas],
        "factors": [dict(W.provenance) for W in factors],
    }
    return YModule(ctx, prefix_parity[-1], action, prov)


def action_mode(W: YModule, a: int, b: int, n: int) -> SparseMatrix:
    """Coefficient of ``u^-n`` in ``t^a_b(u)``."""
    if n < 0:
        raise ValueError("mode index must be nonnegative")
    return W.mode(a, b, n)


def mode_recurrence_certificate(W: YModule) -> bool:
    """Modes ``d+1..2d`` of each ``t^a_b(u)`` lie in the span of modes ``0..d``.

    ``d`` is the degree of that pair's denominator; with the recurrence
    inherited from ``d(u)`` this makes finitely many modes generate all of them.
    """
    for (a, b), m in W.action.items():
        d = max(m.den.degree, 1)
        ms = W.modes(a, b, 2 * d)
        low = [_flatten(x) for x in ms[: d + 1]]
        for x in ms[d + 1 :]:
            if not in_span(low, _flatten(x)):
                return False
    return True


def _flatten(m: SparseMatrix) -> Vector:
    rows, cols = m.shape
    out = [Fraction(0)] * (rows * cols)
    for (i, j), v in m.entries.items():
        out[i * cols + j] = v
    return tuple(out)


# ---------------------------------------------------------------------------
# Defining relations on a module


@dataclass(frozen=True)
class RelationReport:
    passed: bool
    checked: int
    counterexample: dict | None = None


def _relation_rhs(W: YModule, a1: int, b1: int, m: int, a2: int, b2: int, n: int) -> SparseMatrix:
    ctx = W.ctx
    top = m + n - 1
    out = SparseMatrix.zero(W.dim)
    if a2 == b1:
        out = out + W.mode(a1, b2, top)
    if a1 == b2:
        out = out - W.mode(a2, b1, top).scale(ctx.sign(ctx.pair_parity(a1, b1) * ctx.pair_parity(a2, b2)))
    s = ctx.sign(ctx.eta(a1, b1, a2, b2))
    for r in range(1, min(m, n)):
        term = W.mode(a2, b1, r) @ W.mode(a1, b2, top - r) - W.mode(a2, b1, top - r) @ W.mode(a1, b2, r)
        out = out + term.scale(s)
    return out


def verify_defining_relations(W: YModule, level_max: int = 4) -> RelationReport:
    """Exhaustive check of the mode relation for all index quadruples and ``m, n <= level_max``."""
    ctx = W.ctx
    checked = 0
    for (a1, b1), (a2, b2) in itertools.product(ctx.pairs(), repeat=2):
        s = ctx.sign(ctx.pair_parity(a1, b1) * ctx.pair_parity(a2, b2))
        for m in range(1, level_max + 1):
            X = W.mode(a1, b1, m)
            for n in range(1, level_max + 1):
                Y = W.mode(a2, b2, n)
                lhs = X @ Y - (Y @ X).scale(s)
                rhs = _relation_rhs(W, a1, b1, m, a2, b2, n)
                checked += 1
                if lhs != rhs:
                    return RelationReport(
                        False, checked, {"a1": a1, "b1": b1, "m": m, "a2": a2, "b2": b2, "n": n}
                    )
    return RelationReport(True, checked)


def constant_terms_ok(W: YModule) -> bool:
    """``t^a_b(oo) = (-1)^[b] delta^a_b``."""
    for (a, b), m in W.action.items():
        want = SparseMatrix.identity(W.dim, W.ctx.sign(W.ctx.parity(b))) if a == b else SparseMatrix.zero(W.dim)
        if m.modes(0)[0] != want:
            return False
    return True


# ---------------------------------------------------------------------------
# Maximal vectors and highest weights


def _raising_kernel(W: YModule) -> list[Vector]:
    rows: list[list[Fraction]] = []
    for p in W.ctx.positive_pairs():
        for c in W.action[p].coeffs:
            rows.extend(c.to_dense())
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(W.dim)) for i in range(W.dim)]
    return nullspace(rows, W.dim)


def _restrict(op: SparseMatrix, basis: Sequence[Vector]) -> SparseMatrix:
    """Matrix of ``op`` on ``span(basis)``, assumed invariant."""
    k = len(basis)
    entries = {}
    for j, v in enumerate(basis):
        c = coordinates(basis, op.apply(v))
        for i, x in enumerate(c):
            if x:
                entries[(i, j)] = x
    return SparseMatrix(k, k, entries)


def _joint_eigenvectors(ops: Sequence[SparseMatrix], basis: Sequence[Vector]) -> list[Vector]:
    spaces = [list(basis)]
    for op in ops:
        refined = []
        for S in spaces:
            R = _restrict(op, S)
            if R.is_zero() or R == SparseMatrix.identity(len(S), R[0, 0]):
                refined.append(S)
                continue
            eig, _ = rational_eigenspaces(R)
            for vecs in eig.values():
                refined.append([_combine(S, c) for c in vecs])
        spaces = refined
    out: list[Vector] = []
    for S in spaces:
        out.extend(S)
    return out


def _combine(basis: Sequence[Vector], coeffs: Sequence[Fraction]) -> Vector:
    n = len(basis[0])
    return tuple(sum((c * v[i] for c, v in zip(coeffs, basis) if c), Fraction(0)) for i in range(n))


def _diagonal_eigenvalue(W: YModule, a: int, v: Vector) -> RatFun | None:
    m = W.action[(a, a)]
    lam = []
    for c in m.coeffs:
        img = c.apply(v)
        ratio = _proportionality(img, v)
        if ratio is None:
            return None
        lam.append(ratio)
    num = Polynomial(lam, "x")
    den = Polynomial(m.den.coeffs, "x")
    return RatFun(num, den)


def _proportionality(w: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction | None:
    i = next(i for i, x in enumerate(v) if x)
    r = w[i] / v[i]
    if any(wj != r * vj for wj, vj in zip(w, v)):
        return None
    return r


def highest_weight_of(W: YModule, v: Sequence[Fraction]) -> HighestWeight:
    """The eigenvalue tuple of the diagonal series on a maximal vector."""
    v = tuple(as_q(x) for x in v)
    if not any(v):
        raise NotMaximalError("zero vector")
    for p in W.ctx.positive_pairs():
        if any(any(c.apply(v)) for c in W.action[p].coeffs):
            raise NotMaximalError(f"t^{p[0]}_{p[1]}(u) does not annihilate the vector")
    comps = []
    for a in W.ctx.indices:
        lam = _diagonal_eigenvalue(W, a, v)
        if lam is None:
            raise NotMaximalError(f"not an eigenvector of t^{a}_{a}(u)")
        comps.append(lam)
    return HighestWeight(W.ctx, tuple(comps))


def maximal_vectors(W: YModule) -> list[YHighestVector]:
    """Basis of maximal vectors, grouped by highest weight.

    The raising kernel is stable under every diagonal series; it is split
    into joint eigenspaces of the diagonal numerator coefficients (rational
    eigenvalues only).
    """
    kernel = _raising_kernel(W)
    if not kernel:
        return []
    ops = [c for a in W.ctx.indices for c in W.action[(a, a)].coeffs]
    vecs = _joint_eigenvectors(ops, kernel)
    try:
        vecs.sort(key=lambda v: tuple(-x for x in _weight_of(W, v)))
    except ValueError:
        pass  # level-1 Cartan action not diagonal on these vectors; keep solver order
    return [YHighestVector(v, highest_weight_of(W, v)) for v in vecs]


def maximal_space_dimension(W: YModule) -> int:
    """Dimension of the joint raising kernel (the maximal-vector system)."""
    return len(_raising_kernel(W))


# ---------------------------------------------------------------------------
# Cyclic spans and irreducible quotients


def _mode_operators(W: YModule) -> list[SparseMatrix]:
    ops = []
    for (a, b), m in W.action.items():
        d = max(m.den.degree, 1)
        ops.extend(x for x in W.modes(a, b, d)[1:] if not x.is_zero())
    return ops


def cyclic_span(W: YModule, v: Sequence[Fraction]) -> list[Vector]:
    """Basis of ``Y v``, closed under modes ``1..deg d_ab`` of every pair.

    The mode recurrence makes higher modes combinations of these, so the
    span is invariant under the whole algebra.
    """
    v = tuple(as_q(x) for x in v)
    if not any(v):
        raise ValueError("cyclic generator must be nonzero")
    if not mode_recurrence_certificate(W):
        raise AssertionError("mode recurrence certificate failed")
    return closure([v], _mode_operators(W))


def _cartan_weights(W: YModule) -> list[tuple[Fraction, ...]] | None:
    diag = []
    for a in W.ctx.indices:
        m = W.mode(a, a, 1)
        if not m.is_diagonal():
            return None
        diag.append(m.diagonal())
    return [tuple(d[i] for d in diag) for i in range(W.dim)]


def _weight_of(W: YModule, v: Vector) -> tuple[Fraction, ...]:
    out = []
    for a in W.ctx.indices:
        r = _proportionality(W.mode(a, a, 1).apply(v), v)
        if r is None:
            raise ValueError("vector is not a gl weight vector")
        out.append(r)
    return tuple(out)


def _split_homogeneous(parity: Sequence[int], basis: Sequence[Vector]) -> list[Vector]:
    pieces = []
    for p in (0, 1):
        proj = [tuple(x if parity[i] == p else Fraction(0) for i, x in enumerate(v)) for v in basis]
        proj = [w for w in proj if any(w)]
        if proj:
            pieces.extend(span_basis(proj, len(parity)))
    return pieces


@dataclass(frozen=True)
class QuotientResult:
    module: YModule
    cyclic_dim: int
    maximal_submodule_dim: int
    maximal_space_dim: int


def subquotient_module(W: YModule, sub: Sequence[Vector], kernel: Sequence[Vector], **prov) -> YModule:
    """Module on ``span(sub) / span(kernel)`` with representatives from ``sub`` in order."""
    kernel = list(kernel)
    k = len(kernel)
    idx = independent_subset(kernel + list(sub))
    if idx[:k] != list(range(k)):
        raise ValueError("kernel vectors are dependent")
    reps = [sub[i - k] for i in idx if i >= k]
    full = kernel + reps
    r = len(reps)

    def project(C: SparseMatrix) -> SparseMatrix:
        entries = {}
        for j, rep in enumerate(reps):
            c = coordinates(full, C.apply(rep))
            for i in range(r):
                if c[k + i]:
                    entries[(i, j)] = c[k + i]
        return SparseMatrix(r, r, entries)

    action = {p: m.map_constant(project).reduced() for p, m in W.action.items()}
    parity = tuple(W.vector_parity(x) for x in reps)
    return YModule(W.ctx, parity, action, {"kind": "quotient", "of": dict(W.provenance), **prov})


def irreducible_quotient(W: YModule, hv: YHighestVector | Sequence[Fraction]) -> QuotientResult:
    """``Y v / M`` with ``M`` the largest submodule avoiding the top weight line."""
    v = tuple(as_q(x) for x in (hv.vector if isinstance(hv, YHighestVector) else hv))
    highest_weight_of(W, v)  # raises unless v is maximal
    span = cyclic_span(W, v)
    top = _weight_of(W, v)
    complement = [x for x in span if _weight_of(W, x) != top]
    complement = span_basis(complement, W.dim) if complement else []
    ops = _mode_operators(W)
    maximal = largest_invariant_subspace(complement, ops, W.dim) if complement else []
    maximal = _split_homogeneous(W.parity, maximal)
    Q = subquotient_module(W, span, maximal, cyclic_dim=len(span), maximal_submodule_dim=len(maximal))
    return QuotientResult(Q, len(span), len(maximal), maximal_space_dimension(Q))
