"""The Lie superalgebra gl(M|N) and its finite-dimensional modules.

A :class:`GlModule` carries an explicit parity bit per basis vector; every
graded sign is computed from those bits, never guessed from indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exactmath import (
    SparseMatrix,
    Vector,
    as_q,
    closure,
    coordinates,
    independent_subset,
    largest_invariant_subspace,
    nullspace,
    span_basis,
)
from .superalgebra import GradingContext

Pair = tuple[int, int]


class GlElement(dict):
    """Finitely supported combination ``sum c_ab E^a_b`` keyed by ``(a, b)``."""

    def __init__(self, terms: Mapping[Pair, Fraction | int] | None = None):
        super().__init__({k: as_q(v) for k, v in (terms or {}).items() if v})

    @classmethod
    def basis(cls, a: int, b: int) -> GlElement:
        return cls({(a, b): 1})

    def __add__(self, other: GlElement) -> GlElement:
        out = dict(self)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return GlElement(out)

    def scale(self, c) -> GlElement:
        return GlElement({k: v * c for k, v in self.items()})


def gl_bracket(ctx: GradingContext, x: GlElement, y: GlElement) -> GlElement:
    """Bilinear graded bracket ``[E^a_b, E^c_d} = d^c_b E^a_d - (-1)^{..} d^a_d E^c_b``."""
    out: dict[Pair, Fraction] = {}
    for (a, b), s in x.items():
        for (c, d), t in y.items():
            w = s * t
            if b == c:
                out[(a, d)] = out.get((a, d), 0) + w
            if a == d:
                sign = ctx.sign(ctx.pair_parity(a, b) * ctx.pair_parity(c, d))
                out[(c, b)] = out.get((c, b), 0) - sign * w
    return GlElement(out)


@dataclass(frozen=True, eq=False)
class GlModule:
    """Finite-dimensional gl(M|N) module with exact action matrices for every ``E^a_b``."""

    ctx: GradingContext
    parity: tuple[int, ...]
    action: Mapping[Pair, SparseMatrix]
    label: str = ""

    @property
    def dim(self) -> int:
        return len(self.parity)

    def E(self, a: int, b: int) -> SparseMatrix:
        return self.action[(a, b)]

    def act(self, x: GlElement) -> SparseMatrix:
        out = SparseMatrix.zero(self.dim)
        for (a, b), c in x.items():
            out = out + self.action[(a, b)].scale(c)
        return out

    @property
    def weights(self) -> list[tuple[Fraction, ...]]:
        """Diagonal eigenvalues of the ``E^a_a`` in the stored basis."""
        for a in self.ctx.indices:
            if not self.action[(a, a)].is_diagonal():
                raise ValueError("Cartan matrices are not diagonal in the stored basis")
        diag = [self.action[(a, a)].diagonal() for a in self.ctx.indices]
        return [tuple(d[i] for d in diag) for i in range(self.dim)]

    def vector_parity(self, v: Sequence[Fraction]) -> int:
        ps = {self.parity[i] for i, x in enumerate(v) if x}
        if len(ps) > 1:
            raise ValueError("vector is not homogeneous")
        return ps.pop() if ps else 0

    def check_relations(self) -> tuple[bool, tuple | None]:
        """Exhaustive check that graded commutators of action matrices realize the bracket."""
        ctx = self.ctx
        for a, b in ctx.pairs():
            for c, d in ctx.pairs():
                X, Y = self.action[(a, b)], self.action[(c, d)]
                s = ctx.sign(ctx.pair_parity(a, b) * ctx.pair_parity(c, d))
                lhs = X @ Y - (Y @ X).scale(s)
                rhs = self.act(gl_bracket(ctx, GlElement.basis(a, b), GlElement.basis(c, d)))
                if lhs != rhs:
                    return False, (a, b, c, d)
        return True, None

    def check_parity(self) -> bool:
        """Every ``E^a_b`` maps parity p to parity p + [a] + [b]."""
        for (a, b), m in self.action.items():
            shift = self.ctx.pair_parity(a, b)
            for (i, j) in m.entries:
                if (self.parity[j] + shift) % 2 != self.parity[i]:
                    return False
        return True


def vector_rep(ctx: GradingContext) -> GlModule:
    n = ctx.size
    action = {(a, b): SparseMatrix.unit(n, a - 1, b - 1) for a, b in ctx.pairs()}
    return GlModule(ctx, tuple(ctx.parity(a) for a in ctx.indices), action, label="V")


def one_dim_rep(ctx: GradingContext, c: int | Fraction) -> GlModule:
    """One-dimensional module with ``E^a_a -> c (-1)^[a]`` (supertrace character)."""
    c = as_q(c)
    action = {
        (a, b): SparseMatrix.identity(1, c * ctx.sign(ctx.parity(a))) if a == b else SparseMatrix.zero(1)
        for a, b in ctx.pairs()
    }
    return GlModule(ctx, (0,), action, label=f"C[{c}]")


def tensor(ctx: GradingContext, A: GlModule, B: GlModule) -> GlModule:
    """Graded tensor product; ``(1 (x) x)(v (x) w) = (-1)^{[x][v]} v (x) x w``."""
    if A.ctx != ctx or B.ctx != ctx:
        raise ValueError("modules over different algebras")
    parity = tuple((p + q) % 2 for p in A.parity for q in B.parity)
    action = {}
    for a, b in ctx.pairs():
        x_par = ctx.pair_parity(a, b)
        # diagonal sign on the left factor: (-1)^{[x][v]}
        signA = SparseMatrix(A.dim, A.dim, {(i, i): ctx.sign(x_par * A.parity[i]) for i in range(A.dim)})
        action[(a, b)] = A.action[(a, b)].kron(SparseMatrix.identity(B.dim)) + signA.kron(B.action[(a, b)])
    return GlModule(ctx, parity, action, label=f"({A.label} x {B.label})")


def gl_highest_weight_vectors(ctx: GradingContext, W: GlModule) -> list[tuple[tuple[Fraction, ...], Vector]]:
    """Joint kernel of the raising operators, split into weight vectors."""
    rows: list[list[Fraction]] = []
    for a, b in ctx.positive_pairs():
        rows.extend(W.action[(a, b)].to_dense())
    kernel = nullspace(rows, W.dim) if rows else [tuple(Fraction(int(i == j)) for j in range(W.dim)) for i in range(W.dim)]
    weights = W.weights
    # raising operators are homogeneous for weight and parity, so the
    # kernel splits along (weight, parity) coordinates of the stored basis
    pieces: dict[tuple, list[Vector]] = {}
    for v in kernel:
        for key in {(weights[i], W.parity[i]) for i, x in enumerate(v) if x}:
            part = tuple(x if (weights[i], W.parity[i]) == key else Fraction(0) for i, x in enumerate(v))
            pieces.setdefault(key, []).append(part)
    out = []
    for key in sorted(pieces, reverse=True):
        for vec in span_basis(pieces[key], W.dim):
            out.append((key[0], vec))
    return out


def _weight_space_complement(W: GlModule, basis: Sequence[Vector], top: tuple[Fraction, ...]) -> list[Vector]:
    weights = W.weights
    out = []
    for v in basis:
        part = tuple(x if weights[i] != top else Fraction(0) for i, x in enumerate(v))
        if any(part):
            out.append(part)
    return span_basis(out, W.dim) if out else []


def subquotient(W: GlModule, sub: Sequence[Vector], kernel: Sequence[Vector], label: str = "") -> GlModule:
    """Module on ``span(sub) / span(kernel)`` (kernel inside sub, both invariant).

    Coset representatives are taken from ``sub`` in order, so a leading
    highest-weight vector stays first.
    """
    kernel = list(kernel)
    reps_idx = independent_subset(kernel + list(sub))
    reps = [sub[i - len(kernel)] for i in reps_idx if i >= len(kernel)]
    if len(kernel) and len(independent_subset(kernel)) != len(kernel):
        raise ValueError("kernel vectors are dependent")
    full = kernel + reps
    k = len(kernel)
    action = {}
    for key, m in W.action.items():
        entries = {}
        for j, r in enumerate(reps):
            coords = coordinates(full, m.apply(r))
            for i in range(len(reps)):
                if coords[k + i]:
                    entries[(i, j)] = coords[k + i]
        action[key] = SparseMatrix(len(reps), len(reps), entries)
    parity = tuple(W.vector_parity(r) for r in reps)
    return GlModule(W.ctx, parity, action, label=label or W.label)


def cyclic_subquotient(ctx: GradingContext, W: GlModule, v: Sequence[Fraction]) -> GlModule:
    """Irreducible quotient of ``U(gl) v`` for a highest-weight vector ``v``."""
    v = tuple(as_q(x) for x in v)
    if not any(v):
        raise ValueError("cyclic generator must be nonzero")
    W.vector_parity(v)
    ops = [W.action[p] for p in ctx.pairs()]
    span = closure([v], ops)
    weights = W.weights
    tops = {weights[i] for i, x in enumerate(v) if x}
    if len(tops) != 1:
        raise ValueError("generator is not a weight vector")
    top = tops.pop()
    ambient = _weight_space_complement(W, span, top)
    maximal = largest_invariant_subspace(ambient, ops, W.dim) if ambient else []
    maximal = _split_homogeneous(W.parity, maximal)
    return subquotient(W, span, maximal, label=f"L({','.join(map(str, top))})")


def _split_homogeneous(parity: Sequence[int], basis: Sequence[Vector]) -> list[Vector]:
    """Re-span a graded subspace by homogeneous vectors."""
    pieces = []
    for p in (0, 1):
        proj = [tuple(x if parity[i] == p else Fraction(0) for i, x in enumerate(v)) for v in basis]
        proj = [w for w in proj if any(w)]
        if proj:
            pieces.extend(span_basis(proj, len(parity)))
    return pieces


def is_dominant(ctx: GradingContext, mu: Sequence[Fraction | int]) -> bool:
    """``mu_a - mu_{a+1}`` is a nonnegative integer for every ``a != M``."""
    if len(mu) != ctx.size:
        raise ValueError(f"weight of length {len(mu)} for gl({ctx.M}|{ctx.N})")
    for a in range(1, ctx.size):
        if a == ctx.M:
            continue
        d = as_q(mu[a - 1]) - as_q(mu[a])
        if d.denominator != 1 or d < 0:
            return False
    return True


class NotRealizedError(ValueError):
    """The requested highest weight does not occur in the given tensor word."""


def tensor_word(ctx: GradingContext, copies: int, twist: Fraction | int = 0) -> GlModule:
    """``V^{(x) copies} (x) C[twist]``."""
    W = one_dim_rep(ctx, twist)
    V = vector_rep(ctx)
    for _ in range(copies):
        W = tensor(ctx, V, W)
    return W


def build_irrep(
    ctx: GradingContext, copies: int, target: Sequence[Fraction | int], twist: Fraction | int = 0
) -> GlModule:
    """Irreducible module of highest weight ``target`` cut out of ``V^{(x) copies} (x) C[twist]``."""
    target = tuple(as_q(x) for x in target)
    if not is_dominant(ctx, target):
        raise ValueError(f"target weight {target} is not dominant")
    W = tensor_word(ctx, copies, twist)
    for mu, vec in gl_highest_weight_vectors(ctx, W):
        if mu == target:
            return cyclic_subquotient(ctx, W, vec)
    raise NotRealizedError(f"weight {target} not realized in V^{copies} x C[{twist}]")
