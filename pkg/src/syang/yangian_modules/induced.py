"""Degree-truncated induced modules from data for the even subalgebra.

``V0`` is a module for the even part (generators ``t^a_b[n]`` with
``[a] = [b]``). The induced space is spanned by ordered products of odd
lowering generators applied to ``V0``; odd raising generators kill ``V0``.
Vectors are stored exactly as ``{odd lowering monomial: V0 vector}`` and
generators act by straightening, so the (infinite) induced module is never
truncated. The cutoff ``D`` only limits

* the spanning set: odd lowering monomials of total level ``<= D``;
* the test functionals ``x -> (z x)_0``: odd raising monomials ``z`` of level ``<= D``.

``x`` lies in the maximal submodule iff every ``(z x)_0`` vanishes, so the
rank of the pairing matrix is the truncated quotient dimension. Mode
matrices on the quotient come from the same functionals, and a rational
action is recovered from them by a denominator recurrence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from ..exactmath import (
    Polynomial,
    RatFunMatrix,
    SparseMatrix,
    Vector,
    coordinates,
    independent_subset,
    ratfunmatrix_from_modes,
)
from ..superalgebra import GradingContext, straighten
from ..superalgebra.grading import BLOCK_NEG_ODD, BLOCK_POS_ODD
from ..weights import HighestWeight
from .modules import YModule, maximal_vectors

Pair = tuple[int, int]
Generator = tuple[int, int, int]
Monomial = tuple[Generator, ...]
InducedVector = dict  # Monomial -> V0 vector


class NoncommutingDataError(ValueError):
    """The two even blocks of the supplied data do not commute, or violate the mode relation."""


def even_pairs(ctx: GradingContext) -> list[Pair]:
    return [(a, b) for a, b in ctx.pairs() if ctx.pair_parity(a, b) == 0]


@dataclass(frozen=True, eq=False)
class InducedData:
    """Action of the even generators on ``V0`` as rational matrices in ``u``."""

    ctx: GradingContext
    parity: tuple[int, ...]
    action: Mapping[Pair, RatFunMatrix]
    _modes: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        missing = set(even_pairs(self.ctx)) - set(self.action)
        if missing:
            raise ValueError(f"even data missing for {sorted(missing)}")

    @property
    def dim(self) -> int:
        return len(self.parity)

    @classmethod
    def one_dimensional(cls, ctx: GradingContext, weight: HighestWeight, check: bool = True) -> InducedData:
        """``t^a_a(u) -> lambda_a(u)`` on a line; off-diagonal even generators act by 0."""
        action = {}
        for a, b in even_pairs(ctx):
            if a == b:
                lam = weight[a]
                num = Polynomial(lam.num.coeffs, "u")
                den = Polynomial(lam.den.coeffs, "u")
                action[(a, b)] = RatFunMatrix([SparseMatrix(1, 1, {(0, 0): c}) for c in num.coeffs], den)
            else:
                action[(a, b)] = RatFunMatrix.constant(SparseMatrix.zero(1))
        data = cls(ctx, (0,), action)
        if check:
            data.validate()
        return data

    @classmethod
    def from_module(cls, W: YModule, check: bool = True) -> InducedData:
        """Restrict a Y(gl(M|N)) module's even action (useful for consistency tests)."""
        data = cls(W.ctx, W.parity, {p: W.action[p] for p in even_pairs(W.ctx)})
        if check:
            data.validate()
        return data

    def mode(self, a: int, b: int, n: int) -> SparseMatrix:
        cached = self._modes.get((a, b))
        if cached is None or len(cached) <= n:
            cached = self.action[(a, b)].modes(max(n, 2 * len(cached or [0]), 4))
            self._modes[(a, b)] = cached
        return cached[n]

    def validate(self, level_max: int = 3) -> None:
        """Blocks commute and each block satisfies the mode relation up to ``level_max``."""
        ctx = self.ctx
        pairs = even_pairs(ctx)
        for (a1, b1), (a2, b2) in itertools.product(pairs, repeat=2):
            same_block = ctx.parity(a1) == ctx.parity(a2)
            for m in range(1, level_max + 1):
                for n in range(1, level_max + 1):
                    X, Y = self.mode(a1, b1, m), self.mode(a2, b2, n)
                    lhs = X @ Y - Y @ X
                    if not same_block:
                        if not lhs.is_zero():
                            raise NoncommutingDataError(f"t^{a1}_{b1}[{m}] and t^{a2}_{b2}[{n}] do not commute on V0")
                        continue
                    rhs = self._relation_rhs(a1, b1, m, a2, b2, n)
                    if lhs != rhs:
                        raise NoncommutingDataError(
                            f"mode relation fails on V0 at ({a1},{b1},{m}; {a2},{b2},{n})"
                        )

    def _relation_rhs(self, a1, b1, m, a2, b2, n) -> SparseMatrix:
        ctx = self.ctx
        top = m + n - 1
        out = SparseMatrix.zero(self.dim)
        if a2 == b1:
            out = out + self.mode(a1, b2, top)
        if a1 == b2:
            out = out - self.mode(a2, b1, top)
        s = ctx.sign(ctx.eta(a1, b1, a2, b2))
        for r in range(1, min(m, n)):
            t = self.mode(a2, b1, r) @ self.mode(a1, b2, top - r) - self.mode(a2, b1, top - r) @ self.mode(a1, b2, r)
            out = out + t.scale(s)
        return out


def odd_monomials(ctx: GradingContext, block: int, cutoff: int) -> list[Monomial]:
    """Ordered square-free products of odd generators of one block with total level ``<= cutoff``."""
    pairs = ctx.pairs_in_block(block)
    gens = [(a, b, n) for a, b in pairs for n in range(1, cutoff + 1)]
    out: list[Monomial] = [()]

    def extend(start: int, mono: Monomial, level: int) -> None:
        for i in range(start, len(gens)):
            g = gens[i]
            if level + g[2] <= cutoff:
                new = tuple(sorted(mono + (g,), key=ctx.generator_key))
                out.append(new)
                extend(i + 1, new, level + g[2])

    extend(0, (), 0)
    return sorted(set(out), key=lambda m: (sum(g[2] for g in m), len(m), [ctx.generator_key(g) for g in m]))


class InducedSpace:
    """Exact action of Y(gl(M|N)) on the induced module built on ``V0``."""

    def __init__(self, data: InducedData):
        self.data = data
        self.ctx = data.ctx
        self._cache: dict[tuple[Generator, Monomial], dict[Monomial, SparseMatrix]] = {}

    def _even_word(self, word: Sequence[Generator]) -> SparseMatrix:
        out = SparseMatrix.identity(self.data.dim)
        for a, b, n in word:
            out = out @ self.data.mode(a, b, n)
        return out

    def generator_on(self, g: Generator, mono: Monomial) -> dict[Monomial, SparseMatrix]:
        """``g * (mono (x) v) = sum mono' (x) B v``, as ``{mono': B}``."""
        key = (g, mono)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        ctx = self.ctx
        out: dict[Monomial, SparseMatrix] = {}
        for m, c in straighten(ctx, (g,) + mono):
            k = 0
            while k < len(m) and ctx.block(m[k][0], m[k][1]) == BLOCK_NEG_ODD:
                k += 1
            rest = m[k:]
            if any(ctx.block(x[0], x[1]) == BLOCK_POS_ODD for x in rest):
                continue
            B = self._even_word(rest).scale(c)
            head = m[:k]
            out[head] = out[head] + B if head in out else B
        out = {h: B for h, B in out.items() if not B.is_zero()}
        self._cache[key] = out
        return out

    def apply(self, g: Generator, x: InducedVector) -> InducedVector:
        if g[2] < 1:
            raise ValueError("level-0 modes are constants, not generators")
        out: dict[Monomial, list[Fraction]] = {}
        for mono, v in x.items():
            for head, B in self.generator_on(g, mono).items():
                img = B.apply(v)
                acc = out.setdefault(head, [Fraction(0)] * self.data.dim)
                for i, c in enumerate(img):
                    acc[i] += c
        return {m: tuple(v) for m, v in out.items() if any(v)}

    def apply_word(self, word: Sequence[Generator], x: InducedVector) -> InducedVector:
        for g in reversed(word):
            x = self.apply(g, x)
            if not x:
                break
        return x

    def pairing(self, tests: Sequence[Monomial], x: InducedVector) -> Vector:
        """Concatenated ``(z x)_0`` over the test monomials ``z``."""
        zero = (Fraction(0),) * self.data.dim
        out: list[Fraction] = []
        for z in tests:
            out.extend(self.apply_word(z, x).get((), zero))
        return tuple(out)


@dataclass(frozen=True)
class InducedResult:
    """Outcome of one truncated induced construction."""

    cutoff: int
    ambient_dim: int
    quotient_dim: int
    module: YModule | None
    highest_weight: HighestWeight | None
    consistent: bool
    basis: tuple[tuple[Monomial, int], ...]
    stabilized: bool = False
    note: str = ""

    @property
    def invariants(self) -> tuple:
        return (self.quotient_dim, self.highest_weight)


def _truncated(data: InducedData, cutoff: int, space: InducedSpace | None = None) -> InducedResult:
    ctx = data.ctx
    space = space or InducedSpace(data)
    lowers = odd_monomials(ctx, BLOCK_NEG_ODD, cutoff)
    tests = odd_monomials(ctx, BLOCK_POS_ODD, cutoff)
    basis = [(mono, i) for mono in lowers for i in range(data.dim)]

    def unit(mono: Monomial, i: int) -> InducedVector:
        return {mono: tuple(Fraction(int(j == i)) for j in range(data.dim))}

    columns = [space.pairing(tests, unit(m, i)) for m, i in basis]
    pivots = independent_subset(columns)
    reps = [basis[p] for p in pivots]
    pivot_cols = [columns[p] for p in pivots]
    r = len(reps)
    parity = tuple((sum(ctx.pair_parity(g[0], g[1]) for g in m) + data.parity[i]) % 2 for m, i in reps)
    consistent = True
    action: dict[Pair, RatFunMatrix] = {}
    order = 2 * r + 4
    for a, b in ctx.pairs():
        modes = [SparseMatrix.identity(r, ctx.sign(ctx.parity(b))) if a == b else SparseMatrix.zero(r)]
        for n in range(1, order + 1):
            entries = {}
            for j, (m, i) in enumerate(reps):
                img = space.pairing(tests, space.apply((a, b, n), unit(m, i)))
                try:
                    coords = coordinates(pivot_cols, img)
                except ValueError:
                    consistent = False
                    break
                for k, c in enumerate(coords):
                    if c:
                        entries[(k, j)] = c
            if not consistent:
                break
            modes.append(SparseMatrix(r, r, entries))
        if not consistent:
            break
        rf = ratfunmatrix_from_modes(modes)
        if rf is None:
            consistent = False
            break
        action[(a, b)] = rf
    module = hw = None
    note = ""
    if consistent:
        module = YModule(ctx, parity, action, {"kind": "induced", "cutoff": cutoff})
        mv = maximal_vectors(module)
        if len(mv) == 1:
            hw = mv[0].weight
        else:
            note = f"{len(mv)} maximal vectors in truncated quotient"
    else:
        note = "truncated functionals do not close under the action"
    return InducedResult(cutoff, len(basis), r, module, hw, consistent, tuple(reps), note=note)


def induced_module_truncated(ctx: GradingContext, V0: InducedData, cutoff: int) -> InducedResult:
    """Truncated induced module at ``cutoff`` with a stabilization flag against ``cutoff - 1``."""
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    if V0.ctx != ctx:
        raise ValueError("V0 data over a different algebra")
    space = InducedSpace(V0)
    prev = _truncated(V0, cutoff - 1, space)
    cur = _truncated(V0, cutoff, space)
    stable = cur.consistent and prev.consistent and prev.invariants == cur.invariants
    return InducedResult(
        cur.cutoff, cur.ambient_dim, cur.quotient_dim, cur.module, cur.highest_weight,
        cur.consistent, cur.basis, stable, cur.note,
    )


def induced_until_stable(ctx: GradingContext, V0: InducedData, max_cutoff: int = 6) -> tuple[InducedResult, bool]:
    """Raise the cutoff until invariants agree at ``D`` and ``D + 1`` (``D <= max_cutoff``)."""
    space = InducedSpace(V0)
    prev = _truncated(V0, 1, space)
    for D in range(1, max_cutoff + 1):
        nxt = _truncated(V0, D + 1, space)
        if prev.consistent and nxt.consistent and prev.invariants == nxt.invariants:
            return prev, True
        prev = nxt
    return prev, False
