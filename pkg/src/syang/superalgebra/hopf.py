"""Generator-level Hopf data: shifted coproducts, counit laws, truncated antipode.

The shifted coproduct sends ``L(u)`` to ``L(u+alpha_1) (x) ... (x) L(u+alpha_k)``
with ``alpha_1 = 0``. On generating series it reads

    t^a_b(u) -> sum_{a_1..a_{k-1}} (-1)^{s(a_0..a_k)}
                t^{a_1}_{a_0}(u) (x) t^{a_2}_{a_1}(u+alpha_2) (x) ... (x) t^{a_k}_{a_{k-1}}(u+alpha_k)

with ``a_0 = b`` and ``a_k = a``. Each factor is expanded in ``u^-1`` using
``(u+alpha)^-n = sum_j binom(-n, j) alpha^j u^(-n-j)``. Modes are returned one
power of ``u^-1`` at a time.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from ..exactmath import as_q
from .algebra import AlgebraElement, Generator, Monomial, _accumulate, multiply
from .grading import GradingContext

TensorKey = tuple[Monomial, ...]


class TensorElement:
    """Finite sum of pure tensors of PBW monomials, ``k`` slots wide."""

    __slots__ = ("ctx", "k", "terms")

    def __init__(self, ctx: GradingContext, k: int, terms: dict[TensorKey, Fraction] | None = None):
        self.ctx = ctx
        self.k = k
        self.terms: dict[TensorKey, Fraction] = {}
        for key, c in (terms or {}).items():
            if len(key) != k:
                raise ValueError(f"tensor key of width {len(key)} in a {k}-fold tensor")
            if c:
                self.terms[key] = as_q(c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.ctx == other.ctx and self.k == other.k and self.terms == other.terms

    def __add__(self, other: TensorElement) -> TensorElement:
        acc = dict(self.terms)
        _accumulate(acc, other.terms.items(), 1)
        return TensorElement(self.ctx, self.k, acc)

    def __sub__(self, other: TensorElement) -> TensorElement:
        acc = dict(self.terms)
        _accumulate(acc, other.terms.items(), -1)
        return TensorElement(self.ctx, self.k, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        return f"TensorElement(k={self.k}, terms={len(self.terms)})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in sorted(self.terms.items()):
            slots = " (x) ".join(str(AlgebraElement(self.ctx, {m: 1})) for m in key)
            parts.append(f"{c}*[{slots}]")
        return " + ".join(parts)

    def slot_map(self, slot: int, fn, width: int) -> TensorElement:
        """Apply an even linear map ``fn: Monomial -> TensorElement`` of the given width to one slot."""
        acc: dict[TensorKey, Fraction] = {}
        for key, c in self.terms.items():
            for sub, v in fn(key[slot]).terms.items():
                new = key[:slot] + tuple(sub) + key[slot + 1 :]
                acc[new] = acc.get(new, 0) + c * v
        return TensorElement(self.ctx, self.k - 1 + width, {k: v for k, v in acc.items() if v})

    def multiply_slots(self) -> AlgebraElement:
        """Collapse a 2-fold tensor by the algebra product (no sign: plain multiplication map)."""
        if self.k != 2:
            raise ValueError("multiply_slots needs a 2-fold tensor")
        out = AlgebraElement.zero(self.ctx)
        for (x, y), c in self.terms.items():
            out = out + multiply(self.ctx, AlgebraElement(self.ctx, {x: 1}), AlgebraElement(self.ctx, {y: 1})).scale(c)
        return out


def coproduct_sign(ctx: GradingContext, chain: Sequence[int]) -> int:
    """Sign of the chain term ``a_0 = b, a_1, ..., a_k = a`` in the k-fold coproduct.

    Exponent ``sum_{i=1}^{k-1} ([a_i] + ([a_0] + [a_i])([a_i] + [a_{i+1}]))``;
    verified against coassociativity and against the defining relations on
    tensor-product modules (see the test suite).
    """
    p = ctx.parity
    k = len(chain) - 1
    e = 0
    for i in range(1, k):
        e += p(chain[i]) + (p(chain[0]) + p(chain[i])) * (p(chain[i]) + p(chain[i + 1]))
    return ctx.sign(e)


def shifted_series_coeff(ctx: GradingContext, a: int, b: int, alpha: Fraction, m: int) -> dict[Monomial, Fraction]:
    """Coefficient of ``u^-m`` in ``t^a_b(u + alpha)`` as {monomial: coeff}."""
    if m == 0:
        return {(): Fraction(ctx.sign(ctx.parity(b)))} if a == b else {}
    out: dict[Monomial, Fraction] = {}
    for n in range(1, m + 1):
        j = m - n
        # binom(-n, j) = (-1)^j binom(n+j-1, j)
        w = (-1) ** j * comb(n + j - 1, j) * alpha ** j
        if w:
            out[((a, b, n),)] = Fraction(w)
    return out


def _compositions(n: int, k: int) -> Iterable[tuple[int, ...]]:
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def coproduct_mode(
    ctx: GradingContext, a: int, b: int, n: int, alphas: Sequence[int | Fraction]
) -> TensorElement:
    """Coefficient of ``u^-n`` in the k-fold shifted coproduct of ``t^a_b(u)``."""
    return _coproduct_mode(ctx, a, b, n, tuple(as_q(x) for x in alphas))


@lru_cache(maxsize=None)
def _coproduct_mode(ctx: GradingContext, a: int, b: int, n: int, alphas: tuple[Fraction, ...]) -> TensorElement:
    ctx.check_index(a, b)
    k = len(alphas)
    if k < 1:
        raise ValueError("need at least one tensor factor")
    if alphas[0] != 0:
        raise ValueError("the first shift parameter must be 0")
    acc: dict[TensorKey, Fraction] = {}
    for mids in itertools.product(ctx.indices, repeat=k - 1):
        chain = (b,) + mids + (a,)
        sign = coproduct_sign(ctx, chain)
        for comp in _compositions(n, k):
            factors = [
                shifted_series_coeff(ctx, chain[i + 1], chain[i], alphas[i], comp[i]) for i in range(k)
            ]
            if any(not f for f in factors):
                continue
            for combo in itertools.product(*(f.items() for f in factors)):
                key = tuple(m for m, _ in combo)
                c = Fraction(sign)
                for _, v in combo:
                    c *= v
                acc[key] = acc.get(key, 0) + c
    return TensorElement(ctx, k, {key: c for key, c in acc.items() if c})


def coproduct_symbolic(
    ctx: GradingContext, a: int, b: int, order: int, k: int, alphas: Sequence[int | Fraction]
) -> list[TensorElement]:
    """Modes ``0..order`` of the k-fold shifted coproduct of ``t^a_b(u)``."""
    if len(alphas) != k:
        raise ValueError(f"expected {k} shift parameters, got {len(alphas)}")
    if as_q(alphas[0]) != 0:
        raise ValueError("the first shift parameter must be 0")
    return [coproduct_mode(ctx, a, b, n, alphas) for n in range(order + 1)]


def _generator_coproduct(ctx: GradingContext, g: Generator, alphas: tuple[Fraction, ...]) -> TensorElement:
    return coproduct_mode(ctx, g[0], g[1], g[2], alphas)


def apply_coproduct_to_slot(t: TensorElement, slot: int, alphas: Sequence[int | Fraction]) -> TensorElement:
    """Replace the generator in ``slot`` by its shifted coproduct (slots hold single generators or units)."""
    alphas = tuple(as_q(x) for x in alphas)
    width = len(alphas)

    def fn(mono: Monomial) -> TensorElement:
        if not mono:
            return TensorElement(t.ctx, width, {((),) * width: 1})
        if len(mono) != 1:
            raise ValueError("slot coproduct implemented for single generators only")
        return _generator_coproduct(t.ctx, mono[0], alphas)

    return t.slot_map(slot, fn, width)


def apply_counit_to_slot(t: TensorElement, slot: int) -> TensorElement:
    def fn(mono: Monomial) -> TensorElement:
        return TensorElement(t.ctx, 0, {(): 1}) if not mono else TensorElement(t.ctx, 0, {})

    return t.slot_map(slot, fn, 0)


def counit_of_generator_series(ctx: GradingContext, a: int, b: int, n: int) -> Fraction:
    if n == 0:
        return Fraction(ctx.sign(ctx.parity(a))) if a == b else Fraction(0)
    return Fraction(0)


# ---------------------------------------------------------------------------
# Antipode


def antipode_images(ctx: GradingContext, order: int) -> dict[tuple[int, int, int], AlgebraElement]:
    """``S(t^a_b[n])`` for ``n <= order``, from inverting ``L(u)`` as a series.

    Mode by mode, ``sum_c s(b,c,a) S(t^c_b)(u) t^a_c(u) = (-1)^[b] delta^a_b``
    determines ``S(t^a_b[n])`` from lower modes, since the ``c = a`` term
    carries the coefficient 1 at top level.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    table: dict[tuple[int, int, int], AlgebraElement] = {}

    def S(c: int, b: int, j: int) -> AlgebraElement:
        if j == 0:
            return AlgebraElement.unit(ctx, ctx.sign(ctx.parity(b))) if c == b else AlgebraElement.zero(ctx)
        return table[(c, b, j)]

    for n in range(1, order + 1):
        for a in ctx.indices:
            for b in ctx.indices:
                acc = AlgebraElement.zero(ctx)
                for c in ctx.indices:
                    s = coproduct_sign(ctx, (b, c, a))
                    for j in range(n):
                        left = S(c, b, j)
                        if left.is_zero():
                            continue
                        acc = acc + (left * AlgebraElement.generator(ctx, a, c, n - j)).scale(s)
                table[(a, b, n)] = -acc
    return table


def antipode_law_residuals(ctx: GradingContext, order: int, side: str = "right") -> dict[tuple[int, int, int], AlgebraElement]:
    """``m (S (x) id) Delta`` (side="left") or ``m (id (x) S) Delta`` minus the counit, per mode.

    All values are zero exactly when the antipode law holds to ``order``.
    """
    table = antipode_images(ctx, order)

    def S(mono: Monomial) -> AlgebraElement:
        if not mono:
            return AlgebraElement.unit(ctx)
        (g,) = mono
        return table[g]

    out = {}
    for a in ctx.indices:
        for b in ctx.indices:
            for n in range(1, order + 1):
                delta = coproduct_mode(ctx, a, b, n, (0, 0))
                acc = AlgebraElement.zero(ctx)
                for (x, y), c in delta.terms.items():
                    X = S(x) if side == "left" else AlgebraElement(ctx, {x: 1})
                    Y = AlgebraElement(ctx, {y: 1}) if side == "left" else S(y)
                    acc = acc + (X * Y).scale(c)
                out[(a, b, n)] = acc
    return out


def clear_caches() -> None:
    _coproduct_mode.cache_clear()
