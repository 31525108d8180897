"""Highest weights of Y(gl(M|N)): star product, twists, Drinfeld data.

A highest weight is a tuple of rational functions ``lambda_a(x)`` with
``lambda_a(oo) = (-1)^[a]``. The finite-dimensionality test asks for

* ``lambda_a / lambda_{a+1} = P_a(x + (-1)^[a]) / P_a(x)`` with ``P_a`` monic, ``a != M``;
* ``lambda_M / lambda_{M+1} = Qt_M(x) / Q_M(x)`` with ``Qt_M = prod (1 + r1/x)``,
  ``Q_M = -prod (1 + r2/x)`` coprime.

Roots are found with the rational-root theorem only; anything needing
irrational roots is reported as ``unsupported-factorization``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactmath import Polynomial, RatFun, as_q
from .superalgebra import GradingContext

FINITE = "finite-dimensional"
NOT_FINITE = "not-finite-dimensional"
UNSUPPORTED = "unsupported-factorization"


class UnsupportedFactorization(ValueError):
    """A needed root is irrational or complex."""


@dataclass(frozen=True)
class HighestWeight:
    ctx: GradingContext
    components: tuple[RatFun, ...]

    def __post_init__(self):
        comps = tuple(c if isinstance(c, RatFun) else RatFun(c, 1, "x") for c in self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) != self.ctx.size:
            raise ValueError(f"need {self.ctx.size} components, got {len(comps)}")
        for a, lam in zip(self.ctx.indices, comps):
            if lam.is_zero():
                raise ValueError(f"component {a} is identically zero")
            if lam.has_pole_at_infinity() or lam.value_at_infinity() != self.ctx.sign(self.ctx.parity(a)):
                raise ValueError(f"component {a} = {lam} must tend to {self.ctx.sign(self.ctx.parity(a))} at infinity")

    def __getitem__(self, a: int) -> RatFun:
        """1-based component access."""
        return self.components[a - 1]

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    def series(self, order: int) -> list[list[Fraction]]:
        return [c.series(order) for c in self.components]

    def shifted(self, alpha: int | Fraction) -> HighestWeight:
        """Components evaluated at ``x + alpha``."""
        return HighestWeight(self.ctx, tuple(c.shift(as_q(alpha)) for c in self.components))


def epsilon_weight(ctx: GradingContext) -> HighestWeight:
    """Weight of the counit module, ``((-1)^[a])_a``."""
    return HighestWeight(ctx, tuple(RatFun(ctx.sign(ctx.parity(a)), 1, "x") for a in ctx.indices))


def evaluation_weight(ctx: GradingContext, mu: Sequence[int | Fraction]) -> HighestWeight:
    """``lambda_a(x) = (-1)^[a] + mu_a / x``."""
    if len(mu) != ctx.size:
        raise ValueError(f"need {ctx.size} entries")
    return HighestWeight(
        ctx, tuple(RatFun.from_inverse_powers([ctx.sign(ctx.parity(a)), as_q(m)], "x") for a, m in zip(ctx.indices, mu))
    )


def star_product(mu: HighestWeight, nu: HighestWeight) -> HighestWeight:
    """Componentwise ``(-1)^[a] mu_a(x) nu_a(x)``."""
    if mu.ctx != nu.ctx:
        raise ValueError("weights of different algebras")
    ctx = mu.ctx
    return HighestWeight(
        ctx, tuple((m * n) * ctx.sign(ctx.parity(a)) for a, m, n in zip(ctx.indices, mu.components, nu.components))
    )


def star_all(ctx: GradingContext, weights: Sequence[HighestWeight]) -> HighestWeight:
    out = epsilon_weight(ctx)
    for w in weights:
        out = star_product(out, w)
    return out


def _as_twist(f: RatFun | Polynomial | Sequence[int | Fraction]) -> RatFun:
    if isinstance(f, RatFun):
        return f
    if isinstance(f, Polynomial):
        # a polynomial in x^-1, coefficients ascending in x^-1
        return RatFun.from_inverse_powers(list(f.coeffs), "x")
    return RatFun.from_inverse_powers([as_q(c) for c in f], "x")


def twist(f: RatFun | Polynomial | Sequence[int | Fraction], L: HighestWeight) -> HighestWeight:
    """``Lambda(x) -> f(x) Lambda(x)``.

    ``f`` is a rational function, or a coefficient list / :class:`Polynomial`
    in ``x^-1`` (``[1, f_1, f_2, ...]``); ``f(oo)`` must be 1.
    """
    fr = _as_twist(f)
    if fr.has_pole_at_infinity() or fr.value_at_infinity() != 1:
        raise ValueError(f"twist {fr} must satisfy f(oo) = 1")
    return HighestWeight(L.ctx, tuple(c * fr for c in L.components))


# ---------------------------------------------------------------------------
# Shift equations P(x + s) / P(x) = f


@dataclass(frozen=True)
class ShiftSolution:
    status: str
    P: Polynomial | None = None
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.status == FINITE


def _linear_shifts(p: Polynomial) -> tuple[dict[Fraction, int], Polynomial]:
    """Map ``c -> multiplicity`` over factors ``(x + c)``; second item is the root-free cofactor."""
    roots, rest = p.rational_roots()
    return {-r: m for r, m in roots.items()}, rest


def solve_shift_polynomial(f: RatFun, shift: int) -> ShiftSolution:
    """Monic ``P`` with ``P(x + shift) / P(x) = f``, if it exists.

    Factor constants are grouped into classes modulo the shift; inside a
    class with positions ``c = base + k*shift`` the multiplicity of
    ``(x + c)`` in ``P`` is forced to be the running sum of
    (denominator - numerator) multiplicities, which must stay
    nonnegative and end at zero.
    """
    if shift not in (1, -1):
        raise ValueError("shift must be +1 or -1")
    if f.num.degree != f.den.degree:
        return ShiftSolution(NOT_FINITE, reason=f"degree mismatch {f.num.degree} != {f.den.degree}")
    if f.num.lc != 1:
        return ShiftSolution(NOT_FINITE, reason=f"f(oo) = {f.num.lc} != 1")
    num_shifts, num_rest = _linear_shifts(f.num)
    den_shifts, den_rest = _linear_shifts(f.den)
    if num_rest.degree > 0 or den_rest.degree > 0:
        return ShiftSolution(UNSUPPORTED, reason="non-rational roots")
    classes: dict[Fraction, dict[int, int]] = {}
    for shifts, sgn in ((den_shifts, 1), (num_shifts, -1)):
        for c, m in shifts.items():
            base = c - (c.numerator // c.denominator)
            k = int((c - base) * shift)
            cls = classes.setdefault(base, {})
            cls[k] = cls.get(k, 0) + sgn * m
    P = Polynomial.const(1, "x")
    for base, counts in sorted(classes.items()):
        running = 0
        for k in range(min(counts), max(counts) + 1):
            running += counts.get(k, 0)
            if running < 0:
                return ShiftSolution(
                    NOT_FINITE, reason=f"chain through x + {base + k * shift} cannot telescope in direction {shift:+d}"
                )
            if running:
                P = P * Polynomial.linear(base + k * shift, "x") ** running
        if running != 0:
            return ShiftSolution(NOT_FINITE, reason=f"unbalanced chain in class {base} mod 1")
    if P.shift(shift) * f.den != f.num * P:
        raise AssertionError("shift solver produced a wrong telescoping polynomial")
    return ShiftSolution(FINITE, P)


# ---------------------------------------------------------------------------
# Drinfeld data and the finite-dimensionality criterion


@dataclass(frozen=True)
class DrinfeldData:
    """``P[a]`` for ``a != M`` plus ``Qt_M, Q_M`` cleared of ``x^-K_M``.

    ``Qtilde_M`` is ``prod (x + r1)`` and ``Q_M`` is ``-prod (x + r2)``, so that
    ``lambda_M / lambda_{M+1} = Qtilde_M / Q_M``.
    """

    ctx: GradingContext
    P: dict[int, Polynomial]
    Qtilde_M: Polynomial
    Q_M: Polynomial
    r1: tuple[Fraction, ...] | None = None
    r2: tuple[Fraction, ...] | None = None

    @property
    def K(self) -> dict[int, int]:
        out = {a: p.degree for a, p in self.P.items()}
        out[self.ctx.M] = self.Qtilde_M.degree
        return out

    def roots(self, a: int) -> list[Fraction]:
        """The constants ``p`` with ``P_a = prod (x + p)``, repeated by multiplicity."""
        shifts, rest = _linear_shifts(self.P[a])
        if rest.degree > 0:
            raise UnsupportedFactorization(f"P_{a} has non-rational roots")
        return sorted(c for c, m in shifts.items() for _ in range(m))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DrinfeldData):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.P == other.P
            and self.Qtilde_M == other.Qtilde_M
            and self.Q_M == other.Q_M
        )

    def __hash__(self) -> int:
        return hash((self.ctx, tuple(sorted(self.P.items())), self.Qtilde_M, self.Q_M))


@dataclass(frozen=True)
class Verdict:
    status: str
    data: DrinfeldData | None = None
    witness: dict = field(default_factory=dict)

    @property
    def finite(self) -> bool:
        return self.status == FINITE


def _odd_pair_data(f: RatFun) -> tuple[Polynomial, Polynomial, tuple | None, tuple | None]:
    num = -f.num
    den = f.den
    r1 = r2 = None
    s1, rest1 = _linear_shifts(num)
    s2, rest2 = _linear_shifts(den)
    if rest1.degree <= 0 and rest2.degree <= 0:
        r1 = tuple(sorted(c for c, m in s1.items() for _ in range(m)))
        r2 = tuple(sorted(c for c, m in s2.items() for _ in range(m)))
    return num, -den, r1, r2


def check_finite_dim(L: HighestWeight) -> Verdict:
    """Decide whether ``V(L)`` is finite-dimensional and assemble its Drinfeld data."""
    ctx = L.ctx
    P: dict[int, Polynomial] = {}
    unsupported = []
    for a in range(1, ctx.size):
        if a == ctx.M:
            continue
        f = L[a] / L[a + 1]
        sol = solve_shift_polynomial(f, ctx.sign(ctx.parity(a)))
        if sol.status == NOT_FINITE:
            return Verdict(NOT_FINITE, witness={"a": a, "ratio": str(f), "reason": sol.reason})
        if sol.status == UNSUPPORTED:
            unsupported.append(a)
            continue
        P[a] = sol.P
    f = L[ctx.M] / L[ctx.M + 1]
    if f.num.degree != f.den.degree or f.num.lc != -1:
        return Verdict(NOT_FINITE, witness={"a": ctx.M, "ratio": str(f), "reason": "ratio must tend to -1"})
    qt, q, r1, r2 = _odd_pair_data(f)
    if qt.gcd(q).degree > 0:
        return Verdict(NOT_FINITE, witness={"a": ctx.M, "reason": "Qtilde_M and Q_M not coprime"})
    if unsupported:
        return Verdict(UNSUPPORTED, witness={"a": unsupported, "reason": "non-rational roots"})
    return Verdict(FINITE, DrinfeldData(ctx, P, qt, q, r1, r2))


@dataclass(frozen=True)
class FundamentalFactor:
    t: int
    i: int
    weight: HighestWeight


def fundamental_weight(ctx: GradingContext, t: int, low: Fraction, high: Fraction) -> HighestWeight:
    """Components ``(-1)^[a] (1 + high/x)`` for ``a <= t`` and ``(-1)^[a] (1 + low/x)`` for ``a > t``."""
    comps = []
    for a in ctx.indices:
        c = high if a <= t else low
        comps.append(RatFun.from_inverse_powers([ctx.sign(ctx.parity(a)), ctx.sign(ctx.parity(a)) * c], "x"))
    return HighestWeight(ctx, tuple(comps))


def factor_into_fundamentals(L: HighestWeight, D: DrinfeldData) -> tuple[RatFun, list[FundamentalFactor]]:
    """Twist ``f`` and fundamental factors whose star product, twisted by ``f``, is ``L``."""
    ctx = L.ctx
    factors: list[FundamentalFactor] = []
    for t in range(1, ctx.size):
        if t == ctx.M:
            if D.r1 is None or D.r2 is None:
                raise UnsupportedFactorization("Qtilde_M / Q_M have non-rational roots")
            pairs = list(zip(D.r1, D.r2))
            for i, (r1, r2) in enumerate(pairs, start=1):
                factors.append(FundamentalFactor(t, i, fundamental_weight(ctx, t, r2, r1)))
        else:
            step = ctx.sign(ctx.parity(t))
            for i, p in enumerate(D.roots(t), start=1):
                factors.append(FundamentalFactor(t, i, fundamental_weight(ctx, t, p, p + step)))
    product = star_all(ctx, [fac.weight for fac in factors])
    f = L[1] / product[1]
    if twist(f, product) != L:
        raise ValueError("Drinfeld data is inconsistent with the weight")
    return f, factors
