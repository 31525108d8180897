"""Univariate polynomials and rational functions over the rationals.

Everything here is exact. Coefficients are :class:`fractions.Fraction`;
polynomials are immutable and stored with ascending-degree coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Q = Fraction
Scalar = Union[int, Fraction]


def as_q(value: Scalar | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def q_to_str(value: Fraction) -> str:
    """Canonical string for a rational: ``"p"`` or ``"p/q"``."""
    value = as_q(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def q_from_str(text: str | int) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(text.strip())


class Polynomial:
    """Dense univariate polynomial with rational coefficients."""

    __slots__ = ("coeffs", "var", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "x"):
        cs = [as_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: Scalar, var: str = "x") -> Polynomial:
        return cls((c,), var)

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1, var: str = "x") -> Polynomial:
        return cls([0] * degree + [c], var)

    @classmethod
    def linear(cls, root_shift: Scalar, var: str = "x") -> Polynomial:
        """The monic linear polynomial ``var + root_shift``."""
        return cls((root_shift, 1), var)

    @classmethod
    def from_roots(cls, shifts: Iterable[Scalar], var: str = "x") -> Polynomial:
        """``prod (var + s)`` over ``shifts``."""
        out = cls.const(1, var)
        for s in shifts:
            out = out * cls.linear(s, var)
        return out

    # -- basic queries ----------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({[q_to_str(c) for c in self.coeffs]}, {self.var!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if mono and c == 1:
                term = mono
            elif mono and c == -1:
                term = "-" + mono
            else:
                term = q_to_str(c) + ("*" + mono if mono else "")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other, self.var)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(k) + other.coeff(k) for k in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs], self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        out = Polynomial.const(1, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return Polynomial((), self.var), self
        quot = [Fraction(0)] * (len(rem) - dq)
        inv_lc = 1 / other.lc
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv_lc
            quot[k - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return Polynomial(quot, self.var), Polynomial(rem[:dq], self.var)

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def exact_div(self, other: Polynomial) -> Polynomial:
        quot, rem = divmod(self, other)
        if not rem.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return quot

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def gcd(self, other: Polynomial) -> Polynomial:
        """Monic gcd; gcd(0, 0) = 0."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def shift(self, c: Scalar) -> Polynomial:
        """The polynomial ``p(var + c)``."""
        c = as_q(c)
        if c == 0 or self.is_const():
            return self
        out = Polynomial((), self.var)
        lin = Polynomial((c, 1), self.var)
        for coeff in reversed(self.coeffs):
            out = out * lin + coeff
        return out

    def reversed_coeffs(self, degree: int) -> list[Fraction]:
        """Coefficients of ``w^degree p(1/w)`` in ascending powers of ``w``."""
        if self.degree > degree:
            raise ValueError("degree bound smaller than polynomial degree")
        return [self.coeff(degree - k) for k in range(degree + 1)]

    def integer_primitive(self) -> list[int]:
        """Integer coefficients of a rational multiple of self with content 1."""
        if self.is_zero():
            return []
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return [v // g for v in ints]

    def rational_roots(self) -> tuple[dict[Fraction, int], Polynomial]:
        """Rational roots with multiplicity, plus the root-free cofactor.

        Candidates come from the rational-root theorem applied to the
        primitive integer form; each root is divided out repeatedly.
        """
        if self.is_zero():
            raise ValueError("zero polynomial has no finite root set")
        roots: dict[Fraction, int] = {}
        rest = self
        while rest.degree >= 1 and rest.coeffs[0] == 0:
            roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
            rest = Polynomial(rest.coeffs[1:], self.var)
        while rest.degree >= 1:
            ints = rest.integer_primitive()
            found = None
            for cand in _root_candidates(ints[0], ints[-1]):
                if rest(cand) == 0:
                    found = cand
                    break
            if found is None:
                break
            while rest.degree >= 1 and rest(found) == 0:
                roots[found] = roots.get(found, 0) + 1
                rest = rest.exact_div(Polynomial((-found, 1), self.var))
        return roots, rest


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _root_candidates(const: int, lead: int) -> list[Fraction]:
    seen = set()
    out = []
    for p in _divisors(const):
        for q in _divisors(lead):
            for s in (1, -1):
                r = Fraction(s * p, q)
                if r not in seen:
                    seen.add(r)
                    out.append(r)
    return out


class RatFun:
    """Reduced quotient of polynomials with monic denominator.

    Equality is structural, which is sound because construction always
    normalizes.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial | Scalar, den: Polynomial | Scalar = 1, var: str | None = None):
        if not isinstance(num, Polynomial):
            num = Polynomial.const(num, var or (den.var if isinstance(den, Polynomial) else "x"))
        if not isinstance(den, Polynomial):
            den = Polynomial.const(den, num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = Polynomial((), num.var)
            self.den = Polynomial.const(1, num.var)
            return
        g = num.gcd(den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lc = den.lc
        self.num = num * (1 / lc)
        self.den = den * (1 / lc)

    @property
    def var(self) -> str:
        return self.num.var

    @classmethod
    def from_inverse_powers(cls, coeffs: Sequence[Scalar], var: str = "x") -> RatFun:
        """``sum_k coeffs[k] * var^(-k)`` as a rational function."""
        K = len(coeffs) - 1
        if K < 0:
            return cls(0, 1, var)
        num = Polynomial([coeffs[K - j] for j in range(K + 1)], var)
        return cls(num, Polynomial.monomial(K, 1, var))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        if isinstance(other, Polynomial):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFun(({self.num}) / ({self.den}))"

    def __str__(self) -> str:
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def _coerce(self, other) -> RatFun:
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return RatFun(other, 1, self.var)
        return NotImplemented

    def __add__(self, other) -> RatFun:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFun:
        out = object.__new__(RatFun)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other) -> RatFun:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> RatFun:
        return (-self) + other

    def __mul__(self, other) -> RatFun:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFun:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RatFun:
        return self._coerce(other) / self

    def __pow__(self, k: int) -> RatFun:
        if k < 0:
            return RatFun(1, 1, self.var) / (self ** (-k))
        return RatFun(self.num ** k, self.den ** k)

    def shift(self, c: Scalar) -> RatFun:
        """``f(var + c)``."""
        return RatFun(self.num.shift(c), self.den.shift(c))

    def has_pole_at_infinity(self) -> bool:
        return self.num.degree > self.den.degree

    def value_at_infinity(self) -> Fraction:
        if self.has_pole_at_infinity():
            raise ValueError(f"{self} has a pole at infinity")
        if self.num.degree < self.den.degree:
            return Fraction(0)
        return self.num.lc

    def series(self, order: int) -> list[Fraction]:
        return series_expand(self, order)


def ratfun_normalize(num: Polynomial, den: Polynomial) -> RatFun:
    return RatFun(num, den)


def inverse_series(coeffs: Sequence[Fraction], order: int) -> list[Fraction]:
    """Power-series reciprocal of ``sum coeffs[k] w^k`` up to ``w^order``."""
    c0 = coeffs[0]
    if c0 == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv0 = 1 / c0
    out = [inv0]
    for k in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, min(k, len(coeffs) - 1) + 1):
            acc += coeffs[j] * out[k - j]
        out.append(-acc * inv0)
    return out


def series_expand(f: RatFun, order: int) -> list[Fraction]:
    """Coefficients ``c_0..c_order`` of ``f = sum c_k var^(-k)`` at infinity."""
    if f.has_pole_at_infinity():
        raise ValueError(f"{f} has a pole at infinity")
    D = f.den.degree
    den_rev = f.den.reversed_coeffs(D)
    num_rev = f.num.reversed_coeffs(D)
    inv = inverse_series(den_rev, order)
    out = []
    for k in range(order + 1):
        acc = Fraction(0)
        for j in range(min(k, D) + 1):
            acc += num_rev[j] * inv[k - j]
        out.append(acc)
    return out


def cauchy_product(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = min(len(a), len(b))
    return [sum((a[j] * b[k - j] for j in range(k + 1)), Fraction(0)) for k in range(n)]
