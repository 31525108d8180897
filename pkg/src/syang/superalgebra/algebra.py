"""Elements of Y(gl(M|N)) in the PBW basis, and the straightening engine.

A generator ``t^a_b[n]`` is the tuple ``(a, b, n)`` with ``n >= 1``. A
monomial is a tuple of generators read left to right; powers are stored
as repeated factors. An :class:`AlgebraElement` maps PBW-ordered
monomials to nonzero rational coefficients; the empty monomial is the unit.

Normal ordering uses the defining mode relations

    [t^{a1}_{b1}[m], t^{a2}_{b2}[n]} = d^{a2}_{b1} t^{a1}_{b2}[m+n-1]
        - (-1)^{([a1]+[b1])([a2]+[b2])} d^{a1}_{b2} t^{a2}_{b1}[m+n-1]
        + (-1)^eta sum_{r=1}^{min(m,n)-1} ( t^{a2}_{b1}[r] t^{a1}_{b2}[m+n-1-r]
                                           - t^{a2}_{b1}[m+n-1-r] t^{a1}_{b2}[r] )

where ``[x, y} = x y - (-1)^{[x][y]} y x``. The right-hand side has
filtration degree ``m+n-1``, which is what makes rewriting terminate.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from ..exactmath import as_q, q_to_str
from .grading import GradingContext

Generator = tuple[int, int, int]
Monomial = tuple[Generator, ...]
Word = tuple[Generator, ...]

_HALF = Fraction(1, 2)


def _check_generator(ctx: GradingContext, g: Generator) -> None:
    a, b, n = g
    ctx.check_index(a, b)
    if not (isinstance(n, int) and n >= 1):
        raise ValueError(f"generator level must be >= 1, got {n}")


def _raw_commutator(ctx: GradingContext, g: Generator, h: Generator) -> dict[Word, Fraction]:
    """Unstraightened right-hand side of the mode relation, as words."""
    a1, b1, m = g
    a2, b2, n = h
    top = m + n - 1
    out: dict[Word, Fraction] = {}

    def add(word: Word, c: int | Fraction) -> None:
        v = out.get(word, 0) + c
        if v:
            out[word] = v
        else:
            out.pop(word, None)

    if a2 == b1:
        add(((a1, b2, top),), 1)
    if a1 == b2:
        add(((a2, b1, top),), -ctx.sign(ctx.pair_parity(a1, b1) * ctx.pair_parity(a2, b2)))
    s = ctx.sign(ctx.eta(a1, b1, a2, b2))
    for r in range(1, min(m, n)):
        add(((a2, b1, r), (a1, b2, top - r)), s)
        add(((a2, b1, top - r), (a1, b2, r)), -s)
    return out


@lru_cache(maxsize=None)
def _insert(ctx: GradingContext, g: Generator, m: Monomial) -> tuple[tuple[Monomial, Fraction], ...]:
    """Normal form of ``g * m`` for a PBW-ordered monomial ``m``."""
    if not m:
        return (((g,), 1),)
    h = m[0]
    kg, kh = ctx.generator_key(g), ctx.generator_key(h)
    if kg < kh:
        return (((g,) + m, 1),)
    rest = m[1:]
    acc: dict[Monomial, Fraction] = {}
    if g == h:
        if not ctx.generator_parity(g):
            return (((g,) + m, 1),)
        # odd square: g g = 1/2 [g, g}
        for word, c in _raw_commutator(ctx, g, g).items():
            _accumulate(acc, _normal_word(ctx, word, rest), c * _HALF)
        return tuple(acc.items())
    sign = ctx.sign(ctx.generator_parity(g) * ctx.generator_parity(h))
    # g h = sign * h g + [g, h}
    for mono, c in _insert(ctx, g, rest):
        _accumulate(acc, _insert(ctx, h, mono), c * sign)
    for word, c in _raw_commutator(ctx, g, h).items():
        _accumulate(acc, _normal_word(ctx, word, rest), c)
    return tuple(acc.items())


def _accumulate(acc: dict[Monomial, Fraction], terms: Iterable[tuple[Monomial, Fraction]], scale: Fraction | int) -> None:
    if not scale:
        return
    for mono, c in terms:
        v = acc.get(mono, 0) + c * scale
        if v:
            acc[mono] = v
        else:
            acc.pop(mono, None)


def _normal_word(ctx: GradingContext, word: Word, tail: Monomial = ()) -> tuple[tuple[Monomial, Fraction], ...]:
    """Normal form of ``word * tail`` where ``tail`` is already ordered."""
    # integer coefficients stay ints (fast); odd squares bring in Fraction halves
    terms: dict[Monomial, Fraction] = {tail: 1}
    for g in reversed(word):
        nxt: dict[Monomial, Fraction] = {}
        for mono, c in terms.items():
            _accumulate(nxt, _insert(ctx, g, mono), c)
        terms = nxt
    return tuple(terms.items())


def is_ordered(ctx: GradingContext, mono: Sequence[Generator]) -> bool:
    """True iff ``mono`` is a PBW basis monomial."""
    for g, h in zip(mono, mono[1:]):
        kg, kh = ctx.generator_key(g), ctx.generator_key(h)
        if kg > kh:
            return False
        if g == h and ctx.generator_parity(g):
            return False
    return True


def monomial_degree(mono: Sequence[Generator]) -> int:
    return sum(g[2] for g in mono)


def group_factors(mono: Sequence[Generator]) -> list[tuple[int, int, int, int]]:
    """Collapse repeated adjacent generators into (a, b, n, k) factors."""
    out: list[list[int]] = []
    for a, b, n in mono:
        if out and out[-1][:3] == [a, b, n]:
            out[-1][3] += 1
        else:
            out.append([a, b, n, 1])
    return [tuple(f) for f in out]


def expand_factors(factors: Iterable[Sequence[int]]) -> Monomial:
    mono: list[Generator] = []
    for a, b, n, k in factors:
        mono.extend([(a, b, n)] * k)
    return tuple(mono)


class AlgebraElement:
    """Exact rational linear combination of PBW monomials."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: GradingContext, terms: Mapping[Monomial, Fraction] | None = None):
        self.ctx = ctx
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = as_q(c)
                if c:
                    self.terms[tuple(mono)] = c

    @classmethod
    def _trusted(cls, ctx: GradingContext, terms: dict[Monomial, Fraction]) -> AlgebraElement:
        out = object.__new__(cls)
        out.ctx = ctx
        out.terms = {m: c if type(c) is Fraction else Fraction(c) for m, c in terms.items()}
        return out

    # -- constructors -------------------------------------------------------
    @classmethod
    def unit(cls, ctx: GradingContext, c: int | Fraction = 1) -> AlgebraElement:
        return cls(ctx, {(): c})

    @classmethod
    def zero(cls, ctx: GradingContext) -> AlgebraElement:
        return cls(ctx)

    @classmethod
    def generator(cls, ctx: GradingContext, a: int, b: int, n: int) -> AlgebraElement:
        """``t^a_b[n]``; level 0 gives the constant ``(-1)^[b] delta^a_b``."""
        ctx.check_index(a, b)
        if n == 0:
            return cls.unit(ctx, ctx.sign(ctx.parity(b))) if a == b else cls.zero(ctx)
        _check_generator(ctx, (a, b, n))
        return cls(ctx, {((a, b, n),): 1})

    @classmethod
    def from_word(cls, ctx: GradingContext, word: Sequence[Generator], coeff: int | Fraction = 1) -> AlgebraElement:
        return straighten(ctx, [(coeff, word)])

    # -- inspection ------------------------------------------------------------
    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Sequence[Generator]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def degree(self) -> int:
        """Filtration degree (max over monomials); -1 for zero."""
        return max((monomial_degree(m) for m in self.terms), default=-1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlgebraElement):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == AlgebraElement.unit(self.ctx, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items(), key=lambda t: (monomial_degree(t[0]), t[0])):
            body = " ".join(
                f"t^{a}_{b}[{n}]" + (f"^{k}" if k > 1 else "") for a, b, n, k in group_factors(mono)
            )
            if not body:
                parts.append(q_to_str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{q_to_str(c)}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- arithmetic -------------------------------------------------------------
    def _check_ctx(self, other: AlgebraElement) -> None:
        if self.ctx != other.ctx:
            raise ValueError("elements live in different algebras")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if isinstance(other, (int, Fraction)):
            other = AlgebraElement.unit(self.ctx, other)
        self._check_ctx(other)
        acc = dict(self.terms)
        _accumulate(acc, other.terms.items(), 1)
        return AlgebraElement._trusted(self.ctx, acc)

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement._trusted(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        if isinstance(other, (int, Fraction)):
            other = AlgebraElement.unit(self.ctx, other)
        return self + (-other)

    def __rsub__(self, other) -> AlgebraElement:
        return (-self) + other

    def scale(self, c: int | Fraction) -> AlgebraElement:
        c = as_q(c)
        if not c:
            return AlgebraElement.zero(self.ctx)
        return AlgebraElement._trusted(self.ctx, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return multiply(self.ctx, self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def is_homogeneous(self) -> bool:
        parities = {sum(self.ctx.generator_parity(g) for g in m) % 2 for m in self.terms}
        return len(parities) <= 1

    def parity(self) -> int:
        if not self.terms:
            return 0
        if not self.is_homogeneous():
            raise ValueError("inhomogeneous element has no parity")
        mono = next(iter(self.terms))
        return sum(self.ctx.generator_parity(g) for g in mono) % 2


# ---------------------------------------------------------------------------
# Public operations


def commutator_rhs(ctx: GradingContext, a1: int, b1: int, m: int, a2: int, b2: int, n: int) -> AlgebraElement:
    """Straightened right-hand side of the graded mode relation."""
    g, h = (a1, b1, m), (a2, b2, n)
    _check_generator(ctx, g)
    _check_generator(ctx, h)
    acc: dict[Monomial, Fraction] = {}
    for word, c in _raw_commutator(ctx, g, h).items():
        _accumulate(acc, _normal_word(ctx, word), c)
    return AlgebraElement._trusted(ctx, acc)


def straighten(ctx: GradingContext, word: Iterable[tuple[int | Fraction, Sequence[Generator]]]) -> AlgebraElement:
    """PBW normal form of a sum of coefficient-weighted generator words.

    Accepts either a single word (sequence of generators) or an iterable
    of ``(coeff, word)`` pairs.
    """
    items = list(word)
    if items and isinstance(items[0], tuple) and len(items[0]) == 3 and all(isinstance(x, int) for x in items[0]):
        items = [(1, items)]
    acc: dict[Monomial, Fraction] = {}
    for coeff, w in items:
        w = tuple(tuple(g) for g in w)
        for g in w:
            _check_generator(ctx, g)
        _accumulate(acc, _normal_word(ctx, w), as_q(coeff))
    return AlgebraElement._trusted(ctx, acc)


def multiply(ctx: GradingContext, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.ctx != ctx or y.ctx != ctx:
        raise ValueError("elements live in different algebras")
    acc: dict[Monomial, Fraction] = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            _accumulate(acc, _normal_word(ctx, mx, my), cx * cy)
    return AlgebraElement._trusted(ctx, acc)


def graded_commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """``x y - (-1)^{[x][y]} y x`` for homogeneous x, y."""
    s = x.ctx.sign(x.parity() * y.parity())
    return x * y - (y * x).scale(s)


def counit(ctx: GradingContext, x: AlgebraElement) -> Fraction:
    """Every generator with level >= 1 maps to 0, so only the unit term survives."""
    return x.coefficient(())


def _automorphism_image(ctx: GradingContext, g: Generator, f: Sequence[Fraction]) -> AlgebraElement:
    a, b, n = g
    out = AlgebraElement.generator(ctx, a, b, n)
    for k in range(1, min(n, len(f)) + 1):
        out = out + AlgebraElement.generator(ctx, a, b, n - k).scale(f[k - 1])
    return out


def apply_automorphism(ctx: GradingContext, f: Sequence[int | Fraction], x: AlgebraElement) -> AlgebraElement:
    """Image under ``t(x) -> f(x) t(x)`` with ``f = 1 + f_1 x^-1 + ... + f_K x^-K``."""
    fq = [as_q(c) for c in f]
    cache: dict[Generator, AlgebraElement] = {}
    out = AlgebraElement.zero(ctx)
    for mono, c in x.terms.items():
        img = AlgebraElement.unit(ctx, c)
        for g in mono:
            if g not in cache:
                cache[g] = _automorphism_image(ctx, g, fq)
            img = img * cache[g]
        out = out + img
    return out


def clear_caches() -> None:
    _insert.cache_clear()
