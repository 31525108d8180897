"""Gradation, sign rules and the total order on index pairs for Y(gl(M|N))."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

# Block positions of a PBW monomial, left to right.
BLOCK_NEG_ODD = 0
BLOCK_NEG_EVEN = 1
BLOCK_DIAG = 2
BLOCK_POS_EVEN = 3
BLOCK_POS_ODD = 4

BLOCK_NAMES = ("Phi_-^(1)", "Phi_-^(0)", "Phi_0", "Phi_+^(0)", "Phi_+^(1)")


@dataclass(frozen=True)
class GradingContext:
    """The pair (M, N) together with everything derived from it.

    Indices run over ``1..M+N``; ``parity(a)`` is 0 for ``a <= M`` and 1 otherwise.
    """

    M: int
    N: int

    def __post_init__(self):
        if not (isinstance(self.M, int) and isinstance(self.N, int)) or self.M < 1 or self.N < 1:
            raise ValueError(f"need M >= 1 and N >= 1, got ({self.M}, {self.N})")

    @property
    def size(self) -> int:
        return self.M + self.N

    @property
    def indices(self) -> range:
        return range(1, self.M + self.N + 1)

    def check_index(self, *idx: int) -> None:
        for a in idx:
            if not (isinstance(a, int) and 1 <= a <= self.M + self.N):
                raise IndexError(f"index {a} outside 1..{self.M + self.N}")

    def parity(self, a: int) -> int:
        return 0 if a <= self.M else 1

    def pair_parity(self, a: int, b: int) -> int:
        return (self.parity(a) + self.parity(b)) % 2

    def eta(self, a1: int, b1: int, a2: int, b2: int) -> int:
        p = self.parity
        return (p(a1) * p(a2) + p(b1) * (p(a1) + p(a2))) % 2

    def sign(self, exponent: int) -> int:
        return -1 if exponent % 2 else 1

    # -- pair classification and ordering ----------------------------------
    def block(self, a: int, b: int) -> int:
        if a == b:
            return BLOCK_DIAG
        odd = self.pair_parity(a, b)
        if a < b:
            return BLOCK_POS_ODD if odd else BLOCK_POS_EVEN
        return BLOCK_NEG_ODD if odd else BLOCK_NEG_EVEN

    @staticmethod
    def succ_rank(a: int, b: int) -> tuple:
        """Sort key increasing with the total order on pairs (larger = more to the right)."""
        if a < b:
            # (a,b) > (c,d) iff a < c or (a == c and b > d)
            return (2, -a, b)
        if a == b:
            # (a,a) > (b,b) iff a < b
            return (1, -a, 0)
        # p1 > p2 iff bar(p1) < bar(p2)
        return (0, b, -a)

    def pair_succ(self, p: tuple[int, int], q: tuple[int, int]) -> bool:
        """True iff p > q in the total order on pairs."""
        return self.succ_rank(*p) > self.succ_rank(*q)

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in self.indices for b in self.indices]

    def positive_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.pairs() if a < b]

    def negative_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.pairs() if a > b]

    def pairs_in_block(self, block: int) -> list[tuple[int, int]]:
        out = [p for p in self.pairs() if self.block(*p) == block]
        return sorted(out, key=lambda p: self.succ_rank(*p))

    @cached_property
    def _pair_keys(self) -> dict[tuple[int, int], tuple]:
        return {(a, b): (self.block(a, b), self.succ_rank(a, b)) for a, b in self.pairs()}

    def generator_key(self, g: tuple[int, int, int]) -> tuple:
        """Left-to-right position key of a generator t^a_b[n] in a PBW monomial."""
        a, b, n = g
        return self._pair_keys[(a, b)] + (n,)

    def generator_parity(self, g: tuple[int, int, int]) -> int:
        return self.pair_parity(g[0], g[1])

    def as_dict(self) -> dict:
        return {"M": self.M, "N": self.N}


def eta_sign(ctx: GradingContext, a1: int, b1: int, a2: int, b2: int) -> int:
    ctx.check_index(a1, b1, a2, b2)
    return ctx.eta(a1, b1, a2, b2)
