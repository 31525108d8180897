"""Exact sparse linear algebra over the rationals.

Vectors are plain tuples of :class:`~fractions.Fraction`. Matrices are
:class:`SparseMatrix` (row-wise dictionaries of nonzero entries) or, for
matrices of rational functions in one variable, :class:`RatFunMatrix`.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .poly import Polynomial, RatFun, Scalar, as_q, inverse_series

Vector = tuple[Fraction, ...]


class SparseMatrix:
    """Immutable rows x cols rational matrix storing nonzero entries only."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: dict[tuple[int, int], Scalar] | None = None):
        self.rows = rows
        self.cols = cols
        data: dict[int, dict[int, Fraction]] = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
                v = as_q(v)
                if v:
                    data.setdefault(i, {})[j] = v
        self._data = data

    @classmethod
    def _from_rows(cls, rows: int, cols: int, data: dict[int, dict[int, Fraction]]) -> SparseMatrix:
        out = object.__new__(cls)
        out.rows, out.cols = rows, cols
        out._data = {i: r for i, r in data.items() if r}
        return out

    @classmethod
    def zero(cls, rows: int, cols: int | None = None) -> SparseMatrix:
        return cls._from_rows(rows, rows if cols is None else cols, {})

    @classmethod
    def identity(cls, n: int, scale: Scalar = 1) -> SparseMatrix:
        scale = as_q(scale)
        if not scale:
            return cls.zero(n)
        return cls._from_rows(n, n, {i: {i: scale} for i in range(n)})

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> SparseMatrix:
        return cls._from_rows(n, n, {i: {j: Fraction(1)}})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[Scalar]]) -> SparseMatrix:
        r = len(rows)
        c = len(rows[0]) if r else 0
        return cls(r, c, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v})

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: int) -> SparseMatrix:
        return cls(rows, len(columns), {(i, j): v for j, col in enumerate(columns) for i, v in enumerate(col) if v})

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> dict[tuple[int, int], Fraction]:
        return {(i, j): v for i, r in self._data.items() for j, v in r.items()}

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._data.get(i, {}).get(j, Fraction(0))

    def row(self, i: int) -> dict[int, Fraction]:
        return dict(self._data.get(i, {}))

    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    def is_zero(self) -> bool:
        return not self._data

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for i, r in self._data.items():
            for j, v in r.items():
                out[i][j] = v
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, tuple(sorted(self.entries.items()))))

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}, {self.cols}, nnz={self.nnz()})"

    def _check_same_shape(self, other: SparseMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: SparseMatrix) -> SparseMatrix:
        self._check_same_shape(other)
        data = {i: dict(r) for i, r in self._data.items()}
        for i, r in other._data.items():
            tgt = data.setdefault(i, {})
            for j, v in r.items():
                s = tgt.get(j, 0) + v
                if s:
                    tgt[j] = s
                else:
                    tgt.pop(j, None)
        return SparseMatrix._from_rows(self.rows, self.cols, data)

    def __neg__(self) -> SparseMatrix:
        return self.scale(-1)

    def __sub__(self, other: SparseMatrix) -> SparseMatrix:
        return self + (-other)

    def scale(self, c: Scalar) -> SparseMatrix:
        c = as_q(c)
        if not c:
            return SparseMatrix.zero(self.rows, self.cols)
        return SparseMatrix._from_rows(
            self.rows, self.cols, {i: {j: v * c for j, v in r.items()} for i, r in self._data.items()}
        )

    def __rmul__(self, c: Scalar) -> SparseMatrix:
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, SparseMatrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            data: dict[int, dict[int, Fraction]] = {}
            odata = other._data
            for i, r in self._data.items():
                acc: dict[int, Fraction] = {}
                for k, a in r.items():
                    orow = odata.get(k)
                    if not orow:
                        continue
                    for j, b in orow.items():
                        acc[j] = acc.get(j, 0) + a * b
                acc = {j: v for j, v in acc.items() if v}
                if acc:
                    data[i] = acc
            return SparseMatrix._from_rows(self.rows, other.cols, data)
        return self.apply(other)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        out = [Fraction(0)] * self.rows
        for i, r in self._data.items():
            acc = Fraction(0)
            for j, a in r.items():
                if v[j]:
                    acc += a * v[j]
            out[i] = acc
        return tuple(out)

    def transpose(self) -> SparseMatrix:
        data: dict[int, dict[int, Fraction]] = {}
        for i, r in self._data.items():
            for j, v in r.items():
                data.setdefault(j, {})[i] = v
        return SparseMatrix._from_rows(self.cols, self.rows, data)

    @property
    def T(self) -> SparseMatrix:
        return self.transpose()

    def kron(self, other: SparseMatrix) -> SparseMatrix:
        data: dict[int, dict[int, Fraction]] = {}
        for i, r in self._data.items():
            for k, s in other._data.items():
                row = data.setdefault(i * other.rows + k, {})
                for j, a in r.items():
                    for l, b in s.items():
                        row[j * other.cols + l] = a * b
        return SparseMatrix._from_rows(self.rows * other.rows, self.cols * other.cols, data)

    def map_entries(self, fn) -> SparseMatrix:
        """New matrix with entry (i, j, v) replaced by fn(i, j, v)."""
        data: dict[int, dict[int, Fraction]] = {}
        for i, r in self._data.items():
            for j, v in r.items():
                w = fn(i, j, v)
                if w:
                    data.setdefault(i, {})[j] = as_q(w)
        return SparseMatrix._from_rows(self.rows, self.cols, data)

    def is_diagonal(self) -> bool:
        return all(set(r) <= {i} for i, r in self._data.items())

    def diagonal(self) -> list[Fraction]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]


# ---------------------------------------------------------------------------
# Row reduction and subspaces


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a dense matrix; returns (nonzero rows, pivot columns)."""
    mat = [list(map(as_q, r)) for r in rows]
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        prow = mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(m: SparseMatrix | Sequence[Sequence[Fraction]]) -> int:
    rows = m.to_dense() if isinstance(m, SparseMatrix) else m
    return len(rref(rows)[1])


def _nullspace_dense(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def nullspace(m: SparseMatrix | Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[Vector]:
    """Exact basis of the right nullspace (empty iff the map is injective)."""
    if isinstance(m, SparseMatrix):
        return _nullspace_dense(m.to_dense(), m.cols)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    return _nullspace_dense(m, ncols)


def span_basis(vectors: Iterable[Sequence[Fraction]], dim: int | None = None) -> list[Vector]:
    """Echelonized basis (reduced rows) of the span of ``vectors``."""
    vecs = [tuple(map(as_q, v)) for v in vectors]
    if not vecs:
        return []
    red, _ = rref(vecs, dim if dim is not None else len(vecs[0]))
    return [tuple(r) for r in red]


def independent_subset(vectors: Sequence[Sequence[Fraction]]) -> list[int]:
    """Indices of a maximal linearly independent prefix-greedy subset."""
    chosen: list[int] = []
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for idx, v in enumerate(vectors):
        w = list(map(as_q, v))
        for row, p in zip(basis, pivots):
            if w[p]:
                f = w[p]
                w = [a - f * b for a, b in zip(w, row)]
        p = next((c for c, x in enumerate(w) if x), None)
        if p is None:
            continue
        inv = 1 / w[p]
        w = [x * inv for x in w]
        for k, row in enumerate(basis):
            if row[p]:
                f = row[p]
                basis[k] = [a - f * b for a, b in zip(row, w)]
        basis.append(w)
        pivots.append(p)
        chosen.append(idx)
    return chosen


def in_span(basis: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(v)]) == rank(basis)


def coordinates(basis: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    """Coefficients c with sum c_i basis[i] = v; raises if v is not in the span."""
    n = len(basis)
    dim = len(v)
    # augmented system: columns are basis vectors
    rows = [[basis[j][i] for j in range(n)] + [v[i]] for i in range(dim)]
    red, pivots = rref(rows, n + 1)
    if n in pivots:
        raise ValueError("vector is not in the span of the basis")
    sol = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        sol[p] = row[n]
    return tuple(sol)


def annihilator(basis: Sequence[Sequence[Fraction]], dim: int) -> list[Vector]:
    """Row vectors z with z . s = 0 for every s in span(basis)."""
    if not basis:
        return [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    return nullspace([list(b) for b in basis], dim)


def largest_invariant_subspace(
    ambient: Sequence[Sequence[Fraction]], ops: Sequence[SparseMatrix], dim: int | None = None
) -> list[Vector]:
    """Largest S inside span(ambient) with op(S) in S for every op.

    Fixpoint S_{i+1} = {w in S_i : op w in S_i for all op}; each step is a
    preimage intersection, and the dimension strictly drops until stable.
    """
    if dim is None:
        if ambient:
            dim = len(ambient[0])
        elif ops:
            dim = ops[0].cols
        else:
            return []
    for op in ops:
        if op.shape != (dim, dim):
            raise ValueError(f"operator of shape {op.shape} on a space of dimension {dim}")
    current = span_basis(ambient, dim)
    while current:
        ann = annihilator(current, dim)
        if not ann:
            return current
        images = [[op.apply(b) for b in current] for op in ops]
        # condition on coefficient vector c: ann . op . (B c) = 0
        rows = []
        for imgs in images:
            for z in ann:
                rows.append([sum((z[k] * img[k] for k in range(dim) if z[k]), Fraction(0)) for img in imgs])
        if not rows:
            return current
        sol = nullspace(rows, len(current))
        if len(sol) == len(current):
            return current
        nxt = [tuple(sum((c[j] * current[j][k] for j in range(len(current)) if c[j]), Fraction(0)) for k in range(dim)) for c in sol]
        current = span_basis(nxt, dim)
    return current


def is_invariant(basis: Sequence[Sequence[Fraction]], ops: Sequence[SparseMatrix]) -> bool:
    return all(in_span(basis, op.apply(b)) for op in ops for b in basis)


def closure(seed: Sequence[Sequence[Fraction]], ops: Sequence[SparseMatrix]) -> list[Vector]:
    """Smallest subspace containing ``seed`` and stable under every op.

    Returns the generated vectors themselves (not re-echelonized), so
    homogeneous inputs under homogeneous operators stay homogeneous.
    """
    chosen: list[Vector] = []
    basis: list[list[Fraction]] = []
    pivots: list[int] = []

    def reduce_(w: list[Fraction]) -> list[Fraction] | None:
        for row, p in zip(basis, pivots):
            if w[p]:
                f = w[p]
                w = [a - f * b for a, b in zip(w, row)]
        return w if any(w) else None

    queue = [tuple(map(as_q, v)) for v in seed]
    while queue:
        v = queue.pop(0)
        w = reduce_(list(v))
        if w is None:
            continue
        p = next(c for c, x in enumerate(w) if x)
        inv = 1 / w[p]
        w = [x * inv for x in w]
        for k, row in enumerate(basis):
            if row[p]:
                f = row[p]
                basis[k] = [a - f * b for a, b in zip(row, w)]
        basis.append(w)
        pivots.append(p)
        chosen.append(v)
        for op in ops:
            queue.append(op.apply(v))
    return chosen


# ---------------------------------------------------------------------------
# Matrices of rational functions


class RatFunMatrix:
    """Matrix of rational functions in one variable with a shared denominator.

    Stored as ``N(u) / d(u)`` where ``d`` is monic and ``N(u) = sum_j C_j u^j``
    with constant :class:`SparseMatrix` coefficients ``C_j``.
    """

    __slots__ = ("rows", "cols", "den", "coeffs")

    def __init__(self, coeffs: Sequence[SparseMatrix], den: Polynomial):
        if den.is_zero():
            raise ZeroDivisionError("zero common denominator")
        if not coeffs:
            raise ValueError("need at least one coefficient matrix (for the shape)")
        shape = coeffs[0].shape
        if any(c.shape != shape for c in coeffs):
            raise ValueError("coefficient matrices disagree in shape")
        lc = den.lc
        cs = [c.scale(1 / lc) if lc != 1 else c for c in coeffs]
        while len(cs) > 1 and cs[-1].is_zero():
            cs.pop()
        self.rows, self.cols = shape
        self.den = den.monic()
        self.coeffs: tuple[SparseMatrix, ...] = tuple(cs)

    @classmethod
    def constant(cls, m: SparseMatrix, var: str = "u") -> RatFunMatrix:
        return cls([m], Polynomial.const(1, var))

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: dict[tuple[int, int], RatFun], var: str = "u") -> RatFunMatrix:
        den = Polynomial.const(1, var)
        for f in entries.values():
            den = den * f.den.exact_div(den.gcd(f.den)) if not f.is_zero() else den
        deg = 0
        nums: dict[tuple[int, int], Polynomial] = {}
        for key, f in entries.items():
            if f.is_zero():
                continue
            p = f.num * den.exact_div(f.den)
            nums[key] = p
            deg = max(deg, p.degree)
        coeffs = [SparseMatrix(rows, cols, {k: p.coeff(j) for k, p in nums.items() if p.coeff(j)}) for j in range(deg + 1)]
        return cls(coeffs, den)

    @property
    def var(self) -> str:
        return self.den.var

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def num_degree(self) -> int:
        return len(self.coeffs) - 1

    def entry_numerator(self, i: int, j: int) -> Polynomial:
        return Polynomial([c[i, j] for c in self.coeffs], self.var)

    def entry(self, i: int, j: int) -> RatFun:
        return RatFun(self.entry_numerator(i, j), self.den)

    def __getitem__(self, key: tuple[int, int]) -> RatFun:
        return self.entry(*key)

    def support(self) -> set[tuple[int, int]]:
        out: set[tuple[int, int]] = set()
        for c in self.coeffs:
            out.update(c.entries)
        return out

    def entries(self) -> dict[tuple[int, int], RatFun]:
        return {k: self.entry(*k) for k in sorted(self.support())}

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        # N1 d2 == N2 d1
        return (self - other).is_zero()

    def __hash__(self) -> int:  # pragma: no cover - mutable-free but equality is semantic
        return hash(self.shape)

    def __repr__(self) -> str:
        return f"RatFunMatrix({self.rows}x{self.cols}, den={self.den})"

    def _scaled_coeffs(self, p: Polynomial) -> list[SparseMatrix]:
        """Coefficient matrices of N(u) * p(u)."""
        out = [SparseMatrix.zero(self.rows, self.cols) for _ in range(len(self.coeffs) + max(p.degree, 0))]
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            for k, a in enumerate(p.coeffs):
                if a:
                    out[j + k] = out[j + k] + c.scale(a)
        return out

    def __add__(self, other: RatFunMatrix) -> RatFunMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        if self.den == other.den:
            n = max(len(self.coeffs), len(other.coeffs))
            z = SparseMatrix.zero(self.rows, self.cols)
            cs = [
                (self.coeffs[j] if j < len(self.coeffs) else z) + (other.coeffs[j] if j < len(other.coeffs) else z)
                for j in range(n)
            ]
            return RatFunMatrix(cs, self.den)
        g = self.den.gcd(other.den)
        fa = other.den.exact_div(g)
        fb = self.den.exact_div(g)
        a = self._scaled_coeffs(fa)
        b = other._scaled_coeffs(fb)
        n = max(len(a), len(b))
        z = SparseMatrix.zero(self.rows, self.cols)
        cs = [(a[j] if j < len(a) else z) + (b[j] if j < len(b) else z) for j in range(n)]
        return RatFunMatrix(cs, self.den * fa)

    def __neg__(self) -> RatFunMatrix:
        return RatFunMatrix([-c for c in self.coeffs], self.den)

    def __sub__(self, other: RatFunMatrix) -> RatFunMatrix:
        return self + (-other)

    def scale(self, c: Scalar) -> RatFunMatrix:
        return RatFunMatrix([m.scale(c) for m in self.coeffs], self.den)

    def __matmul__(self, other: RatFunMatrix) -> RatFunMatrix:
        n = len(self.coeffs) + len(other.coeffs) - 1
        out = [SparseMatrix.zero(self.rows, other.cols) for _ in range(n)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a @ b
        return RatFunMatrix(out, self.den * other.den)

    def kron(self, other: RatFunMatrix) -> RatFunMatrix:
        n = len(self.coeffs) + len(other.coeffs) - 1
        out = [SparseMatrix.zero(self.rows * other.rows, self.cols * other.cols) for _ in range(n)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a.kron(b)
        return RatFunMatrix(out, self.den * other.den)

    def conjugate(self, left: SparseMatrix, right: SparseMatrix) -> RatFunMatrix:
        """``left @ self @ right`` for constant matrices."""
        return RatFunMatrix([left @ c @ right for c in self.coeffs], self.den)

    def map_constant(self, fn) -> RatFunMatrix:
        """Apply a linear map of constant matrices coefficientwise."""
        return RatFunMatrix([fn(c) for c in self.coeffs], self.den)

    def shift(self, alpha: Scalar) -> RatFunMatrix:
        """Substitute ``u -> u + alpha``."""
        alpha = as_q(alpha)
        if alpha == 0:
            return self
        n = len(self.coeffs)
        out = [SparseMatrix.zero(self.rows, self.cols) for _ in range(n)]
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            for i in range(j + 1):
                w = comb(j, i) * alpha ** (j - i)
                if w:
                    out[i] = out[i] + c.scale(w)
        return RatFunMatrix(out, self.den.shift(alpha))

    def reduced(self) -> RatFunMatrix:
        """Cancel common factors between the denominator and every entry."""
        g = self.den
        for key in self.support():
            if g.degree <= 0:
                break
            g = g.gcd(self.entry_numerator(*key))
        if g.degree <= 0:
            return self
        # divide numerator polynomial-matrix by g entrywise
        nums = {k: self.entry_numerator(*k).exact_div(g) for k in self.support()}
        deg = max((p.degree for p in nums.values()), default=0)
        cs = [SparseMatrix(self.rows, self.cols, {k: p.coeff(j) for k, p in nums.items()}) for j in range(deg + 1)]
        return RatFunMatrix(cs, self.den.exact_div(g))

    def is_regular_at_infinity(self) -> bool:
        return self.num_degree <= self.den.degree or self.is_zero()

    def modes(self, order: int) -> list[SparseMatrix]:
        """Series coefficients ``M_0..M_order`` with ``self = sum_n M_n u^(-n)``."""
        if not self.is_regular_at_infinity():
            raise ValueError("matrix entries have a pole at infinity")
        D = self.den.degree
        inv = inverse_series(self.den.reversed_coeffs(D), order)
        out = []
        for n in range(order + 1):
            acc = SparseMatrix.zero(self.rows, self.cols)
            for j in range(min(n, D) + 1):
                k = D - j
                if k < len(self.coeffs) and inv[n - j]:
                    acc = acc + self.coeffs[k].scale(inv[n - j])
            out.append(acc)
        return out

    def apply(self, v: Sequence[Fraction]) -> list[Polynomial]:
        """Numerator polynomials of ``N(u) v`` (divide by ``den`` for the value)."""
        imgs = [c.apply(v) for c in self.coeffs]
        return [Polynomial([img[i] for img in imgs], self.var) for i in range(self.rows)]


# ---------------------------------------------------------------------------
# Spectral helpers


def charpoly(m: SparseMatrix, var: str = "x") -> Polynomial:
    """``det(x I - m)`` by the Faddeev-LeVerrier recursion (exact over Q)."""
    n, cols = m.shape
    if n != cols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = SparseMatrix.zero(n)
    I = SparseMatrix.identity(n)
    for k in range(1, n + 1):
        Mk = m @ Mk + I.scale(coeffs[n - k + 1])
        tr = sum((m @ Mk).diagonal(), Fraction(0))
        coeffs[n - k] = -tr / k
    return Polynomial(coeffs, var)


def rational_eigenspaces(m: SparseMatrix) -> tuple[dict[Fraction, list[Vector]], bool]:
    """Eigenspaces for the rational eigenvalues of ``m``.

    The flag is False when some eigenvalue is irrational (those are skipped).
    """
    n = m.shape[0]
    roots, rest = charpoly(m).rational_roots()
    out = {}
    for lam in sorted(roots):
        shifted = m - SparseMatrix.identity(n, lam)
        out[lam] = nullspace(shifted, n)
    return out, rest.degree <= 0


def ratfunmatrix_from_modes(modes: Sequence[SparseMatrix], var: str = "u") -> RatFunMatrix | None:
    """Smallest-denominator rational matrix whose series starts with ``modes``.

    Looks for a monic ``d(u)`` of degree ``K`` with ``d(u) * sum M_n u^-n``
    polynomial through order ``len(modes) - 1``; requires at least ``K + 1``
    recurrence equations per entry, so ``K <= (len(modes) - 2) / 2``. Returns
    None when no such ``K`` exists.
    """
    L = len(modes) - 1
    rows, cols = modes[0].shape
    keys = sorted(set().union(*(m.entries.keys() for m in modes)))
    for K in range(0, L // 2 + 1):
        if L - K < K + 1:
            break
        sol: tuple[Fraction, ...] = ()
        if K:
            # columns of the system are indexed by c_1..c_K
            basis = []
            for j in range(1, K + 1):
                basis.append(tuple(modes[m + K - j][e] for m in range(1, L - K + 1) for e in keys))
            rhs = tuple(-modes[m + K][e] for m in range(1, L - K + 1) for e in keys)
            try:
                sol = coordinates(basis, rhs)
            except ValueError:
                continue
        elif any(not modes[m].is_zero() for m in range(1, L + 1)):
            continue
        c = (Fraction(1),) + tuple(sol)
        den = Polynomial([c[K - i] for i in range(K + 1)], var)
        coeffs = []
        for p in range(K + 1):
            acc = SparseMatrix.zero(rows, cols)
            for j in range(p + 1):
                if c[j]:
                    acc = acc + modes[p - j].scale(c[j])
            coeffs.append(acc)
        coeffs.reverse()  # coefficient of u^(K-p) sits at index K-p
        return RatFunMatrix(coeffs, den).reduced()
    return None
