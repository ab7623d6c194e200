"""Exact rational linear algebra: scalars, vectors, matrices, rank-3 tensors.

Every value is an immutable container of ``fractions.Fraction`` entries and
every operation is a pure function, so results are exact and equality tests
are genuine identities (no tolerances anywhere).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class InputError(ValueError):
    """Malformed input: bad shapes, bad indices, unparseable literals."""


class InvalidStructureError(ValueError):
    """A mathematical precondition failed (e.g. a product is not center-symmetric)."""


def parse_rational(text: str | int) -> Scalar:
    """Parse a rational literal ``"p"`` or ``"p/q"`` (optional leading minus, q > 0).

    Plain ints are accepted for convenience in JSON files.  Anything else
    (floats, scientific notation, spaces inside the literal) is rejected.
    """
    if isinstance(text, bool):
        raise InputError(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"not a rational literal: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise InputError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InputError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q: Scalar) -> str:
    """Canonical literal for a rational: ``"p"`` or ``"p/q"`` with q > 1."""
    return str(Fraction(q))


@dataclass(frozen=True)
class Vec:
    """A fixed-length vector of exact rationals."""

    entries: tuple[Scalar, ...]

    @staticmethod
    def of(values: Iterable) -> Vec:
        return Vec(tuple(Fraction(v) for v in values))

    @staticmethod
    def zero(dim: int) -> Vec:
        return Vec((ZERO,) * dim)

    @staticmethod
    def basis(dim: int, i: int) -> Vec:
        if not 0 <= i < dim:
            raise InputError(f"basis index {i} out of range for dim {dim}")
        return Vec(tuple(ONE if j == i else ZERO for j in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Scalar:
        return self.entries[i]

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.entries)

    def __add__(self, other: Vec) -> Vec:
        self._check_dim(other)
        return Vec(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Vec) -> Vec:
        self._check_dim(other)
        return Vec(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Vec:
        return Vec(tuple(-a for a in self.entries))

    def scale(self, q: Scalar) -> Vec:
        return Vec(tuple(q * a for a in self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def _check_dim(self, other: Vec) -> None:
        if self.dim != other.dim:
            raise InputError(f"vector dims differ: {self.dim} vs {other.dim}")


@dataclass(frozen=True)
class Mat:
    """A rows x cols matrix of exact rationals, acting on column vectors."""

    entries: tuple[tuple[Scalar, ...], ...]

    @staticmethod
    def of(rows: Iterable[Iterable]) -> Mat:
        grid = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if grid and any(len(row) != len(grid[0]) for row in grid):
            raise InputError("ragged matrix rows")
        return Mat(grid)

    @staticmethod
    def zero(rows: int, cols: int) -> Mat:
        return Mat(tuple((ZERO,) * cols for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> Mat:
        return Mat(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i]

    def __add__(self, other: Mat) -> Mat:
        self._check_shape(other)
        return Mat(tuple(tuple(a + b for a, b in zip(r1, r2))
                         for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: Mat) -> Mat:
        self._check_shape(other)
        return Mat(tuple(tuple(a - b for a, b in zip(r1, r2))
                         for r1, r2 in zip(self.entries, other.entries)))

    def __neg__(self) -> Mat:
        return Mat(tuple(tuple(-a for a in row) for row in self.entries))

    def scale(self, q: Scalar) -> Mat:
        return Mat(tuple(tuple(q * a for a in row) for row in self.entries))

    def __matmul__(self, other: Mat) -> Mat:
        return mat_mul(self, other)

    def transpose(self) -> Mat:
        return Mat(tuple(tuple(self.entries[i][j] for i in range(self.rows))
                         for j in range(self.cols)))

    def apply(self, v: Vec) -> Vec:
        if self.cols != v.dim:
            raise InputError(f"matrix is {self.rows}x{self.cols}, vector has dim {v.dim}")
        return Vec(tuple(sum((a * x for a, x in zip(row, v.entries) if a), ZERO)
                         for row in self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.entries for a in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _check_shape(self, other: Mat) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError(
                f"matrix shapes differ: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def mat_mul(a: Mat, b: Mat) -> Mat:
    """Exact matrix product; shapes must chain."""
    if a.cols != b.rows:
        raise InputError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = b.transpose()
    return Mat(tuple(
        tuple(sum((x * y for x, y in zip(row, col) if x), ZERO) for col in bt.entries)
        for row in a.entries))


def mat_commutator(a: Mat, b: Mat) -> Mat:
    """[a, b] = a b - b a for square matrices of equal size."""
    if not (a.is_square() and b.is_square() and a.rows == b.rows):
        raise InputError("commutator needs two square matrices of equal size")
    return mat_mul(a, b) - mat_mul(b, a)


def kron_sum_action(p: Mat, q: Mat) -> Mat:
    """Matrix of p(x)1 + 1(x)q on V(x)W in the lexicographic basis e_a(x)e_b.

    Row/column index (a, b) maps to a*w + b, where p is v x v and q is w x w;
    on a pure tensor the action is p(u)(x)w + u(x)q(w).
    """
    if not (p.is_square() and q.is_square()):
        raise InputError("kron_sum_action needs square matrices")
    v, w = p.rows, q.rows
    n = v * w
    out = [[ZERO] * n for _ in range(n)]
    for a in range(v):
        for b in range(w):
            r = a * w + b
            for ap in range(v):
                if p.entries[a][ap]:
                    out[r][ap * w + b] += p.entries[a][ap]
            for bp in range(w):
                if q.entries[b][bp]:
                    out[r][a * w + bp] += q.entries[b][bp]
    return Mat(tuple(tuple(row) for row in out))


@dataclass(frozen=True)
class T3:
    """Sparse rank-3 tensor with dense reads: absent entries read as zero.

    Keys are 0-based index triples (i, j, k) with i < d1, j < d2, k < d3.
    The entry dict is never mutated after construction.
    """

    d1: int
    d2: int
    d3: int
    entries: Mapping[tuple[int, int, int], Scalar]

    @staticmethod
    def of(d1: int, d2: int, d3: int, entries: Mapping[tuple[int, int, int], object]) -> T3:
        clean: dict[tuple[int, int, int], Scalar] = {}
        for (i, j, k), v in entries.items():
            if not (0 <= i < d1 and 0 <= j < d2 and 0 <= k < d3):
                raise InputError(f"tensor index {(i, j, k)} out of range for "
                                 f"shape ({d1}, {d2}, {d3})")
            q = Fraction(v)
            if q:
                clean[(i, j, k)] = q
        return T3(d1, d2, d3, clean)

    @staticmethod
    def zero(d1: int, d2: int, d3: int) -> T3:
        return T3(d1, d2, d3, {})

    def get(self, i: int, j: int, k: int) -> Scalar:
        return self.entries.get((i, j, k), ZERO)

    def items(self) -> Iterator[tuple[tuple[int, int, int], Scalar]]:
        return iter(self.entries.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, T3):
            return NotImplemented
        return ((self.d1, self.d2, self.d3) == (other.d1, other.d2, other.d3)
                and dict(self.entries) == dict(other.entries))

    def is_zero(self) -> bool:
        return not self.entries

    def swap12(self) -> T3:
        """Transpose the first two index slots."""
        return T3(self.d2, self.d1, self.d3,
                  {(j, i, k): q for (i, j, k), q in self.entries.items()})

    def canonical_key(self) -> tuple:
        """Hashable canonical form, used for deduplication."""
        return (self.d1, self.d2, self.d3, tuple(sorted(self.entries.items())))


# --- exact Gaussian elimination utilities ---

def rref(rows: list[list[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot column indices)."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ONE / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: list[list[Scalar]]) -> int:
    return len(rref(rows)[1])


def in_row_span(rows: list[list[Scalar]], v: list[Scalar]) -> bool:
    """Exact membership of v in the row span of rows."""
    if not rows:
        return all(x == 0 for x in v)
    reduced, pivots = rref(rows)
    vv = list(v)
    for row, col in zip(reduced, pivots):
        if vv[col] != 0:
            factor = vv[col]
            vv = [x - factor * y for x, y in zip(vv, row)]
    return all(x == 0 for x in vv)


def determinant(m: Mat) -> Scalar:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    if not m.is_square():
        raise InputError("determinant needs a square matrix")
    n = m.rows
    a = [list(row) for row in m.entries]
    det = ONE
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = ONE / a[col][col]
        for i in range(col + 1, n):
            if a[i][col] != 0:
                factor = a[i][col] * inv
                a[i] = [x - factor * y for x, y in zip(a[i], a[col])]
    return det
