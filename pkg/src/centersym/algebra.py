"""Algebras from structure constants and their associator-symmetry classes.

An algebra is a bilinear product on K^n encoded by a rank-3 tensor c with
e_i * e_j = sum_k c_ij^k e_k.  The classifiers below test whether a signed
sum of permuted associators vanishes; since every identity involved is
multilinear, checking all basis triples decides it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from .linalg import ZERO, InputError, InvalidStructureError, Mat, Scalar, T3, Vec

# A permutation acts on an argument triple by reading sources:
# (sigma t)[pos] = t[src[pos]]; the sign is the permutation signature.
_ID = ((0, 1, 2), 1)
_T12 = ((1, 0, 2), -1)
_T23 = ((0, 2, 1), -1)
_T13 = ((2, 1, 0), -1)
_C123 = ((2, 0, 1), 1)
_C132 = ((1, 2, 0), 1)


class GClass(Enum):
    """Subgroups of the degree-3 symmetric group, as signed permutation lists."""

    G1 = "G1"  # {id}: associativity
    G2 = "G2"  # {id, t12}: Vinberg / right-symmetric
    G3 = "G3"  # {id, t23}: pre-Lie / left-symmetric
    G4 = "G4"  # {id, t13}: center-symmetric
    G5 = "G5"  # alternating group A3: generalized Jacobi
    G6 = "G6"  # full S3: Lie-admissible

    @property
    def signed_permutations(self) -> tuple[tuple[tuple[int, int, int], int], ...]:
        return _GCLASS_ELEMENTS[self]


_GCLASS_ELEMENTS = {
    GClass.G1: (_ID,),
    GClass.G2: (_ID, _T12),
    GClass.G3: (_ID, _T23),
    GClass.G4: (_ID, _T13),
    GClass.G5: (_ID, _C123, _C132),
    GClass.G6: (_ID, _T12, _T13, _T23, _C123, _C132),
}


@dataclass(frozen=True)
class Algebra:
    """dim-dimensional algebra with product tensor c (arbitrary bilinear product)."""

    dim: int
    c: T3
    name: Optional[str] = None

    def __post_init__(self):
        if self.dim < 0:
            raise InputError("dimension must be nonnegative")
        if (self.c.d1, self.c.d2, self.c.d3) != (self.dim, self.dim, self.dim):
            raise InputError(f"product tensor shape {(self.c.d1, self.c.d2, self.c.d3)} "
                             f"does not match dim {self.dim}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.dim == other.dim and self.c == other.c and self.name == other.name


@dataclass(frozen=True)
class LieAlgebra:
    """Lie algebra from bracket structure constants; antisymmetry and the
    Jacobi identity are verified exactly at construction."""

    dim: int
    bracket: T3

    def __post_init__(self):
        if (self.bracket.d1, self.bracket.d2, self.bracket.d3) != (self.dim,) * 3:
            raise InputError("bracket tensor shape does not match dim")
        for (i, j, k), q in self.bracket.items():
            if self.bracket.get(j, i, k) != -q:
                raise InvalidStructureError(
                    f"bracket not antisymmetric at {(i + 1, j + 1, k + 1)}")
        bad = jacobi_violation(self.bracket)
        if bad is not None:
            raise InvalidStructureError(f"Jacobi identity fails at basis triple "
                                        f"{tuple(x + 1 for x in bad)}")

    def ad(self, i: int) -> Mat:
        """Matrix of ad(e_i): e_j -> [e_i, e_j]."""
        n = self.dim
        return Mat(tuple(tuple(self.bracket.get(i, j, k) for j in range(n))
                         for k in range(n)))


def jacobi_violation(bracket: T3) -> Optional[tuple[int, int, int]]:
    """First basis triple (lex order) where [[x,y],z]+[[z,x],y]+[[y,z],x] != 0."""
    n = bracket.d1
    for i in range(n):
        for j in range(n):
            for k in range(n):
                acc = [ZERO] * n
                for (a, b, c3) in ((i, j, k), (k, i, j), (j, k, i)):
                    for m in range(n):
                        q = bracket.get(a, b, m)
                        if q:
                            for p in range(n):
                                r = bracket.get(m, c3, p)
                                if r:
                                    acc[p] += q * r
                if any(acc):
                    return (i, j, k)
    return None


def multiply(a: Algebra, x: Vec, y: Vec) -> Vec:
    """Product of two coordinate vectors: (x*y)_k = sum_ij x_i y_j c_ij^k."""
    if x.dim != a.dim or y.dim != a.dim:
        raise InputError(f"vectors must have dim {a.dim}")
    out = [ZERO] * a.dim
    for (i, j, k), q in a.c.items():
        if x[i] and y[j]:
            out[k] += x[i] * y[j] * q
    return Vec(tuple(out))


def associator(a: Algebra, x: Vec, y: Vec, z: Vec) -> Vec:
    """(x, y, z) = (x*y)*z - x*(y*z)."""
    return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z))


def associator_table(a: Algebra) -> dict[tuple[int, int, int], dict[int, Scalar]]:
    """All nonzero basis associators: (i, j, k) -> {p: coefficient of e_p}.

    Triples absent from the table have zero associator.  Built by sparse
    contraction, so cost scales with the number of nonzero constants.
    """
    by_first: dict[int, list[tuple[int, int, Scalar]]] = {}
    by_second: dict[int, list[tuple[int, int, Scalar]]] = {}
    for (i, j, k), q in a.c.items():
        by_first.setdefault(i, []).append((j, k, q))
        by_second.setdefault(j, []).append((i, k, q))
    table: dict[tuple[int, int, int], dict[int, Scalar]] = {}
    for (i, j, m), q1 in a.c.items():
        for (k, p, q2) in by_first.get(m, ()):
            row = table.setdefault((i, j, k), {})
            row[p] = row.get(p, ZERO) + q1 * q2
    for (j, k, m), q1 in a.c.items():
        for (i, p, q2) in by_second.get(m, ()):
            row = table.setdefault((i, j, k), {})
            row[p] = row.get(p, ZERO) - q1 * q2
    for key in list(table):
        row = {p: v for p, v in table[key].items() if v}
        if row:
            table[key] = row
        else:
            del table[key]
    return table


def _assoc_row(table, key) -> dict[int, Scalar]:
    return table.get(key, {})


def center_symmetry_violation(a: Algebra) -> Optional[tuple[int, int, int]]:
    """First basis triple (lex order) with (e_i,e_j,e_k) != (e_k,e_j,e_i)."""
    table = associator_table(a)
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(i + 1, n):
                if _assoc_row(table, (i, j, k)) != _assoc_row(table, (k, j, i)):
                    return (i, j, k)
    return None


def is_center_symmetric(a: Algebra) -> bool:
    """True iff the associator is symmetric in its outer arguments."""
    return center_symmetry_violation(a) is None


def g_associativity_violation(a: Algebra, g: GClass) -> Optional[tuple[int, int, int]]:
    """First basis triple where the signed associator sum over g is nonzero."""
    table = associator_table(a)
    n = a.dim
    elements = g.signed_permutations
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t = (i, j, k)
                acc: dict[int, Scalar] = {}
                for src, sign in elements:
                    row = _assoc_row(table, (t[src[0]], t[src[1]], t[src[2]]))
                    for p, v in row.items():
                        acc[p] = acc.get(p, ZERO) + (v if sign > 0 else -v)
                if any(acc.values()):
                    return t
    return None


def is_g_associative(a: Algebra, g: GClass) -> bool:
    """True iff sum_{sigma in g} sign(sigma) (x,y,z)∘sigma vanishes identically."""
    return g_associativity_violation(a, g) is None


def commutator_tensor(c: T3) -> T3:
    """Structure constants of the commutator x*y - y*x."""
    out: dict[tuple[int, int, int], Scalar] = {}
    for (i, j, k), q in c.items():
        out[(i, j, k)] = out.get((i, j, k), ZERO) + q
        out[(j, i, k)] = out.get((j, i, k), ZERO) - q
    return T3(c.d1, c.d2, c.d3, {key: v for key, v in out.items() if v})


def sub_adjacent(a: Algebra) -> LieAlgebra:
    """Lie algebra of the commutator bracket [x,y] = x*y - y*x.

    Refuses non-center-symmetric input: without center symmetry the
    commutator need not satisfy the Jacobi identity.
    """
    bad = center_symmetry_violation(a)
    if bad is not None:
        raise InvalidStructureError(
            "product is not center-symmetric: associator symmetry fails at basis "
            f"triple {tuple(x + 1 for x in bad)}")
    return LieAlgebra(a.dim, commutator_tensor(a.c))


def left_op(a: Algebra, i: int) -> Mat:
    """Matrix of left multiplication by e_i: entry (k, j) is c_ij^k."""
    _check_index(a, i)
    n = a.dim
    return Mat(tuple(tuple(a.c.get(i, j, k) for j in range(n)) for k in range(n)))


def right_op(a: Algebra, i: int) -> Mat:
    """Matrix of right multiplication by e_i: entry (k, j) is c_ji^k."""
    _check_index(a, i)
    n = a.dim
    return Mat(tuple(tuple(a.c.get(j, i, k) for j in range(n)) for k in range(n)))


def ad_op(a: Algebra, i: int) -> Mat:
    """Raw commutator action ad(e_i) = L_i - R_i (no Jacobi guarantee)."""
    return left_op(a, i) - right_op(a, i)


def _check_index(a: Algebra, i: int) -> None:
    if not 0 <= i < a.dim:
        raise InputError(f"basis index {i} out of range for dim {a.dim}")


def _weighted_op(ops: list[Mat], weights: Vec) -> Mat:
    """Linear extension sum_m weights_m ops[m]."""
    n = ops[0].rows if ops else 0
    acc = Mat.zero(n, n)
    for m, w in enumerate(weights):
        if w:
            acc = acc + ops[m].scale(w)
    return acc


def check_operator_identities(a: Algebra) -> bool:
    """Multiplication-operator identities equivalent to center symmetry:

    [L_x, R_y] = [L_y, R_x]  and  L_{x*y} - L_x L_y = R_x R_y - R_{y*x},
    checked on all basis pairs.
    """
    n = a.dim
    left = [left_op(a, i) for i in range(n)]
    right = [right_op(a, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = left[i] @ right[j] - right[j] @ left[i]
            rhs = left[j] @ right[i] - right[i] @ left[j]
            if lhs != rhs:
                return False
            ei, ej = Vec.basis(n, i), Vec.basis(n, j)
            l_prod = _weighted_op(left, multiply(a, ei, ej))
            r_prod = _weighted_op(right, multiply(a, ej, ei))
            if l_prod - left[i] @ left[j] != right[i] @ right[j] - r_prod:
                return False
    return True


def check_ad_representation(a: Algebra) -> bool:
    """ad([x,y]) = [ad_x, ad_y] on all basis pairs (requires center symmetry)."""
    lie = sub_adjacent(a)
    n = a.dim
    ads = [lie.ad(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = Mat.zero(n, n)
            for m in range(n):
                q = lie.bracket.get(i, j, m)
                if q:
                    lhs = lhs + ads[m].scale(q)
            if lhs != ads[i] @ ads[j] - ads[j] @ ads[i]:
                return False
    return True
