"""Bimodules of center-symmetric algebras and the semidirect-sum construction.

A bimodule is a pair of linear actions l, r: A -> gl(V) satisfying

    [l_x, r_y] = [l_y, r_x]          (compatibility of the two actions)
    l_{x*y} - l_x l_y = r_x r_y - r_{y*x}

for all x, y; by bilinearity both are decided on basis pairs.  The pair is a
bimodule exactly when the semidirect product on A (+) V is center-symmetric,
and the raw candidate product is available for testing that equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import Algebra, center_symmetry_violation, left_op, multiply, right_op
from .linalg import InputError, InvalidStructureError, Mat, Scalar, T3, Vec


def _check_action_shapes(a: Algebra, l: Sequence[Mat], r: Sequence[Mat],
                         vdim: Optional[int]) -> int:
    if len(l) != a.dim or len(r) != a.dim:
        raise InputError(f"need one action matrix per basis element "
                         f"({a.dim}), got {len(l)} and {len(r)}")
    if a.dim == 0:
        return vdim if vdim is not None else 0
    size = l[0].rows
    for m in (*l, *r):
        if not (m.is_square() and m.rows == size):
            raise InputError("action matrices must all be square of equal size")
    if vdim is not None and vdim != size:
        raise InputError(f"vdim {vdim} does not match matrix size {size}")
    return size


def _require_center_symmetric(a: Algebra, who: str) -> None:
    bad = center_symmetry_violation(a)
    if bad is not None:
        raise InvalidStructureError(
            f"{who}: base product is not center-symmetric "
            f"(violating basis triple {tuple(x + 1 for x in bad)})")


def bimodule_violation(a: Algebra, l: Sequence[Mat], r: Sequence[Mat],
                       vdim: Optional[int] = None) -> Optional[str]:
    """None if (l, r) is a bimodule of a, else which equation fails and where."""
    _check_action_shapes(a, l, r, vdim)
    _require_center_symmetric(a, "bimodule check")
    n = a.dim
    for i in range(n):
        for j in range(n):
            lhs = l[i] @ r[j] - r[j] @ l[i]
            rhs = l[j] @ r[i] - r[i] @ l[j]
            if lhs != rhs:
                return f"action compatibility [l_x, r_y] = [l_y, r_x] fails at pair ({i + 1}, {j + 1})"
    for i in range(n):
        for j in range(n):
            ei, ej = Vec.basis(n, i), Vec.basis(n, j)
            l_prod = _weighted(l, multiply(a, ei, ej))
            r_prod = _weighted(r, multiply(a, ej, ei))
            if l_prod - l[i] @ l[j] != r[i] @ r[j] - r_prod:
                return f"l_{{xy}} - l_x l_y = r_x r_y - r_{{yx}} fails at pair ({i + 1}, {j + 1})"
    return None


def eq2_violation(a: Algebra, l: Sequence[Mat], r: Sequence[Mat]) -> Optional[tuple[int, int]]:
    """First basis pair where l_{xy} - l_x l_y = r_x r_y - r_{yx} fails."""
    n = a.dim
    for i in range(n):
        for j in range(n):
            ei, ej = Vec.basis(n, i), Vec.basis(n, j)
            l_prod = _weighted(l, multiply(a, ei, ej))
            r_prod = _weighted(r, multiply(a, ej, ei))
            if l_prod - l[i] @ l[j] != r[i] @ r[j] - r_prod:
                return (i, j)
    return None


def _weighted(ops: Sequence[Mat], weights: Vec) -> Mat:
    size = ops[0].rows if ops else 0
    acc = Mat.zero(size, size)
    for m, w in enumerate(weights):
        if w:
            acc = acc + ops[m].scale(w)
    return acc


def is_bimodule(a: Algebra, l: Sequence[Mat], r: Sequence[Mat],
                vdim: Optional[int] = None) -> bool:
    """True iff both bimodule equations hold on all basis pairs."""
    return bimodule_violation(a, l, r, vdim) is None


@dataclass(frozen=True)
class Bimodule:
    """A validated bimodule; construction fails if either equation is violated."""

    base: Algebra
    vdim: int
    l: tuple[Mat, ...]
    r: tuple[Mat, ...]

    def __post_init__(self):
        object.__setattr__(self, "l", tuple(self.l))
        object.__setattr__(self, "r", tuple(self.r))
        size = _check_action_shapes(self.base, self.l, self.r, self.vdim)
        if size != self.vdim:
            raise InputError(f"vdim {self.vdim} does not match matrix size {size}")
        problem = bimodule_violation(self.base, self.l, self.r, self.vdim)
        if problem is not None:
            raise InvalidStructureError(problem)

    @staticmethod
    def regular(a: Algebra) -> Bimodule:
        """The algebra acting on itself by left and right multiplication."""
        n = a.dim
        return Bimodule(a, n, tuple(left_op(a, i) for i in range(n)),
                        tuple(right_op(a, i) for i in range(n)))

    @staticmethod
    def zero(a: Algebra, vdim: int) -> Bimodule:
        z = Mat.zero(vdim, vdim)
        return Bimodule(a, vdim, (z,) * a.dim, (z,) * a.dim)


def semidirect_tensor(a: Algebra, l: Sequence[Mat], r: Sequence[Mat],
                      vdim: Optional[int] = None) -> Algebra:
    """Raw semidirect candidate on A (+) V, no bimodule validation.

    Products: e_i * e_j from a;  e_i * v_a = l_i v_a;  v_a * e_i = r_i v_a;
    V * V = 0.  Basis order is (base, module), so module coordinates sit at
    offset a.dim.  Center-symmetric exactly when (l, r) is a bimodule.
    """
    m = _check_action_shapes(a, l, r, vdim)
    n = a.dim
    big = n + m
    entries: dict[tuple[int, int, int], Scalar] = dict(a.c.entries)
    for i in range(n):
        for bb in range(m):
            for aa in range(m):
                q = l[i].entries[bb][aa]
                if q:
                    entries[(i, n + aa, n + bb)] = q
                q = r[i].entries[bb][aa]
                if q:
                    entries[(n + aa, i, n + bb)] = q
    label = f"{a.name}|x|V" if a.name else None
    return Algebra(big, T3(big, big, big, entries), label)


def semidirect_sum(b: Bimodule) -> Algebra:
    """Center-symmetric semidirect sum of a validated bimodule."""
    return semidirect_tensor(b.base, b.l, b.r, b.vdim)


def dual_bimodule(b: Bimodule) -> Bimodule:
    """The dual actions on V*: the pair (r*, l*) with transposed matrices."""
    return Bimodule(b.base, b.vdim,
                    tuple(m.transpose() for m in b.r),
                    tuple(m.transpose() for m in b.l))


def induced_lie_rep(b: Bimodule) -> list[Mat]:
    """l - r per basis element: a representation of the sub-adjacent Lie algebra."""
    return [li - ri for li, ri in zip(b.l, b.r)]
