"""Invariant bilinear forms, isotropic subspaces, and Manin triples.

A Manin triple packages a center-symmetric algebra with a decomposition into
two isotropic subalgebras and a nondegenerate symmetric invariant form.  The
verifier reports every condition separately (it never short-circuits), so a
failing candidate pinpoints exactly which axiom broke and where.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Algebra, associator_table, center_symmetry_violation, multiply
from .bialgebra import Bialgebra, standard_cs_matched_pair
from .linalg import (ONE, ZERO, InputError, InvalidStructureError, Mat, Scalar, Vec,
                     format_rational, in_row_span, rank, rref)
from .matched import bicross_tensor
from .report import Report, ReportItem, Witness


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric pairing candidate given by its Gram matrix in the basis."""

    dim: int
    gram: Mat

    def __post_init__(self):
        if self.gram.rows != self.dim or self.gram.cols != self.dim:
            raise InputError(f"Gram matrix must be {self.dim}x{self.dim}")

    def value(self, u: Vec, v: Vec) -> Scalar:
        acc = ZERO
        for i, x in enumerate(u):
            if x:
                row = self.gram.row(i)
                acc += x * sum((row[j] * y for j, y in enumerate(v) if y), ZERO)
        return acc


@dataclass(frozen=True)
class Subspace:
    """Span of an explicitly listed, exactly independent set of vectors."""

    ambient_dim: int
    basis: tuple[Vec, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        for v in self.basis:
            if v.dim != self.ambient_dim:
                raise InputError("subspace basis vector has wrong ambient dimension")
        rows = [list(v.entries) for v in self.basis]
        if rank(rows) != len(self.basis):
            raise InputError("subspace basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @staticmethod
    def coordinate(ambient_dim: int, indices: range) -> Subspace:
        return Subspace(ambient_dim, tuple(Vec.basis(ambient_dim, i) for i in indices))

    def contains(self, v: Vec) -> bool:
        return in_row_span([list(b.entries) for b in self.basis], list(v.entries))


@dataclass(frozen=True)
class ManinTriple:
    """Candidate triple; verify_manin_triple decides whether it is one."""

    total: Algebra
    plus: Subspace
    minus: Subspace
    form: BilinearForm

    def __post_init__(self):
        n = self.total.dim
        if self.plus.ambient_dim != n or self.minus.ambient_dim != n:
            raise InputError("subspaces must live in the total algebra's space")
        if self.form.dim != n:
            raise InputError("form dimension must match the total algebra")


def is_invariant(form: BilinearForm, a: Algebra) -> bool:
    """B(x*y, z) = B(x, y*z) on all basis triples."""
    return _invariance_violation(form, a) is None


def _invariance_violation(form: BilinearForm, a: Algebra
                          ) -> Optional[tuple[tuple[int, int, int], Scalar, Scalar]]:
    if form.dim != a.dim:
        raise InputError("form and algebra dimensions differ")
    n = a.dim
    g = form.gram
    for i in range(n):
        for j in range(n):
            prod_ij = multiply(a, Vec.basis(n, i), Vec.basis(n, j))
            for k in range(n):
                lhs = sum((q * g.entries[p][k] for p, q in enumerate(prod_ij) if q), ZERO)
                prod_jk = multiply(a, Vec.basis(n, j), Vec.basis(n, k))
                rhs = sum((g.entries[i][p] * q for p, q in enumerate(prod_jk) if q), ZERO)
                if lhs != rhs:
                    return ((i, j, k), lhs, rhs)
    return None


def standard_form(n: int) -> BilinearForm:
    """The duality pairing on A (+) A*: Gram matrix [[0, I], [I, 0]]."""
    size = 2 * n
    rows = []
    for i in range(size):
        row = [ZERO] * size
        partner = i + n if i < n else i - n
        row[partner] = ONE
        rows.append(tuple(row))
    return BilinearForm(size, Mat(tuple(rows)))


def build_standard_manin_triple(bg: Bialgebra) -> ManinTriple:
    """The standard double: bicrossed candidate on A (+) A* with the duality
    pairing, A spanned by the first n coordinates and A* by the last n.

    Refuses when either product fails center symmetry.  The returned triple
    is a candidate; verify_manin_triple reports which axioms actually hold.
    """
    pair = standard_cs_matched_pair(bg)  # refuses non-center-symmetric input
    total = bicross_tensor(pair.a, pair.b, pair.la, pair.ra, pair.lb, pair.rb)
    n = bg.dim
    plus = Subspace.coordinate(2 * n, range(0, n))
    minus = Subspace.coordinate(2 * n, range(n, 2 * n))
    return ManinTriple(total, plus, minus, standard_form(n))


def _fmt_vec(v: Vec) -> str:
    return "[" + ", ".join(format_rational(x) for x in v) + "]"


def _closure_witness(t: ManinTriple, space: Subspace) -> Optional[Witness]:
    """First product of two basis vectors of the subspace falling outside it."""
    rows = [list(b.entries) for b in space.basis]
    for i, u in enumerate(space.basis):
        for j, v in enumerate(space.basis):
            prod = multiply(t.total, u, v)
            if not in_row_span(rows, list(prod.entries)):
                return Witness((i + 1, j + 1), _fmt_vec(prod), "member of subspace span")
    return None


def _isotropy_witness(t: ManinTriple, space: Subspace) -> Optional[Witness]:
    for i, u in enumerate(space.basis):
        for j, v in enumerate(space.basis):
            val = t.form.value(u, v)
            if val:
                return Witness((i + 1, j + 1), format_rational(val), "0")
    return None


def verify_manin_triple(t: ManinTriple) -> Report:
    """Itemized verification of every Manin-triple axiom.

    Items: total product center-symmetric; plus (+) minus spans the total
    space; both subspaces closed under the product; both isotropic; form
    symmetric; form nondegenerate; form invariant.
    """
    items: list[ReportItem] = []
    n = t.total.dim

    bad = center_symmetry_violation(t.total)
    witness = None
    if bad is not None:
        table = associator_table(t.total)
        i, j, k = bad
        lhs = Vec(tuple(table.get((i, j, k), {}).get(p, ZERO) for p in range(n)))
        rhs = Vec(tuple(table.get((k, j, i), {}).get(p, ZERO) for p in range(n)))
        witness = Witness((i + 1, j + 1, k + 1), _fmt_vec(lhs), _fmt_vec(rhs))
    items.append(ReportItem("total_center_symmetric",
                            "total product has a symmetric associator", bad is None,
                            witness))

    combined = [list(v.entries) for v in (*t.plus.basis, *t.minus.basis)]
    span_ok = (t.plus.dim + t.minus.dim == n and rank(combined) == n)
    items.append(ReportItem(
        "direct_sum", "plus and minus decompose the total space", span_ok,
        None if span_ok else Witness((t.plus.dim, t.minus.dim),
                                     f"rank {rank(combined)}", f"dim {n}")))

    for label, space in (("plus", t.plus), ("minus", t.minus)):
        w = _closure_witness(t, space)
        items.append(ReportItem(f"subalgebra_{label}",
                                f"{label} subspace is closed under the product",
                                w is None, w))
    for label, space in (("plus", t.plus), ("minus", t.minus)):
        w = _isotropy_witness(t, space)
        items.append(ReportItem(f"isotropy_{label}",
                                f"form vanishes on {label} x {label}",
                                w is None, w))

    g = t.form.gram
    sym_witness = None
    for i in range(n):
        for j in range(i + 1, n):
            if g.entries[i][j] != g.entries[j][i]:
                sym_witness = Witness((i + 1, j + 1),
                                      format_rational(g.entries[i][j]),
                                      format_rational(g.entries[j][i]))
                break
        if sym_witness:
            break
    items.append(ReportItem("form_symmetric", "Gram matrix equals its transpose",
                            sym_witness is None, sym_witness))

    r = rank([list(row) for row in g.entries])
    items.append(ReportItem("form_nondegenerate", "Gram matrix has full rank",
                            r == n, None if r == n else Witness((r,), f"rank {r}",
                                                                f"dim {n}")))

    inv = _invariance_violation(t.form, t.total)
    inv_witness = None
    if inv is not None:
        (i, j, k), lhs, rhs = inv
        inv_witness = Witness((i + 1, j + 1, k + 1),
                              format_rational(lhs), format_rational(rhs))
    items.append(ReportItem("form_invariant", "B(x*y, z) = B(x, y*z) on basis triples",
                            inv is None, inv_witness))

    return Report(tuple(items))
