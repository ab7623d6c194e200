"""Center-symmetric bialgebras: a product tensor c on A together with a
coproduct tensor f, read as a product on the dual space.

The compatibility between c and f is a 1-cocycle condition for the coadjoint
tensor representation, checked by two deliberately independent routes:

* a direct coboundary route on coordinates of A (x) A, and
* flattened structure-constant identities summed over index 4-tuples.

Their exact agreement on arbitrary tensors is itself a tested property.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .algebra import (Algebra, LieAlgebra, ad_op, center_symmetry_violation,
                      commutator_tensor, left_op, right_op, sub_adjacent)
from .linalg import (ZERO, InputError, InvalidStructureError, Mat, Scalar, T3, Vec,
                     kron_sum_action)
from .matched import CsMatchedPair, check_pair, check_lie_matched_pair
from .report import Report, ReportItem, Witness

DIM_CAP = 16


@dataclass(frozen=True)
class Bialgebra:
    """A dimension with two tensors: c for the product on A, f for the dual
    product (equivalently the coproduct alpha(e_k) = sum_ij f_ij^k e_i (x) e_j).
    Plain container; the predicates below decide which axioms actually hold.
    """

    dim: int
    c: T3
    f: T3

    def __post_init__(self):
        for t, label in ((self.c, "product"), (self.f, "coproduct")):
            if (t.d1, t.d2, t.d3) != (self.dim,) * 3:
                raise InputError(f"{label} tensor shape does not match dim {self.dim}")


def primal_algebra(bg: Bialgebra) -> Algebra:
    return Algebra(bg.dim, bg.c)


def dual_algebra(bg: Bialgebra) -> Algebra:
    """The dual-basis algebra: e*_i o e*_j = sum_k f_ij^k e*_k."""
    return Algebra(bg.dim, bg.f)


def coadjoint_action(a: Algebra) -> list[Mat]:
    """Per basis element e_i, the matrix of -ad(e_i)* on the dual space.

    Entry (k, j) is -(c_ik^j - c_ki^j), which equals -transpose(ad(e_i)).
    Requires a center-symmetric product so that ad is a Lie representation.
    """
    bad = center_symmetry_violation(a)
    if bad is not None:
        raise InvalidStructureError(
            f"coadjoint action needs a center-symmetric product (violating "
            f"basis triple {tuple(x + 1 for x in bad)})")
    n = a.dim
    return [Mat(tuple(tuple(-(a.c.get(i, k, j) - a.c.get(k, i, j)) for j in range(n))
                      for k in range(n)))
            for i in range(n)]


def _check_cap(n: int, dim_cap: int) -> None:
    if n > dim_cap:
        raise InputError(f"dimension {n} exceeds cap {dim_cap}; raise dim_cap to override")


def cocycle_check_direct(lie: Union[LieAlgebra, T3], coproduct: T3,
                         dim_cap: int = DIM_CAP) -> bool:
    """Coboundary route: alpha([x, y]) = phi(x) alpha(y) - phi(y) alpha(x)
    on all basis pairs, where phi(x) = (-ad_x)(x)1 + 1(x)(-ad_x) acts on the
    coproduct coordinates in A (x) A.

    Accepts a Lie algebra or a raw bracket tensor (e.g. the commutator of a
    non-center-symmetric product; the check is well-defined either way).
    """
    bracket = lie.bracket if isinstance(lie, LieAlgebra) else lie
    n = bracket.d1
    _check_cap(n, dim_cap)
    if (bracket.d1, bracket.d2, bracket.d3) != (coproduct.d1, coproduct.d2, coproduct.d3):
        raise InputError("bracket and coproduct dimensions differ")

    def ad_mat(i: int) -> Mat:
        return Mat(tuple(tuple(bracket.get(i, j, k) for j in range(n)) for k in range(n)))

    def alpha(k: int) -> Vec:
        out = [ZERO] * (n * n)
        for (i, j, kk), q in coproduct.items():
            if kk == k:
                out[i * n + j] += q
        return Vec(tuple(out))

    phis = [kron_sum_action(-ad_mat(i), -ad_mat(i)) for i in range(n)]
    alphas = [alpha(k) for k in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = Vec.zero(n * n)
            for k in range(n):
                q = bracket.get(i, j, k)
                if q:
                    lhs = lhs + alphas[k].scale(q)
            if lhs != phis[i].apply(alphas[j]) - phis[j].apply(alphas[i]):
                return False
    return True


def cocycle_check_constants(c: T3, f: T3, side: str = "primal",
                            dim_cap: int = DIM_CAP) -> bool:
    """Structure-constant route, summed over all index 4-tuples (i, j, m, l):

    sum_k (c_ij^k - c_ji^k) f_ml^k
      = sum_k [ f_kl^i (c_jk^m - c_kj^m) - f_kl^j (c_ik^m - c_ki^m)
              + f_mk^i (c_jk^l - c_kj^l) - f_mk^j (c_ik^l - c_ki^l) ]

    for side="primal"; side="dual" swaps the roles of c and f.
    """
    if side == "primal":
        anti, plain = c, f
    elif side == "dual":
        anti, plain = f, c
    else:
        raise InputError(f"side must be 'primal' or 'dual', got {side!r}")
    if (c.d1, c.d2, c.d3) != (f.d1, f.d2, f.d3):
        raise InputError("tensor dimensions differ")
    n = c.d1
    _check_cap(n, dim_cap)
    b = commutator_tensor(anti)
    for i in range(n):
        for j in range(n):
            for m in range(n):
                for l in range(n):
                    lhs = sum((b.get(i, j, k) * plain.get(m, l, k) for k in range(n)), ZERO)
                    rhs = sum((plain.get(k, l, i) * b.get(j, k, m)
                               - plain.get(k, l, j) * b.get(i, k, m)
                               + plain.get(m, k, i) * b.get(j, k, l)
                               - plain.get(m, k, j) * b.get(i, k, l)
                               for k in range(n)), ZERO)
                    if lhs != rhs:
                        return False
    return True


def bialgebra_report(bg: Bialgebra, dim_cap: int = DIM_CAP) -> Report:
    """Itemized bialgebra axioms: both products center-symmetric plus the
    primal and dual cocycle conditions."""
    items = []
    for algebra, name, rule in (
            (primal_algebra(bg), "product_center_symmetric",
             "associator of c is symmetric in its outer arguments"),
            (dual_algebra(bg), "dual_product_center_symmetric",
             "associator of f is symmetric in its outer arguments")):
        bad = center_symmetry_violation(algebra)
        witness = None
        if bad is not None:
            witness = Witness(tuple(x + 1 for x in bad), "(x,y,z)", "(z,y,x)")
        items.append(ReportItem(name, rule, bad is None, witness))
    primal = cocycle_check_constants(bg.c, bg.f, "primal", dim_cap)
    items.append(ReportItem("primal_cocycle",
                            "coproduct is a 1-cocycle for the coadjoint tensor action",
                            primal))
    dual = cocycle_check_constants(bg.c, bg.f, "dual", dim_cap)
    items.append(ReportItem("dual_cocycle",
                            "product is a 1-cocycle for the dual coadjoint tensor action",
                            dual))
    return Report(tuple(items))


def is_bialgebra(bg: Bialgebra, dim_cap: int = DIM_CAP) -> bool:
    """True iff c and f are center-symmetric and both cocycle conditions hold."""
    return bialgebra_report(bg, dim_cap).verdict


def standard_cs_matched_pair(bg: Bialgebra) -> CsMatchedPair:
    """Candidate matched pair of A and its dual with the transposed
    multiplication actions la = R_c*, ra = L_c*, lb = R_f*, rb = L_f*.

    Refuses when either product fails center symmetry; the returned pair may
    still fail the compatibility equations (that is what check_pair decides).
    """
    A = primal_algebra(bg)
    B = dual_algebra(bg)
    for alg, who in ((A, "product"), (B, "dual product")):
        bad = center_symmetry_violation(alg)
        if bad is not None:
            raise InvalidStructureError(
                f"{who} is not center-symmetric (violating basis triple "
                f"{tuple(x + 1 for x in bad)})")
    n = bg.dim
    la = tuple(right_op(A, i).transpose() for i in range(n))
    ra = tuple(left_op(A, i).transpose() for i in range(n))
    lb = tuple(right_op(B, i).transpose() for i in range(n))
    rb = tuple(left_op(B, i).transpose() for i in range(n))
    return CsMatchedPair(A, B, la, ra, lb, rb)


@dataclass(frozen=True)
class EquivalenceReport:
    """Four independently computed verdicts for one (c, f) pair:

    manin_triple     - the standard double passes full Manin verification
    lie_matched_pair - coadjoint actions form a matched pair of Lie algebras
    cs_matched_pair  - transposed actions form a matched pair of algebras
    bialgebra        - both cocycle conditions hold

    manin_triple and cs_matched_pair always agree; each implies
    lie_matched_pair; the bialgebra condition also implies
    lie_matched_pair but is independent of cs_matched_pair.
    """

    manin_triple: bool
    lie_matched_pair: bool
    cs_matched_pair: bool
    bialgebra: bool

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (self.manin_triple, self.lie_matched_pair,
                self.cs_matched_pair, self.bialgebra)

    @property
    def all_equal(self) -> bool:
        return len(set(self.as_tuple())) == 1

    @property
    def all_true(self) -> bool:
        return all(self.as_tuple())

    def to_report(self) -> Report:
        rules = (
            ("manin_triple", "standard double passes all Manin triple checks",
             self.manin_triple),
            ("lie_matched_pair", "coadjoint actions give a matched pair of Lie algebras",
             self.lie_matched_pair),
            ("cs_matched_pair", "transposed actions give a matched pair of algebras",
             self.cs_matched_pair),
            ("bialgebra", "both 1-cocycle conditions hold", self.bialgebra),
        )
        return Report(tuple(ReportItem(n, r, p) for n, r, p in rules))


def equivalence_report(bg: Bialgebra, dim_cap: int = DIM_CAP) -> EquivalenceReport:
    """Run all four verdicts independently on a pair of center-symmetric
    structures (refuses if either product fails that standing hypothesis)."""
    from .manin import build_standard_manin_triple, verify_manin_triple

    A = primal_algebra(bg)
    B = dual_algebra(bg)
    for alg, who in ((A, "product"), (B, "dual product")):
        bad = center_symmetry_violation(alg)
        if bad is not None:
            raise InvalidStructureError(
                f"{who} is not center-symmetric (violating basis triple "
                f"{tuple(x + 1 for x in bad)})")
    _check_cap(bg.dim, dim_cap)

    manin = verify_manin_triple(build_standard_manin_triple(bg)).verdict
    lie = check_lie_matched_pair(sub_adjacent(A), sub_adjacent(B),
                                 coadjoint_action(A), coadjoint_action(B))
    cs_pair = check_pair(standard_cs_matched_pair(bg))
    bialg = is_bialgebra(bg, dim_cap)
    return EquivalenceReport(manin, lie, cs_pair, bialg)
