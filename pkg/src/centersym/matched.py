"""Matched pairs of Lie algebras and of center-symmetric algebras.

A matched pair carries two structures plus mutual actions whose compatibility
makes the direct sum a structure of the same kind (the bicrossed product).
The pair containers here hold candidates without validating the compatibility
equations; the check_* predicates decide them, and the product constructors
refuse invalid pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import (Algebra, LieAlgebra, associator_table, center_symmetry_violation,
                      sub_adjacent)
from .bimodule import bimodule_violation
from .linalg import InputError, InvalidStructureError, Mat, Scalar, T3, Vec, ZERO


@dataclass(frozen=True)
class LieMatchedPair:
    """Candidate matched pair of Lie algebras g, h.

    rho: one h-space matrix per g-basis element (action of g on h);
    mu: one g-space matrix per h-basis element (action of h on g).
    """

    g: LieAlgebra
    h: LieAlgebra
    rho: tuple[Mat, ...]
    mu: tuple[Mat, ...]

    def __post_init__(self):
        object.__setattr__(self, "rho", tuple(self.rho))
        object.__setattr__(self, "mu", tuple(self.mu))
        _check_action_list(self.rho, self.g.dim, self.h.dim, "rho")
        _check_action_list(self.mu, self.h.dim, self.g.dim, "mu")


@dataclass(frozen=True)
class CsMatchedPair:
    """Candidate matched pair of center-symmetric algebras a, b.

    la, ra: actions of a on b's space (one b-space matrix per a-basis element);
    lb, rb: actions of b on a's space.
    """

    a: Algebra
    b: Algebra
    la: tuple[Mat, ...]
    ra: tuple[Mat, ...]
    lb: tuple[Mat, ...]
    rb: tuple[Mat, ...]

    def __post_init__(self):
        for field in ("la", "ra", "lb", "rb"):
            object.__setattr__(self, field, tuple(getattr(self, field)))
        _check_action_list(self.la, self.a.dim, self.b.dim, "la")
        _check_action_list(self.ra, self.a.dim, self.b.dim, "ra")
        _check_action_list(self.lb, self.b.dim, self.a.dim, "lb")
        _check_action_list(self.rb, self.b.dim, self.a.dim, "rb")


def _check_action_list(mats: Sequence[Mat], count: int, size: int, label: str) -> None:
    if len(mats) != count:
        raise InputError(f"{label}: expected {count} matrices, got {len(mats)}")
    for m in mats:
        if m.rows != size or m.cols != size:
            raise InputError(f"{label}: matrices must be {size}x{size}")


def _bracket_vec(lie: LieAlgebra, u: Vec, v: Vec) -> Vec:
    out = [ZERO] * lie.dim
    for (i, j, k), q in lie.bracket.items():
        if u[i] and v[j]:
            out[k] += u[i] * v[j] * q
    return Vec(tuple(out))


def _act(mats: Sequence[Mat], weights: Vec, v: Vec) -> Vec:
    """(sum_k weights_k mats[k]) v — action of a general element on v."""
    out = Vec.zero(v.dim)
    for k, w in enumerate(weights):
        if w:
            out = out + mats[k].apply(v).scale(w)
    return out


def _is_lie_rep(lie: LieAlgebra, mats: Sequence[Mat]) -> bool:
    n = lie.dim
    for i in range(n):
        for j in range(n):
            size = mats[i].rows
            lhs = Mat.zero(size, size)
            for m in range(n):
                q = lie.bracket.get(i, j, m)
                if q:
                    lhs = lhs + mats[m].scale(q)
            if lhs != mats[i] @ mats[j] - mats[j] @ mats[i]:
                return False
    return True


def check_lie_matched_pair(g: LieAlgebra, h: LieAlgebra,
                           rho: Sequence[Mat], mu: Sequence[Mat]) -> bool:
    """True iff rho, mu are representations and the two compatibility equations

    rho(x)[a,b] - [rho(x)a, b] - [a, rho(x)b] + rho(mu(a)x)b - rho(mu(b)x)a = 0
    mu(a)[x,y] - [mu(a)x, y] - [x, mu(a)y] + mu(rho(x)a)y - mu(rho(y)a)x = 0

    hold on all basis tuples.
    """
    rho = tuple(rho)
    mu = tuple(mu)
    _check_action_list(rho, g.dim, h.dim, "rho")
    _check_action_list(mu, h.dim, g.dim, "mu")
    if not (_is_lie_rep(g, rho) and _is_lie_rep(h, mu)):
        return False
    n, m = g.dim, h.dim
    for i in range(n):
        ei = Vec.basis(n, i)
        for a in range(m):
            fa = Vec.basis(m, a)
            for b in range(m):
                fb = Vec.basis(m, b)
                t1 = rho[i].apply(_bracket_vec(h, fa, fb))
                t2 = _bracket_vec(h, rho[i].apply(fa), fb)
                t3 = _bracket_vec(h, fa, rho[i].apply(fb))
                t4 = _act(rho, mu[a].apply(ei), fb)
                t5 = _act(rho, mu[b].apply(ei), fa)
                if not (t1 - t2 - t3 + t4 - t5).is_zero():
                    return False
    for a in range(m):
        fa = Vec.basis(m, a)
        for i in range(n):
            ei = Vec.basis(n, i)
            for j in range(n):
                ej = Vec.basis(n, j)
                t1 = mu[a].apply(_bracket_vec(g, ei, ej))
                t2 = _bracket_vec(g, mu[a].apply(ei), ej)
                t3 = _bracket_vec(g, ei, mu[a].apply(ej))
                t4 = _act(mu, rho[i].apply(fa), ej)
                t5 = _act(mu, rho[j].apply(fa), ei)
                if not (t1 - t2 - t3 + t4 - t5).is_zero():
                    return False
    return True


def lie_bicross_sum(p: LieMatchedPair) -> LieAlgebra:
    """Lie algebra on g (+) h with bracket

    [x+a, y+b] = [x,y] + mu(a)y - mu(b)x + [a,b] + rho(x)b - rho(y)a.

    Refuses an invalid pair; the result re-verifies the Jacobi identity.
    """
    if not check_lie_matched_pair(p.g, p.h, p.rho, p.mu):
        raise InvalidStructureError("not a matched pair of Lie algebras")
    n, m = p.g.dim, p.h.dim
    big = n + m
    entries: dict[tuple[int, int, int], Scalar] = dict(p.g.bracket.entries)
    for (a, b, k), q in p.h.bracket.items():
        entries[(n + a, n + b, n + k)] = q
    for i in range(n):
        for a in range(m):
            for k in range(n):
                q = -p.mu[a].entries[k][i]
                if q:
                    entries[(i, n + a, k)] = q
                    entries[(n + a, i, k)] = -q
            for b in range(m):
                q = p.rho[i].entries[b][a]
                if q:
                    entries[(i, n + a, n + b)] = q
                    entries[(n + a, i, n + b)] = -q
    return LieAlgebra(big, T3(big, big, big, entries))


def bicross_tensor(a: Algebra, b: Algebra, la: Sequence[Mat], ra: Sequence[Mat],
                   lb: Sequence[Mat], rb: Sequence[Mat]) -> Algebra:
    """Raw bicrossed-product candidate on a (+) b, no compatibility validation.

    (x+u) * (y+v) = (x.y + lb(u)y + rb(v)x) + (u.v + la(x)v + ra(y)u),
    with a-basis first, then b-basis.
    """
    n, m = a.dim, b.dim
    big = n + m
    entries: dict[tuple[int, int, int], Scalar] = dict(a.c.entries)
    for (i, j, k), q in b.c.items():
        entries[(n + i, n + j, n + k)] = q
    for i in range(n):
        for bb in range(m):
            # e_i * f_b:  rb[b] e_i into a-part, la[i] f_b into b-part
            for k in range(n):
                q = rb[bb].entries[k][i]
                if q:
                    entries[(i, n + bb, k)] = entries.get((i, n + bb, k), ZERO) + q
            for k in range(m):
                q = la[i].entries[k][bb]
                if q:
                    entries[(i, n + bb, n + k)] = entries.get((i, n + bb, n + k), ZERO) + q
            # f_b * e_i:  lb[b] e_i into a-part, ra[i] f_b into b-part
            for k in range(n):
                q = lb[bb].entries[k][i]
                if q:
                    entries[(n + bb, i, k)] = entries.get((n + bb, i, k), ZERO) + q
            for k in range(m):
                q = ra[i].entries[k][bb]
                if q:
                    entries[(n + bb, i, n + k)] = entries.get((n + bb, i, n + k), ZERO) + q
    entries = {key: q for key, q in entries.items() if q}
    return Algebra(big, T3(big, big, big, entries))


def _mixed_family_violation(a: Algebra, b: Algebra, candidate: Algebra
                            ) -> Optional[tuple[int, int, int]]:
    """Check associator symmetry of the candidate on the four mixed triple
    families (patterns AAB, ABA, ABB, BAB over the a/b split); the pure
    families are covered by center symmetry of the factors."""
    table = associator_table(candidate)
    n, m = a.dim, b.dim

    def row(i, j, k):
        return table.get((i, j, k), {})

    for i in range(n):                      # AAB: (x, y, c) = (c, y, x)
        for j in range(n):
            for c in range(n, n + m):
                if row(i, j, c) != row(c, j, i):
                    return (i, j, c)
    for i in range(n):                      # ABA: (x, b, z) = (z, b, x)
        for bb in range(n, n + m):
            for k in range(i + 1, n):
                if row(i, bb, k) != row(k, bb, i):
                    return (i, bb, k)
    for i in range(n):                      # ABB: (x, b, c) = (c, b, x)
        for bb in range(n, n + m):
            for c in range(n, n + m):
                if row(i, bb, c) != row(c, bb, i):
                    return (i, bb, c)
    for aa in range(n, n + m):              # BAB: (a, y, c) = (c, y, a)
        for j in range(n):
            for c in range(aa + 1, n + m):
                if row(aa, j, c) != row(c, j, aa):
                    return (aa, j, c)
    return None


def check_cs_matched_pair(a: Algebra, b: Algebra, la: Sequence[Mat], ra: Sequence[Mat],
                          lb: Sequence[Mat], rb: Sequence[Mat]) -> bool:
    """True iff (la, ra) and (lb, rb) are bimodules and the four mixed
    compatibility families hold, i.e. the bicrossed candidate product has a
    symmetric associator on every mixed basis triple.

    Refuses non-center-symmetric factors.
    """
    for alg, who in ((a, "first factor"), (b, "second factor")):
        bad = center_symmetry_violation(alg)
        if bad is not None:
            raise InvalidStructureError(
                f"{who} is not center-symmetric (violating basis triple "
                f"{tuple(x + 1 for x in bad)})")
    _check_action_list(tuple(la), a.dim, b.dim, "la")
    _check_action_list(tuple(ra), a.dim, b.dim, "ra")
    _check_action_list(tuple(lb), b.dim, a.dim, "lb")
    _check_action_list(tuple(rb), b.dim, a.dim, "rb")
    if bimodule_violation(a, la, ra, b.dim) is not None:
        return False
    if bimodule_violation(b, lb, rb, a.dim) is not None:
        return False
    candidate = bicross_tensor(a, b, la, ra, lb, rb)
    return _mixed_family_violation(a, b, candidate) is None


def check_pair(p: CsMatchedPair) -> bool:
    return check_cs_matched_pair(p.a, p.b, p.la, p.ra, p.lb, p.rb)


def matched_pair_report(p: CsMatchedPair) -> "Report":
    """Itemized verdicts: factor center symmetry, both bimodule conditions,
    and the mixed compatibility families of the candidate product."""
    from .report import Report, ReportItem, Witness

    items = []
    ok_factors = True
    for alg, label in ((p.a, "factor_a"), (p.b, "factor_b")):
        bad = center_symmetry_violation(alg)
        ok_factors = ok_factors and bad is None
        items.append(ReportItem(
            f"{label}_center_symmetric", "factor has a symmetric associator",
            bad is None,
            None if bad is None else Witness(tuple(x + 1 for x in bad),
                                             "(x,y,z)", "(z,y,x)")))
    if not ok_factors:
        return Report(tuple(items))
    for base, l, r, label in ((p.a, p.la, p.ra, "bimodule_a"),
                              (p.b, p.lb, p.rb, "bimodule_b")):
        problem = bimodule_violation(base, l, r)
        items.append(ReportItem(label, "actions satisfy both bimodule equations",
                                problem is None))
    candidate = bicross_tensor(p.a, p.b, p.la, p.ra, p.lb, p.rb)
    bad = _mixed_family_violation(p.a, p.b, candidate)
    items.append(ReportItem(
        "mixed_compatibility",
        "candidate product has a symmetric associator on mixed basis triples",
        bad is None,
        None if bad is None else Witness(tuple(x + 1 for x in bad),
                                         "(u,v,w)", "(w,v,u)")))
    return Report(tuple(items))


def bicross_product(p: CsMatchedPair) -> Algebra:
    """Center-symmetric bicrossed product of a valid matched pair."""
    if not check_pair(p):
        raise InvalidStructureError("not a matched pair of center-symmetric algebras")
    return bicross_tensor(p.a, p.b, p.la, p.ra, p.lb, p.rb)


def induced_lie_matched_pair(p: CsMatchedPair) -> LieMatchedPair:
    """The matched pair of sub-adjacent Lie algebras with actions l - r."""
    if not check_pair(p):
        raise InvalidStructureError("not a matched pair of center-symmetric algebras")
    pair = LieMatchedPair(sub_adjacent(p.a), sub_adjacent(p.b),
                          tuple(l - r for l, r in zip(p.la, p.ra)),
                          tuple(l - r for l, r in zip(p.lb, p.rb)))
    return pair
