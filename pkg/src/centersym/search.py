"""Fixture mining: exhaustive and seeded-random discovery of structure-constant
tensors with prescribed properties at low dimension.

Random generation is fully specified so fixtures are reproducible anywhere:

* splitmix64 over the 64-bit seed: state += 0x9E3779B97F4A7C15; z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) *
  0x94D049BB133111EB; output z ^ (z >> 31), all mod 2**64.
* tensor cells are filled in lexicographic (i, j, k) order, each entry being
  coefficients[output % len(coefficients)] for the next generator output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional

from .algebra import (Algebra, GClass, is_center_symmetric, is_g_associative)
from .bialgebra import Bialgebra, EquivalenceReport, equivalence_report
from .linalg import InputError, Scalar, T3

MAX_ENUMERATION = 1_000_000

_MASK = (1 << 64) - 1


def splitmix64(seed: int) -> Iterator[int]:
    """The splitmix64 stream for a 64-bit seed (seed is reduced mod 2**64)."""
    state = seed & _MASK
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        yield (z ^ (z >> 31)) & _MASK


@dataclass(frozen=True)
class SearchSpec:
    """What to search for: dimension, coefficient grid, predicate filters."""

    dim: int
    coefficients: tuple[Scalar, ...] = (Fraction(-1), Fraction(0), Fraction(1))
    center_symmetric: bool = False
    non_associative: bool = False
    noncommutative: bool = False
    seed: int = 0
    limit: Optional[int] = None

    def __post_init__(self):
        if self.dim < 0:
            raise InputError("dimension must be nonnegative")
        if not self.coefficients:
            raise InputError("coefficient set must be nonempty")
        object.__setattr__(self, "coefficients",
                           tuple(Fraction(v) for v in self.coefficients))


def _cells(dim: int) -> list[tuple[int, int, int]]:
    return [(i, j, k) for i in range(dim) for j in range(dim) for k in range(dim)]


def _passes_filters(spec: SearchSpec, a: Algebra) -> bool:
    if spec.center_symmetric and not is_center_symmetric(a):
        return False
    if spec.non_associative and is_g_associative(a, GClass.G1):
        return False
    if spec.noncommutative and _is_commutative(a):
        return False
    return True


def _is_commutative(a: Algebra) -> bool:
    for (i, j, k), q in a.c.items():
        if a.c.get(j, i, k) != q:
            return False
    return True


def enumerate_structures(spec: SearchSpec) -> list[Algebra]:
    """All grid tensors passing the filters, deduplicated by exact tensor
    equality, in lexicographic tensor order (cell-major, coefficient-list
    order within each cell).

    Without a limit the full grid size |coefficients|**(dim**3) must stay
    under MAX_ENUMERATION; otherwise the search is refused with an estimate.
    """
    cells = _cells(spec.dim)
    space = len(spec.coefficients) ** len(cells)
    if spec.limit is None and space > MAX_ENUMERATION:
        raise InputError(
            f"enumeration space has {space} tensors (> {MAX_ENUMERATION}); "
            f"set a limit to search lazily")
    out: list[Algebra] = []
    seen: set[tuple] = set()
    for combo in product(spec.coefficients, repeat=len(cells)):
        tensor = T3.of(spec.dim, spec.dim, spec.dim,
                       {cell: q for cell, q in zip(cells, combo) if q})
        key = tensor.canonical_key()
        if key in seen:
            continue
        a = Algebra(spec.dim, tensor)
        if _passes_filters(spec, a):
            seen.add(key)
            out.append(a)
            if spec.limit is not None and len(out) >= spec.limit:
                break
    return out


def random_structure(spec: SearchSpec) -> Algebra:
    """Deterministic function of spec.seed; entries drawn uniformly from the
    coefficient list via splitmix64 (not filtered)."""
    stream = splitmix64(spec.seed)
    coeffs = spec.coefficients
    entries = {}
    for cell in _cells(spec.dim):
        q = coeffs[next(stream) % len(coeffs)]
        if q:
            entries[cell] = q
    return Algebra(spec.dim, T3.of(spec.dim, spec.dim, spec.dim, entries))


@dataclass(frozen=True)
class BialgebraFixture:
    """A (c, f) pair tagged with its four-verdict equivalence outcome."""

    bialgebra: Bialgebra
    outcome: EquivalenceReport


def derive_bialgebra_fixtures(pool: list[Algebra]) -> list[BialgebraFixture]:
    """Pair up center-symmetric pool members of equal dimension.

    Emits the trivial pairing (c, 0) for every pool member, then every
    ordered cross pairing (c, f) of equal dimension, each tagged with its
    equivalence report.
    """
    fixtures: list[BialgebraFixture] = []
    for a in pool:
        bg = Bialgebra(a.dim, a.c, T3.zero(a.dim, a.dim, a.dim))
        fixtures.append(BialgebraFixture(bg, equivalence_report(bg)))
    for a in pool:
        for b in pool:
            if a.dim != b.dim:
                continue
            bg = Bialgebra(a.dim, a.c, b.c)
            fixtures.append(BialgebraFixture(bg, equivalence_report(bg)))
    return fixtures
