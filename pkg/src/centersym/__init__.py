"""centersym: exact-arithmetic toolkit for center-symmetric algebras.

Algebras are given by structure constants over the rationals; every axiom,
construction and compatibility condition is decided exactly on basis tuples.
"""

__version__ = "0.1.0"

from .linalg import (InputError, InvalidStructureError, Mat, Scalar, T3, Vec,
                     format_rational, kron_sum_action, mat_commutator, mat_mul,
                     parse_rational)
from .algebra import (Algebra, GClass, LieAlgebra, ad_op, associator,
                      check_ad_representation, check_operator_identities,
                      commutator_tensor, is_center_symmetric, is_g_associative,
                      left_op, multiply, right_op, sub_adjacent)
from .bimodule import (Bimodule, dual_bimodule, induced_lie_rep, is_bimodule,
                       semidirect_sum, semidirect_tensor)
from .matched import (CsMatchedPair, LieMatchedPair, bicross_product, bicross_tensor,
                      check_cs_matched_pair, check_lie_matched_pair,
                      induced_lie_matched_pair, lie_bicross_sum, matched_pair_report)
from .manin import (BilinearForm, ManinTriple, Subspace, build_standard_manin_triple,
                    is_invariant, standard_form, verify_manin_triple)
from .bialgebra import (Bialgebra, EquivalenceReport, bialgebra_report,
                        coadjoint_action, cocycle_check_constants,
                        cocycle_check_direct, dual_algebra, equivalence_report,
                        is_bialgebra, standard_cs_matched_pair)
from .search import (BialgebraFixture, SearchSpec, derive_bialgebra_fixtures,
                     enumerate_structures, random_structure, splitmix64)
from .report import Report, ReportItem, Witness

__all__ = [
    "Algebra", "Bialgebra", "BialgebraFixture", "BilinearForm", "Bimodule",
    "CsMatchedPair", "EquivalenceReport", "GClass", "InputError",
    "InvalidStructureError", "LieAlgebra", "LieMatchedPair", "ManinTriple", "Mat",
    "Report", "ReportItem", "Scalar", "SearchSpec", "Subspace", "T3", "Vec",
    "Witness", "ad_op", "associator", "bialgebra_report", "bicross_product",
    "bicross_tensor", "build_standard_manin_triple", "check_ad_representation",
    "check_cs_matched_pair", "check_lie_matched_pair", "check_operator_identities",
    "coadjoint_action", "cocycle_check_constants", "cocycle_check_direct",
    "commutator_tensor", "derive_bialgebra_fixtures", "dual_algebra",
    "dual_bimodule", "enumerate_structures", "equivalence_report",
    "format_rational", "induced_lie_matched_pair", "induced_lie_rep",
    "is_bialgebra", "is_bimodule", "is_center_symmetric", "is_g_associative",
    "is_invariant", "kron_sum_action", "left_op", "lie_bicross_sum",
    "mat_commutator", "mat_mul", "matched_pair_report", "multiply",
    "parse_rational", "random_structure", "right_op", "semidirect_sum",
    "semidirect_tensor", "splitmix64", "standard_cs_matched_pair",
    "standard_form", "sub_adjacent", "verify_manin_triple",
]
