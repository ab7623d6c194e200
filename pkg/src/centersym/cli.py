"""Command-line front end.

Exit codes: 0 = verified / constructed, 1 = a checked property fails,
2 = malformed input, 3 = the four equivalence verdicts disagree.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__
from .algebra import (Algebra, GClass, associator_table, center_symmetry_violation,
                      commutator_tensor, g_associativity_violation, sub_adjacent)
from .bialgebra import equivalence_report
from .bimodule import bimodule_violation, semidirect_tensor
from .formats import (algebra_to_obj, dumps_canonical, load_algebra, load_bialgebra,
                      load_bimodule, load_matched_pair)
from .linalg import ZERO, InputError, InvalidStructureError, Vec, format_rational
from .manin import build_standard_manin_triple, verify_manin_triple
from .matched import matched_pair_report
from .report import Report, ReportItem, Witness
from .search import SearchSpec, enumerate_structures, random_structure

PASS, FAIL, INPUT_ERROR, DISAGREEMENT = 0, 1, 2, 3

_PROPERTIES = {
    "associative": GClass.G1,
    "g2": GClass.G2,
    "g3": GClass.G3,
    "center-symmetric": GClass.G4,
    "g5": GClass.G5,
    "lie-admissible": GClass.G6,
}


def _fmt_vec_row(row: dict, dim: int) -> str:
    return "[" + ", ".join(format_rational(row.get(p, ZERO)) for p in range(dim)) + "]"


def _check_report(a: Algebra, prop: str) -> Report:
    g = _PROPERTIES[prop]
    if prop == "center-symmetric":
        bad = center_symmetry_violation(a)
    else:
        bad = g_associativity_violation(a, g)
    witness = None
    if bad is not None:
        table = associator_table(a)
        i, j, k = bad
        if prop == "center-symmetric":
            lhs = _fmt_vec_row(table.get((i, j, k), {}), a.dim)
            rhs = _fmt_vec_row(table.get((k, j, i), {}), a.dim)
        else:
            acc: dict = {}
            for src, sign in g.signed_permutations:
                t = (i, j, k)
                row = table.get((t[src[0]], t[src[1]], t[src[2]]), {})
                for p, v in row.items():
                    acc[p] = acc.get(p, ZERO) + (v if sign > 0 else -v)
            lhs = _fmt_vec_row(acc, a.dim)
            rhs = _fmt_vec_row({}, a.dim)
        witness = Witness((i + 1, j + 1, k + 1), lhs, rhs)
    rule = f"signed associator sum over {g.value} vanishes on all basis triples"
    if prop == "center-symmetric":
        rule = "associator is symmetric in its outer arguments"
    return Report((ReportItem(prop, rule, bad is None, witness),))


def _emit_report(report: Report, as_json: bool) -> None:
    sys.stdout.write(report.to_json() if as_json else report.to_text() + "\n")


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_check(args) -> int:
    a = load_algebra(args.file)
    report = _check_report(a, args.property)
    _emit_report(report, args.json)
    return PASS if report.verdict else FAIL


def cmd_lie(args) -> int:
    a = load_algebra(args.file)
    bad = center_symmetry_violation(a)
    if bad is not None:
        sys.stderr.write(f"not center-symmetric: associator symmetry fails at basis "
                         f"triple {tuple(x + 1 for x in bad)}\n")
        return FAIL
    lie = sub_adjacent(a)
    bracket_name = f"[{a.name}]" if a.name else None
    out_alg = Algebra(a.dim, lie.bracket, bracket_name)
    _write_output(dumps_canonical(algebra_to_obj(out_alg)), args.out)
    return PASS


def cmd_semidirect(args) -> int:
    a = load_algebra(args.algebra)
    data = load_bimodule(args.bimodule)
    l, r = data.action_matrices(a.dim)
    problem = bimodule_violation(a, l, r, data.vdim)
    if problem is not None:
        sys.stderr.write(f"not a bimodule: {problem}\n")
        return FAIL
    result = semidirect_tensor(a, l, r, data.vdim)
    _write_output(dumps_canonical(algebra_to_obj(result)), args.out)
    return PASS


def cmd_matched(args) -> int:
    pair = load_matched_pair(args.file)
    report = matched_pair_report(pair)
    _emit_report(report, args.json)
    return PASS if report.verdict else FAIL


def cmd_manin(args) -> int:
    bg = load_bialgebra(args.file)
    triple = build_standard_manin_triple(bg)
    report = verify_manin_triple(triple)
    _emit_report(report, args.json)
    return PASS if report.verdict else FAIL


def cmd_bialgebra(args) -> int:
    bg = load_bialgebra(args.file)
    eq = equivalence_report(bg)
    _emit_report(eq.to_report(), args.json)
    if not eq.all_equal:
        sys.stderr.write("THEOREM VIOLATION: the four equivalence verdicts disagree "
                         f"{eq.as_tuple()}\n")
        return DISAGREEMENT
    return PASS if eq.all_true else FAIL


def _parse_coeffs(text: str) -> tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise InputError("--coeffs: empty coefficient list")
    from .linalg import parse_rational
    return tuple(parse_rational(p) for p in parts)


def cmd_search(args) -> int:
    coeffs = _parse_coeffs(args.coeffs)
    if args.seed is not None:
        count = args.limit if args.limit is not None else 1
        results = [random_structure(SearchSpec(args.dim, coeffs, seed=args.seed + k))
                   for k in range(count)]
    else:
        spec = SearchSpec(args.dim, coeffs,
                          center_symmetric=args.center_symmetric,
                          non_associative=args.non_associative,
                          noncommutative=args.noncommutative,
                          limit=args.limit)
        results = enumerate_structures(spec)
    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
        for idx, alg in enumerate(results):
            path = os.path.join(args.out, f"alg_{args.dim}d_{idx:06d}.json")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(dumps_canonical(algebra_to_obj(alg)))
        sys.stdout.write(f"wrote {len(results)} algebra files to {args.out}\n")
    else:
        import json as _json
        payload = [algebra_to_obj(alg) for alg in results]
        sys.stdout.write(_json.dumps(payload, sort_keys=True, separators=(",", ":"))
                         + "\n")
    return PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centersym",
        description="Exact verification and construction for center-symmetric "
                    "algebras given by structure constants.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test an associator-symmetry property")
    p.add_argument("file", help="algebra JSON file")
    p.add_argument("--property", required=True, choices=sorted(_PROPERTIES),
                   help="which property to verify")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("lie", help="emit the commutator bracket of a "
                                   "center-symmetric algebra")
    p.add_argument("file")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_lie)

    p = sub.add_parser("semidirect", help="build the semidirect sum of an algebra "
                                          "and a bimodule")
    p.add_argument("algebra")
    p.add_argument("bimodule")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_semidirect)

    p = sub.add_parser("matched", help="verify a matched pair of center-symmetric "
                                       "algebras")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_matched)

    p = sub.add_parser("manin", help="build and verify the standard Manin triple "
                                     "of a bialgebra file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_manin)

    p = sub.add_parser("bialgebra", help="run the four-verdict equivalence report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bialgebra)

    p = sub.add_parser("search", help="enumerate or sample structure tensors")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--coeffs", default="-1,0,1",
                   help="comma-separated rational literals (default -1,0,1)")
    p.add_argument("--limit", type=int)
    p.add_argument("--seed", type=int,
                   help="random mode: emit --limit structures from consecutive seeds")
    p.add_argument("--center-symmetric", action="store_true")
    p.add_argument("--non-associative", action="store_true")
    p.add_argument("--noncommutative", action="store_true")
    p.add_argument("--out", help="directory for one JSON file per result")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return INPUT_ERROR
    except InvalidStructureError as exc:
        sys.stderr.write(f"structure error: {exc}\n")
        return FAIL


def entry() -> None:
    sys.exit(main())
