"""Strict JSON interchange for algebras, bimodules, bialgebras and matched pairs.

All indices are 1-based externally (matching basis labels e_1..e_n) and
0-based internally.  Rationals travel as literals "p" or "p/q" (plain JSON
integers are also accepted on input).  Unknown fields and duplicate index
records are rejected so that typos in hand-written fixtures surface early.
Serialization is canonical: entries sorted by index, rationals in lowest
terms, so equal values produce byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import Algebra
from .bialgebra import Bialgebra
from .bimodule import Bimodule
from .linalg import InputError, Mat, Scalar, T3, format_rational, parse_rational
from .matched import CsMatchedPair


def _require_keys(obj: dict, required: set[str], optional: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise InputError(f"{where}: expected a JSON object")
    keys = set(obj)
    missing = required - keys
    if missing:
        raise InputError(f"{where}: missing fields {sorted(missing)}")
    unknown = keys - required - optional
    if unknown:
        raise InputError(f"{where}: unknown fields {sorted(unknown)}")


def _nat(obj: dict, key: str, where: str) -> int:
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise InputError(f"{where}.{key}: expected a nonnegative integer")
    return v


def _index(v: object, bound: int, where: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise InputError(f"{where}: index must be an integer, got {v!r}")
    if not 1 <= v <= bound:
        raise InputError(f"{where}: index {v} out of range [1, {bound}]")
    return v - 1


def _records(obj: dict, key: str, bounds: tuple[int, int, int], where: str
             ) -> dict[tuple[int, int, int], Scalar]:
    """Parse a list of [i, j, k, q] records into a sparse map, 0-based keys."""
    raw = obj[key]
    if not isinstance(raw, list):
        raise InputError(f"{where}.{key}: expected a list of records")
    out: dict[tuple[int, int, int], Scalar] = {}
    for pos, rec in enumerate(raw):
        loc = f"{where}.{key}[{pos}]"
        if not isinstance(rec, list) or len(rec) != 4:
            raise InputError(f"{loc}: expected [i, j, k, q]")
        i = _index(rec[0], bounds[0], loc)
        j = _index(rec[1], bounds[1], loc)
        k = _index(rec[2], bounds[2], loc)
        try:
            q = parse_rational(rec[3])
        except InputError as exc:
            raise InputError(f"{loc}: {exc}") from None
        if (i, j, k) in out:
            raise InputError(f"{loc}: duplicate index ({rec[0]}, {rec[1]}, {rec[2]})")
        out[(i, j, k)] = q
    return {key3: q for key3, q in out.items() if q}


def _record_list(entries: Mapping[tuple[int, int, int], Scalar]) -> list[list]:
    return [[i + 1, j + 1, k + 1, format_rational(q)]
            for (i, j, k), q in sorted(entries.items())]


# --- algebra files ---

def algebra_from_obj(obj: dict, where: str = "algebra") -> Algebra:
    _require_keys(obj, {"dim", "mul"}, {"name"}, where)
    dim = _nat(obj, "dim", where)
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError(f"{where}.name: expected a string")
    entries = _records(obj, "mul", (dim, dim, dim), where)
    return Algebra(dim, T3(dim, dim, dim, entries), name)


def algebra_to_obj(a: Algebra) -> dict:
    obj: dict = {}
    if a.name is not None:
        obj["name"] = a.name
    obj["dim"] = a.dim
    obj["mul"] = _record_list(dict(a.c.entries))
    return obj


# --- bimodule files ---

@dataclass(frozen=True)
class BimoduleFileData:
    """Parsed bimodule actions, not yet tied to a base algebra.

    Records (i, a, b) -> q mean the e_i action sends v_a to sum_b q v_b;
    the base dimension is only known once an algebra file is supplied.
    """

    vdim: int
    l_entries: Mapping[tuple[int, int, int], Scalar]
    r_entries: Mapping[tuple[int, int, int], Scalar]

    def action_matrices(self, base_dim: int) -> tuple[tuple[Mat, ...], tuple[Mat, ...]]:
        lists = []
        for label, entries in (("l", self.l_entries), ("r", self.r_entries)):
            mats = [[[Scalar(0)] * self.vdim for _ in range(self.vdim)]
                    for _ in range(base_dim)]
            for (i, a, b), q in entries.items():
                if i >= base_dim:
                    raise InputError(f"bimodule.{label}: algebra index {i + 1} out of "
                                     f"range for base dimension {base_dim}")
                mats[i][b][a] = q
            lists.append(tuple(Mat(tuple(tuple(row) for row in m)) for m in mats))
        return lists[0], lists[1]

    def to_bimodule(self, base: Algebra) -> Bimodule:
        l, r = self.action_matrices(base.dim)
        return Bimodule(base, self.vdim, l, r)


def bimodule_from_obj(obj: dict, where: str = "bimodule") -> BimoduleFileData:
    _require_keys(obj, {"vdim", "l", "r"}, set(), where)
    vdim = _nat(obj, "vdim", where)
    big = 10 ** 9  # algebra index bound is checked at materialization
    l = _records(obj, "l", (big, vdim, vdim), where)
    r = _records(obj, "r", (big, vdim, vdim), where)
    return BimoduleFileData(vdim, l, r)


def bimodule_to_obj(data: BimoduleFileData) -> dict:
    return {
        "vdim": data.vdim,
        "l": _record_list(dict(data.l_entries)),
        "r": _record_list(dict(data.r_entries)),
    }


def bimodule_file_data(b: Bimodule) -> BimoduleFileData:
    def entries(mats: Sequence[Mat]) -> dict[tuple[int, int, int], Scalar]:
        out = {}
        for i, m in enumerate(mats):
            for bb in range(m.rows):
                for aa in range(m.cols):
                    if m.entries[bb][aa]:
                        out[(i, aa, bb)] = m.entries[bb][aa]
        return out
    return BimoduleFileData(b.vdim, entries(b.l), entries(b.r))


# --- bialgebra files ---

def bialgebra_from_obj(obj: dict, where: str = "bialgebra") -> Bialgebra:
    _require_keys(obj, {"dim", "mul", "comul"}, set(), where)
    dim = _nat(obj, "dim", where)
    mul = _records(obj, "mul", (dim, dim, dim), where)
    # comul records are [k, i, j, q]: alpha(e_k) += q e_i (x) e_j, so f_ij^k = q
    comul = _records(obj, "comul", (dim, dim, dim), where)
    f = {(i, j, k): q for (k, i, j), q in comul.items()}
    return Bialgebra(dim, T3(dim, dim, dim, mul), T3(dim, dim, dim, f))


def bialgebra_to_obj(bg: Bialgebra) -> dict:
    comul = {(k, i, j): q for (i, j, k), q in bg.f.entries.items()}
    return {
        "dim": bg.dim,
        "mul": _record_list(dict(bg.c.entries)),
        "comul": _record_list(comul),
    }


# --- matched pair files ---

def matched_pair_from_obj(obj: dict, where: str = "pair") -> CsMatchedPair:
    _require_keys(obj, {"a", "b", "la", "ra", "lb", "rb"}, set(), where)
    a = algebra_from_obj(obj["a"], f"{where}.a")
    b = algebra_from_obj(obj["b"], f"{where}.b")

    def actions(key: str, count: int, size: int) -> tuple[Mat, ...]:
        entries = _records(obj, key, (count, size, size), where)
        mats = [[[Scalar(0)] * size for _ in range(size)] for _ in range(count)]
        for (i, aa, bb), q in entries.items():
            mats[i][bb][aa] = q
        return tuple(Mat(tuple(tuple(row) for row in m)) for m in mats)

    return CsMatchedPair(a, b,
                         actions("la", a.dim, b.dim), actions("ra", a.dim, b.dim),
                         actions("lb", b.dim, a.dim), actions("rb", b.dim, a.dim))


def matched_pair_to_obj(p: CsMatchedPair) -> dict:
    def records(mats: Sequence[Mat]) -> list[list]:
        out = {}
        for i, m in enumerate(mats):
            for bb in range(m.rows):
                for aa in range(m.cols):
                    if m.entries[bb][aa]:
                        out[(i, aa, bb)] = m.entries[bb][aa]
        return _record_list(out)

    return {
        "a": algebra_to_obj(p.a),
        "b": algebra_to_obj(p.b),
        "la": records(p.la),
        "ra": records(p.ra),
        "lb": records(p.lb),
        "rb": records(p.rb),
    }


# --- file IO ---

def dumps_canonical(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def load_json_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON "
                         f"({exc.msg})") from None


def load_algebra(path: str) -> Algebra:
    return algebra_from_obj(load_json_file(path), path)


def load_bimodule(path: str) -> BimoduleFileData:
    return bimodule_from_obj(load_json_file(path), path)


def load_bialgebra(path: str) -> Bialgebra:
    return bialgebra_from_obj(load_json_file(path), path)


def load_matched_pair(path: str) -> CsMatchedPair:
    return matched_pair_from_obj(load_json_file(path), path)
