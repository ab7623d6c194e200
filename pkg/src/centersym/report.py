"""Itemized pass/fail reports with exact witnesses, shared by the verifiers
and the command-line front end."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Witness:
    """One violating index tuple (1-based) with both sides' exact values."""

    indices: tuple[int, ...]
    lhs: str
    rhs: str


@dataclass(frozen=True)
class ReportItem:
    name: str
    rule: str
    passed: bool
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class Report:
    items: tuple[ReportItem, ...]

    @property
    def verdict(self) -> bool:
        return all(item.passed for item in self.items)

    def item(self, name: str) -> ReportItem:
        for it in self.items:
            if it.name == name:
                return it
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "verdict": "pass" if self.verdict else "fail",
            "items": [
                {
                    "name": it.name,
                    "rule": it.rule,
                    "pass": it.passed,
                    "witness": None if it.witness is None else {
                        "indices": list(it.witness.indices),
                        "lhs": it.witness.lhs,
                        "rhs": it.witness.rhs,
                    },
                }
                for it in self.items
            ],
        }

    def to_json(self) -> str:
        """Deterministic machine form: same report, byte-identical output."""
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    def to_text(self) -> str:
        lines = []
        for it in self.items:
            mark = "ok  " if it.passed else "FAIL"
            lines.append(f"[{mark}] {it.name}: {it.rule}")
            if it.witness is not None:
                w = it.witness
                lines.append(f"       at {w.indices}: lhs = {w.lhs}, rhs = {w.rhs}")
        lines.append("verdict: " + ("pass" if self.verdict else "fail"))
        return "\n".join(lines)
