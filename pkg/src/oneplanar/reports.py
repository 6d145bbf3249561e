"""Hypothesis-aware verdict records and their JSON/TSV forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Union

MET = "met"
UNMET = "unmet"
ASSUMED = "assumed"

VERIFIED = "verified"
VACUOUS = "vacuous"
COUNTEREXAMPLE = "counterexample"

Value = Union[int, float, tuple]

_RELATIONS = {
    "==": lambda a, b: a == b,
    ">=": lambda a, b: a >= b,
    "<=": lambda a, b: a <= b,
}


def hyp(name: str, ok: bool) -> tuple[str, str]:
    return (name, MET if ok else UNMET)


def decide(hypotheses, holds: bool) -> str:
    """Verdict from hypothesis statuses.

    Assumed hypotheses count as satisfied in both directions: a failed
    relation under met-or-assumed hypotheses is surfaced as a counterexample.
    """
    if any(status == UNMET for _, status in hypotheses):
        return VACUOUS
    return VERIFIED if holds else COUNTEREXAMPLE


@dataclass(frozen=True)
class IdentityReport:
    name: str
    lhs: Value
    rhs: Value
    equal: bool
    hypotheses: tuple
    verdict: str
    relation: str = "=="
    notes: dict = field(default_factory=dict)

    @classmethod
    def evaluate(cls, name, lhs, rhs, hypotheses, relation="==", notes=None) -> "IdentityReport":
        holds = _RELATIONS[relation](lhs, rhs)
        hypotheses = tuple(hypotheses)
        return cls(
            name=name,
            lhs=lhs,
            rhs=rhs,
            equal=holds,
            hypotheses=hypotheses,
            verdict=decide(hypotheses, holds),
            relation=relation,
            notes=dict(notes or {}),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "relation": self.relation,
            "equal": self.equal,
            "hypotheses": [{"name": n, "status": s} for n, s in self.hypotheses],
            "verdict": self.verdict,
            "notes": {k: _jsonable(v) for k, v in sorted(self.notes.items())},
        }


def _jsonable(value):
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(value)
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return value


def flatten(payload: Any, prefix: str = "") -> list[tuple[str, str]]:
    """Scalar leaves of a JSON payload as dotted key / value pairs (TSV rows)."""
    rows: list[tuple[str, str]] = []
    if isinstance(payload, dict):
        for k, v in payload.items():
            rows += flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(payload, list):
        for i, v in enumerate(payload):
            rows += flatten(v, f"{prefix}.{i}" if prefix else str(i))
    else:
        if isinstance(payload, bool):
            text = "true" if payload else "false"
        elif payload is None:
            text = ""
        else:
            text = str(payload)
        rows.append((prefix, text))
    return rows
