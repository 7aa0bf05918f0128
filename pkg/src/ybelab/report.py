"""Verdicts with counterexample witnesses."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .field import Field


@dataclass(frozen=True)
class Check:
    """One identity (or one equivalence) evaluated over all basis tuples.

    ``witness`` is the lexicographically first failing basis tuple (0-based)
    and ``residual`` the residual there, flattened; both are ``None`` on pass.
    """

    id: str
    passed: bool
    witness: tuple[int, ...] | None = None
    residual: tuple | None = None
    detail: dict[str, Any] = field(default_factory=dict)

    def to_json(self, f: Field | None = None) -> dict:
        out: dict[str, Any] = {"id": self.id, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.residual is not None:
            out["residual"] = [f.format(x) if f else str(x) for x in self.residual]
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class Report:
    checks: tuple[Check, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def __getitem__(self, check_id: str) -> Check:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def __contains__(self, check_id: str) -> bool:
        return any(c.id == check_id for c in self.checks)

    def only(self, *prefixes: str) -> "Report":
        return Report(tuple(c for c in self.checks if c.id.startswith(prefixes)))

    def without(self, *prefixes: str) -> "Report":
        return Report(tuple(c for c in self.checks if not c.id.startswith(prefixes)))

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def __add__(self, other: "Report") -> "Report":
        return Report(self.checks + other.checks)

    def to_json(self, f: Field | None = None) -> dict:
        return {"pass": self.passed, "checks": [c.to_json(f) for c in self.checks]}

    def dumps(self, f: Field | None = None) -> str:
        return json.dumps(self.to_json(f), sort_keys=True)

    def render(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{'PASS' if c.passed else 'FAIL'}  {c.id}"
            if c.witness is not None:
                line += f"  witness={c.witness}"
            if c.residual is not None:
                line += "  residual=[" + ", ".join(str(x) for x in c.residual) + "]"
            if c.detail:
                line += "  " + " ".join(f"{k}={v}" for k, v in c.detail.items())
            lines.append(line)
        lines.append("verdict: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def residual_check(check_id: str, residual: np.ndarray, nargs: int, **detail) -> Check:
    """Turn a residual array into a :class:`Check`.

    The first ``nargs`` axes index basis tuples; the rest are coordinates of
    the residual value.  The witness is the first tuple in C order whose
    residual is nonzero.
    """
    residual = np.asarray(residual, dtype=object)
    lead = residual.shape[:nargs]
    flat = residual.reshape(lead + (-1,)) if residual.ndim > nargs else residual.reshape(lead + (1,))
    for idx in np.ndindex(*lead):
        vals = flat[idx]
        if np.any(vals != 0):
            return Check(check_id, False, tuple(int(i) for i in idx), tuple(vals.tolist()), dict(detail))
    return Check(check_id, True, detail=dict(detail))


def equivalence_check(check_id: str, lhs: bool, rhs: bool, **detail) -> Check:
    return Check(check_id, lhs == rhs, detail={"lhs": lhs, "rhs": rhs, **detail})
