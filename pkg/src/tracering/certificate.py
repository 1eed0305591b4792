"""Structured verdicts: named boolean checks plus optional outputs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .mpoly import Poly


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str | None = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Certificate:
    """A list of named checks; the certificate passes iff every check does.

    ``outputs`` carries JSON-compatible results (counts, polynomials as
    text) that are reported alongside the checks.
    """

    title: str = ""
    checks: list[Check] = field(default_factory=list)
    outputs: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: str | None = None) -> bool:
        self.checks.append(Check(name, bool(passed), witness))
        return bool(passed)

    def add_identity(self, name: str, lhs: Poly, rhs: Poly) -> bool:
        """Record ``lhs == rhs``; on failure the difference is the witness."""
        diff = lhs - rhs
        return self.add(name, diff.is_zero(), None if diff.is_zero() else str(diff))

    def extend(self, other: "Certificate", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"checks": [c.to_json() for c in self.checks], "pass": self.passed}
        if self.title:
            out["title"] = self.title
        if self.outputs:
            out["outputs"] = self.outputs
        return out

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), **kw)

    @classmethod
    def from_json(cls, data: dict | str) -> "Certificate":
        if isinstance(data, str):
            data = json.loads(data)
        cert = cls(
            title=data.get("title", ""),
            checks=[Check(c["name"], c["pass"], c.get("witness")) for c in data["checks"]],
            outputs=dict(data.get("outputs", {})),
        )
        if cert.passed != data["pass"]:
            raise ValueError("inconsistent certificate: 'pass' disagrees with its checks")
        return cert

    def __str__(self) -> str:
        lines = [f"{self.title or 'certificate'}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            line = f"  [{'ok' if c.passed else 'FAIL'}] {c.name}"
            if c.witness is not None:
                line += f"  witness: {c.witness}"
            lines.append(line)
        for k, v in self.outputs.items():
            lines.append(f"  {k}: {v}")
        return "\n".join(lines)
