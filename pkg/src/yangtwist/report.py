from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class CheckReport:
    """Outcome of an exact property check.

    ``witness`` is present exactly when the check failed; ``details`` holds
    per-item booleans (per generator, per candidate, ...).
    """

    name: str
    passed: bool
    witness: Optional[dict] = None
    params: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError("a passing report carries no witness")
        if not self.passed and self.witness is None:
            self.witness = {"failed": [k for k, v in self.details.items() if v is False]}

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {"check": self.name, "params": self.params, "passed": self.passed}
        if self.details:
            out["details"] = self.details
        if self.witness is not None:
            out["witness"] = self.witness
        return out
