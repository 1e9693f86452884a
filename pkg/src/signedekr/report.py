from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class BoundReport:
    """Both sides of an inequality ``lhs <= rhs`` as evaluated on one instance.

    ``rhs_argmax`` names the branch of a max that attains ``rhs`` (ties are
    joined with ``=``).  ``witness`` is whatever achieves ``lhs``.
    """

    theorem: str
    params: dict[str, Any]
    lhs: int
    rhs: int
    rhs_argmax: str = ""
    witness: Any = None
    details: dict[str, Any] = field(default_factory=dict)
    satisfied: bool = field(init=False)

    def __post_init__(self):
        self.satisfied = self.lhs <= self.rhs

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs

    def record(self, witness_file: str | None = None) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "argmax": self.rhs_argmax,
            "witness_file": witness_file,
            "ok": self.ok,
        }

    @property
    def ok(self) -> bool:
        """Overall verdict; ``expect_equal`` and ``vacuous`` in details adjust it."""
        if self.details.get("vacuous"):
            return True
        if self.details.get("expect_equal"):
            return self.tight and self.details.get("extra_ok", True)
        return self.satisfied and self.details.get("extra_ok", True)

    def to_json(self, witness_file: str | None = None) -> str:
        return json.dumps(self.record(witness_file), sort_keys=True)


def argmax_label(terms: dict[str, int]) -> tuple[int, str]:
    best = max(terms.values())
    return best, "=".join(name for name, v in terms.items() if v == best)
