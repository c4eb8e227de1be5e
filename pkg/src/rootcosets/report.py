"""Pass/fail records emitted by the exhaustive verifiers."""

import json
from dataclasses import dataclass, field

__all__ = ["VerificationReport", "CostasReport"]


@dataclass
class VerificationReport:
    """Outcome of one exhaustive check at one rank.

    Counterexample entries are JSON-ready dicts; the check passes exactly
    when the list is empty.
    """

    check: str
    rank: int
    counterexamples: list
    elapsed: float
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "rank": self.rank,
            "pass": self.passed,
            "counterexamples": list(self.counterexamples),
            "elapsed": round(self.elapsed, 6),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def summary(self) -> str:
        lines = [
            f"check: {self.check}",
            f"rank: {self.rank}",
            f"counterexamples: {len(self.counterexamples)}",
        ]
        for entry in self.counterexamples[:20]:
            lines.append(f"  {entry}")
        if len(self.counterexamples) > 20:
            lines.append(f"  ... {len(self.counterexamples) - 20} more")
        lines.append(f"elapsed: {self.elapsed:.3f}s")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


@dataclass
class CostasReport:
    """Outcome of the equal-height collision check over all Costas arrays."""

    rank: int
    costas_count: int
    counterexamples: list
    proposition_pass: bool = field(init=False)

    def __post_init__(self):
        self.proposition_pass = not self.counterexamples

    @property
    def passed(self) -> bool:
        return self.proposition_pass

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "costas_count": self.costas_count,
            "proposition_pass": self.proposition_pass,
            "counterexamples": list(self.counterexamples),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def summary(self) -> str:
        lines = [
            "check: proposition",
            f"rank: {self.rank}",
            f"costas_count: {self.costas_count}",
            f"counterexamples: {len(self.counterexamples)}",
        ]
        for entry in self.counterexamples[:20]:
            lines.append(f"  {entry}")
        lines.append(f"result: {'PASS' if self.proposition_pass else 'FAIL'}")
        return "\n".join(lines)
