"""Verdicts returned by the solver and the search engines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Union

from .core import Decomposition
from .verify import CertificateReport

SOLVED = "Solved"
NONEXISTENT = "Nonexistent"
UNKNOWN = "Unknown"


@dataclass
class Step:
    """One node of a derivation: a rule, its parameters and the sub-derivations it consumes."""

    rule: str
    params: dict = field(default_factory=dict)
    children: list = field(default_factory=list)

    def to_json(self) -> dict:
        out: dict = {"rule": self.rule, "params": self.params}
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Step":
        return cls(data["rule"], dict(data.get("params", {})), [cls.from_json(c) for c in data.get("children", [])])


@dataclass
class StrategyTrace:
    """A derivation tree; ``steps`` lists it in pre-order as (rule, params) pairs."""

    root: Step

    @property
    def steps(self) -> list:
        out = []

        def walk(node: Step, depth: int) -> None:
            out.append((node.rule, {k: v for k, v in node.params.items() if not k.startswith("_")}))
            for c in node.children:
                walk(c, depth + 1)

        walk(self.root, 0)
        return out

    def rules(self) -> list:
        return [r for r, _ in self.steps]

    def to_json(self) -> dict:
        return self.root.to_json()

    @classmethod
    def from_json(cls, data: dict) -> "StrategyTrace":
        return cls(Step.from_json(data))

    def pretty(self) -> str:
        lines = []

        def walk(node: Step, depth: int) -> None:
            shown = {k: v for k, v in node.params.items() if not k.startswith("_")}
            lines.append("  " * depth + node.rule + (f" {shown}" if shown else ""))
            for c in node.children:
                walk(c, depth + 1)

        walk(self.root, 0)
        return "\n".join(lines)


@dataclass(frozen=True)
class KnownException:
    reason: str
    kind: str = "KnownException"


@dataclass(frozen=True)
class ExhaustiveSearchLog:
    n: int
    rows: int
    nodes: int
    note: str = ""
    kind: str = "ExhaustiveSearchLog"


@dataclass(frozen=True)
class OpenCase:
    note: str
    kind: str = "OpenCase"


@dataclass(frozen=True)
class BudgetExhausted:
    nodes: int
    note: str = ""
    kind: str = "BudgetExhausted"


@dataclass
class Solved:
    decomposition: Decomposition
    trace: StrategyTrace
    report: CertificateReport
    verdict: str = SOLVED


@dataclass
class Nonexistent:
    witness: Union[KnownException, ExhaustiveSearchLog]
    trace: Optional[StrategyTrace] = None
    verdict: str = NONEXISTENT


@dataclass
class Unknown:
    reason: Union[OpenCase, BudgetExhausted]
    trace: Optional[StrategyTrace] = None
    verdict: str = UNKNOWN


SolveOutcome = Union[Solved, Nonexistent, Unknown]


def describe(outcome: Any) -> str:
    if isinstance(outcome, Solved):
        return f"Solved via {outcome.trace.root.rule}"
    if isinstance(outcome, Nonexistent):
        return f"Nonexistent ({outcome.witness.kind})"
    return f"Unknown ({outcome.reason.kind}: {getattr(outcome.reason, 'note', '')})"
