"""
Pydantic models for analysis reports.
"""
from __future__ import annotations

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel


class ConditionResult(BaseModel):
    """One evaluated condition with its (optional) witness."""
    key: str
    label: str
    holds: bool
    witness: Optional[List[int]] = None
    witness_labels: Optional[List[str]] = None
    detail: Optional[str] = None


class AnalysisReport(BaseModel):
    """Verdict bundle for one lattice or one group."""
    subject: str
    kind: Literal["lattice", "group"]
    size: int
    order: Optional[int] = None
    conditions: List[ConditionResult]
    in_hypothesis: bool = True
    agreement: bool
    classification: Optional[str] = None
    elapsed_ms: float = 0.0

    def condition(self, key: str) -> ConditionResult:
        for result in self.conditions:
            if result.key == key:
                return result
        raise KeyError(key)

    def holds(self, key: str) -> bool:
        return self.condition(key).holds

    @property
    def violation(self) -> bool:
        """Conditions that must agree disagree although the hypothesis holds."""
        return self.in_hypothesis and not self.agreement

    def without_witnesses(self) -> "AnalysisReport":
        trimmed = [
            result.model_copy(update={"witness": None, "witness_labels": None})
            for result in self.conditions
        ]
        return self.model_copy(update={"conditions": trimmed})


class CorpusSummary(BaseModel):
    """Aggregate outcome of a corpus run."""
    total: int = 0
    modular: int = 0
    pseudocomplemented: int = 0
    distributive: int = 0
    with_ternary_witness: int = 0
    classified_m3: int = 0
    classified_m23: int = 0
    violations: int = 0
    errors: int = 0
    failing_subjects: List[str] = []
    by_source: Dict[str, int] = {}
    elapsed_ms: float = 0.0


def report_to_json(report: AnalysisReport, include_witnesses: bool = True) -> str:
    shown = report if include_witnesses else report.without_witnesses()
    return shown.model_dump_json(indent=2)


def report_from_json(text: str) -> AnalysisReport:
    return AnalysisReport.model_validate_json(text)
