"""
Corpus run of the three-way check. Results are aggregated in corpus order.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from ..core.errors import LatticeError
from ..generators.corpus import CorpusItem, CorpusSpec, corpus
from ..reporters.models import AnalysisReport, CorpusSummary
from .theorem1 import theorem1_report

logger = logging.getLogger(__name__)


@dataclass
class CorpusFailure:
    item: CorpusItem
    report: Optional[AnalysisReport] = None
    error: Optional[str] = None


@dataclass
class CorpusRun:
    summary: CorpusSummary
    failures: List[CorpusFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _tally(summary: CorpusSummary, report: AnalysisReport) -> None:
    summary.total += 1
    summary.modular += report.holds("modular")
    summary.distributive += report.holds("distributive")
    summary.pseudocomplemented += report.holds("pseudocomplemented")
    summary.with_ternary_witness += not report.holds("no_ternary_witness")
    summary.classified_m3 += report.classification == "M3"
    summary.classified_m23 += report.classification == "M23"


def run_corpus(
    spec: CorpusSpec,
    on_item: Optional[Callable[[CorpusItem, Optional[AnalysisReport]], None]] = None,
) -> CorpusRun:
    """
    Check every corpus lattice. A modular lattice whose conditions disagree
    is a violation; a lattice whose witness cannot be classified is an error.
    Both end up in ``failures``.
    """
    started = time.perf_counter()
    summary = CorpusSummary()
    failures: List[CorpusFailure] = []

    for item in corpus(spec):
        subject = f"{item.source}:{item.name}"
        summary.by_source[item.source] = summary.by_source.get(item.source, 0) + 1
        report: Optional[AnalysisReport] = None
        try:
            report = theorem1_report(item.lattice, subject=subject)
        except LatticeError as e:
            logger.warning("%s: %s", subject, e)
            summary.total += 1
            summary.errors += 1
            summary.failing_subjects.append(subject)
            failures.append(CorpusFailure(item, error=str(e)))
        else:
            _tally(summary, report)
            if report.violation:
                summary.violations += 1
                summary.failing_subjects.append(subject)
                failures.append(CorpusFailure(item, report=report))
        if on_item is not None:
            on_item(item, report)

    summary.elapsed_ms = round((time.perf_counter() - started) * 1000.0, 3)
    logger.debug("corpus: %d lattices, %d violations, %d errors", summary.total, summary.violations, summary.errors)
    return CorpusRun(summary, failures)
