"""
Repository for stored analysis reports.
"""
from __future__ import annotations

import uuid
from typing import List, Optional

from sqlalchemy import desc, func
from sqlalchemy.orm import Session

from ..reporters.models import AnalysisReport
from .models import HistoryStats, ReportRecord, ReportSummary


def _summary(record: ReportRecord) -> ReportSummary:
    return ReportSummary(
        report_id=record.report_id,
        subject=record.subject,
        kind=record.kind,
        created_at=record.created_at,
        size=record.size,
        group_order=record.group_order,
        in_hypothesis=record.in_hypothesis,
        agreement=record.agreement,
        classification=record.classification,
        elapsed_ms=record.elapsed_ms,
    )


class ReportRepository:
    """Stores and queries AnalysisReports."""

    def __init__(self, db: Session):
        self.db = db

    def store_report(self, report: AnalysisReport) -> str:
        report_id = str(uuid.uuid4())
        record = ReportRecord(
            report_id=report_id,
            subject=report.subject,
            kind=report.kind,
            size=report.size,
            group_order=report.order,
            in_hypothesis=report.in_hypothesis,
            agreement=report.agreement,
            classification=report.classification,
            elapsed_ms=report.elapsed_ms,
            report=report.model_dump(mode="json"),
        )
        self.db.add(record)
        self.db.commit()
        self.db.refresh(record)
        return report_id

    def report_by_id(self, report_id: str) -> Optional[AnalysisReport]:
        record = self.db.query(ReportRecord).filter(ReportRecord.report_id == report_id).first()
        if not record:
            return None
        return AnalysisReport.model_validate(record.report)

    def recent_reports(self, limit: int = 20, kind: Optional[str] = None) -> List[ReportSummary]:
        query = self.db.query(ReportRecord)
        if kind is not None:
            query = query.filter(ReportRecord.kind == kind)
        records = query.order_by(desc(ReportRecord.created_at), desc(ReportRecord.id)).limit(limit).all()
        return [_summary(record) for record in records]

    def history_stats(self) -> HistoryStats:
        total = self.db.query(ReportRecord).count()
        lattices = self.db.query(ReportRecord).filter(ReportRecord.kind == "lattice").count()
        agreeing = self.db.query(ReportRecord).filter(ReportRecord.agreement.is_(True)).count()
        violations = (self.db.query(ReportRecord)
                      .filter(ReportRecord.in_hypothesis.is_(True))
                      .filter(ReportRecord.agreement.is_(False))
                      .count())
        by_classification = dict(
            self.db.query(ReportRecord.classification, func.count(ReportRecord.id))
            .filter(ReportRecord.classification.isnot(None))
            .group_by(ReportRecord.classification)
            .all()
        )
        last = self.db.query(ReportRecord).order_by(desc(ReportRecord.created_at)).first()
        return HistoryStats(
            total_reports=total,
            lattice_reports=lattices,
            group_reports=total - lattices,
            agreeing=agreeing,
            violations=violations,
            by_classification=by_classification,
            last_report_at=last.created_at if last else None,
        )
