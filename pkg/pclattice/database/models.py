"""
Database models for stored analysis reports.
"""
from __future__ import annotations

from datetime import datetime, timezone
from typing import Dict, Optional

from pydantic import BaseModel
from sqlalchemy import JSON, Boolean, Column, DateTime, Float, Integer, String
from sqlalchemy.orm import declarative_base

Base = declarative_base()


def _now() -> datetime:
    return datetime.now(timezone.utc)


class ReportRecord(Base):
    """One stored AnalysisReport."""
    __tablename__ = "report_records"

    id = Column(Integer, primary_key=True, index=True)
    report_id = Column(String, unique=True, index=True, nullable=False)
    subject = Column(String, nullable=False)
    kind = Column(String, nullable=False)
    created_at = Column(DateTime, default=_now, nullable=False)

    size = Column(Integer, nullable=False)
    group_order = Column(Integer, nullable=True)
    in_hypothesis = Column(Boolean, nullable=False)
    agreement = Column(Boolean, nullable=False)
    classification = Column(String, nullable=True)
    elapsed_ms = Column(Float, nullable=True)

    # full AnalysisReport as JSON
    report = Column(JSON, nullable=False)


class ReportSummary(BaseModel):
    report_id: str
    subject: str
    kind: str
    created_at: datetime
    size: int
    group_order: Optional[int] = None
    in_hypothesis: bool
    agreement: bool
    classification: Optional[str] = None
    elapsed_ms: Optional[float] = None


class HistoryStats(BaseModel):
    total_reports: int
    lattice_reports: int
    group_reports: int
    agreeing: int
    violations: int  # in hypothesis, conditions disagree
    by_classification: Dict[str, int] = {}
    last_report_at: Optional[datetime] = None
