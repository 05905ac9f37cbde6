# Reporters
from .console import render_report, render_summary
from .dot import hasse_dot
from .models import AnalysisReport, ConditionResult, CorpusSummary, report_from_json, report_to_json

__all__ = [
    "AnalysisReport",
    "ConditionResult",
    "CorpusSummary",
    "hasse_dot",
    "render_report",
    "render_summary",
    "report_from_json",
    "report_to_json",
]
