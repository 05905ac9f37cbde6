from __future__ import annotations

import pytest

from pclattice.database.database import DatabaseManager
from pclattice.database.models import ReportRecord
from pclattice.database.repository import ReportRepository
from pclattice.generators.divisors import divisor_lattice
from pclattice.groups.abelian import AbelianGroupSpec
from pclattice.groups.theorem3 import theorem3_report
from pclattice.patterns.theorem1 import theorem1_report


@pytest.fixture
def repo(tmp_path):
    with DatabaseManager(db_path=tmp_path / "reports.db").session() as db:
        yield ReportRepository(db)


def test_store_and_fetch(repo, m23):
    report = theorem1_report(m23, subject="M23")
    report_id = repo.store_report(report)
    assert repo.report_by_id(report_id) == report
    assert repo.report_by_id("missing") is None


def test_recent_reports_filter_by_kind(repo, m3):
    repo.store_report(theorem1_report(m3, subject="M3"))
    repo.store_report(theorem3_report(AbelianGroupSpec(factors=(2, 2))))
    repo.store_report(theorem1_report(divisor_lattice(30), subject="L30"))

    everything = repo.recent_reports()
    assert len(everything) == 3
    groups = repo.recent_reports(kind="group")
    assert [s.subject for s in groups] == ["Z2 x Z2"]
    assert groups[0].group_order == 4
    assert len(repo.recent_reports(limit=1)) == 1


def test_history_stats(repo, m3, n5):
    repo.store_report(theorem1_report(m3, subject="M3"))
    repo.store_report(theorem1_report(n5, subject="N5"))
    repo.store_report(theorem3_report(AbelianGroupSpec(factors=(2, 4))))

    stats = repo.history_stats()
    assert stats.total_reports == 3
    assert stats.lattice_reports == 2
    assert stats.group_reports == 1
    assert stats.violations == 0
    assert stats.by_classification == {"M3": 1}
    assert stats.last_report_at is not None


def test_session_rolls_back_on_error(tmp_path):
    manager = DatabaseManager(database_url=f"sqlite:///{tmp_path / 'other.db'}")
    with pytest.raises(RuntimeError):
        with manager.session() as db:
            db.add(ReportRecord(report_id="pending", subject="M3", kind="lattice", size=5,
                                in_hypothesis=True, agreement=True, elapsed_ms=0.0, report={}))
            db.flush()
            raise RuntimeError("abort")
    with manager.session() as db:
        assert ReportRepository(db).history_stats().total_reports == 0
