"""
History database: engine setup and scoped sessions.
"""
from __future__ import annotations

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional, Union

from sqlalchemy import create_engine
from sqlalchemy.orm import Session, sessionmaker
from sqlalchemy.pool import StaticPool

from .models import Base

DEFAULT_DB_PATH = "pclattice.db"


class DatabaseManager:
    """One engine per history file; tables are created on first use."""

    def __init__(self, db_path: Union[str, Path] = DEFAULT_DB_PATH, database_url: Optional[str] = None):
        self.database_url = database_url or f"sqlite:///{db_path}"
        self.engine = create_engine(
            self.database_url,
            poolclass=StaticPool,
            connect_args={"check_same_thread": False} if self.database_url.startswith("sqlite") else {},
        )
        self.SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=self.engine)
        Base.metadata.create_all(bind=self.engine)

    @contextmanager
    def session(self) -> Iterator[Session]:
        """Session that is rolled back on error and always closed."""
        db = self.SessionLocal()
        try:
            yield db
        except Exception:
            db.rollback()
            raise
        finally:
            db.close()
