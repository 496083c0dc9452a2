"""Run history storage: engine, sessions, recording and queries."""

import logging
from contextlib import contextmanager
from typing import Optional

from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker, Session

from ..config import get_database_url, DATABASE_PATH
from .models import Base, VerificationRun

logger = logging.getLogger("keypieri.database")

# Stored failures per run
MAX_STORED_FAILURES = 100

# Engine and session factory
engine = create_engine(get_database_url(), echo=False)
SessionLocal = sessionmaker(bind=engine)


def init_db():
    """Initialize the database, creating all tables."""
    DATABASE_PATH.parent.mkdir(parents=True, exist_ok=True)
    Base.metadata.create_all(engine)


@contextmanager
def get_session() -> Session:
    """Get a database session with automatic cleanup."""
    session = SessionLocal()
    try:
        yield session
        session.commit()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()


def record_report(report, params: Optional[dict] = None) -> int:
    """Store a :class:`~src.verify.report.VerificationReport` and return the run id."""
    data = report.to_json()
    params = dict(params if params is not None else report.params)
    with get_session() as session:
        run = VerificationRun(
            suite=report.suite,
            params=params,
            instances=report.instances,
            failure_count=len(report.failures),
            passed=report.passed,
            seed=int(params.get("seed", 0) or 0),
            duration_seconds=report.duration_seconds,
            failures=data["failures"][:MAX_STORED_FAILURES],
        )
        session.add(run)
        session.flush()
        run_id = run.id
    logger.info("recorded run %d of %s", run_id, report.suite)
    return run_id


def recent_runs(suite: Optional[str] = None, limit: int = 20) -> list[dict]:
    """Latest runs first, optionally only those of ``suite``."""
    with get_session() as session:
        query = session.query(VerificationRun)
        if suite:
            query = query.filter(VerificationRun.suite == suite)
        runs = query.order_by(VerificationRun.started_at.desc(), VerificationRun.id.desc()).limit(limit).all()
        return [run.to_json() for run in runs]
