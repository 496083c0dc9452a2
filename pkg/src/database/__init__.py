"""Database models and connection management."""

from .db import init_db, get_session, record_report, recent_runs
from .models import Base, VerificationRun

__all__ = [
    "init_db",
    "get_session",
    "record_report",
    "recent_runs",
    "Base",
    "VerificationRun",
]
