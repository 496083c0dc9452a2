"""SQLAlchemy database models for verification run history."""

from datetime import datetime

from sqlalchemy import (
    Column,
    Integer,
    String,
    Float,
    Boolean,
    DateTime,
    JSON,
)
from sqlalchemy.orm import DeclarativeBase


class Base(DeclarativeBase):
    """Base class for all models."""
    pass


class VerificationRun(Base):
    """One run of a verification suite."""
    __tablename__ = "verification_runs"

    id = Column(Integer, primary_key=True)
    suite = Column(String(50), nullable=False, index=True)  # "monkey-identity", "rsk-rect", ...
    params = Column(JSON, default=dict)
    instances = Column(Integer, default=0)
    failure_count = Column(Integer, default=0)
    passed = Column(Boolean, default=True)
    seed = Column(Integer, default=0)
    started_at = Column(DateTime, default=datetime.utcnow)
    duration_seconds = Column(Float, default=0.0)
    failures = Column(JSON, default=list)  # first failures only, see record_report

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "suite": self.suite,
            "params": self.params,
            "instances": self.instances,
            "failure_count": self.failure_count,
            "passed": self.passed,
            "seed": self.seed,
            "started_at": self.started_at.isoformat() if self.started_at else None,
            "duration_seconds": self.duration_seconds,
        }

    def __repr__(self):
        status = "pass" if self.passed else "fail"
        return f"<VerificationRun(suite='{self.suite}', instances={self.instances}, {status})>"
