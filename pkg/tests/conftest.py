"""Shared fixtures and diagram builders."""

import pytest

from src.core.composition import WeakComposition
from src.core.diagram import Diagram


def rows(**by_row) -> Diagram:
    """Build a diagram from keyword rows: ``rows(r1=[1, 2], r3=[1])``."""
    return Diagram.from_rows({int(key[1:]): cols for key, cols in by_row.items()})


def comp(*parts) -> WeakComposition:
    return WeakComposition(parts)


@pytest.fixture
def thread_example():
    """A member of KD(4,1,5,0,4) whose thread weight is (4,1,5,0,4) itself."""
    return rows(r5=[1, 2], r4=[3], r3=[1, 2, 4], r2=[1, 3, 4, 5], r1=[1, 2, 3, 4])


@pytest.fixture
def rho_example():
    """A weak diagram with deficiency -1 at (3,2) and (3,1)."""
    return rows(r5=[1, 2], r4=[3, 4], r3=[1, 2, 3], r2=[1, 3, 4, 5], r1=[1, 2, 3, 4])


@pytest.fixture
def added_column_example():
    """Top insertion image over (4,1,5,0,4) with added column 2."""
    return rows(r5=[1], r4=[2, 3], r3=[1, 2, 4], r2=[1, 2, 3, 4, 5], r1=[1, 2, 3, 4])


@pytest.fixture
def stratum_example():
    """Stratum 3 element over (1,5,2,1,2,6,3) with added column 4."""
    return rows(
        r7=[1, 2], r6=[1, 2], r5=[1, 3], r4=[1, 2, 4], r3=[1, 2, 3], r2=[1, 2, 4, 5, 6], r1=[1, 3, 4, 5]
    )


@pytest.fixture(autouse=True)
def _isolated_database(tmp_path, monkeypatch):
    """Point the run history at a throwaway SQLite file."""
    from sqlalchemy import create_engine
    from sqlalchemy.orm import sessionmaker

    from src import config
    from src.database import db

    path = tmp_path / "runs.db"
    engine = create_engine(f"sqlite:///{path}", echo=False)
    monkeypatch.setattr(config, "DATABASE_PATH", path)
    monkeypatch.setattr(db, "DATABASE_PATH", path)
    monkeypatch.setattr(db, "engine", engine)
    monkeypatch.setattr(db, "SessionLocal", sessionmaker(bind=engine))
    yield
    engine.dispose()
