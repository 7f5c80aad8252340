"""Shared fixtures; puts ``src/`` and ``app/`` on the import path."""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
for folder in (ROOT / "src", ROOT / "app"):
    if str(folder) not in sys.path:
        sys.path.insert(0, str(folder))

from corpus import fixture  # noqa: E402
from parsers import parse_polynomial  # noqa: E402


@pytest.fixture
def line():
    """z1 + z2 + 1, the amoeba of a line."""
    return parse_polynomial("z1 + z2 + 1")


@pytest.fixture
def p1():
    return fixture("p1")


@pytest.fixture
def p1_sparse():
    return fixture("p1_sparse")


@pytest.fixture
def p2():
    return fixture("p2")


@pytest.fixture
def p3():
    return fixture("p3")


@pytest.fixture
def env(monkeypatch):
    """Set AMOEBA_* variables for one test; the shared config is re-read afterwards."""
    from utils import Config

    def setenv(**values):
        for key, value in values.items():
            monkeypatch.setenv(f"AMOEBA_{key.upper()}", str(value))
        return Config.reload()

    yield setenv
    monkeypatch.undo()
    Config.reload()
