from __future__ import annotations

import io
import json
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

from twolane import cli
from twolane.analysis import CoefficientSet
from twolane.graph import load_rules
from twolane.validator import RelationalBindings

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"
RULES_PATH = REPO_ROOT / "rules" / "two_lane_highway.json"


@pytest.fixture(scope="session")
def rules_bytes() -> bytes:
    return RULES_PATH.read_bytes()


@pytest.fixture(scope="session")
def graph(rules_bytes):
    return load_rules(rules_bytes)


@pytest.fixture(scope="session")
def bindings() -> RelationalBindings:
    return RelationalBindings()


@pytest.fixture(scope="session")
def coeffs() -> CoefficientSet:
    return CoefficientSet()


@pytest.fixture(scope="session")
def river_falls_path() -> Path:
    return FIXTURES / "river_falls.json"


@pytest.fixture(scope="session")
def river_falls_doc(river_falls_path):
    return json.loads(river_falls_path.read_text())


@pytest.fixture(scope="session")
def xodr_dir() -> Path:
    return FIXTURES / "opendrive"


def run_cli(argv: list[str]) -> tuple[int, str, str]:
    """Invoke the CLI in-process, capturing exit code and both streams."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.run(argv)
    return code, out.getvalue(), err.getvalue()
