"""Shared pytest fixtures."""

from __future__ import annotations

import json
import logging
import sys
from collections.abc import Callable, Iterator
from pathlib import Path
from typing import Any

import pytest

ROOT_DIR = Path(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

from transference_lab import LabContext, create_lab  # noqa: E402
from transference_lab.cli import main  # noqa: E402
from transference_lab.generators import reset_registry  # noqa: E402
from transference_lab.logging import reset_logging_state  # noqa: E402
from transference_lab.monitoring import configure_timing  # noqa: E402


@pytest.fixture(autouse=True)
def _isolate_logging() -> Iterator[None]:
    """Drop handlers bound to captured streams so later tests never log into closed files."""

    root = logging.getLogger()
    previous_handlers = root.handlers[:]
    previous_level = root.level
    yield
    for handler in root.handlers[:]:
        root.removeHandler(handler)
    for handler in previous_handlers:
        root.addHandler(handler)
    root.setLevel(previous_level)
    reset_logging_state()
    configure_timing(enabled=False, threshold_ms=None)


@pytest.fixture(autouse=True)
def _reset_families() -> Iterator[None]:
    yield
    reset_registry()


@pytest.fixture()
def lab() -> LabContext:
    """Lab context on the small-budget testing profile."""

    return create_lab("testing")


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    """Return the path to bundled text fixtures."""

    return ROOT_DIR / "tests" / "fixtures"


@pytest.fixture()
def load_json_fixture(fixtures_dir: Path) -> Callable[[str], dict[str, Any]]:
    """Load a JSON fixture by filename."""

    def _loader(filename: str) -> dict[str, Any]:
        with (fixtures_dir / filename).open("r", encoding="utf-8") as handle:
            data = json.load(handle)
        if not isinstance(data, dict):
            raise ValueError(f"Fixture '{filename}' is not a JSON object.")
        return data

    return _loader


@pytest.fixture()
def run_cli(capsys: pytest.CaptureFixture[str]) -> Callable[..., tuple[int, str, str]]:
    """Invoke the command line on the testing profile and capture (code, stdout, stderr)."""

    def _run(*args: str) -> tuple[int, str, str]:
        code = main(["--profile", "testing", *args])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
