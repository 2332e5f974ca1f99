from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import settings

from pregroup.algebra import GeneratorPoset
from pregroup.grammar import PregroupModel, load_grammar

GRAMMARS = Path(__file__).resolve().parent.parent / "grammars"

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def grammars_dir() -> Path:
    return GRAMMARS


@pytest.fixture(scope="session")
def welsh() -> PregroupModel:
    return load_grammar(GRAMMARS / "welsh.yaml")


@pytest.fixture(scope="session")
def foo() -> PregroupModel:
    return load_grammar(GRAMMARS / "foo.yaml")


@pytest.fixture(scope="session")
def toy() -> PregroupModel:
    return load_grammar(GRAMMARS / "toy.yaml")


@pytest.fixture(scope="session")
def toy_base() -> PregroupModel:
    return load_grammar(GRAMMARS / "toy_base.yaml")


@pytest.fixture(scope="session")
def ab() -> GeneratorPoset:
    return GeneratorPoset.discrete(["a", "b"])


@pytest.fixture(scope="session")
def ns() -> GeneratorPoset:
    return GeneratorPoset.discrete(["n", "s"])


# --- acceptance summary ------------------------------------------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item: pytest.Item, call: pytest.CallInfo):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.outcome == "passed" else "FAIL"
        _CRITERIA[number] = (title, f"{status} ({report.duration:.2f} s)")


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status:<16} {title}")
