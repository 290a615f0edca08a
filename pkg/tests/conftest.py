import os
from datetime import timedelta

import pytest
from hypothesis import settings

from arabcat.preprocess import RawDocument, StemmerConfig, StopWordList

settings.register_profile("ci", deadline=timedelta(milliseconds=2000), max_examples=300)
settings.register_profile("dev", max_examples=20)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def stops():
    return StopWordList.builtin()


@pytest.fixture(scope="session")
def cfg():
    return StemmerConfig()


@pytest.fixture
def two_category_set():
    return [
        ("A", RawDocument("A/1", "alpha alpha beta")),
        ("A", RawDocument("A/2", "alpha gamma")),
        ("B", RawDocument("B/1", "delta delta epsilon")),
        ("B", RawDocument("B/2", "epsilon zeta delta")),
    ]


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_acceptance.items()):
        num, _, title = nodeid.split("::")[-1].removeprefix("test_criterion_").partition("_")
        name = f"criterion {num}: {title.replace('_', ' ')}"
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
