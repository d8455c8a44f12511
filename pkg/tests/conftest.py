"""Shared fixtures.

Every (word, labeled graph) certificate a test produces is recorded through
``record_certificate`` so the closing property audit can re-check all of
them.  The audit test is moved to the end of the run.
"""
import re

import pytest

CERTIFICATES = []


def record_certificate(word, graph, source=""):
    CERTIFICATES.append((tuple(word), graph, source))


@pytest.fixture
def certs():
    return record_certificate


def pytest_collection_modifyitems(session, config, items):
    last = [it for it in items if it.get_closest_marker("audit")]
    rest = [it for it in items if not it.get_closest_marker("audit")]
    items[:] = rest + last


_RESULTS = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    key = int(m.group(1))
    if report.when == "call" or report.outcome != "passed":
        ok = report.outcome == "passed"
        _RESULTS[key] = _RESULTS.get(key, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_RESULTS):
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if _RESULTS[k] else 'FAIL'}")
