"""Shared fixtures; the zero scans are session-scoped so they run once."""

from __future__ import annotations

import time

import pytest

from zetaprod.zerodist import ZeroList, find_zeros


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance_log(request):
    return request.config._acceptance_lines.append


@pytest.fixture(scope="session")
def literature_zeros() -> ZeroList:
    return ZeroList.bundled()


@pytest.fixture(scope="session")
def scan100() -> tuple[ZeroList, float]:
    t0 = time.monotonic()
    zeros = find_zeros(100.0)
    return zeros, time.monotonic() - t0


@pytest.fixture(scope="session")
def scan500() -> tuple[ZeroList, float]:
    t0 = time.monotonic()
    zeros = find_zeros(500.0)
    return zeros, time.monotonic() - t0
