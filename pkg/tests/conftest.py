"""Shared fixtures (session-scoped oracle tables) and the acceptance summary hook."""

import time

import pytest

from sharing_nim.oracle import build_raw_table, build_table

# Registry for the acceptance suite: name -> (passed, detail). Criteria record
# themselves here BEFORE asserting, so the summary block prints one line per
# criterion even when some of them fail.
ACCEPTANCE_ORDER: list[str] = []
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    if name not in ACCEPTANCE_RESULTS:
        ACCEPTANCE_ORDER.append(name)
    ACCEPTANCE_RESULTS[name] = (bool(passed), detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_ORDER:
        return
    terminalreporter.section("acceptance criteria")
    for name in ACCEPTANCE_ORDER:
        passed, detail = ACCEPTANCE_RESULTS[name]
        tag = "PASS" if passed else "FAIL"
        line = f"[{tag}] {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def table16():
    return build_table(16)


@pytest.fixture(scope="session")
def table60():
    return build_table(60)


@pytest.fixture(scope="session")
def table200():
    return build_table(200)


@pytest.fixture(scope="session")
def table300():
    return build_table(300)


@pytest.fixture(scope="session")
def table489_timed():
    t0 = time.perf_counter()
    table = build_table(489)
    return table, time.perf_counter() - t0


@pytest.fixture(scope="session")
def table810_timed():
    t0 = time.perf_counter()
    table = build_table(810)
    return table, time.perf_counter() - t0


@pytest.fixture(scope="session")
def raw150():
    return build_raw_table(150)
