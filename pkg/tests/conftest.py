import pytest

from flagmotive.rootdata import generate_root_system, parse_root_datum
from flagmotive.weyl import generate_weyl_group

NAMED_RANK_LE_3 = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]
NAMED_RANK_LE_4 = NAMED_RANK_LE_3 + ["A4", "B4", "C4", "D4", "F4"]

_acceptance = []


@pytest.fixture(scope="session")
def weyl_of():
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = generate_weyl_group(generate_root_system(parse_root_datum(spec)))
        return cache[spec]

    return get


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
