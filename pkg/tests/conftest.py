import re
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from flagstrata.weyl import weyl_group  # noqa: E402


@pytest.fixture(scope="session")
def A2():
    return weyl_group("A", 2)


@pytest.fixture(scope="session")
def A3():
    return weyl_group("A", 3)


@pytest.fixture(scope="session")
def B2():
    return weyl_group("B", 2)


@pytest.fixture(scope="session")
def G2():
    return weyl_group("G", 2)


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", nodeid)
            if m and rep.when == "call":
                rows.append((int(m.group(1)), m.group(2), outcome, rep.duration))
    if rows:
        terminalreporter.section("acceptance criteria")
        for num, name, outcome, dur in sorted(rows):
            status = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"criterion {num:2d} {status}  {name} ({dur:.2f}s)")
