import sys
from pathlib import Path

import pytest

from fsing.groebner import Ideal
from fsing.polyring import RingSpec

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def make_ring(p, names, order="grevlex"):
    return RingSpec.make(p, names.split() if isinstance(names, str) else names, order)


def ideal(ring, *gens):
    return Ideal(ring, list(gens))


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "REPORT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
