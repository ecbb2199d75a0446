import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coxgrowth import corpus
from coxgrowth.growth import growth_series
from coxgrowth.order import rate_of

# acceptance criterion -> list of (item, passed)
CRITERIA = {}


@lru_cache(maxsize=None)
def series(name):
    return growth_series(corpus.get(name).graph)


@lru_cache(maxsize=None)
def rate(name):
    return rate_of(corpus.get(name).graph)


@pytest.fixture
def record():
    def add(criterion, item, passed):
        CRITERIA.setdefault(criterion, []).append((item, bool(passed)))
        return passed

    return add


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for key in sorted(CRITERIA):
        items = CRITERIA[key]
        bad = [name for name, ok in items if not ok]
        verdict = "PASS" if not bad else "FAIL"
        line = f"criterion {key}: {verdict} ({len(items) - len(bad)}/{len(items)} items)"
        if bad:
            line += " failing: " + "; ".join(bad)
        tr.write_line(line)
