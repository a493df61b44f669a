from __future__ import annotations

import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from bicayley.constructions import P2Q2Context  # noqa: E402
from bicayley.graph import LabeledGraph  # noqa: E402
from bicayley.kernels import backends  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow,
                                                 HealthCheck.function_scoped_fixture])
settings.load_profile("default")


@st.composite
def small_graphs(draw, max_n=10, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return LabeledGraph.from_edges(n, chosen)


@pytest.fixture(scope="session")
def ctx23():
    return P2Q2Context(2, 3)


@pytest.fixture(scope="session")
def ctx32():
    return P2Q2Context(3, 2)


@pytest.fixture(scope="session")
def ctx25():
    return P2Q2Context(2, 5)


@pytest.fixture(params=sorted(backends()))
def backend(request):
    return backends()[request.param]


_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def criterion_log(request):
    """Append ``(number, ok, detail)``; lines are printed in the terminal summary."""
    return request.config.stash.setdefault(_ACCEPTANCE_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(lines, key=lambda t: t[0]):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
