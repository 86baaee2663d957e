from __future__ import annotations

import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from impactlab.profile import PiecewiseLinear

GOLDEN = Path(__file__).parent / "golden"
ACCEPTANCE = pytest.StashKey[dict]()

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def assert_golden(text: str, name: str) -> None:
    path = GOLDEN / name
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(text, encoding="utf-8", newline="\n")
    assert path.exists(), f"missing golden file {name}; rerun with UPDATE_GOLDEN=1"
    assert text == path.read_text(encoding="utf-8"), f"output differs from golden file {name}"


@st.composite
def pl_functions(draw, T: float | None = None, min_value: float = 0.0, max_value: float = 50.0,
                 strict: bool = False) -> PiecewiseLinear:
    T = draw(st.floats(0.5, 30.0)) if T is None else T
    n = draw(st.integers(2, 7))
    inner = draw(st.lists(st.floats(0.01, 0.99), min_size=n - 2, max_size=n - 2))
    xs = [0.0, *sorted({T * u for u in inner} - {T}), T]
    ys = sorted(draw(st.lists(st.floats(min_value, max_value), min_size=len(xs), max_size=len(xs))),
                reverse=True)
    if strict and len(set(ys)) < len(ys):
        ys = [max_value - (max_value - min_value) * i / len(ys) for i in range(len(ys))]
    return PiecewiseLinear(tuple(xs), tuple(ys))


def pytest_configure(config: pytest.Config) -> None:
    config.stash[ACCEPTANCE] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item: pytest.Item, call: pytest.CallInfo):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    log = item.config.stash[ACCEPTANCE]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        log[number] = (title, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter, exitstatus, config: pytest.Config) -> None:
    log = config.stash[ACCEPTANCE]
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(log):
        title, status = log[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
