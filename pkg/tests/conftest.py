import os
import sys

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def weights(draw, min_n=1, max_n=5, lo=-6, hi=6):
    n = draw(st.integers(min_n, max_n))
    xs = draw(st.lists(st.integers(lo, hi), min_size=n, max_size=n))
    return tuple(sorted(xs, reverse=True))


# acceptance summary -----------------------------------------------------------

_acceptance: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        doc = getattr(report, "ac_doc", "")
        _acceptance[report.nodeid] = (report.outcome, doc)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    doc = (item.function.__doc__ or "").strip().splitlines()
    rep.ac_doc = doc[0] if doc else item.name


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (outcome, doc) in sorted(_acceptance.items(), key=lambda kv: kv[1][1]):
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {doc}")
