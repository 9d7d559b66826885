import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tracequery import GapConstraint, Query, local_gaps, make_query, make_sample  # noqa: E402
from tracequery.io import parse_query  # noqa: E402


@pytest.fixture
def window_conflicts():
    s = "a a a a a a"
    q1 = make_query(s, 10, constraints=[GapConstraint(1, 3, 7, 7), GapConstraint(2, 3, 6, 6),
                                        GapConstraint(5, 1, 0, 0)])
    q2 = make_query(s, 10, constraints=[GapConstraint(1, 5, 4, 4), GapConstraint(3, 2, 2, 5)])
    return q1, q2


@pytest.fixture
def typeset_match():
    # position 7 carries {a,b} as in the match illustration
    q = parse_query("string: ?x1 {a,b} ?x1 ?x2 c ?x3 {a,b} ?x1\nwindow: 25\n"
                    "gaps: 0:1, 2:inf, 3:inf, 0:5, 0:5, 1:5, 1:2")
    t = tuple("c a b b c a b a c a b a c b c b b a c".split())
    return q, t


@pytest.fixture
def two_traces():
    sample = make_sample(["a b b", "a c c"])
    gaps = local_gaps([(0, 0), (0, 0)])
    return sample, gaps


@pytest.fixture
def three_traces():
    return make_sample(["c a b b c a c b", "c b b b a c c b", "c c b b c c c b"])


def q(string, window=float("inf"), gaps=None, constraints=()) -> Query:
    return make_query(string, window, gaps=gaps, constraints=constraints)


_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, label): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when == "teardown":
        return
    number, label = marker.args
    if rep.when == "call" or rep.failed:
        _acceptance[number] = (label, rep.passed, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        label, passed, secs = _acceptance[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {label}  ({secs:.2f}s)")
