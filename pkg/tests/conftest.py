from fractions import Fraction

from hypothesis import strategies as st

from ramanujan_traces.qseries import QSeries

small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def qseries(draw, order=None, max_order=12, unit=False):
    n = draw(st.integers(0, max_order)) if order is None else order
    cs = draw(st.lists(small_rationals, min_size=n + 1, max_size=n + 1))
    if unit and cs[0] == 0:
        cs[0] = Fraction(draw(st.sampled_from([1, -1, 2, Fraction(1, 3)])))
    return QSeries(cs)


# -- acceptance reporting: one PASS/FAIL line per criterion ---------------------

import pytest

_acceptance_lines: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        status = "PASS" if report.passed else "FAIL"
        _acceptance_lines.append((str(marker.args[0]), status, marker.args[1]))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_lines:
        return
    merged: dict[str, list] = {}
    for label, status, text in _acceptance_lines:
        entry = merged.setdefault(label, [text, 0, 0])
        entry[1 if status == "PASS" else 2] += 1
    terminalreporter.section("acceptance criteria")
    for label, (text, ok, bad) in merged.items():
        status = "FAIL" if bad else "PASS"
        suffix = f" ({ok}/{ok + bad} cases)" if ok + bad > 1 else ""
        terminalreporter.write_line(f"[{status}] criterion {label}: {text}{suffix}")
