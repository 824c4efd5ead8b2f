import time
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from measure_lattice import ExtNonneg, ExtSigned, MeasurableSpace, Measure, SignedMeasure

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "measure_lattice" / "fixtures"


def space_of(n):
    return MeasurableSpace([chr(ord("a") + i) for i in range(n)])


rationals = st.fractions(min_value=0, max_value=20, max_denominator=12)
signed_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)

ext_nonneg = st.one_of(rationals.map(ExtNonneg), st.just(ExtNonneg.inf()))
ext_signed = st.one_of(signed_rationals.map(ExtSigned), st.just(ExtSigned.inf()))
finite_nonneg = rationals.map(ExtNonneg)


@st.composite
def measures(draw, n=None, weights=ext_nonneg, count=1):
    if n is None:
        n = draw(st.integers(0, 4))
    space = space_of(n)
    out = [Measure(space, draw(st.lists(weights, min_size=n, max_size=n))) for _ in range(count)]
    return out[0] if count == 1 else tuple(out)


@st.composite
def signed_measures(draw, n=None):
    if n is None:
        n = draw(st.integers(0, 4))
    return SignedMeasure(space_of(n), draw(st.lists(ext_signed, min_size=n, max_size=n)))


# -- acceptance reporting -------------------------------------------------

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion from the build contract")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE.append((marker.args[0], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, duration in sorted(_ACCEPTANCE, key=lambda r: int(r[0].split(".")[0])):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {label}  ({duration:.2f} s)")


@pytest.fixture
def stopwatch():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
