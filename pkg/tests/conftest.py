import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qcalc import Dimension, ExactRational, Quantity, load_definitions
from qcalc.cli import shipped_file

settings.register_profile("qcalc", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("qcalc")

SYMBOLS = ("L", "M", "T")
EXPONENTS = [Fraction(x) for x in (-3, -2, -1, 1, 2, 3)] + [Fraction(1, 2), Fraction(-1, 2), Fraction(2, 3), Fraction(-3, 4)]


def rationals(max_value=50, max_denominator=30):
    return st.fractions(min_value=-max_value, max_value=max_value, max_denominator=max_denominator)


def nonzero_rationals(**kw):
    return rationals(**kw).filter(lambda x: x != 0)


def dimensions(symbols=SYMBOLS):
    entry = st.one_of(st.just(Fraction(0)), st.sampled_from(EXPONENTS))
    return st.fixed_dictionaries({s: entry for s in symbols}).map(Dimension)


def quantities(dims=None, values=None):
    dims = dims if dims is not None else dimensions()
    values = values if values is not None else rationals()
    return st.builds(lambda v, d: Quantity(v, d), values, dims)


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture(scope="session")
def si():
    return load_definitions(shipped_file("si.qdef"))


@pytest.fixture(scope="session")
def exact():
    return ExactRational()


ACCEPTANCE: dict[tuple[int, str], list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, summary): acceptance criterion checked by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        number, summary = marker.args
        ACCEPTANCE.setdefault((number, summary), []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (number, summary), results in sorted(ACCEPTANCE.items()):
        verdict = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"{verdict} criterion {number}: {summary}")
