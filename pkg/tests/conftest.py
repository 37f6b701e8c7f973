"""Shared fixtures, instance strategies, and the acceptance summary hook."""

import math

import pytest
from hypothesis import assume, settings
from hypothesis import strategies as st

from discmotion import Instance, Placement, Point

settings.register_profile("suite", deadline=None, max_examples=80)
settings.load_profile("suite")


def make_instance(s, a0, b0, a1, b1) -> Instance:
    """Build an Instance from plain coordinate tuples."""
    return Instance(s, Placement(Point(*a0), Point(*b0)),
                    Placement(Point(*a1), Point(*b1)))


coords = st.floats(-10.0, 10.0)


@st.composite
def instances(draw, s: float = 1.0):
    """Random compatible instance; endpoints kept clear of the contact
    boundary so properties are not dominated by tangency ties."""
    a0 = Point(draw(coords), draw(coords))
    b0 = Point(draw(coords), draw(coords))
    a1 = Point(draw(coords), draw(coords))
    b1 = Point(draw(coords), draw(coords))
    assume(math.dist(a0, b0) >= s + 1e-9)
    assume(math.dist(a1, b1) >= s + 1e-9)
    return Instance(s, Placement(a0, b0), Placement(a1, b1))


# Instances reused across files.  The expected numbers asserted on these
# were produced by the grid-search oracle and the closed-form bound, then
# frozen; per-test comments give the values.

@pytest.fixture
def symmetric_crossing() -> Instance:
    """Symmetric crossing in a tight corridor; pivot sits on x = 2."""
    return make_instance(1.0, (1.0, 0.4), (0.0, 0.0), (3.0, 0.4), (4.0, 0.0))


@pytest.fixture
def blocked_ccw() -> Instance:
    """Both endpoints wedged under the obstacle circles; only a net
    clockwise motion can be shortest."""
    return make_instance(1.0, (1.6, -0.3), (0.0, 0.0), (0.6, -0.3), (2.2, 0.0))


@pytest.fixture
def case1() -> Instance:
    """Wide clearance; both robots translate straight (B first)."""
    return make_instance(1.0, (5.0, 5.0), (0.0, 0.0), (6.0, 5.0), (10.0, 0.0))


# ---------------------------------------------------------------------------
# acceptance criterion reporting

_ACCEPTANCE: dict = {}


@pytest.fixture
def acceptance_record():
    """Record one verdict line for an acceptance criterion."""

    def record(num: int, title: str, passed: bool, detail: str = ""):
        _ACCEPTANCE[num] = (title, passed, detail)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        title, passed, detail = _ACCEPTANCE[num]
        line = f"criterion {num} ({title}): {'PASS' if passed else 'FAIL'}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
