import pytest
from hypothesis import HealthCheck, settings

from cascade_kit import canonical_types

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ALL_TYPES = canonical_types(12)
ALL_NAMES = [str(t) for t in ALL_TYPES]
NON_A_EVEN = [str(t) for t in ALL_TYPES if not t.is_a_even]
CLASSICAL = [str(t) for t in ALL_TYPES if t.is_classical]
EXCEPTIONAL = ["E6", "E7", "E8", "F4", "G2"]
SMALL = ["A1", "A2", "A3", "A4", "B3", "B4", "C2", "C3", "D4", "D5", "G2", "F4"]

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance_lines():
    return ACCEPTANCE_LINES
