import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from eisenlattice.linalg import Matrix
from eisenlattice.ring import EisensteinInt

settings.register_profile(
    "default", deadline=None, max_examples=200, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def eis(bound: int = 20):
    return st.builds(
        EisensteinInt, st.integers(-bound, bound), st.integers(-bound, bound)
    )


def nonzero_eis(bound: int = 20):
    return eis(bound).filter(bool)


@st.composite
def matrices(draw, max_rows: int = 5, max_cols: int = 5, bound: int = 3, square: bool = False):
    r = draw(st.integers(1, max_rows))
    c = r if square else draw(st.integers(1, max_cols))
    rows = [[draw(eis(bound)) for _ in range(c)] for _ in range(r)]
    return Matrix(rows)


# acceptance lines are collected here and echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
