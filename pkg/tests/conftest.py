import pytest
from hypothesis import settings, strategies as st

from schurfano.weights import Weight4

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# Filled by test_acceptance.py, reported once at the end of the session.
ACCEPTANCE_LINES: list[str] = []


@st.composite
def partitions(draw, max_first=6, min_first=0):
    a = draw(st.integers(min_first, max_first))
    b = draw(st.integers(0, a))
    c = draw(st.integers(0, b))
    d = draw(st.integers(0, c))
    return Weight4((a, b, c, d))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)


@pytest.fixture
def cache_dir(tmp_path):
    return tmp_path / "e1-cache"
