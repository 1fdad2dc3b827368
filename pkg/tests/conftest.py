import hypothesis
from hypothesis import strategies as st

from transpoly.degree_core import DegreeFunction

hypothesis.settings.register_profile("fast", max_examples=10)
hypothesis.settings.register_profile("thorough", max_examples=300, deadline=None)
hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.load_profile("default")


def small_degree_functions(max_m=3, max_total=3):
    """Degree functions with few sources and small n, cheap to enumerate."""
    return (
        st.lists(st.integers(0, max_total), min_size=1, max_size=max_m)
        .filter(lambda ds: sum(ds) <= max_total)
        .map(lambda ds: DegreeFunction(tuple(ds)))
    )


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
