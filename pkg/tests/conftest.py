from hypothesis import strategies as st

from tensorchern.partitions import Partition

ACCEPTANCE_LINES: list[str] = []


def partitions(max_part=5, max_len=5):
    return st.lists(st.integers(1, max_part), max_size=max_len).map(
        lambda parts: Partition(sorted(parts, reverse=True))
    )


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
