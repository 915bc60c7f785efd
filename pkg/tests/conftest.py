import sys

import pytest
from hypothesis import strategies as st

from bggext.symmetric_group import Permutation, parse_permutation


def P(text: str) -> Permutation:
    return parse_permutation(text)


def perms(n: int):
    return st.permutations(list(range(1, n + 1))).map(lambda e: Permutation(tuple(e)))


def perms_any(min_n: int = 1, max_n: int = 6):
    return st.integers(min_n, max_n).flatmap(perms)


@pytest.fixture
def s3():
    """The sl3 names e, s, t, st, ts, w0 as permutations."""
    return {
        "e": P("1,2,3"), "s": P("2,1,3"), "t": P("1,3,2"),
        "st": P("2,3,1"), "ts": P("3,1,2"), "w0": P("3,2,1"),
    }


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "CRITERION_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
