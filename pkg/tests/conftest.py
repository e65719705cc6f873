import re

import pytest

import dipair


@pytest.fixture(scope="session")
def dubut():
    return dipair.builtin("dubut")


@pytest.fixture(scope="session")
def letter_m():
    return dipair.builtin("letterM")


@pytest.fixture(scope="session")
def branching():
    return dipair.builtin("branching")


@pytest.fixture(scope="session")
def bd2():
    return dipair.builtin("boundary_cube", 2)


@pytest.fixture(scope="session")
def bd3():
    return dipair.builtin("boundary_cube", 3)


@pytest.fixture(scope="session")
def swiss():
    return dipair.builtin("swiss_retract")


_NODE = re.compile(r'^\s*n\d+ \[label="[^"]*"\];$')
_EDGE = re.compile(r"^\s*n\d+ -> n\d+;$")


def assert_well_formed_dot(text: str):
    lines = text.strip().splitlines()
    assert lines[0] == "digraph category {"
    assert lines[-1] == "}"
    for line in lines[1:-1]:
        assert _NODE.match(line) or _EDGE.match(line), f"bad dot line: {line!r}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance" in rep.nodeid and getattr(rep, "when", "call") == "call":
                rows.append((rep.nodeid.split("::")[-1], outcome))
    if rows:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, outcome in sorted(rows):
            terminalreporter.write_line(
                f"{name}: {'PASS' if outcome == 'passed' else 'FAIL'}"
            )
