import math

import pytest

from convexdual.gallery import gallery

ACCEPTANCE_LINES: list[str] = []

GALLERY_CASES = [
    ("disk", None),
    ("example2", [0.5, 0.5]),
    ("fig1a", None),
    ("fig1b", None),
    ("fig1c", None),
    ("fig1d", None),
    ("fig2a", None),
    ("fig2b", None),
    ("fig2c", [4 / 3]),
    ("regular_selfdual_polygon", [3]),
    ("regular_selfdual_polygon", [5]),
    ("regular_selfdual_polygon", [7]),
    ("infinite_truncated", [2]),
    ("infinite_truncated", [4]),
]


def case_id(case):
    name, params = case
    return name if not params else f"{name}({','.join(f'{p:g}' for p in params)})"


_CACHE = {}


def build(name, params=None):
    key = (name, tuple(params or ()))
    if key not in _CACHE:
        _CACHE[key] = gallery(name, params)
    return _CACHE[key]


@pytest.fixture
def ex2():
    return build("example2", [0.5, 0.5])


@pytest.fixture
def fig1c():
    return build("fig1c")


@pytest.fixture
def fig1d():
    return build("fig1d")


@pytest.fixture
def unit_disk():
    return build("disk")


@pytest.fixture
def square():
    from convexdual.body import polygon

    return polygon([(1, 1), (-1, 1), (-1, -1), (1, -1)])


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


SQRT3_2 = math.sqrt(3) / 2
