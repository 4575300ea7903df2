import pytest

from compshuffle.dyck import parse_path

EXAMPLE_PATH = "NENNNENNEEEENNEE"
SMALL_PATH = "NNEENE"


@pytest.fixture
def example_path():
    return parse_path(EXAMPLE_PATH)


@pytest.fixture
def small_path():
    return parse_path(SMALL_PATH)


@pytest.fixture
def image_path():
    return parse_path("NNNEENENENNEEENE")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[key])
