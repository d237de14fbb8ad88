import functools

import pytest

from gammacalc import corpus


@functools.lru_cache(maxsize=None)
def eulerian():
    return corpus.eulerian_corpus()


@functools.lru_cache(maxsize=None)
def flag_ghs():
    return corpus.flag_ghs_corpus()


@functools.lru_cache(maxsize=None)
def cliques(max_nodes=6):
    return corpus.clique_corpus(max_nodes)


@functools.lru_cache(maxsize=None)
def posets():
    return corpus.poset_corpus()


@pytest.fixture(scope="session")
def eulerian_corpus():
    return eulerian()


@pytest.fixture(scope="session")
def flag_ghs_corpus():
    return flag_ghs()


@pytest.fixture(scope="session")
def poset_corpus():
    return posets()


# -- acceptance summary ------------------------------------------------------

_criteria: dict[int, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria[value] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        terminalreporter.write_line(f"criterion {n:2d}: {_criteria[n]}")
