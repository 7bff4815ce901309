"""Session-wide objects that several test modules reuse."""

import pytest

from gkgraph.constructions import build_complement, lookup
from gkgraph.finfield import make_field


@pytest.fixture(scope="session")
def gf49():
    return make_field(7, 2)


@pytest.fixture(scope="session")
def complement(gf49):
    return build_complement(gf49)


@pytest.fixture(scope="session")
def pgl249():
    return lookup("PGL(2,49)").group


@pytest.fixture(scope="session")
def s7():
    return lookup("S(7)").group


_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture(scope="session")
def acceptance_log(pytestconfig):
    """Criterion number -> one-line verdict, printed in the terminal summary."""
    return pytestconfig.stash.setdefault(_ACCEPTANCE, {})


def pytest_terminal_summary(terminalreporter, config):
    log = config.stash.get(_ACCEPTANCE, None)
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(log):
        terminalreporter.write_line(log[n])
