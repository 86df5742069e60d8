import sys

import pytest

from witt12.automorphisms import automorphism_array
from witt12.design import extract_blocks
from witt12.veronese import VeroneseConfig, construct_K


@pytest.fixture(scope="session")
def K():
    return construct_K(VeroneseConfig())


@pytest.fixture(scope="session")
def W12(K):
    return extract_blocks(K.points)


@pytest.fixture(scope="session")
def M12(W12):
    return automorphism_array(W12)


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in list(sys.modules.items()) if name.endswith("test_acceptance")), None)
    RESULTS = getattr(mod, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        status, title = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {title}")
