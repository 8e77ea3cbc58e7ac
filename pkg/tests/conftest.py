import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from xmodcoh.catalog import builtin, discover  # noqa: E402

# criterion number -> (ok, seconds, limit, detail)
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def builtins():
    return builtin()


@pytest.fixture(scope="session")
def qa_builtins():
    return [i for i in builtin() if i.quasi_abelian]


@pytest.fixture(scope="session")
def universe():
    """Every discovered instance with |F|, |G| <= 4 and |Γ| <= 2."""
    return discover(4, 4, 2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, secs, limit, detail = ACCEPTANCE[n]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {verdict}  {secs:7.2f}s (limit {limit}s)  {detail}")
